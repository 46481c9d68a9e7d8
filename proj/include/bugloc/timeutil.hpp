#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace bugloc {

// RFC 3339 timestamps are parsed to UTC epoch seconds. Fractional seconds
// are accepted and truncated; numeric offsets are applied. Parsing is
// self-contained so ingestion behaves the same on every platform.
std::int64_t parse_rfc3339(std::string_view text);

std::string format_rfc3339(std::int64_t epoch_seconds);

// Civil UTC year of an epoch timestamp.
int utc_year(std::int64_t epoch_seconds);

// Epoch seconds of January 1st, 00:00:00 UTC of the given year.
std::int64_t jan1_epoch(int year);

}  // namespace bugloc
