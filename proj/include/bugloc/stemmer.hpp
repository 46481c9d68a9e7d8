#pragma once

#include <string>
#include <string_view>

namespace bugloc {

// Porter's suffix-stripping algorithm, steps 1a through 5b. Input is expected
// to be a lowercase ASCII word; words of length <= 2 are returned unchanged.
std::string porter_stem(std::string_view word);

}  // namespace bugloc
