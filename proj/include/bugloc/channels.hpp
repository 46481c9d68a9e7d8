#pragma once

#include <array>
#include <string>
#include <vector>

namespace bugloc {

// Canonical feature-channel orders. The pair grid is laid out row-major,
// bug channels over code channels, and this order is frozen into every
// cache and model file.
inline constexpr int kBugChannelCount = 7;
inline constexpr int kCodeChannelCount = 10;
inline constexpr int kGridCellCount = kBugChannelCount * kCodeChannelCount;

inline constexpr std::array<const char*, kBugChannelCount> kBugChannelNames = {
    "summary",      "description",  "rawBugReport", "stackTraces",
    "codeElements", "summaryHints", "descriptionHints",
};

inline constexpr std::array<const char*, kCodeChannelCount> kCodeChannelNames = {
    "packageNames",    "className",       "methodNames", "methodInvocation",
    "formalParameter", "memberReference", "documentation", "rawSource",
    "hunks",           "commitLogs",
};

inline std::string grid_cell_name(int bug_channel, int code_channel) {
  return std::string(kBugChannelNames[bug_channel]) + "2" + kCodeChannelNames[code_channel];
}

inline int grid_cell_index(int bug_channel, int code_channel) {
  return bug_channel * kCodeChannelCount + code_channel;
}

// The 17 channel names, bug channels first: the grid-order manifest
// written to cache headers.
std::vector<std::string> channel_manifest();

// The 70 grid cell names in row-major order, used as model feature names.
std::vector<std::string> grid_cell_names();

}  // namespace bugloc
