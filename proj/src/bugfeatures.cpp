#include "bugloc/bugfeatures.hpp"

namespace bugloc {

std::vector<std::string> channel_manifest() {
  std::vector<std::string> out;
  out.reserve(kBugChannelCount + kCodeChannelCount);
  for (const char* n : kBugChannelNames) out.emplace_back(n);
  for (const char* n : kCodeChannelNames) out.emplace_back(n);
  return out;
}

std::vector<std::string> grid_cell_names() {
  std::vector<std::string> out;
  out.reserve(kGridCellCount);
  for (int i = 0; i < kBugChannelCount; ++i)
    for (int j = 0; j < kCodeChannelCount; ++j) out.push_back(grid_cell_name(i, j));
  return out;
}

BugReportFeatures build_bug_features(const BugReport& report, const Lexicon& lex) {
  BugReportFeatures f;
  f.summary = tokenize_natural(report.summary, lex);
  f.description = tokenize_natural(report.description, lex);
  f.raw_report = tokenize_natural(report.summary + "\n" + report.description, lex);

  auto traces = extract_stack_traces(report.description, lex);
  f.stack_traces = std::move(traces.tokens);

  auto blocks = extract_code_blocks(traces.remainder);
  f.code_elements = tokenize_code(blocks.blocks, lex);

  f.summary_hints = extract_hints(report.summary, lex);
  f.description_hints = extract_hints(blocks.remainder, lex);
  return f;
}

}  // namespace bugloc
