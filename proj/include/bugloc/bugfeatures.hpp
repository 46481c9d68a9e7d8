#pragma once

#include "bugloc/channels.hpp"
#include "bugloc/corpus.hpp"
#include "bugloc/tokenize.hpp"

namespace bugloc {

// The seven bug-report token bags. Stack traces and code blocks are carved
// out of the description before hints are computed on what is left;
// raw_report tokenizes the whole report text, so its token set always
// covers summary and description.
struct BugReportFeatures {
  TokenBag summary;
  TokenBag description;
  TokenBag raw_report;
  TokenBag stack_traces;
  TokenBag code_elements;
  TokenBag summary_hints;
  TokenBag description_hints;

  const TokenBag& channel(int i) const {
    switch (i) {
      case 0: return summary;
      case 1: return description;
      case 2: return raw_report;
      case 3: return stack_traces;
      case 4: return code_elements;
      case 5: return summary_hints;
      default: return description_hints;
    }
  }
};

BugReportFeatures build_bug_features(const BugReport& report, const Lexicon& lex);

}  // namespace bugloc
