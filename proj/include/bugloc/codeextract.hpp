#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bugloc/channels.hpp"
#include "bugloc/corpus.hpp"
#include "bugloc/tokenize.hpp"

namespace bugloc {

// The ten source-side token bags for one file. Structure comes from a
// lexical scanner (token and bracket tracking), not a compiler front end:
// broken files degrade gracefully instead of failing.
struct SourceDocument {
  std::string path;
  TokenBag package_names{SourceKind::code};
  TokenBag class_name{SourceKind::code};
  TokenBag method_names{SourceKind::code};
  TokenBag method_invocation{SourceKind::code};
  TokenBag formal_parameter{SourceKind::code};
  TokenBag member_reference{SourceKind::code};
  TokenBag documentation{SourceKind::natural};
  TokenBag raw_source{SourceKind::code};
  TokenBag hunks{SourceKind::code};
  TokenBag commit_logs{SourceKind::natural};
  bool degraded = false;  // unbalanced braces; extraction was best-effort

  const TokenBag& channel(int j) const {
    switch (j) {
      case 0: return package_names;
      case 1: return class_name;
      case 2: return method_names;
      case 3: return method_invocation;
      case 4: return formal_parameter;
      case 5: return member_reference;
      case 6: return documentation;
      case 7: return raw_source;
      case 8: return hunks;
      default: return commit_logs;
    }
  }
};

// Fills the eight non-history bags from file text.
SourceDocument extract_structure(std::string_view file_text, const Lexicon& lex);

// Fills hunks (code-tokenized diff bodies) and commitLogs (natural-tokenized
// messages), aggregated over every commit touching the file. An absent
// history leaves both bags empty.
void extract_history(SourceDocument& doc, const std::vector<FileHistoryEntry>& entries,
                     const Lexicon& lex);

// Structure plus history in one step; `entries` may be null.
SourceDocument build_source_document(const std::string& path, std::string_view file_text,
                                     const std::vector<FileHistoryEntry>* entries,
                                     const Lexicon& lex);

}  // namespace bugloc
