#pragma once

#include <set>
#include <string>
#include <string_view>

namespace bugloc {

// Word lists driving tokenization: a stopword set (English words plus
// programming/project keywords) and the flat dictionary used by the
// natural-language pathway. Both load from one-token-per-line UTF-8 files
// where '#' starts a comment.
struct Lexicon {
  std::set<std::string> stopwords;
  std::set<std::string> dictionary;

  bool is_stopword(const std::string& token) const { return stopwords.count(token) > 0; }
  bool in_dictionary(const std::string& token) const { return dictionary.count(token) > 0; }

  void load_stopwords(const std::string& path);
  void load_dictionary(const std::string& path);

  // Bundled lists: English stopwords + Java keywords + English dictionary.
  static const Lexicon& bundled();
  static Lexicon load_bundled_from(const std::string& data_dir);
};

}  // namespace bugloc
