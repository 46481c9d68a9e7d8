#include "bugloc/lexicon.hpp"

#include <fstream>

#include "bugloc/error.hpp"

#ifndef BUGLOC_DATA_DIR
#define BUGLOC_DATA_DIR "data"
#endif

namespace bugloc {
namespace {

void load_word_file(const std::string& path, std::set<std::string>& out) {
  std::ifstream in(path);
  if (!in) throw Error("missing-file", "cannot open word list: " + path);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    // trim
    size_t b = line.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    size_t e = line.find_last_not_of(" \t");
    out.insert(line.substr(b, e - b + 1));
  }
}

}  // namespace

void Lexicon::load_stopwords(const std::string& path) { load_word_file(path, stopwords); }
void Lexicon::load_dictionary(const std::string& path) { load_word_file(path, dictionary); }

Lexicon Lexicon::load_bundled_from(const std::string& data_dir) {
  Lexicon lex;
  lex.load_stopwords(data_dir + "/stopwords_english.txt");
  lex.load_stopwords(data_dir + "/keywords_java.txt");
  lex.load_dictionary(data_dir + "/dictionary_english.txt");
  return lex;
}

const Lexicon& Lexicon::bundled() {
  static const Lexicon lex = load_bundled_from(BUGLOC_DATA_DIR);
  return lex;
}

}  // namespace bugloc
