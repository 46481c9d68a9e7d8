#pragma once

#include <string>
#include <string_view>

#include "bugloc/lexicon.hpp"
#include "bugloc/token_bag.hpp"

namespace bugloc {

// Natural-language pathway: whitespace split, punctuation stripped,
// dictionary-checked, stopword-filtered, stemmed. Numbers and
// single-character tokens are discarded.
TokenBag tokenize_natural(std::string_view text, const Lexicon& lex);

// Code / stack-trace pathway: splits on punctuation, camelCase and
// snake_case ("findNumber" -> find, number; "XMLHttpRequest" -> xml, http,
// request), stopword-filtered and stemmed but not dictionary-checked.
TokenBag tokenize_code(std::string_view text, const Lexicon& lex);

struct StackTraceExtract {
  TokenBag tokens{SourceKind::stacktrace};
  std::string remainder;
};

// Removes stack-trace frames ("at pkg.Class.method(File.java:n)") and
// exception headers from the text; classes, methods and file stems are
// code-tokenized. Text without frames comes back untouched.
StackTraceExtract extract_stack_traces(std::string_view text, const Lexicon& lex);

// Code-identifier mentions in prose: camelCase words, dotted qualified
// names, snake_case identifiers, file names with code suffixes, and
// method mentions like "close()". Matches are code-tokenized.
TokenBag extract_hints(std::string_view text, const Lexicon& lex);

struct CodeBlockExtract {
  std::string blocks;     // concatenated code-block bodies
  std::string remainder;  // text with the blocks removed
};

// Fenced (``` / {code}) and 4-space/tab indented blocks.
CodeBlockExtract extract_code_blocks(std::string_view text);

}  // namespace bugloc
