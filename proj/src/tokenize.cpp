#include "bugloc/tokenize.hpp"

#include <algorithm>
#include <cctype>
#include <regex>
#include <set>
#include <vector>

#include "bugloc/stemmer.hpp"

namespace bugloc {
namespace {

bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }
bool is_alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)); }
bool is_upper(char c) { return std::isupper(static_cast<unsigned char>(c)); }
bool is_lower(char c) { return std::islower(static_cast<unsigned char>(c)); }

std::string to_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

// Normalization shared by both pathways once a candidate word is isolated:
// drop numbers and one-character tokens, stopword-filter, stem, and make
// sure the stem itself is not a stopword either.
void emit(const std::string& raw, const Lexicon& lex, bool dictionary_check, TokenBag& bag) {
  if (raw.size() < 2) return;
  for (char c : raw)
    if (is_digit(c)) return;
  const std::string low = to_lower(raw);
  if (dictionary_check && !lex.in_dictionary(low)) return;
  if (lex.is_stopword(low)) return;
  const std::string stem = porter_stem(low);
  if (stem.size() < 2) return;
  if (lex.is_stopword(stem)) return;
  bag.add(stem);
}

// camelCase / ALLCAPS splitting of one alphabetic run. A boundary sits at
// every lower->Upper transition and before the last capital of a capital
// run followed by lowercase ("XMLHttp" -> XML, Http).
void split_camel(std::string_view run, std::vector<std::string>& out) {
  size_t start = 0;
  for (size_t i = 1; i < run.size(); ++i) {
    const bool boundary =
        (is_upper(run[i]) && is_lower(run[i - 1])) ||
        (is_upper(run[i - 1]) && is_upper(run[i]) && i + 1 < run.size() && is_lower(run[i + 1]));
    if (boundary) {
      out.emplace_back(run.substr(start, i - start));
      start = i;
    }
  }
  out.emplace_back(run.substr(start));
}

}  // namespace

TokenBag tokenize_natural(std::string_view text, const Lexicon& lex) {
  TokenBag bag(SourceKind::natural);
  size_t i = 0;
  while (i < text.size()) {
    if (!is_alnum(text[i])) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < text.size() && is_alnum(text[j])) ++j;
    emit(std::string(text.substr(i, j - i)), lex, /*dictionary_check=*/true, bag);
    i = j;
  }
  return bag;
}

TokenBag tokenize_code(std::string_view text, const Lexicon& lex) {
  TokenBag bag(SourceKind::code);
  std::vector<std::string> pieces;
  size_t i = 0;
  while (i < text.size()) {
    if (!is_alpha(text[i])) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < text.size() && is_alpha(text[j])) ++j;  // letter run; digits split off
    pieces.clear();
    split_camel(text.substr(i, j - i), pieces);
    for (const std::string& p : pieces) emit(p, lex, /*dictionary_check=*/false, bag);
    i = j;
  }
  return bag;
}

StackTraceExtract extract_stack_traces(std::string_view text, const Lexicon& lex) {
  static const std::regex frame_re(
      R"((?:^|\s)at\s+([A-Za-z_$][A-Za-z0-9_$]*(?:\.[A-Za-z_$<>][A-Za-z0-9_$<>]*)+)\s*\(([^()]*)\))");
  static const std::regex header_re(
      R"((?:Caused by:\s*)?([A-Za-z_$][A-Za-z0-9_$]*(?:\.[A-Za-z_$][A-Za-z0-9_$]*)+(?:Exception|Error))\b:?)");

  StackTraceExtract out;
  const std::string input(text);
  std::vector<std::pair<size_t, size_t>> spans;

  for (auto it = std::sregex_iterator(input.begin(), input.end(), frame_re);
       it != std::sregex_iterator(); ++it) {
    out.tokens.merge(tokenize_code((*it)[1].str(), lex));
    out.tokens.merge(tokenize_code((*it)[2].str(), lex));
    spans.emplace_back(it->position(0), it->position(0) + it->length(0));
  }
  for (auto it = std::sregex_iterator(input.begin(), input.end(), header_re);
       it != std::sregex_iterator(); ++it) {
    const size_t b = it->position(0), e = b + it->length(0);
    bool inside = false;
    for (const auto& [sb, se] : spans)
      if (b >= sb && e <= se) inside = true;
    if (inside) continue;
    out.tokens.merge(tokenize_code((*it)[1].str(), lex));
    spans.emplace_back(b, e);
  }

  if (spans.empty()) {
    out.remainder = input;
    return out;
  }
  std::sort(spans.begin(), spans.end());
  size_t pos = 0;
  for (const auto& [b, e] : spans) {
    if (b > pos) out.remainder.append(input, pos, b - pos);
    pos = std::max(pos, e);
  }
  if (pos < input.size()) out.remainder.append(input, pos, input.size() - pos);
  return out;
}

TokenBag extract_hints(std::string_view text, const Lexicon& lex) {
  TokenBag bag(SourceKind::code);
  static const std::set<std::string> code_suffixes = {
      "java", "class", "jar",  "xml", "json", "yml",  "yaml", "properties",
      "jsp",  "js",    "html", "css", "sql",  "gradle", "c",  "h", "cpp", "py"};

  size_t i = 0;
  const size_t n = text.size();
  while (i < n) {
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    size_t j = i;
    while (j < n && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) {
      std::string_view chunk = text.substr(i, j - i);
      // trim enclosing punctuation but keep interior dots/underscores/parens
      size_t b = 0, e = chunk.size();
      while (b < e && !is_alnum(chunk[b])) ++b;
      while (e > b && !is_alnum(chunk[e - 1]) && chunk[e - 1] != ')') --e;
      chunk = chunk.substr(b, e - b);

      if (!chunk.empty()) {
        bool camel = false, snake = false, dotted = false, call = false, suffixed = false;
        for (size_t k = 1; k < chunk.size(); ++k) {
          if (is_upper(chunk[k]) && is_lower(chunk[k - 1])) camel = true;
          if (chunk[k] == '_' && is_alnum(chunk[k - 1]) && k + 1 < chunk.size() &&
              is_alnum(chunk[k + 1]))
            snake = true;
        }
        if (chunk.find('(') != std::string_view::npos &&
            chunk.find(')') != std::string_view::npos && is_alnum(chunk[0]))
          call = true;

        // dotted qualified name: ident(.ident)+ with at least one segment
        // longer than a single letter (filters "e.g.")
        {
          size_t seg_start = 0, segs = 0, long_segs = 0;
          bool ok = true;
          for (size_t k = 0; k <= chunk.size(); ++k) {
            if (k == chunk.size() || chunk[k] == '.') {
              const auto seg = chunk.substr(seg_start, k - seg_start);
              if (seg.empty() || !is_alpha(seg[0])) {
                ok = false;
                break;
              }
              ++segs;
              if (seg.size() > 1) ++long_segs;
              seg_start = k + 1;
            }
          }
          if (ok && segs >= 2 && long_segs >= 1) {
            dotted = true;
            const auto dot = chunk.rfind('.');
            std::string last = to_lower(chunk.substr(dot + 1));
            if (code_suffixes.count(last)) suffixed = true;
          }
        }

        if (camel || snake || dotted || call || suffixed)
          bag.merge(tokenize_code(chunk, lex));
      }
    }
    i = j;
  }
  return bag;
}

CodeBlockExtract extract_code_blocks(std::string_view text) {
  CodeBlockExtract out;
  std::vector<std::string_view> lines;
  size_t pos = 0;
  while (pos <= text.size()) {
    const size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(pos));
      break;
    }
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }

  auto is_fence = [](std::string_view l) {
    size_t b = l.find_first_not_of(" \t");
    if (b == std::string_view::npos) return false;
    return l.substr(b).rfind("```", 0) == 0 || l.substr(b).rfind("{code", 0) == 0;
  };
  auto is_indented = [](std::string_view l) {
    if (l.rfind("    ", 0) == 0 || l.rfind("\t", 0) == 0)
      return l.find_first_not_of(" \t") != std::string_view::npos;
    return false;
  };

  bool in_fence = false;
  for (const auto& line : lines) {
    if (is_fence(line)) {
      in_fence = !in_fence;
      continue;
    }
    if (in_fence || is_indented(line)) {
      out.blocks.append(line);
      out.blocks.push_back('\n');
    } else {
      out.remainder.append(line);
      out.remainder.push_back('\n');
    }
  }
  if (!out.remainder.empty()) out.remainder.pop_back();
  return out;
}

}  // namespace bugloc
