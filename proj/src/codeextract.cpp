#include "bugloc/codeextract.hpp"

#include <cctype>
#include <set>

namespace bugloc {
namespace {

struct Tok {
  enum Kind { ident, punct } kind;
  std::string text;  // identifier text, or single punctuation char
};

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

const std::set<std::string> kTypeKeywords = {"class", "interface", "enum", "record"};
const std::set<std::string> kControlKeywords = {"if",    "for",   "while",       "switch",
                                                "catch", "return", "synchronized"};
const std::set<std::string> kAllKeywords = {
    "abstract", "assert", "boolean", "break", "byte", "case", "catch", "char", "class",
    "const", "continue", "default", "do", "double", "else", "enum", "extends", "final",
    "finally", "float", "for", "goto", "if", "implements", "import", "instanceof", "int",
    "interface", "long", "native", "new", "package", "private", "protected", "public",
    "return", "short", "static", "strictfp", "super", "switch", "synchronized", "this",
    "throw", "throws", "transient", "try", "void", "volatile", "while",
    "true", "false", "null", "var", "record"};

// Lexes source into identifiers and punctuation, diverting comment text
// into `comments`. String and char literals are skipped entirely.
struct Lexer {
  std::string_view src;
  size_t pos = 0;
  std::string comments;

  std::vector<Tok> run() {
    std::vector<Tok> out;
    while (pos < src.size()) {
      const char c = src[pos];
      if (c == '/' && pos + 1 < src.size() && src[pos + 1] == '/') {
        const size_t end = src.find('\n', pos);
        append_comment(src.substr(pos + 2, (end == std::string_view::npos ? src.size() : end) - pos - 2));
        pos = end == std::string_view::npos ? src.size() : end + 1;
      } else if (c == '/' && pos + 1 < src.size() && src[pos + 1] == '*') {
        const size_t end = src.find("*/", pos + 2);
        const size_t stop = end == std::string_view::npos ? src.size() : end;
        append_comment(src.substr(pos + 2, stop - pos - 2));
        pos = end == std::string_view::npos ? src.size() : end + 2;
      } else if (c == '"' || c == '\'') {
        skip_literal(c);
      } else if (is_ident_start(c)) {
        size_t j = pos;
        while (j < src.size() && is_ident_char(src[j])) ++j;
        out.push_back({Tok::ident, std::string(src.substr(pos, j - pos))});
        pos = j;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        size_t j = pos;
        while (j < src.size() && (is_ident_char(src[j]) || src[j] == '.')) ++j;
        pos = j;  // numeric literal, dropped
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos;
      } else {
        out.push_back({Tok::punct, std::string(1, c)});
        ++pos;
      }
    }
    return out;
  }

  void append_comment(std::string_view body) {
    // strip the leading '*' gutters of block comments
    for (size_t i = 0; i < body.size(); ++i) {
      if (body[i] == '*' && (i == 0 || body[i - 1] == '\n' ||
                             src.npos != std::string_view(" \t").find(body[i - 1]))) {
        comments.push_back(' ');
      } else {
        comments.push_back(body[i]);
      }
    }
    comments.push_back('\n');
  }

  void skip_literal(char quote) {
    ++pos;
    while (pos < src.size() && src[pos] != quote) {
      if (src[pos] == '\\') ++pos;
      ++pos;
    }
    if (pos < src.size()) ++pos;
  }
};

// Second pass: walks the token stream tracking brace depth and what kind of
// body each brace opened (type body vs method/block body).
struct Scanner {
  const std::vector<Tok>& toks;
  const Lexicon& lex;
  SourceDocument& doc;

  enum class BodyKind { type, exec, other };
  std::vector<BodyKind> stack;
  bool saw_assign_since_stmt = false;

  const Tok* at(size_t i) const { return i < toks.size() ? &toks[i] : nullptr; }

  bool in_type_body() const { return !stack.empty() && stack.back() == BodyKind::type; }
  bool in_exec_body() const {
    for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
      if (*it == BodyKind::exec) return true;
      if (*it == BodyKind::type) return false;
    }
    return false;
  }

  // Finds the matching ')' for the '(' at `open`, or npos.
  size_t match_paren(size_t open) const {
    int depth = 0;
    for (size_t i = open; i < toks.size(); ++i) {
      if (toks[i].kind != Tok::punct) continue;
      if (toks[i].text == "(") ++depth;
      if (toks[i].text == ")") {
        if (--depth == 0) return i;
      }
    }
    return std::string::npos;
  }

  void add(TokenBag& bag, const std::string& ident) { bag.merge(tokenize_code(ident, lex)); }

  // Parameter list between токенs (open, close): for each top-level
  // comma-separated segment, the last identifier is the parameter name.
  void collect_parameters(size_t open, size_t close) {
    int angle = 0, bracket = 0, paren = 0;
    std::string last_ident;
    for (size_t i = open + 1; i < close; ++i) {
      const Tok& t = toks[i];
      if (t.kind == Tok::ident) {
        if (!kAllKeywords.count(t.text)) last_ident = t.text;
        continue;
      }
      if (t.text == "<") ++angle;
      else if (t.text == ">") --angle;
      else if (t.text == "[") ++bracket;
      else if (t.text == "]") --bracket;
      else if (t.text == "(") ++paren;
      else if (t.text == ")") --paren;
      else if (t.text == "," && angle == 0 && bracket == 0 && paren == 0) {
        if (!last_ident.empty()) add(doc.formal_parameter, last_ident);
        last_ident.clear();
      }
    }
    if (!last_ident.empty()) add(doc.formal_parameter, last_ident);
  }

  void run() {
    for (size_t i = 0; i < toks.size(); ++i) {
      const Tok& t = toks[i];
      if (t.kind == Tok::punct) {
        if (t.text == "{") {
          stack.push_back(BodyKind::other);
          saw_assign_since_stmt = false;
        } else if (t.text == "}") {
          if (stack.empty()) doc.degraded = true;
          else stack.pop_back();
          saw_assign_since_stmt = false;
        } else if (t.text == "=") {
          saw_assign_since_stmt = true;
        } else if (t.text == ";") {
          saw_assign_since_stmt = false;
        }
        continue;
      }

      const std::string& w = t.text;
      if (w == "package") {
        i = consume_dotted(i + 1, doc.package_names);
      } else if (w == "import") {
        while (i + 1 < toks.size() && !(toks[i + 1].kind == Tok::punct && toks[i + 1].text == ";"))
          ++i;
      } else if (kTypeKeywords.count(w)) {
        const Tok* name = at(i + 1);
        if (name && name->kind == Tok::ident) {
          add(doc.class_name, name->text);
          ++i;
          // the next '{' opens a type body
          size_t j = i + 1;
          int paren = 0;
          while (j < toks.size()) {
            if (toks[j].kind == Tok::punct) {
              if (toks[j].text == "(") ++paren;
              if (toks[j].text == ")") --paren;
              if (toks[j].text == "{" && paren == 0) break;
              if (toks[j].text == ";" && paren == 0) break;  // e.g. import-like edge
            }
            ++j;
          }
          if (j < toks.size() && toks[j].text == "{") {
            // consume extends/implements clause without treating it as code
            stack.push_back(BodyKind::type);
            i = j;
            saw_assign_since_stmt = false;
          }
        }
      } else if (!kAllKeywords.count(w)) {
        handle_identifier(i);
      }
    }
    if (!stack.empty()) doc.degraded = true;
  }

  size_t consume_dotted(size_t i, TokenBag& bag) {
    std::string dotted;
    while (i < toks.size()) {
      if (toks[i].kind == Tok::ident) dotted += toks[i].text;
      else if (toks[i].text == ".") dotted += '.';
      else break;
      ++i;
    }
    add(bag, dotted);
    return i - 1;
  }

  void handle_identifier(size_t& i) {
    const Tok* next = at(i + 1);
    const bool prev_dot = i > 0 && toks[i - 1].kind == Tok::punct && toks[i - 1].text == ".";
    const bool prev_new = i > 0 && toks[i - 1].kind == Tok::ident && toks[i - 1].text == "new";
    const bool prev_at = i > 0 && toks[i - 1].kind == Tok::punct && toks[i - 1].text == "@";
    if (prev_at) return;  // annotation name

    if (next && next->kind == Tok::punct && next->text == "(" && !prev_dot && !prev_new) {
      // declaration or plain call
      const size_t close = match_paren(i + 1);
      if (close == std::string::npos) {
        doc.degraded = true;
        return;
      }
      size_t after = close + 1;
      // skip a throws clause
      if (at(after) && toks[after].kind == Tok::ident && toks[after].text == "throws") {
        ++after;
        while (at(after) && !(toks[after].kind == Tok::punct &&
                              (toks[after].text == "{" || toks[after].text == ";")))
          ++after;
      }
      const bool body_follows =
          at(after) && toks[after].kind == Tok::punct && toks[after].text == "{";
      const bool semi_follows =
          at(after) && toks[after].kind == Tok::punct && toks[after].text == ";";

      if (in_type_body() && !saw_assign_since_stmt && (body_follows || semi_follows)) {
        // method (or constructor) declaration header
        add(doc.method_names, toks[i].text);
        collect_parameters(i + 1, close);
        if (body_follows) {
          stack.push_back(BodyKind::exec);
          i = after;  // continue scanning inside the body
        } else {
          i = after;
        }
        saw_assign_since_stmt = false;
        return;
      }
      if (in_exec_body() && !body_follows) {
        add(doc.method_invocation, toks[i].text);
      }
      // `ident(...) {` outside a type body: anonymous-class method or
      // similar; contributes to rawSource only.
      return;
    }

    // Dotted chains inside executable code: receivers and plain member
    // accesses become member references; invoked segments are handled when
    // the walk reaches them (ident followed by '(').
    if (!prev_dot && in_exec_body()) {
      const bool dot_after = next && next->kind == Tok::punct && next->text == ".";
      if (dot_after && !prev_new) {
        size_t j = i;
        while (j < toks.size() && toks[j].kind == Tok::ident) {
          const Tok* after = at(j + 1);
          const bool invoked = after && after->kind == Tok::punct && after->text == "(";
          if (!invoked && !kAllKeywords.count(toks[j].text))
            add(doc.member_reference, toks[j].text);
          if (invoked) {
            if (in_exec_body() && !kControlKeywords.count(toks[j].text))
              add(doc.method_invocation, toks[j].text);
            break;
          }
          if (!(after && after->kind == Tok::punct && after->text == ".")) break;
          j += 2;  // skip the dot
        }
        i = j;
      }
    }
  }
};

}  // namespace

SourceDocument extract_structure(std::string_view file_text, const Lexicon& lex) {
  SourceDocument doc;
  Lexer lexer{file_text};
  const std::vector<Tok> toks = lexer.run();
  Scanner scanner{toks, lex, doc};
  scanner.run();
  doc.documentation = tokenize_natural(lexer.comments, lex);
  doc.raw_source = tokenize_code(file_text, lex);
  return doc;
}

void extract_history(SourceDocument& doc, const std::vector<FileHistoryEntry>& entries,
                     const Lexicon& lex) {
  for (const FileHistoryEntry& e : entries) {
    doc.commit_logs.merge(tokenize_natural(e.commit_log, lex));
    for (const std::string& h : e.hunks) doc.hunks.merge(tokenize_code(h, lex));
  }
}

SourceDocument build_source_document(const std::string& path, std::string_view file_text,
                                     const std::vector<FileHistoryEntry>* entries,
                                     const Lexicon& lex) {
  SourceDocument doc = extract_structure(file_text, lex);
  doc.path = path;
  if (entries) extract_history(doc, *entries, lex);
  return doc;
}

}  // namespace bugloc
