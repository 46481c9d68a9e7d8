#include "bugloc/stemmer.hpp"

#include <array>
#include <cstddef>

namespace bugloc {
namespace {

// Working state: the word is edited in place; `end` is one past the last
// live character. Conditions (measure, *v*, *d, *o) are evaluated on the
// stem that would remain after removing the candidate suffix.
struct Stem {
  std::string w;
  size_t end;  // length of the live word

  bool is_consonant(size_t i) const {
    switch (w[i]) {
      case 'a': case 'e': case 'i': case 'o': case 'u':
        return false;
      case 'y':
        return i == 0 ? true : !is_consonant(i - 1);
      default:
        return true;
    }
  }

  // Number of VC sequences in the first `len` characters.
  int measure(size_t len) const {
    int m = 0;
    size_t i = 0;
    while (i < len && is_consonant(i)) ++i;   // leading consonants
    while (i < len) {
      while (i < len && !is_consonant(i)) ++i;  // vowel run
      if (i >= len) break;
      ++m;
      while (i < len && is_consonant(i)) ++i;  // consonant run
    }
    return m;
  }

  bool has_vowel(size_t len) const {
    for (size_t i = 0; i < len; ++i)
      if (!is_consonant(i)) return true;
    return false;
  }

  bool double_consonant(size_t len) const {
    if (len < 2) return false;
    return w[len - 1] == w[len - 2] && is_consonant(len - 1);
  }

  // cvc at the end, where the final consonant is not w, x or y.
  bool cvc(size_t len) const {
    if (len < 3) return false;
    if (!is_consonant(len - 3) || is_consonant(len - 2) || !is_consonant(len - 1)) return false;
    const char c = w[len - 1];
    return c != 'w' && c != 'x' && c != 'y';
  }

  bool ends(std::string_view suf) const {
    if (suf.size() > end) return false;
    return std::string_view(w).substr(end - suf.size(), suf.size()) == suf;
  }

  void set_suffix(size_t stem_len, std::string_view repl) {
    w.resize(stem_len);
    w.append(repl);
    end = w.size();
  }
};

struct Rule {
  std::string_view suffix;
  std::string_view replacement;
  int min_measure;  // condition m > min_measure on the stem
};

// First matching suffix decides; its condition either fires or ends the step.
// Lists are ordered so a suffix never shadows a longer one.
bool apply_rules(Stem& s, const Rule* rules, size_t n) {
  for (size_t i = 0; i < n; ++i) {
    if (s.ends(rules[i].suffix)) {
      const size_t stem_len = s.end - rules[i].suffix.size();
      if (s.measure(stem_len) > rules[i].min_measure)
        s.set_suffix(stem_len, rules[i].replacement);
      return true;
    }
  }
  return false;
}

void step1a(Stem& s) {
  if (s.ends("sses")) s.set_suffix(s.end - 4, "ss");
  else if (s.ends("ies")) s.set_suffix(s.end - 3, "i");
  else if (s.ends("ss")) { /* unchanged */ }
  else if (s.ends("s")) s.set_suffix(s.end - 1, "");
}

void step1b(Stem& s) {
  if (s.ends("eed")) {
    if (s.measure(s.end - 3) > 0) s.set_suffix(s.end - 3, "ee");
    return;
  }
  bool stripped = false;
  if (s.ends("ed") && s.has_vowel(s.end - 2)) {
    s.set_suffix(s.end - 2, "");
    stripped = true;
  } else if (s.ends("ing") && s.has_vowel(s.end - 3)) {
    s.set_suffix(s.end - 3, "");
    stripped = true;
  }
  if (!stripped) return;

  if (s.ends("at")) s.set_suffix(s.end - 2, "ate");
  else if (s.ends("bl")) s.set_suffix(s.end - 2, "ble");
  else if (s.ends("iz")) s.set_suffix(s.end - 2, "ize");
  else if (s.double_consonant(s.end)) {
    const char c = s.w[s.end - 1];
    if (c != 'l' && c != 's' && c != 'z') s.set_suffix(s.end - 1, "");
  } else if (s.measure(s.end) == 1 && s.cvc(s.end)) {
    s.set_suffix(s.end, "e");
  }
}

void step1c(Stem& s) {
  if (s.ends("y") && s.has_vowel(s.end - 1)) s.w[s.end - 1] = 'i';
}

void step2(Stem& s) {
  static constexpr Rule rules[] = {
      {"ational", "ate", 0}, {"tional", "tion", 0}, {"enci", "ence", 0},
      {"anci", "ance", 0},   {"izer", "ize", 0},    {"abli", "able", 0},
      {"alli", "al", 0},     {"entli", "ent", 0},   {"eli", "e", 0},
      {"ousli", "ous", 0},   {"ization", "ize", 0}, {"ation", "ate", 0},
      {"ator", "ate", 0},    {"alism", "al", 0},    {"iveness", "ive", 0},
      {"fulness", "ful", 0}, {"ousness", "ous", 0}, {"aliti", "al", 0},
      {"iviti", "ive", 0},   {"biliti", "ble", 0},
  };
  apply_rules(s, rules, std::size(rules));
}

void step3(Stem& s) {
  static constexpr Rule rules[] = {
      {"icate", "ic", 0}, {"ative", "", 0}, {"alize", "al", 0},
      {"iciti", "ic", 0}, {"ical", "ic", 0}, {"ful", "", 0}, {"ness", "", 0},
  };
  apply_rules(s, rules, std::size(rules));
}

void step4(Stem& s) {
  // "ion" needs the extra *S-or-*T condition, handled inline.
  static constexpr Rule head[] = {
      {"al", "", 1},    {"ance", "", 1}, {"ence", "", 1}, {"er", "", 1},
      {"ic", "", 1},    {"able", "", 1}, {"ible", "", 1}, {"ant", "", 1},
      {"ement", "", 1}, {"ment", "", 1}, {"ent", "", 1},
  };
  for (const Rule& r : head) {
    if (s.ends(r.suffix)) {
      const size_t stem_len = s.end - r.suffix.size();
      if (s.measure(stem_len) > 1) s.set_suffix(stem_len, "");
      return;
    }
  }
  if (s.ends("ion")) {
    const size_t stem_len = s.end - 3;
    if (s.measure(stem_len) > 1 && stem_len > 0 &&
        (s.w[stem_len - 1] == 's' || s.w[stem_len - 1] == 't'))
      s.set_suffix(stem_len, "");
    return;
  }
  static constexpr Rule tail[] = {
      {"ou", "", 1},  {"ism", "", 1}, {"ate", "", 1}, {"iti", "", 1},
      {"ous", "", 1}, {"ive", "", 1}, {"ize", "", 1},
  };
  apply_rules(s, tail, std::size(tail));
}

void step5a(Stem& s) {
  if (!s.ends("e")) return;
  const size_t stem_len = s.end - 1;
  const int m = s.measure(stem_len);
  if (m > 1 || (m == 1 && !s.cvc(stem_len))) s.set_suffix(stem_len, "");
}

void step5b(Stem& s) {
  if (s.end >= 2 && s.w[s.end - 1] == 'l' && s.double_consonant(s.end) &&
      s.measure(s.end) > 1)
    s.set_suffix(s.end - 1, "");
}

}  // namespace

std::string porter_stem(std::string_view word) {
  if (word.size() <= 2) return std::string(word);
  Stem s{std::string(word), word.size()};
  step1a(s);
  step1b(s);
  step1c(s);
  step2(s);
  step3(s);
  step4(s);
  step5a(s);
  step5b(s);
  s.w.resize(s.end);
  return s.w;
}

}  // namespace bugloc
