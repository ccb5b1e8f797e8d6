#include "profgrp/presentation.hpp"

#include <cctype>
#include <map>

namespace profgrp {

Presentation::Presentation(std::vector<std::string> names, std::vector<Word> relators)
    : names_(std::move(names)) {
  for (auto& w : relators) {
    for (int32_t l : w.letters())
      if (Word::gen_of(l) >= names_.size()) throw Error("relator uses generator out of range");
    if (!w.empty()) relators_.push_back(std::move(w));
  }
}

namespace {

struct Lexer {
  const std::string& s;
  size_t pos = 0;
  int line = 1, col = 1;

  explicit Lexer(const std::string& text) : s(text) {}

  void advance() {
    if (pos < s.size() && s[pos] == '\n') {
      ++line;
      col = 0;
    }
    ++pos;
    ++col;
  }

  void skip_ws() {
    while (pos < s.size()) {
      if (s[pos] == '#') {
        while (pos < s.size() && s[pos] != '\n') advance();
      } else if (std::isspace(uint8_t(s[pos]))) {
        advance();
      } else {
        break;
      }
    }
  }

  bool eof() {
    skip_ws();
    return pos >= s.size();
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(line, col, msg); }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    advance();
  }

  bool accept(char c) {
    if (peek() == c) {
      advance();
      return true;
    }
    return false;
  }

  std::string ident() {
    skip_ws();
    if (pos >= s.size() || !(std::isalpha(uint8_t(s[pos])) || s[pos] == '_'))
      fail("expected identifier");
    std::string out;
    while (pos < s.size() && (std::isalnum(uint8_t(s[pos])) || s[pos] == '_')) {
      out += s[pos];
      advance();
    }
    return out;
  }

  int64_t integer() {
    skip_ws();
    bool negative = false;
    if (pos < s.size() && s[pos] == '-') {
      negative = true;
      advance();
    }
    if (pos >= s.size() || !std::isdigit(uint8_t(s[pos]))) fail("expected integer");
    int64_t v = 0;
    while (pos < s.size() && std::isdigit(uint8_t(s[pos]))) {
      v = v * 10 + (s[pos] - '0');
      if (v > (1 << 20)) fail("exponent too large");
      advance();
    }
    return negative ? -v : v;
  }
};

struct WordParser {
  Lexer& lx;
  const std::map<std::string, uint32_t>& gens;

  Word word() {
    Word w = factor();
    for (;;) {
      lx.accept('*');
      char c = lx.peek();
      if (std::isalpha(uint8_t(c)) || c == '_' || c == '(')
        w = w * factor();
      else
        break;
    }
    return w;
  }

  Word factor() {
    Word base = atom();
    while (lx.peek() == '^') {
      lx.advance();
      char c = lx.peek();
      if (c == '(' || std::isalpha(uint8_t(c)) || c == '_') {
        Word by = atom();
        base = conj(base, by);
      } else {
        int l = lx.line, cc = lx.col;
        int64_t e = lx.integer();
        if (e == 0) throw ParseError(l, cc, "zero exponent");
        base = base.pow(e);
      }
    }
    return base;
  }

  Word atom() {
    if (lx.accept('(')) {
      Word w = word();
      lx.expect(')');
      return w;
    }
    int l = lx.line, c = lx.col;
    std::string name = lx.ident();
    auto it = gens.find(name);
    if (it == gens.end()) throw ParseError(l, c, "unknown generator '" + name + "'");
    return Word::generator(it->second);
  }
};

}  // namespace

Presentation parse_presentation(const std::string& text) {
  Lexer lx(text);
  lx.expect('<');
  std::vector<std::string> names;
  std::map<std::string, uint32_t> gens;
  for (;;) {
    int l = lx.line, c = lx.col;
    std::string n = lx.ident();
    if (gens.count(n)) throw ParseError(l, c, "duplicate generator '" + n + "'");
    gens[n] = uint32_t(names.size());
    names.push_back(n);
    if (!lx.accept(',')) break;
  }
  lx.expect('|');
  WordParser wp{lx, gens};
  std::vector<Word> relators;
  for (;;) {
    Word u = wp.word();
    if (lx.accept('='))
      u = u * wp.word().inverse();
    relators.push_back(u);
    if (!lx.accept(',')) break;
  }
  lx.expect('>');
  if (!lx.eof()) lx.fail("trailing input after presentation");
  return Presentation(std::move(names), std::move(relators));
}

Word parse_word(const std::string& text, const std::vector<std::string>& names) {
  Lexer lx(text);
  std::map<std::string, uint32_t> gens;
  for (size_t i = 0; i < names.size(); ++i) gens[names[i]] = uint32_t(i);
  WordParser wp{lx, gens};
  Word w = wp.word();
  if (!lx.eof()) lx.fail("trailing input after word");
  return w;
}

std::string print_word(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "()";  // never emitted for stored relators
  std::string out;
  const auto& ls = w.letters();
  size_t i = 0;
  bool first = true;
  while (i < ls.size()) {
    size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    int64_t e = int64_t(j - i) * Word::sign_of(ls[i]);
    if (!first) out += "*";
    out += names[Word::gen_of(ls[i])];
    if (e != 1) out += "^" + std::to_string(e);
    first = false;
    i = j;
  }
  return out;
}

std::string print_presentation(const Presentation& p) {
  std::string out = "< ";
  for (size_t i = 0; i < p.generator_names().size(); ++i) {
    if (i) out += ", ";
    out += p.generator_names()[i];
  }
  out += " | ";
  for (size_t i = 0; i < p.relators().size(); ++i) {
    if (i) out += ", ";
    out += print_word(p.relators()[i], p.generator_names());
  }
  out += " >";
  return out;
}

}  // namespace profgrp
