#pragma once

#include <string>
#include <vector>

#include "profgrp/word.hpp"

namespace profgrp {

/// A finite presentation: named generators plus freely reduced relators.
/// Relators that reduce to the empty word are dropped; an equality u = v in
/// the source text is stored as the relator u * v^-1.
class Presentation {
 public:
  Presentation() = default;
  Presentation(std::vector<std::string> names, std::vector<Word> relators);

  const std::vector<std::string>& generator_names() const { return names_; }
  size_t arity() const { return names_.size(); }
  const std::vector<Word>& relators() const { return relators_; }

  friend bool operator==(const Presentation& a, const Presentation& b) {
    return a.names_ == b.names_ && a.relators_ == b.relators_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<Word> relators_;
};

/// Parse the presentation DSL:
///
///   presentation := '<' names '|' rel (',' rel)* '>'
///   names        := ident (',' ident)*
///   rel          := word | word '=' word
///   word         := factor+            ('*' optional between factors)
///   factor       := ident | '(' word ')' | factor '^' int
///                 | factor '^' ident | factor '^' '(' word ')'
///
/// a^w with w a word is the conjugate w^-1 * a * w; integer exponents are
/// powers and 0 is rejected.  '#' starts a comment running to end of line.
Presentation parse_presentation(const std::string& text);

/// Parse a single word over the given generator names (the `--subgroup` and
/// module-label syntax).  Same factor grammar as relators.
Word parse_word(const std::string& text, const std::vector<std::string>& names);

/// Canonical DSL text; parse_presentation(print_presentation(p)) == p.
std::string print_presentation(const Presentation& p);
std::string print_word(const Word& w, const std::vector<std::string>& names);

struct HomCheck {
  bool ok = false;
  size_t failing_relator = 0;  // valid when !ok
};

/// Pass iff every relator evaluates to the identity under images.
template <class T, class MulFn, class InvFn>
HomCheck check_homomorphism(const Presentation& p, const std::vector<T>& images, const T& id,
                            MulFn mul, InvFn inv, bool (*is_id)(const T&, const T&) = nullptr) {
  if (images.size() != p.arity()) throw Error("check_homomorphism: arity mismatch");
  for (size_t i = 0; i < p.relators().size(); ++i) {
    T v = evaluate(p.relators()[i], images, id, mul, inv);
    bool equal = is_id ? is_id(v, id) : (v == id);
    if (!equal) return HomCheck{false, i};
  }
  return HomCheck{true, 0};
}

}  // namespace profgrp
