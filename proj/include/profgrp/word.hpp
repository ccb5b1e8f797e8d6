#pragma once

#include <cstdint>
#include <cstdlib>
#include <vector>

#include "profgrp/error.hpp"

namespace profgrp {

/// Freely reduced word in a free group.
///
/// Letters encode generator g with sign s as (g+1)*s: +1 -> g0, -2 -> g1^-1.
/// All constructors and operations reduce freely, so no adjacent x x^-1 pair
/// survives.  Generator indices are validated against an alphabet arity only
/// where one is known (Presentation, evaluate).
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<int32_t> letters) : letters_(std::move(letters)) { reduce_(); }

  static Word generator(uint32_t g, int sign = 1) {
    return Word(std::vector<int32_t>{sign >= 0 ? int32_t(g + 1) : -int32_t(g + 1)});
  }

  const std::vector<int32_t>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  size_t size() const { return letters_.size(); }
  static uint32_t gen_of(int32_t letter) { return uint32_t(std::abs(letter)) - 1; }
  static int sign_of(int32_t letter) { return letter > 0 ? 1 : -1; }

  /// Largest generator index used plus one (0 for the empty word).
  uint32_t min_arity() const {
    uint32_t a = 0;
    for (int32_t l : letters_) a = std::max(a, gen_of(l) + 1);
    return a;
  }

  Word inverse() const {
    std::vector<int32_t> out(letters_.rbegin(), letters_.rend());
    for (auto& l : out) l = -l;
    return Word(std::move(out));
  }

  friend Word operator*(const Word& a, const Word& b) {
    std::vector<int32_t> out = a.letters_;
    out.insert(out.end(), b.letters_.begin(), b.letters_.end());
    return Word(std::move(out));
  }

  Word pow(int64_t e) const {
    Word base = e >= 0 ? *this : inverse();
    uint64_t n = uint64_t(e >= 0 ? e : -e);
    Word r;
    for (uint64_t i = 0; i < n; ++i) r = r * base;
    return r;
  }

  /// b^-1 * a * b
  friend Word conj(const Word& a, const Word& b) { return b.inverse() * a * b; }

  friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
  friend bool operator<(const Word& a, const Word& b) { return a.letters_ < b.letters_; }

 private:
  void reduce_() {
    std::vector<int32_t> out;
    out.reserve(letters_.size());
    for (int32_t l : letters_) {
      if (l == 0) throw Error("zero letter in word");
      if (!out.empty() && out.back() == -l)
        out.pop_back();
      else
        out.push_back(l);
    }
    letters_ = std::move(out);
  }

  std::vector<int32_t> letters_;
};

/// Free reduction as a standalone operation (idempotent).
inline Word reduce(const Word& w) { return w; }

/// Product of the images along the word.  images[i] must be the image of
/// generator i; id is the identity of the target group.
template <class T, class MulFn, class InvFn>
T evaluate(const Word& w, const std::vector<T>& images, const T& id, MulFn mul, InvFn inv) {
  for (int32_t l : w.letters())
    if (Word::gen_of(l) >= images.size()) throw Error("word evaluation: arity mismatch");
  T acc = id;
  for (int32_t l : w.letters()) {
    const T& g = images[Word::gen_of(l)];
    acc = Word::sign_of(l) > 0 ? mul(acc, g) : mul(acc, inv(g));
  }
  return acc;
}

}  // namespace profgrp
