#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "profgrp/error.hpp"

namespace profgrp {

/// Permutation of {0..deg-1}.  Products compose left to right:
/// (a*b)(x) = b(a(x)), matching right actions throughout the library.
class Perm {
 public:
  Perm() = default;
  explicit Perm(uint32_t degree) : img_(degree) {
    std::iota(img_.begin(), img_.end(), 0u);
  }
  explicit Perm(std::vector<uint32_t> images) : img_(std::move(images)) {
    std::vector<char> seen(img_.size(), 0);
    for (uint32_t v : img_) {
      if (v >= img_.size() || seen[v]) throw Error("permutation images are not a bijection");
      seen[v] = 1;
    }
  }

  static Perm cycle(uint32_t degree, const std::vector<uint32_t>& pts) {
    Perm p(degree);
    for (size_t i = 0; i < pts.size(); ++i) {
      if (pts[i] >= degree) throw Error("cycle point out of range");
      p.img_[pts[i]] = pts[(i + 1) % pts.size()];
    }
    return Perm(std::move(p.img_));
  }

  static Perm from_cycles(uint32_t degree, const std::vector<std::vector<uint32_t>>& cycles) {
    Perm p(degree);
    for (const auto& c : cycles) p = p * cycle(degree, c);
    return p;
  }

  uint32_t degree() const { return uint32_t(img_.size()); }
  uint32_t operator[](uint32_t i) const { return img_[i]; }
  const std::vector<uint32_t>& images() const { return img_; }

  bool is_identity() const {
    for (uint32_t i = 0; i < img_.size(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  Perm operator*(const Perm& o) const {
    if (degree() != o.degree()) throw Error("permutation degree mismatch");
    Perm r;
    r.img_.resize(img_.size());
    for (size_t i = 0; i < img_.size(); ++i) r.img_[i] = o.img_[img_[i]];
    return r;
  }

  Perm inverse() const {
    Perm r;
    r.img_.resize(img_.size());
    for (uint32_t i = 0; i < img_.size(); ++i) r.img_[img_[i]] = i;
    return r;
  }

  Perm pow(int64_t e) const {
    Perm base = e >= 0 ? *this : inverse();
    uint64_t n = uint64_t(e >= 0 ? e : -e);
    Perm acc(degree());
    while (n) {
      if (n & 1) acc = acc * base;
      base = base * base;
      n >>= 1;
    }
    return acc;
  }

  uint64_t order() const {
    uint64_t ord = 1;
    for (const auto& c : cycles()) ord = std::lcm<uint64_t>(ord, c.size());
    return ord;
  }

  /// Nontrivial cycles, each starting at its least point, sorted by it.
  std::vector<std::vector<uint32_t>> cycles() const {
    std::vector<std::vector<uint32_t>> out;
    std::vector<char> seen(img_.size(), 0);
    for (uint32_t i = 0; i < img_.size(); ++i) {
      if (seen[i] || img_[i] == i) continue;
      std::vector<uint32_t> c;
      uint32_t j = i;
      do {
        c.push_back(j);
        seen[j] = 1;
        j = img_[j];
      } while (j != i);
      out.push_back(std::move(c));
    }
    return out;
  }

  std::string cycle_string(bool one_based = true) const {
    auto cs = cycles();
    if (cs.empty()) return "()";
    std::string out;
    for (const auto& c : cs) {
      out += "(";
      for (size_t i = 0; i < c.size(); ++i) {
        if (i) out += " ";
        out += std::to_string(c[i] + (one_based ? 1 : 0));
      }
      out += ")";
    }
    return out;
  }

  friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
  friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }
  friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

 private:
  std::vector<uint32_t> img_;
};

inline Perm conj(const Perm& x, const Perm& g) { return g.inverse() * x * g; }
inline Perm comm(const Perm& a, const Perm& b) { return a.inverse() * b.inverse() * a * b; }

struct PermHash {
  size_t operator()(const Perm& p) const {
    uint64_t h = 1469598103934665603ull;
    for (uint32_t v : p.images()) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return size_t(h);
  }
};

}  // namespace profgrp
