#pragma once

#include <cstdint>
#include <vector>

#include "profgrp/error.hpp"

namespace profgrp {

/// Element of a finite field, encoded as an integer in [0, q).
/// Prime fields store the residue; F_{p^k} packs the polynomial coefficients
/// c_0..c_{k-1} of the residue class in base p (value = sum c_i * p^i).
using gfel = uint16_t;

/// A small finite field F_{p^k}, p prime, p^k <= 2^16.
///
/// Extension fields fix the lexicographically smallest monic irreducible
/// modulus of degree k (ordered by the packed value of its non-leading
/// coefficients) and multiply through log/antilog tables over the smallest
/// primitive element.  Instances are interned and immutable; use field_make.
class Field {
 public:
  uint32_t p() const { return p_; }
  uint32_t k() const { return k_; }
  uint32_t q() const { return q_; }

  gfel add(gfel a, gfel b) const {
    if (k_ == 1) {
      uint32_t s = uint32_t(a) + b;
      return gfel(s >= p_ ? s - p_ : s);
    }
    return add_ext(a, b);
  }
  gfel sub(gfel a, gfel b) const { return add(a, neg(b)); }
  gfel neg(gfel a) const {
    if (k_ == 1) return gfel(a == 0 ? 0 : p_ - a);
    return neg_[a];
  }
  gfel mul(gfel a, gfel b) const {
    if (k_ == 1) return gfel(uint32_t(a) * b % p_);
    if (a == 0 || b == 0) return 0;
    uint32_t e = uint32_t(log_[a]) + log_[b];
    if (e >= q_ - 1) e -= q_ - 1;
    return exp_[e];
  }
  gfel inv(gfel a) const {
    if (a == 0) throw Error("division by zero in F_" + std::to_string(q_));
    if (k_ == 1) return inv_[a];
    uint32_t e = (q_ - 1 - log_[a]) % (q_ - 1);
    return exp_[e];
  }
  gfel div(gfel a, gfel b) const { return mul(a, inv(b)); }

  /// Embed an integer into the prime subfield (value mod p).
  gfel from_int(int64_t n) const {
    int64_t r = n % int64_t(p_);
    if (r < 0) r += p_;
    return gfel(r);
  }

  /// Modulus coefficients c_0..c_k with c_k = 1 (only meaningful for k > 1).
  const std::vector<uint32_t>& modulus() const { return modulus_; }

  /// The packed encoding of the residue class of t (the canonical generator).
  gfel generator() const { return k_ == 1 ? gfel(p_ > 2 ? find_prime_primitive() : 1) : gfel(p_); }

  bool operator==(const Field& o) const { return p_ == o.p_ && k_ == o.k_; }

 private:
  friend const Field& field_make(uint32_t p, uint32_t k);
  Field(uint32_t p, uint32_t k);

  gfel add_ext(gfel a, gfel b) const;
  uint32_t find_prime_primitive() const;

  uint32_t p_ = 0, k_ = 0, q_ = 0;
  std::vector<uint32_t> modulus_;
  std::vector<gfel> exp_, log_, neg_, inv_;
  std::vector<gfel> add_table_;  // q*q table when q <= 256
};

/// Intern the field F_{p^k}.  Errors: p not prime, p^k > 2^16, k = 0.
const Field& field_make(uint32_t p, uint32_t k = 1);

}  // namespace profgrp
