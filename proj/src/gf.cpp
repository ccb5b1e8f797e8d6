#include "profgrp/gf.hpp"

#include <memory>
#include <mutex>

namespace profgrp {

namespace {

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Dense polynomial arithmetic over F_p, coefficients little-endian.
using Poly = std::vector<uint32_t>;

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod, uint32_t p) {
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  }
  size_t k = mod.size() - 1;
  for (size_t i = c.size(); i-- > k;) {
    uint32_t t = c[i];
    if (!t) continue;
    c[i] = 0;
    for (size_t j = 0; j < k; ++j) c[i - k + j] = (c[i - k + j] + t * (p - mod[j]) % p) % p;
  }
  c.resize(k);
  return c;
}

bool poly_divides(const Poly& d, Poly r, uint32_t p) {
  // d monic; returns whether d | r.
  while (r.size() >= d.size()) {
    uint32_t lead = r.back();
    if (lead) {
      size_t off = r.size() - d.size();
      for (size_t j = 0; j < d.size(); ++j) r[off + j] = (r[off + j] + lead * (p - d[j]) % p) % p;
    }
    r.pop_back();
  }
  for (uint32_t c : r)
    if (c) return false;
  return true;
}

void decode(uint32_t v, uint32_t p, uint32_t k, Poly& out) {
  out.assign(k, 0);
  for (uint32_t i = 0; i < k; ++i) {
    out[i] = v % p;
    v /= p;
  }
}

uint32_t encode(const Poly& f, uint32_t p) {
  uint32_t v = 0;
  for (size_t i = f.size(); i-- > 0;) v = v * p + f[i];
  return v;
}

bool is_irreducible(const Poly& f, uint32_t p) {
  // f monic of degree k; trial division by all monic polynomials of degree 1..k/2.
  uint32_t k = uint32_t(f.size()) - 1;
  for (uint32_t d = 1; 2 * d <= k; ++d) {
    uint64_t count = 1;
    for (uint32_t i = 0; i < d; ++i) count *= p;
    for (uint64_t v = 0; v < count; ++v) {
      Poly g;
      decode(uint32_t(v), p, d, g);
      g.push_back(1);
      if (poly_divides(g, f, p)) return false;
    }
  }
  return true;
}

}  // namespace

Field::Field(uint32_t p, uint32_t k) : p_(p), k_(k) {
  uint64_t q = 1;
  for (uint32_t i = 0; i < k; ++i) q *= p;
  q_ = uint32_t(q);

  if (k_ == 1) {
    inv_.assign(q_, 0);
    for (uint32_t a = 1; a < q_; ++a) {
      // Fermat: a^(p-2) mod p.
      uint64_t r = 1, b = a, e = p_ - 2;
      while (e) {
        if (e & 1) r = r * b % p_;
        b = b * b % p_;
        e >>= 1;
      }
      inv_[a] = gfel(r);
    }
    return;
  }

  // Smallest irreducible monic modulus of degree k.
  Poly mod;
  for (uint32_t v = 0;; ++v) {
    decode(v, p_, k_, mod);
    mod.push_back(1);
    if (is_irreducible(mod, p_)) break;
    if (v == q_ - 1) throw Error("no irreducible modulus found");
  }
  modulus_.assign(mod.begin(), mod.end());

  // Negation table (digitwise).
  neg_.assign(q_, 0);
  Poly f;
  for (uint32_t v = 0; v < q_; ++v) {
    decode(v, p_, k_, f);
    for (auto& c : f) c = c ? p_ - c : 0;
    neg_[v] = gfel(encode(f, p_));
  }

  // Find the smallest primitive element and fill log/antilog tables.
  exp_.assign(q_ - 1, 0);
  log_.assign(q_, 0);
  for (uint32_t cand = 2; cand < q_; ++cand) {
    Poly g;
    decode(cand, p_, k_, g);
    Poly acc(k_, 0);
    acc[0] = 1;
    bool primitive = true;
    std::vector<gfel> pow(q_ - 1, 0);
    std::vector<bool> seen(q_, false);
    for (uint32_t i = 0; i < q_ - 1; ++i) {
      uint32_t v = encode(acc, p_);
      if (seen[v]) {
        primitive = false;
        break;
      }
      seen[v] = true;
      pow[i] = gfel(v);
      acc = poly_mulmod(acc, g, mod, p_);
    }
    if (primitive) {
      for (uint32_t i = 0; i < q_ - 1; ++i) {
        exp_[i] = pow[i];
        log_[pow[i]] = gfel(i);
      }
      break;
    }
    if (cand == q_ - 1) throw Error("no primitive element found");
  }

  if (q_ <= 256) {
    add_table_.assign(size_t(q_) * q_, 0);
    Poly a, b;
    for (uint32_t x = 0; x < q_; ++x)
      for (uint32_t y = 0; y < q_; ++y) {
        decode(x, p_, k_, a);
        decode(y, p_, k_, b);
        for (uint32_t i = 0; i < k_; ++i) a[i] = (a[i] + b[i]) % p_;
        add_table_[size_t(x) * q_ + y] = gfel(encode(a, p_));
      }
  }
}

gfel Field::add_ext(gfel a, gfel b) const {
  if (!add_table_.empty()) return add_table_[size_t(a) * q_ + b];
  uint32_t va = a, vb = b, out = 0, mul = 1;
  for (uint32_t i = 0; i < k_; ++i) {
    out += (va % p_ + vb % p_) % p_ * mul;
    va /= p_;
    vb /= p_;
    mul *= p_;
  }
  return gfel(out);
}

uint32_t Field::find_prime_primitive() const {
  for (uint32_t g = 2; g < q_; ++g) {
    uint32_t ord = 1;
    uint64_t x = g;
    while (x != 1) {
      x = x * g % p_;
      ++ord;
    }
    if (ord == q_ - 1) return g;
  }
  return 1;
}

const Field& field_make(uint32_t p, uint32_t k) {
  if (!is_prime(p)) throw Error("field characteristic " + std::to_string(p) + " is not prime");
  if (k == 0) throw Error("field degree must be positive");
  uint64_t q = 1;
  for (uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > 65536) throw Error("field size p^k exceeds 2^16");
  }

  static std::mutex mu;
  static std::vector<std::unique_ptr<Field>> registry;
  std::lock_guard<std::mutex> lock(mu);
  for (const auto& f : registry)
    if (f->p() == p && f->k() == k) return *f;
  registry.emplace_back(new Field(p, k));
  return *registry.back();
}

}  // namespace profgrp
