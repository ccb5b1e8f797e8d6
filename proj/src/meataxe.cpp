#include "profgrp/meataxe.hpp"

#include <algorithm>
#include <random>

#include "profgrp/error.hpp"

namespace profgrp {

namespace {

void norm(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int pdeg(const Poly& p) { return int(p.size()) - 1; }

Poly pmul(const Poly& a, const Poly& b, const Field& F) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j)
      if (b[j]) c[i + j] = F.add(c[i + j], F.mul(a[i], b[j]));
  }
  norm(c);
  return c;
}

Poly pscale(Poly a, gfel c, const Field& F) {
  for (auto& v : a) v = F.mul(v, c);
  norm(a);
  return a;
}

// a mod b (b nonzero); optionally the quotient.
Poly pmod(Poly a, const Poly& b, const Field& F, Poly* quot = nullptr) {
  if (b.empty()) throw Error("polynomial division by zero");
  Poly q;
  gfel binv = F.inv(b.back());
  while (int(a.size()) >= int(b.size())) {
    gfel c = F.mul(a.back(), binv);
    size_t off = a.size() - b.size();
    if (quot) {
      if (q.size() < off + 1) q.resize(off + 1, 0);
      q[off] = c;
    }
    if (c)
      for (size_t j = 0; j < b.size(); ++j) a[off + j] = F.sub(a[off + j], F.mul(c, b[j]));
    a.pop_back();
    norm(a);
    if (a.size() < b.size()) break;
  }
  norm(a);
  if (quot) {
    norm(q);
    *quot = q;
  }
  return a;
}

Poly pgcd(Poly a, Poly b, const Field& F) {
  while (!b.empty()) {
    Poly r = pmod(a, b, F);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() != 1) a = pscale(a, F.inv(a.back()), F);
  return a;
}

Poly pdiv_exact(const Poly& a, const Poly& b, const Field& F) {
  Poly q;
  pmod(a, b, F, &q);
  return q;
}

Poly ppowmod(Poly base, uint64_t e, const Poly& mod, const Field& F) {
  Poly r{1};
  base = pmod(std::move(base), mod, F);
  while (e) {
    if (e & 1) r = pmod(pmul(r, base, F), mod, F);
    base = pmod(pmul(base, base, F), mod, F);
    e >>= 1;
  }
  return r;
}

Poly pderiv(const Poly& a, const Field& F) {
  Poly d;
  for (size_t i = 1; i < a.size(); ++i) d.push_back(F.mul(a[i], F.from_int(int64_t(i))));
  norm(d);
  return d;
}

// x -> x^(1/p) on F_{p^k}: the inverse Frobenius is x^(q/p).
gfel proot(gfel a, const Field& F) {
  uint64_t e = F.q() / F.p();
  gfel r = 1;
  gfel b = a;
  while (e) {
    if (e & 1) r = F.mul(r, b);
    b = F.mul(b, b);
    e >>= 1;
  }
  return r;
}

// Squarefree part.
Poly pradical(Poly f, const Field& F) {
  norm(f);
  if (pdeg(f) <= 1) return f;
  Poly d = pderiv(f, F);
  if (d.empty()) {
    // f = g(x^p) = (g~(x))^p with g~ coefficients the p-th roots.
    Poly g;
    for (size_t i = 0; i < f.size(); i += F.p()) g.push_back(proot(f[i], F));
    return pradical(g, F);
  }
  Poly g = pgcd(f, d, F);
  if (pdeg(g) == 0) {
    if (f.back() != 1) f = pscale(f, F.inv(f.back()), F);
    return f;
  }
  return pradical(pdiv_exact(f, g, F), F);
}

void edf(const Poly& f, int d, const Field& F, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (pdeg(f) == d) {
    out.push_back(f);
    return;
  }
  uint64_t qd = 1;
  for (int i = 0; i < d; ++i) qd *= F.q();
  for (;;) {
    Poly r(size_t(pdeg(f)), 0);
    for (auto& c : r) c = gfel(rng() % F.q());
    norm(r);
    if (pdeg(r) < 1) continue;
    Poly s;
    if (F.p() == 2) {
      // trace map sum_{i<d*k} r^(2^i)
      Poly t = pmod(r, f, F);
      s = t;
      uint32_t steps = uint32_t(d) * F.k();
      for (uint32_t i = 1; i < steps; ++i) {
        t = pmod(pmul(t, t, F), f, F);
        for (size_t j = 0; j < t.size(); ++j) {
          if (s.size() <= j) s.resize(j + 1, 0);
          s[j] = F.add(s[j], t[j]);
        }
        norm(s);
      }
    } else {
      s = ppowmod(r, (qd - 1) / 2, f, F);
      if (!s.empty()) s[0] = F.sub(s[0], 1);
      norm(s);
    }
    Poly g = pgcd(s, f, F);
    if (pdeg(g) > 0 && pdeg(g) < pdeg(f)) {
      edf(g, d, F, rng, out);
      edf(pdiv_exact(f, g, F), d, F, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<Poly> poly_factors_distinct(const Poly& f0, const Field& F, uint64_t seed) {
  Poly f = f0;
  norm(f);
  if (pdeg(f) < 1) return {};
  f = pradical(f, F);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  std::vector<Poly> out;
  Poly x{0, 1};
  Poly h = x;  // x^(q^d) mod f, iterated
  for (int d = 1; pdeg(f) >= 1 && d <= pdeg(f); ++d) {
    if (2 * d > pdeg(f)) {
      out.push_back(f);
      break;
    }
    h = ppowmod(h, F.q(), f, F);
    Poly hx = h;
    // h - x
    if (hx.size() < 2) hx.resize(2, 0);
    hx[1] = F.sub(hx[1], 1);
    norm(hx);
    Poly g = pgcd(hx, f, F);
    if (pdeg(g) > 0) {
      edf(g, d, F, rng, out);
      f = pdiv_exact(f, g, F);
      h = pmod(h, f, F);
    }
  }
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return out;
}

Poly charpoly(const Mat& a0) {
  const Field& F = a0.field();
  size_t n = a0.rows();
  if (n != a0.cols()) throw Error("charpoly of non-square matrix");
  Mat h = a0.to_byte();
  // Similarity reduction to upper Hessenberg form.
  for (size_t j = 0; j + 2 < n; ++j) {
    size_t piv = SIZE_MAX;
    for (size_t i = j + 1; i < n; ++i)
      if (h.get(i, j)) {
        piv = i;
        break;
      }
    if (piv == SIZE_MAX) continue;
    if (piv != j + 1) {
      h.swap_rows(j + 1, piv);
      for (size_t i = 0; i < n; ++i) {  // swap columns j+1, piv
        gfel t = h.get(i, j + 1);
        h.set(i, j + 1, h.get(i, piv));
        h.set(i, piv, t);
      }
    }
    gfel inv_p = F.inv(h.get(j + 1, j));
    for (size_t i = j + 2; i < n; ++i) {
      gfel f = F.mul(h.get(i, j), inv_p);
      if (!f) continue;
      for (size_t c = j; c < n; ++c) h.set(i, c, F.sub(h.get(i, c), F.mul(f, h.get(j + 1, c))));
      for (size_t r = 0; r < n; ++r) h.set(r, j + 1, F.add(h.get(r, j + 1), F.mul(f, h.get(r, i))));
    }
  }
  // Leading principal characteristic polynomials of the Hessenberg form.
  std::vector<Poly> p(n + 1);
  p[0] = Poly{1};
  for (size_t i = 1; i <= n; ++i) {
    // p_i = (x - h[i-1][i-1]) p_{i-1} - sum_m h[i-1-m][i-1] (prod subdiag) p_{i-1-m}
    Poly t(p[i - 1].size() + 1, 0);
    for (size_t k = 0; k < p[i - 1].size(); ++k) {
      t[k + 1] = F.add(t[k + 1], p[i - 1][k]);
      t[k] = F.sub(t[k], F.mul(h.get(i - 1, i - 1), p[i - 1][k]));
    }
    gfel prod = 1;
    for (size_t m = 1; m < i; ++m) {
      prod = F.mul(prod, h.get(i - m, i - m - 1));
      if (!prod) break;
      gfel c = F.mul(h.get(i - 1 - m, i - 1), prod);
      if (!c) continue;
      for (size_t k = 0; k < p[i - 1 - m].size(); ++k)
        t[k] = F.sub(t[k], F.mul(c, p[i - 1 - m][k]));
    }
    norm(t);
    p[i] = std::move(t);
  }
  return p[n];
}

Mat poly_eval_mat(const Poly& f, const Mat& a) {
  const Field& F = a.field();
  size_t n = a.rows();
  Mat r(F, n, n, !a.packed());
  if (f.empty()) return r;
  // Horner from the top coefficient.
  for (size_t i = 0; i < n; ++i) r.set(i, i, f.back());
  for (size_t k = f.size() - 1; k-- > 0;) {
    r = r * a;
    if (f[k])
      for (size_t i = 0; i < n; ++i) r.set(i, i, F.add(r.get(i, i), f[k]));
  }
  return r;
}

namespace {

Mat scaled(const Mat& a, gfel c) {
  const Field& F = a.field();
  Mat r(F, a.rows(), a.cols(), true);
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) {
      gfel v = a.get(i, j);
      if (v) r.set(i, j, F.mul(v, c));
    }
  return r;
}

Mat random_algebra_element(const GModule& m, std::mt19937_64& rng) {
  const Field& F = *m.field;
  for (;;) {
    Mat acc(F, m.dim, m.dim, true);
    int terms = 2 + int(rng() % 2);
    for (int t = 0; t < terms; ++t) {
      int len = 1 + int(rng() % 12);
      Mat w = Mat::identity(F, m.dim, true);
      for (int i = 0; i < len; ++i) w = w * m.action[rng() % m.action.size()].to_byte();
      gfel c = gfel(1 + rng() % (F.q() - 1));
      acc = acc + scaled(w, c);
    }
    if (!acc.is_zero()) return acc;
  }
}

GModule transposed(const GModule& m) {
  GModule t;
  t.group = m.group;
  t.field = m.field;
  t.dim = m.dim;
  for (const auto& a : m.action) t.action.push_back(a.transpose());
  t.label = "transposed";
  return t;
}

uint64_t mix_seed(uint64_t seed, uint64_t salt) {
  uint64_t x = seed + 0x9e3779b97f4a7c15ull + salt * 0xbf58476d1ce4e5b9ull;
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ull;
  x ^= x >> 27;
  return x;
}

}  // namespace

IrredResult is_irreducible(const GModule& m, uint64_t seed) {
  if (m.dim == 0) throw Error("is_irreducible: zero module");
  if (m.dim == 1) return IrredResult{true, Mat(), "dim1"};
  if (m.action.empty()) {
    // trivial group: any line is a submodule
    Mat line(*m.field, 1, m.dim, true);
    line.set(0, 0, 1);
    return IrredResult{false, line, "trivial-group"};
  }
  std::mt19937_64 rng(seed);
  GModule mt = transposed(m);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Mat theta = random_algebra_element(m, rng);
    Poly c = charpoly(theta);
    auto factors = poly_factors_distinct(c, *m.field, mix_seed(seed, uint64_t(attempt)));
    for (const auto& f : factors) {
      Mat pf = poly_eval_mat(f, theta);
      Mat N = kernel(pf.transpose());  // row-vectors v with v pf = 0
      for (size_t r = 0; r < N.rows(); ++r) {
        Mat seed_v(*m.field, 1, m.dim, true);
        for (uint32_t j = 0; j < m.dim; ++j) seed_v.set(0, j, N.get(r, j));
        Mat span = spin(m, seed_v);
        if (span.rows() < m.dim) {
          return IrredResult{false, span,
                             "seed=" + std::to_string(seed) + ";attempt=" +
                                 std::to_string(attempt) + ";nullity=" + std::to_string(N.rows())};
        }
      }
      if (N.rows() == f.size() - 1) {
        // Norton: forward spins fill; one transposed spin decides.
        Mat Nt = kernel(pf);
        Mat seed_w(*m.field, 1, m.dim, true);
        for (uint32_t j = 0; j < m.dim; ++j) seed_w.set(0, j, Nt.get(0, j));
        Mat span_t = spin(mt, seed_w);
        if (span_t.rows() < m.dim) {
          // the annihilator of a transposed-invariant space is a submodule
          Mat sub = kernel(span_t);
          return IrredResult{false, sub,
                             "seed=" + std::to_string(seed) + ";attempt=" +
                                 std::to_string(attempt) + ";dual"};
        }
        return IrredResult{true, Mat(),
                           "seed=" + std::to_string(seed) + ";attempt=" + std::to_string(attempt) +
                               ";factor_deg=" + std::to_string(f.size() - 1)};
      }
    }
  }
  throw Error("is_irreducible: undecided after 64 attempts");
}

namespace {

void chop_rec(const GModule& m, uint64_t seed, std::vector<GModule>& out) {
  if (m.dim == 0) return;
  IrredResult r = is_irreducible(m, seed);
  if (r.irreducible) {
    out.push_back(m);
    return;
  }
  chop_rec(submodule_action(m, r.submodule, "factor"), mix_seed(seed, 1), out);
  chop_rec(quotient_action(m, r.submodule, "factor"), mix_seed(seed, 2), out);
}

}  // namespace

std::vector<GModule> chop(const GModule& m, uint64_t seed) {
  std::vector<GModule> out;
  chop_rec(m, seed, out);
  return out;
}

bool isomorphic(const GModule& m, const GModule& n, uint64_t seed) {
  if (!m.same_context(n)) throw Error("isomorphic: group/field mismatch");
  if (m.dim != n.dim) return false;
  if (m.dim == 0) return true;
  // Characteristic polynomial screen on shared words.
  std::mt19937_64 rng(mix_seed(seed, 7));
  for (int t = 0; t < 3; ++t) {
    int len = 1 + int(rng() % 12);
    Mat wm = Mat::identity(*m.field, m.dim, true);
    Mat wn = Mat::identity(*n.field, n.dim, true);
    for (int i = 0; i < len; ++i) {
      size_t g = rng() % m.action.size();
      wm = wm * m.action[g].to_byte();
      wn = wn * n.action[g].to_byte();
    }
    if (charpoly(wm) != charpoly(wn)) return false;
  }
  const GModule* a = &m;
  const GModule* b = &n;
  if (!is_irreducible(m, seed).irreducible) {
    if (!is_irreducible(n, seed).irreducible)
      throw Error("isomorphic: undecided (both inputs reducible)");
    std::swap(a, b);
  }
  // Schur: a nonzero hom from/to an irreducible of equal dimension is an iso.
  return hom_dim(*a, *b) > 0;
}

size_t endo_degree(const GModule& m) { return hom_dim(m, m); }

std::vector<GModule> irreducibles(PermGroupPtr g, const Field& F, uint64_t seed,
                                  uint64_t order_bound) {
  if (g->order() > order_bound)
    throw LimitError("irreducibles: group order " + std::to_string(g->order()) +
                     " exceeds bound " + std::to_string(order_bound));
  GModule reg = regular_module(g, F);
  std::vector<GModule> factors = chop(reg, seed);
  std::vector<GModule> irr;
  for (auto& f : factors) {
    bool known = false;
    for (const auto& e : irr)
      if (isomorphic(f, e, seed)) {
        known = true;
        break;
      }
    if (!known) irr.push_back(std::move(f));
  }
  // Deterministic order: dim, endo degree, then charpoly fingerprint of the
  // product of the generators.
  auto fingerprint = [](const GModule& m) {
    Mat w = Mat::identity(*m.field, m.dim, true);
    for (const auto& a : m.action) w = w * a.to_byte();
    return charpoly(w);
  };
  std::vector<std::pair<std::tuple<uint32_t, size_t, Poly>, size_t>> keys;
  for (size_t i = 0; i < irr.size(); ++i)
    keys.push_back({{irr[i].dim, endo_degree(irr[i]), fingerprint(irr[i])}, i});
  std::stable_sort(keys.begin(), keys.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<GModule> out;
  for (size_t i = 0; i < keys.size(); ++i) {
    GModule m = std::move(irr[keys[i].second]);
    m.label = "irr:" + std::to_string(i);
    out.push_back(std::move(m));
  }
  return out;
}

GModule heart(const GModule& pm, uint64_t seed) {
  const Field& F = *pm.field;
  uint32_t n = pm.dim;
  // The module must be a permutation module with a transitive action.
  std::vector<Perm> perms;
  for (const auto& a : pm.action) {
    std::vector<uint32_t> img(n);
    for (uint32_t i = 0; i < n; ++i) {
      uint32_t ones = 0, target = 0;
      for (uint32_t j = 0; j < n; ++j) {
        gfel v = a.get(i, j);
        if (v == 1)
          target = j, ++ones;
        else if (v)
          ones = 2;
      }
      if (ones != 1) throw Error("heart: not a permutation module");
      img[i] = target;
    }
    perms.emplace_back(std::move(img));
  }
  std::vector<char> seen(n, 0);
  std::vector<uint32_t> orbit{0};
  seen[0] = 1;
  for (size_t qi = 0; qi < orbit.size(); ++qi)
    for (const auto& p : perms)
      if (!seen[p[orbit[qi]]]) {
        seen[p[orbit[qi]]] = 1;
        orbit.push_back(p[orbit[qi]]);
      }
  if (orbit.size() != n) throw Error("heart: action is not transitive");

  Mat basis(F, n - 1, n, true);
  for (uint32_t i = 0; i + 1 < n; ++i) {
    basis.set(i, i, 1);
    basis.set(i, n - 1, F.neg(1));
  }
  GModule sub = submodule_action(pm, basis, "heart");
  GModule h = sub;
  if (n % F.p() == 0) {
    Mat ones(F, 1, n - 1, true);
    for (uint32_t j = 0; j + 1 < n; ++j) ones.set(0, j, 1);
    h = quotient_action(sub, ones, "heart");
  }
  if (h.dim == 0) throw Error("heart: empty module");
  IrredResult r = is_irreducible(h, seed);
  if (!r.irreducible) throw Error("heart: result is not irreducible (action not 2-transitive?)");
  bool trivial_action = true;
  for (const auto& a : h.action)
    if (!is_identity(a)) trivial_action = false;
  if (trivial_action && h.dim == 1 && pm.dim > 2)
    throw Error("heart: result is trivial");
  h.label = "heart";
  return h;
}

}  // namespace profgrp
