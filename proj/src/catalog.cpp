#include "profgrp/catalog.hpp"

#include <algorithm>
#include <cstdlib>

#include "profgrp/error.hpp"
#include "profgrp/meataxe.hpp"

namespace profgrp {

namespace {

uint64_t factorial(uint32_t n) {
  uint64_t r = 1;
  for (uint32_t i = 2; i <= n; ++i) r *= i;
  return r;
}

void certify(bool cond, const std::string& what) {
  if (!cond) throw Error("catalog certification failed: " + what);
}

BuiltGroup from_presentation(const std::string& spec, const std::string& dsl,
                             uint64_t expected_order, size_t max_cosets) {
  Presentation p = parse_presentation(dsl);
  CosetTable t = enumerate(p, {}, max_cosets, Strategy::hlt);
  if (!t.closed()) throw LimitError("coset enumeration overflow for " + spec);
  std::vector<Perm> gens = to_permutations(t);
  auto check = check_homomorphism(
      p, gens, Perm(uint32_t(t.live_count)), [](const Perm& a, const Perm& b) { return a * b; },
      [](const Perm& a) { return a.inverse(); });
  certify(check.ok, spec + ": permutation images violate a relator");
  BuiltGroup bg;
  bg.spec = spec;
  bg.group = std::make_shared<PermGroup>(gens, uint32_t(t.live_count));
  bg.presentation = std::move(p);
  certify(bg.group->order() == expected_order, spec + ": order");
  certify(bg.group->order() == t.live_count, spec + ": regular action size");
  return bg;
}

std::string carmichael_dsl(uint32_t n) {
  std::string s = "< ";
  for (uint32_t i = 1; i <= n; ++i) s += (i > 1 ? ", x" : "x") + std::to_string(i);
  s += " | ";
  bool first = true;
  for (uint32_t i = 1; i <= n; ++i) {
    s += (first ? "x" : ", x") + std::to_string(i) + "^3";
    first = false;
  }
  for (uint32_t i = 1; i <= n; ++i)
    for (uint32_t j = 1; j <= n; ++j)
      if (i != j)
        s += ", (x" + std::to_string(i) + "*x" + std::to_string(j) + ")^2";
  return s + " >";
}

std::string double_cover_dsl(uint32_t n) {
  std::string s = "< ";
  for (uint32_t i = 1; i <= n; ++i) s += (i > 1 ? ", x" : "x") + std::to_string(i);
  s += " | ";
  bool first = true;
  for (uint32_t i = 1; i <= n; ++i)
    for (uint32_t j = 1; j <= n; ++j)
      if (i != j) {
        s += (first ? "" : ", ");
        s += "x" + std::to_string(i) + "^3 = (x" + std::to_string(i) + "*x" + std::to_string(j) +
             ")^2";
        first = false;
      }
  return s + " >";
}

// Parameters for the index-2 subgroup of AGL(1,p): e of multiplicative order
// (p-1)/2 and s with s(e-1) = -1 mod p.
std::pair<uint32_t, uint32_t> agl_params(uint32_t p) {
  auto ordmod = [p](uint32_t a) {
    uint32_t o = 1;
    uint64_t x = a;
    while (x != 1) {
      x = x * a % p;
      ++o;
    }
    return o;
  };
  uint32_t e = 0;
  for (uint32_t a = 2; a < p; ++a)
    if (ordmod(a) == (p - 1) / 2) {
      e = a;
      break;
    }
  certify(e != 0, "agl1half: no element of order (p-1)/2");
  uint32_t s = 0;
  for (uint32_t c = 1; c < p; ++c)
    if (uint64_t(c) * (e - 1) % p == p - 1) {
      s = c;
      break;
    }
  certify(s != 0, "agl1half: no s with s(e-1) = -1");
  return {e, s};
}

Perm perm_of_matrix(const Mat& a, const Field& F) {
  // action on the nonzero row vectors of F^dim, lexicographic indexing
  uint32_t dim = uint32_t(a.rows());
  uint64_t q = F.q(), total = 1;
  for (uint32_t i = 0; i < dim; ++i) total *= q;
  std::vector<uint32_t> img(total - 1);
  std::vector<gfel> v(dim), w(dim);
  for (uint64_t code = 1; code < total; ++code) {
    uint64_t c = code;
    for (uint32_t i = dim; i-- > 0;) {
      v[i] = gfel(c % q);
      c /= q;
    }
    for (uint32_t j = 0; j < dim; ++j) {
      gfel acc = 0;
      for (uint32_t i = 0; i < dim; ++i) acc = F.add(acc, F.mul(v[i], a.get(i, j)));
      w[j] = acc;
    }
    uint64_t code2 = 0;
    for (uint32_t j = 0; j < dim; ++j) code2 = code2 * q + w[j];
    img[code - 1] = uint32_t(code2 - 1);
  }
  return Perm(std::move(img));
}

BuiltGroup matrix_group(const std::string& spec, const Field& F, std::vector<Mat> mats,
                        uint64_t expected_order) {
  std::vector<Perm> gens;
  for (const auto& m : mats) gens.push_back(perm_of_matrix(m, F));
  BuiltGroup bg;
  bg.spec = spec;
  bg.group = std::make_shared<PermGroup>(gens);
  bg.natural_action = std::move(mats);
  bg.natural_field = &F;
  certify(bg.group->order() == expected_order, spec + ": order");
  return bg;
}

std::vector<std::string> split_top(const std::string& s) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

std::string strip_parens(const std::string& s) {
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') return s.substr(1, s.size() - 2);
  throw Error("expected parenthesized parameters in group spec");
}

}  // namespace

std::pair<PermGroupPtr, std::vector<Perm>> central_quotient(const PermGroup& g, const Perm& z) {
  certify(!z.is_identity() && (z * z).is_identity(), "central quotient needs an involution");
  uint32_t deg = g.degree();
  std::vector<int32_t> block(deg, -1);
  std::vector<uint32_t> rep;
  for (uint32_t i = 0; i < deg; ++i)
    if (block[i] < 0) {
      block[i] = int32_t(rep.size());
      block[z[i]] = int32_t(rep.size());
      rep.push_back(i);
    }
  std::vector<Perm> images;
  for (const auto& gen : g.generators()) {
    std::vector<uint32_t> img(rep.size());
    for (uint32_t b = 0; b < rep.size(); ++b) img[b] = uint32_t(block[gen[rep[b]]]);
    images.emplace_back(std::move(img));
  }
  auto q = std::make_shared<PermGroup>(images, uint32_t(rep.size()));
  return {q, images};
}

BuiltGroup build_group(const std::string& spec, size_t max_cosets) {
  auto colon = spec.find(':');
  std::string kind = colon == std::string::npos ? spec : spec.substr(0, colon);
  std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);

  auto as_int = [&](const std::string& s) -> uint32_t {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw Error("bad integer '" + s + "' in group spec " + spec);
    return uint32_t(std::strtoul(s.c_str(), nullptr, 10));
  };

  if (kind == "alt") {
    uint32_t n = as_int(rest);
    certify(n >= 3 && n <= 12, "alt:n with 3 <= n <= 12");
    std::vector<Perm> gens;
    gens.push_back(Perm::cycle(n, {0, 1, 2}));
    std::vector<uint32_t> c;
    for (uint32_t i = n % 2 ? 0 : 1; i < n; ++i) c.push_back(i);
    gens.push_back(Perm::cycle(n, c));
    BuiltGroup bg;
    bg.spec = spec;
    bg.group = std::make_shared<PermGroup>(gens, n);
    certify(bg.group->order() == factorial(n) / 2, spec + ": order");
    return bg;
  }
  if (kind == "sym") {
    uint32_t n = as_int(rest);
    certify(n >= 2 && n <= 12, "sym:n with 2 <= n <= 12");
    std::vector<Perm> gens;
    gens.push_back(Perm::cycle(n, {0, 1}));
    std::vector<uint32_t> c;
    for (uint32_t i = 0; i < n; ++i) c.push_back(i);
    gens.push_back(Perm::cycle(n, c));
    BuiltGroup bg;
    bg.spec = spec;
    bg.group = std::make_shared<PermGroup>(gens, n);
    certify(bg.group->order() == factorial(n), spec + ": order");
    return bg;
  }
  if (kind == "cyclic") {
    uint32_t n = as_int(rest);
    certify(n >= 1 && n <= 10000, "cyclic:n bounds");
    std::vector<uint32_t> c;
    for (uint32_t i = 0; i < n; ++i) c.push_back(i);
    BuiltGroup bg;
    bg.spec = spec;
    bg.group = std::make_shared<PermGroup>(std::vector<Perm>{Perm::cycle(std::max(n, 1u), c)},
                                           std::max(n, 1u));
    certify(bg.group->order() == n || n == 0, spec + ": order");
    return bg;
  }
  if (kind == "elemab") {
    auto caret = rest.find('^');
    certify(caret != std::string::npos, "elemab:p^d syntax");
    uint32_t p = as_int(rest.substr(0, caret));
    uint32_t d = as_int(rest.substr(caret + 1));
    certify(d >= 1 && d <= 8, "elemab degree bounds");
    std::vector<Perm> gens;
    for (uint32_t i = 0; i < d; ++i) {
      std::vector<uint32_t> c;
      for (uint32_t j = 0; j < p; ++j) c.push_back(i * p + j);
      gens.push_back(Perm::cycle(p * d, c));
    }
    BuiltGroup bg;
    bg.spec = spec;
    bg.group = std::make_shared<PermGroup>(gens, p * d);
    uint64_t expect = 1;
    for (uint32_t i = 0; i < d; ++i) expect *= p;
    certify(bg.group->order() == expect, spec + ": order");
    return bg;
  }
  if (kind == "sl2" || kind == "gl2detpm1") {
    uint32_t q = as_int(rest);
    // factor q = p^k
    uint32_t p = 0, k = 0;
    for (uint32_t c = 2; c <= q; ++c)
      if (q % c == 0) {
        p = c;
        uint32_t m = q, kk = 0;
        while (m % p == 0) {
          m /= p;
          ++kk;
        }
        certify(m == 1, "sl2 parameter must be a prime power");
        k = kk;
        break;
      }
    certify(p != 0 && q <= 16, "sl2:q with q a prime power, q <= 16");
    const Field& F = field_make(p, k);
    gfel z = F.generator();
    if (k == 1 && p > 2) {
      // smallest primitive root
      for (uint32_t a = 2; a < q; ++a) {
        uint32_t o = 1;
        uint64_t x = a;
        while (x != 1) {
          x = x * a % p;
          ++o;
        }
        if (o == q - 1) {
          z = gfel(a);
          break;
        }
      }
    } else if (k > 1) {
      // ensure multiplicative generator
      gfel cand = F.generator();
      uint32_t o = 1;
      gfel x = cand;
      while (x != 1) {
        x = F.mul(x, cand);
        ++o;
      }
      if (o != q - 1) {
        for (uint32_t a = 2; a < q; ++a) {
          o = 1;
          x = gfel(a);
          while (x != 1) {
            x = F.mul(x, gfel(a));
            ++o;
          }
          if (o == q - 1) {
            cand = gfel(a);
            break;
          }
        }
      }
      z = cand;
    }
    Mat T(F, 2, 2, true), U(F, 2, 2, true);
    T.set(0, 0, 1);
    T.set(0, 1, 1);
    T.set(1, 1, 1);
    U.set(0, 0, 1);
    U.set(1, 0, z);
    U.set(1, 1, 1);
    uint64_t sl_order = uint64_t(q) * (q - 1) * (q + 1);
    if (kind == "sl2") return matrix_group(spec, F, {T, U}, sl_order);
    certify(p > 2, "gl2detpm1 needs odd characteristic");
    Mat D(F, 2, 2, true);
    D.set(0, 0, F.neg(1));
    D.set(1, 1, 1);
    return matrix_group(spec, F, {T, U, D}, 2 * sl_order);
  }
  if (kind == "psl2") {
    uint32_t q = as_int(rest);
    certify(q >= 5 && q <= 13 && q % 2 == 1, "psl2:q odd prime, 5 <= q <= 13");
    const Field& F = field_make(q, 1);
    // projective line: points [1:x] for x in F_q at index x, and [0:1] at q.
    auto proj = [&](gfel a, gfel b, gfel c, gfel d) {
      // [u:v] -> [u a + v c : u b + v d] for row-vector action
      std::vector<uint32_t> img(q + 1);
      auto map = [&](gfel u, gfel v) -> uint32_t {
        gfel x = F.add(F.mul(u, a), F.mul(v, c));
        gfel y = F.add(F.mul(u, b), F.mul(v, d));
        if (x == 0) return q;
        return F.mul(y, F.inv(x));
      };
      for (uint32_t x = 0; x < q; ++x) img[x] = map(1, gfel(x));
      img[q] = map(0, 1);
      return Perm(std::move(img));
    };
    std::vector<Perm> gens{proj(1, 1, 0, 1), proj(0, F.neg(1), 1, 0)};
    BuiltGroup bg;
    bg.spec = spec;
    bg.group = std::make_shared<PermGroup>(gens, q + 1);
    certify(bg.group->order() == uint64_t(q) * (q - 1) * (q + 1) / 2, spec + ": order");
    return bg;
  }
  if (kind == "carmichael") {
    uint32_t n = as_int(rest);
    certify(n >= 2 && n <= 5, "carmichael:n with 2 <= n <= 5");
    return from_presentation(spec, carmichael_dsl(n), factorial(n + 2) / 2, max_cosets);
  }
  if (kind == "2alt") {
    uint32_t n = as_int(rest);
    certify(n >= 2 && n <= 5, "2alt:n with 2 <= n <= 5");
    BuiltGroup bg = from_presentation(spec, double_cover_dsl(n), factorial(n + 2), max_cosets);
    // center of order 2, and the central quotient satisfies the x_i^3 = 1
    // presentation and has half the order
    auto z = bg.group->center();
    certify(z.size() == 2, spec + ": center order 2");
    const Perm& w = z[0].is_identity() ? z[1] : z[0];
    auto [quot, images] = central_quotient(*bg.group, w);
    certify(quot->order() == factorial(n + 2) / 2, spec + ": central quotient order");
    Presentation carm = parse_presentation(carmichael_dsl(n));
    auto check = check_homomorphism(
        carm, images, Perm(quot->degree()), [](const Perm& a, const Perm& b) { return a * b; },
        [](const Perm& a) { return a.inverse(); });
    certify(check.ok, spec + ": central quotient satisfies the order-3 presentation");
    bg.notes = "center order 2; quotient certified";
    return bg;
  }
  if (kind == "rel43" || spec == "rel43") {
    std::string dsl =
        "< x, y, z | x^6, y^6, z^6, x^3 = (x*y)^2, x^3 = (y*x)^2, "
        "y^3 = (y*z)^2, y^3 = (z*y)^2, z^3 = (z*x)^2, z^3 = (x*z)^2 >";
    BuiltGroup bg = from_presentation("rel43", dsl, 120, max_cosets);
    auto z = bg.group->center();
    certify(z.size() == 2, "rel43: center order 2");
    certify(bg.group->is_perfect(), "rel43: perfect");
    // x^3 is the unique central involution
    const auto& gens = bg.group->generators();
    Perm x3 = gens[0] * gens[0] * gens[0];
    certify(!x3.is_identity() && (x3 * x3).is_identity(), "rel43: x^3 is an involution");
    bool central = std::find(z.begin(), z.end(), x3) != z.end();
    certify(central, "rel43: x^3 central");
    bg.notes = "unique central involution = x^3";
    return bg;
  }
  if (kind == "agl1half") {
    uint32_t p = as_int(rest);
    certify(p >= 7 && p <= 31 && p % 4 == 3, "agl1half:p with p = 3 mod 4 prime");
    auto [e, s] = agl_params(p);
    std::vector<uint32_t> add1(p), mule(p);
    for (uint32_t x = 0; x < p; ++x) {
      add1[x] = (x + 1) % p;
      mule[x] = uint32_t(uint64_t(e) * x % p);
    }
    std::vector<Perm> gens{Perm(add1), Perm(mule)};
    BuiltGroup bg;
    bg.spec = spec;
    bg.group = std::make_shared<PermGroup>(gens, p);
    certify(bg.group->order() == uint64_t(p) * (p - 1) / 2, spec + ": order");
    std::string dsl = "< u, v | u^" + std::to_string(p) + " = v^" + std::to_string((p - 1) / 2) +
                      ", (u^" + std::to_string(s) + ")^v = u^" + std::to_string(s - 1) + " >";
    bg.presentation = parse_presentation(dsl);
    auto check = check_homomorphism(
        *bg.presentation, gens, Perm(p), [](const Perm& a, const Perm& b) { return a * b; },
        [](const Perm& a) { return a.inverse(); });
    certify(check.ok, spec + ": natural images satisfy the presentation");
    bg.notes = "e=" + std::to_string(e) + ";s=" + std::to_string(s);
    return bg;
  }
  if (kind == "frob" && rest == "21") {
    const Field& F = field_make(2, 1);
    // order-7 companion matrix of t^3 = t + 1 and the squaring map on F_8
    Mat C(F, 3, 3, true), Fr(F, 3, 3, true);
    C.set(0, 1, 1);
    C.set(1, 2, 1);
    C.set(2, 0, 1);
    C.set(2, 1, 1);
    Fr.set(0, 0, 1);
    Fr.set(1, 2, 1);
    Fr.set(2, 1, 1);
    Fr.set(2, 2, 1);
    certify(inverse(Fr) * C * Fr == C * C, "frob:21: conjugator squares the companion");
    return matrix_group(spec, F, {C, Fr}, 21);
  }
  if (spec == "q8") {
    return from_presentation("q8", "< i, j | i^4, i^2 = j^2, j^-1*i*j = i^-1 >", 8, max_cosets);
  }
  if (spec == "d4") {
    return from_presentation("d4", "< r, s | r^4, s^2, (r*s)^2 >", 8, max_cosets);
  }
  if (kind == "dp") {
    auto parts = split_top(strip_parens(rest));
    certify(parts.size() == 2, "dp:(a,b) takes two specs");
    BuiltGroup a = build_group(parts[0], max_cosets);
    BuiltGroup b = build_group(parts[1], max_cosets);
    uint32_t da = a.group->degree(), db = b.group->degree();
    std::vector<Perm> gens;
    for (const auto& g : a.group->generators()) {
      std::vector<uint32_t> img(da + db);
      for (uint32_t i = 0; i < da; ++i) img[i] = g[i];
      for (uint32_t i = 0; i < db; ++i) img[da + i] = da + i;
      gens.emplace_back(std::move(img));
    }
    for (const auto& g : b.group->generators()) {
      std::vector<uint32_t> img(da + db);
      for (uint32_t i = 0; i < da; ++i) img[i] = i;
      for (uint32_t i = 0; i < db; ++i) img[da + i] = da + g[i];
      gens.emplace_back(std::move(img));
    }
    BuiltGroup bg;
    bg.spec = spec;
    bg.group = std::make_shared<PermGroup>(gens, da + db);
    certify(bg.group->order() == a.group->order() * b.group->order(), spec + ": order");
    return bg;
  }
  if (kind == "sdp") {
    auto parts = split_top(strip_parens(rest));
    certify(parts.size() == 3, "sdp:(H,module,e) takes three parameters");
    BuiltGroup h = build_group(parts[0], max_cosets);
    certify(h.natural_field != nullptr || parts[1] != "natural",
            "sdp: natural module requires a matrix-built H");
    const Field& F = *h.natural_field;
    GModule v = parse_module_spec(parts[1], h, F, 0);
    uint32_t e = as_int(parts[2]);
    certify(e >= 1 && e <= 4, "sdp exponent bounds");
    uint32_t s = v.dim;
    uint32_t dimw = s * e;
    certify(uint64_t(1) << (dimw * (F.q() == 2 ? 1 : 2)) <= (uint64_t(1) << 20),
            "sdp: vector space too large");
    uint64_t points = 1;
    for (uint32_t i = 0; i < dimw; ++i) points *= F.q();
    // affine action on F^dimw: H block-diagonally, plus one translation per copy
    auto encode = [&](const std::vector<gfel>& w) {
      uint64_t c = 0;
      for (uint32_t i = 0; i < dimw; ++i) c = c * F.q() + w[i];
      return uint32_t(c);
    };
    auto decode = [&](uint64_t c, std::vector<gfel>& w) {
      for (uint32_t i = dimw; i-- > 0;) {
        w[i] = gfel(c % F.q());
        c /= F.q();
      }
    };
    std::vector<Perm> gens;
    std::vector<gfel> w(dimw), im(dimw);
    for (const auto& a : v.action) {
      std::vector<uint32_t> img(points);
      for (uint64_t c = 0; c < points; ++c) {
        decode(c, w);
        for (uint32_t copy = 0; copy < e; ++copy)
          for (uint32_t j = 0; j < s; ++j) {
            gfel acc = 0;
            for (uint32_t i = 0; i < s; ++i) acc = F.add(acc, F.mul(w[copy * s + i], a.get(i, j)));
            im[copy * s + j] = acc;
          }
        img[c] = encode(im);
      }
      gens.emplace_back(std::move(img));
    }
    for (uint32_t copy = 0; copy < e; ++copy) {
      std::vector<uint32_t> img(points);
      for (uint64_t c = 0; c < points; ++c) {
        decode(c, w);
        w[copy * s] = F.add(w[copy * s], 1);
        img[c] = encode(w);
      }
      gens.emplace_back(std::move(img));
    }
    BuiltGroup bg;
    bg.spec = spec;
    bg.group = std::make_shared<PermGroup>(gens, uint32_t(points));
    certify(bg.group->order() == points * h.group->order(), spec + ": order");
    bg.notes = "generators: H tuple then one translation per copy";
    return bg;
  }
  throw Error("unknown group spec '" + spec + "'");
}

GModule parse_module_spec(const std::string& spec, const BuiltGroup& g, const Field& F,
                          uint64_t seed, uint64_t irr_bound) {
  if (spec == "trivial") return trivial_module(g.group, F);
  if (spec == "perm") return permutation_module(g.group, F);
  if (spec == "regular") return regular_module(g.group, F);
  if (spec == "heart") return heart(permutation_module(g.group, F), seed);
  if (spec == "natural") {
    if (g.natural_field == nullptr) throw Error("group has no natural matrix module");
    if (!(*g.natural_field == F))
      throw Error("natural module lives over F_" + std::to_string(g.natural_field->q()));
    GModule m;
    m.group = g.group;
    m.field = &F;
    m.dim = uint32_t(g.natural_action[0].rows());
    m.action = g.natural_action;
    m.label = "natural";
    return m;
  }
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw Error("unknown module spec '" + spec + "'");
  std::string kind = spec.substr(0, colon);
  std::string rest = spec.substr(colon + 1);
  if (kind == "irr") {
    size_t i = std::strtoul(rest.c_str(), nullptr, 10);
    auto irr = irreducibles(g.group, F, seed, irr_bound);
    if (i >= irr.size())
      throw Error("irr:" + rest + " out of range (" + std::to_string(irr.size()) +
                  " irreducibles)");
    return irr[i];
  }
  if (kind == "dual") return dual(parse_module_spec(rest, g, F, seed, irr_bound));
  if (kind == "wedge2") return wedge2(parse_module_spec(rest, g, F, seed, irr_bound));
  if (kind == "tensor") {
    auto parts = split_top(rest);
    if (parts.size() != 2) throw Error("tensor:<spec>,<spec> takes two module specs");
    return tensor(parse_module_spec(parts[0], g, F, seed, irr_bound),
                  parse_module_spec(parts[1], g, F, seed, irr_bound));
  }
  throw Error("unknown module spec '" + spec + "'");
}

namespace {

GModule direct_sum_copies(const GModule& v, uint32_t e) {
  const Field& F = *v.field;
  GModule w;
  w.group = v.group;
  w.field = v.field;
  w.dim = v.dim * e;
  for (const auto& a : v.action) {
    Mat b(F, w.dim, w.dim, true);
    for (uint32_t c = 0; c < e; ++c)
      for (uint32_t i = 0; i < v.dim; ++i)
        for (uint32_t j = 0; j < v.dim; ++j) {
          gfel x = a.get(i, j);
          if (x) b.set(c * v.dim + i, c * v.dim + j, x);
        }
    w.action.push_back(F.q() == 2 ? b.to_packed() : std::move(b));
  }
  w.label = v.label + "^" + std::to_string(e);
  return w;
}

}  // namespace

Section7Report section7_report(const BuiltGroup& h, const GModule& v, uint32_t e, const GModule& u,
                               uint64_t seed) {
  const Field& F = *v.field;
  if (h.group->order() % F.p() == 0) throw Error("section7: p divides |H|");
  if (v.dim <= 1) throw Error("section7: dim V must exceed 1");
  if (!is_irreducible(v, seed).irreducible) throw Error("section7: V not irreducible");
  if (isomorphic(v, dual(v), seed)) throw Error("section7: V is self-dual");
  if (!is_irreducible(u, seed).irreducible) throw Error("section7: U not irreducible");
  if (hom_dim(wedge2(v), u) == 0) throw Error("section7: U is not a quotient of wedge2(V)");

  Section7Report rep;
  rep.e = e;
  rep.dim_v = v.dim;
  rep.dim_u = u.dim;
  rep.s_prime = uint32_t(v.dim / endo_degree(v));
  GModule w = direct_sum_copies(v, e);
  rep.hom_wedge_u = int64_t(hom_dim(wedge2(w), u));
  if (fixed_points(u).rows() != 0) throw Error("section7: U has fixed points");
  rep.nu2_exact = ceil_div(rep.hom_wedge_u, int64_t(u.dim));
  rep.nu2_lower_bound = ceil_div(int64_t(e) * (e + 1) / 2, int64_t(u.dim));
  uint32_t dh = uint32_t(h.group->generators().size());
  {
    auto est = h.group->estimate_min_generators(32, seed);
    dh = std::min(dh, est.k);
  }
  rep.d_formula = std::max<int64_t>(dh, 2 + int64_t(e - 1) / rep.s_prime);
  rep.d_schur_h = schur_min_generators(h.group);
  rep.not_proficient = rep.nu2_exact > 1 + rep.d_schur_h;
  return rep;
}

}  // namespace profgrp
