#include "profgrp/cohomology.hpp"

#include <unordered_map>

#include "profgrp/error.hpp"

namespace profgrp {

namespace {

struct BfsEdges {
  std::vector<uint32_t> parent;  // element index -> parent element index
  std::vector<uint32_t> gen;     // generator applied to the parent
};

// Parents in the breadth-first element order of PermGroup::elements.
BfsEdges bfs_edges(const PermGroup& g, const std::vector<Perm>& elems) {
  std::unordered_map<Perm, uint32_t, PermHash> index;
  for (uint32_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], i);
  BfsEdges e;
  e.parent.assign(elems.size(), 0);
  e.gen.assign(elems.size(), 0);
  std::vector<char> seen(elems.size(), 0);
  seen[0] = 1;
  std::vector<uint32_t> queue{0};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    uint32_t x = queue[qi];
    for (uint32_t gi = 0; gi < g.generators().size(); ++gi) {
      uint32_t y = index.at(elems[x] * g.generators()[gi]);
      if (!seen[y]) {
        seen[y] = 1;
        e.parent[y] = x;
        e.gen[y] = gi;
        queue.push_back(y);
      }
    }
  }
  return e;
}

// Byte matrices of the action of every group element, in element order.
std::vector<Mat> rho_all(const PermGroup& g, const std::vector<Perm>& elems, const GModule& m) {
  BfsEdges e = bfs_edges(g, elems);
  std::vector<Mat> rho(elems.size());
  rho[0] = Mat::identity(*m.field, m.dim, true);
  std::vector<Mat> gen_byte;
  for (const auto& a : m.action) gen_byte.push_back(a.to_byte());
  // parents precede children in BFS order
  std::vector<uint32_t> order(elems.size());
  for (uint32_t i = 0; i < elems.size(); ++i) order[i] = i;
  for (uint32_t i = 1; i < elems.size(); ++i) rho[i] = rho[e.parent[i]] * gen_byte[e.gen[i]];
  return rho;
}

}  // namespace

std::vector<uint32_t> prime_divisors(uint64_t n) {
  std::vector<uint32_t> ps;
  for (uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(uint32_t(p));
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(uint32_t(n));
  return ps;
}

int64_t ceil_div(int64_t a, int64_t b) {
  if (a >= 0) return (a + b - 1) / b;
  return -((-a) / b);
}

struct GroupAlgebra::Impl {
  PermGroupPtr g;
  const Field* F;
  std::vector<Perm> elems;
  uint32_t d = 0;
  size_t n = 0;

  Mat rbar;                          // kernel basis of (kG)^d -> kG, byte rows
  std::vector<uint32_t> rbar_free;   // its coordinate columns
  std::vector<std::vector<uint32_t>> rmul;  // rmul[i][x] = x * g_i

  // Lazily built second-syzygy data (shared across modules).
  bool cover_built = false;
  std::vector<std::vector<uint8_t>> cover_gens;  // module generators of rbar
  Ech syz;                                       // rref of the syzygy map transpose
  std::vector<uint32_t> syz_free;

  std::unordered_map<Perm, uint32_t, PermHash> index;

  uint32_t idx(const Perm& p) const { return index.at(p); }

  void build_cover();
};

GroupAlgebra::GroupAlgebra(PermGroupPtr g, const Field& F, size_t limit) : impl_(new Impl) {
  Impl& im = *impl_;
  im.g = std::move(g);
  im.F = &F;
  im.elems = im.g->elements(limit);
  im.n = im.elems.size();
  im.d = uint32_t(im.g->generators().size());
  for (uint32_t i = 0; i < im.n; ++i) im.index.emplace(im.elems[i], i);

  im.rmul.assign(im.d, std::vector<uint32_t>(im.n));
  std::vector<std::vector<uint32_t>> lmul(im.d, std::vector<uint32_t>(im.n));
  for (uint32_t gi = 0; gi < im.d; ++gi)
    for (uint32_t x = 0; x < im.n; ++x) {
      im.rmul[gi][x] = im.idx(im.elems[x] * im.g->generators()[gi]);
      lmul[gi][x] = im.idx(im.g->generators()[gi] * im.elems[x]);
    }

  if (im.n == 1 || im.d == 0) return;

  // Transpose of the map e_{i,x} -> g_i x - x; its kernel is the relation
  // module, and its rows index group elements.
  Mat phiT(F, im.n, size_t(im.d) * im.n, F.q() != 2);
  for (uint32_t gi = 0; gi < im.d; ++gi)
    for (uint32_t x = 0; x < im.n; ++x) {
      size_t col = size_t(gi) * im.n + x;
      uint32_t y = lmul[gi][x];
      phiT.set(y, col, F.add(phiT.get(y, col), 1));
      phiT.set(x, col, F.sub(phiT.get(x, col), 1));
    }
  Ech e = rref(phiT);
  std::vector<char> is_pivot(phiT.cols(), 0);
  for (uint32_t c : e.pivots) is_pivot[c] = 1;
  for (uint32_t c = 0; c < phiT.cols(); ++c)
    if (!is_pivot[c]) im.rbar_free.push_back(c);
  im.rbar = Mat(F, im.rbar_free.size(), phiT.cols(), true);
  for (size_t r = 0; r < im.rbar_free.size(); ++r) {
    im.rbar.set(r, im.rbar_free[r], 1);
    for (size_t i = 0; i < e.rank; ++i) {
      gfel v = e.r.get(i, im.rbar_free[r]);
      if (v) im.rbar.set(r, e.pivots[i], F.neg(v));
    }
  }
  if (im.rbar.rows() != im.n * (im.d - 1) + 1)
    throw Error("relation module dimension mismatch");
}

GroupAlgebra::~GroupAlgebra() = default;

PermGroupPtr GroupAlgebra::group() const { return impl_->g; }
const Field& GroupAlgebra::field() const { return *impl_->F; }
size_t GroupAlgebra::order() const { return impl_->n; }
uint32_t GroupAlgebra::d() const { return impl_->d; }

void GroupAlgebra::Impl::build_cover() {
  if (cover_built) return;
  const Field& Ff = *F;
  const size_t width = size_t(d) * n;

  // Greedy module generators of the relation module: scan the kernel basis,
  // spinning each new vector's orbit into the echelon.
  Echelon ech(Ff, width);
  auto apply_gen = [&](const std::vector<uint8_t>& v, uint32_t gi) {
    std::vector<uint8_t> w(width, 0);
    for (uint32_t i = 0; i < d; ++i) {
      const uint8_t* src = v.data() + size_t(i) * n;
      uint8_t* dst = w.data() + size_t(i) * n;
      const uint32_t* tab = rmul[gi].data();
      for (uint32_t x = 0; x < n; ++x)
        if (src[x]) dst[tab[x]] = src[x];
    }
    return w;
  };
  for (size_t r = 0; r < rbar.rows(); ++r) {
    std::vector<uint8_t> v(width);
    std::memcpy(v.data(), rbar.row_u8(r), width);
    std::vector<uint8_t> probe = v;
    if (ech.reduce(probe) == SIZE_MAX) continue;
    cover_gens.push_back(v);
    std::vector<std::vector<uint8_t>> work;
    std::vector<uint8_t> t = v;
    if (ech.add(t) != SIZE_MAX) work.push_back(v);
    while (!work.empty()) {
      std::vector<uint8_t> cur = std::move(work.back());
      work.pop_back();
      for (uint32_t gi = 0; gi < d; ++gi) {
        std::vector<uint8_t> w = apply_gen(cur, gi);
        std::vector<uint8_t> w2 = w;
        if (ech.add(w2) != SIZE_MAX) work.push_back(w);
      }
    }
    if (ech.rank() == rbar.rows()) break;
  }
  const size_t s = cover_gens.size();

  // Right-multiplication permutations of the element indices, built along the
  // breadth-first tree.
  BfsEdges be = bfs_edges(*g, elems);
  std::vector<std::vector<uint32_t>> pi(n);
  pi[0].resize(n);
  for (uint32_t y = 0; y < n; ++y) pi[0][y] = y;
  for (uint32_t x = 1; x < n; ++x) {
    pi[x].resize(n);
    const auto& par = pi[be.parent[x]];
    const auto& tab = rmul[be.gen[x]];
    for (uint32_t y = 0; y < n; ++y) pi[x][y] = tab[par[y]];
  }

  // Transpose of the cover map (kG)^s -> (kG)^d, e_{j,x} -> r_j . x.
  Mat psiT(Ff, width, s * n, true);
  for (uint32_t x = 0; x < n; ++x)
    for (uint32_t j = 0; j < s; ++j) {
      const auto& rj = cover_gens[j];
      size_t col = size_t(j) * n + x;
      for (uint32_t i = 0; i < d; ++i) {
        const uint8_t* src = rj.data() + size_t(i) * n;
        for (uint32_t y = 0; y < n; ++y)
          if (src[y]) psiT.set(size_t(i) * n + pi[x][y], col, src[y]);
      }
    }
  pi.clear();
  pi.shrink_to_fit();
  syz = rref(psiT);
  std::vector<char> is_pivot(psiT.cols(), 0);
  for (uint32_t c : syz.pivots) is_pivot[c] = 1;
  for (uint32_t c = 0; c < psiT.cols(); ++c)
    if (!is_pivot[c]) syz_free.push_back(c);
  cover_built = true;
}

namespace {

// Rank of the stacked conditions  sum_j u_j * C_j(kappa) = 0  over unknowns
// (u_1..u_s) in M^s, where kappa runs over the supplied sparse vectors with
// entries (block j, element x, coefficient) and C_j = sum kappa_{j,x} rho(x).
struct ConditionAccumulator {
  const Field& F;
  uint32_t s, m;
  const std::vector<Mat>& rho;
  Echelon ech;
  std::vector<uint32_t> acc;   // prime-field path: s*m*m accumulators
  std::vector<gfel> accf;      // extension-field path
  bool prime;

  ConditionAccumulator(const Field& f, uint32_t s_, uint32_t m_, const std::vector<Mat>& rho_)
      : F(f), s(s_), m(m_), rho(rho_), ech(f, size_t(s_) * m_), prime(f.k() == 1) {
    if (prime)
      acc.assign(size_t(s) * m * m, 0);
    else
      accf.assign(size_t(s) * m * m, 0);
  }

  bool full() const { return ech.rank() == size_t(s) * m; }

  void begin() {
    if (prime)
      std::fill(acc.begin(), acc.end(), 0);
    else
      std::fill(accf.begin(), accf.end(), 0);
  }

  void touch(uint32_t j, uint32_t x, gfel c) {
    const Mat& R = rho[x];
    if (prime) {
      uint32_t* dst = acc.data() + size_t(j) * m * m;
      for (uint32_t r = 0; r < m; ++r) {
        const uint8_t* row = R.row_u8(r);
        uint32_t* out = dst + size_t(r) * m;
        for (uint32_t t = 0; t < m; ++t) out[t] += uint32_t(c) * row[t];
      }
    } else {
      gfel* dst = accf.data() + size_t(j) * m * m;
      for (uint32_t r = 0; r < m; ++r)
        for (uint32_t t = 0; t < m; ++t) {
          gfel v = R.get(r, t);
          if (v) dst[size_t(r) * m + t] = F.add(dst[size_t(r) * m + t], F.mul(c, v));
        }
    }
  }

  void finish() {
    // one condition row per output coordinate t
    for (uint32_t t = 0; t < m; ++t) {
      std::vector<uint8_t> row(size_t(s) * m, 0);
      bool nz = false;
      for (uint32_t j = 0; j < s; ++j)
        for (uint32_t r = 0; r < m; ++r) {
          gfel v = prime ? gfel(acc[(size_t(j) * m + r) * m + t] % F.p())
                         : accf[(size_t(j) * m + r) * m + t];
          if (v) {
            row[size_t(j) * m + r] = uint8_t(v);
            nz = true;
          }
        }
      if (nz) ech.add(row);
    }
  }
};

}  // namespace

CohomReport GroupAlgebra::h012(const GModule& m) const {
  Impl& im = *impl_;
  if (m.group.get() != im.g.get() || m.field != im.F)
    throw Error("h012: module group/field mismatch");
  const Field& F = *im.F;
  const uint32_t md = m.dim;

  CohomReport rep;
  rep.d = im.d;
  rep.h0 = int64_t(fixed_points(m).rows());
  if (im.n == 1) {
    rep.h1 = rep.h2 = 0;
    rep.hom_ibar = rep.hom_rbar = 0;
    return rep;
  }
  if (md == 0) return rep;

  std::vector<Mat> rho = rho_all(*im.g, im.elems, m);

  // Hom_G(I, M): unknowns are derivation values on the d generators; each
  // relation-module basis vector imposes one M-valued condition.
  ConditionAccumulator ci(F, im.d, md, rho);
  for (size_t r = 0; r < im.rbar.rows() && !ci.full(); ++r) {
    ci.begin();
    const uint8_t* row = im.rbar.row_u8(r);
    for (uint32_t j = 0; j < im.d; ++j)
      for (uint32_t x = 0; x < im.n; ++x) {
        uint8_t c = row[size_t(j) * im.n + x];
        if (c) ci.touch(j, x, c);
      }
    ci.finish();
  }
  rep.hom_ibar = size_t(im.d) * md - ci.ech.rank();
  rep.h1 = int64_t(rep.hom_ibar) - md + rep.h0;

  // Hom_G(R, M): unknowns are images of the cover generators; syzygy kernel
  // vectors impose the conditions.
  im.build_cover();
  const uint32_t s = uint32_t(im.cover_gens.size());
  ConditionAccumulator cr(F, s, md, rho);
  for (uint32_t fi = 0; fi < im.syz_free.size() && !cr.full(); ++fi) {
    uint32_t fc = im.syz_free[fi];
    cr.begin();
    cr.touch(fc / uint32_t(im.n), fc % uint32_t(im.n), 1);
    for (size_t t = 0; t < im.syz.rank; ++t) {
      gfel v = im.syz.r.get(t, fc);
      if (v) {
        uint32_t pc = im.syz.pivots[t];
        cr.touch(pc / uint32_t(im.n), pc % uint32_t(im.n), F.neg(v));
      }
    }
    cr.finish();
  }
  rep.hom_rbar = size_t(s) * md - cr.ech.rank();
  rep.h2 = int64_t(rep.hom_rbar) + int64_t(rep.hom_ibar) - int64_t(im.d) * md;
  return rep;
}

GModule augmentation_ideal(PermGroupPtr g, const Field& F, size_t limit) {
  const auto& elems = g->elements(limit);
  size_t n = elems.size();
  if (n == 0) throw Error("empty group");
  std::unordered_map<Perm, uint32_t, PermHash> index;
  for (uint32_t i = 0; i < n; ++i) index.emplace(elems[i], i);
  GModule m;
  m.field = &F;
  m.dim = uint32_t(n - 1);
  // basis e_x - e_1 for x != 1; (e_x - e_1) g = (e_{xg} - e_1) - (e_g - e_1)
  for (const auto& gen : g->generators()) {
    Mat a(F, n - 1, n - 1, true);
    uint32_t gidx = index.at(Perm(uint32_t(gen.degree())) * gen);
    for (uint32_t x = 1; x < n; ++x) {
      uint32_t xg = index.at(elems[x] * gen);
      if (xg != 0) a.set(x - 1, xg - 1, F.add(a.get(x - 1, xg - 1), 1));
      if (gidx != 0) a.set(x - 1, gidx - 1, F.sub(a.get(x - 1, gidx - 1), 1));
    }
    m.action.push_back(F.q() == 2 ? a.to_packed() : std::move(a));
  }
  m.group = std::move(g);
  m.label = "augmentation-ideal";
  return m;
}

GModule relation_module(PermGroupPtr g, const Field& F, size_t limit) {
  GroupAlgebra ga(g, F, limit);
  // Rebuild the explicit matrices from the kernel basis: coordinates of a
  // kernel vector are its entries at the free columns.
  const auto& elems = g->elements(limit);
  size_t n = elems.size();
  uint32_t d = uint32_t(g->generators().size());
  if (n == 1 || d == 0) throw Error("relation module needs a nontrivial group");

  // Recompute what GroupAlgebra holds privately (cheap relative to use).
  std::unordered_map<Perm, uint32_t, PermHash> index;
  for (uint32_t i = 0; i < n; ++i) index.emplace(elems[i], i);
  GModule rm;
  rm.field = &F;

  // kernel basis with free-column coordinates
  Mat phiT(F, n, size_t(d) * n, F.q() != 2);
  for (uint32_t gi = 0; gi < d; ++gi)
    for (uint32_t x = 0; x < n; ++x) {
      size_t col = size_t(gi) * n + x;
      uint32_t y = index.at(g->generators()[gi] * elems[x]);
      phiT.set(y, col, F.add(phiT.get(y, col), 1));
      phiT.set(x, col, F.sub(phiT.get(x, col), 1));
    }
  Ech e = rref(phiT);
  std::vector<char> is_pivot(phiT.cols(), 0);
  for (uint32_t c : e.pivots) is_pivot[c] = 1;
  std::vector<uint32_t> free_cols;
  for (uint32_t c = 0; c < phiT.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  size_t k = free_cols.size();
  Mat basis(F, k, phiT.cols(), true);
  for (size_t r = 0; r < k; ++r) {
    basis.set(r, free_cols[r], 1);
    for (size_t i = 0; i < e.rank; ++i) {
      gfel v = e.r.get(i, free_cols[r]);
      if (v) basis.set(r, e.pivots[i], F.neg(v));
    }
  }
  rm.dim = uint32_t(k);
  std::vector<std::vector<uint32_t>> rmul(d, std::vector<uint32_t>(n));
  for (uint32_t gi = 0; gi < d; ++gi)
    for (uint32_t x = 0; x < n; ++x) rmul[gi][x] = index.at(elems[x] * g->generators()[gi]);
  for (uint32_t gi = 0; gi < d; ++gi) {
    Mat a(F, k, k, true);
    for (size_t r = 0; r < k; ++r) {
      // permuted row, then coordinates at the free columns
      const uint8_t* src = basis.row_u8(r);
      std::vector<uint8_t> w(phiT.cols(), 0);
      for (uint32_t i = 0; i < d; ++i)
        for (uint32_t x = 0; x < n; ++x) {
          uint8_t v = src[size_t(i) * n + x];
          if (v) w[size_t(i) * n + rmul[gi][x]] = v;
        }
      for (size_t j = 0; j < k; ++j)
        if (w[free_cols[j]]) a.set(r, j, w[free_cols[j]]);
    }
    rm.action.push_back(F.q() == 2 ? a.to_packed() : std::move(a));
  }
  rm.group = std::move(g);
  rm.label = "relation-module";
  return rm;
}

GModule relation_module(PermGroupPtr g, const std::vector<Perm>& tuple, const Field& F,
                        size_t limit) {
  auto sub = std::make_shared<PermGroup>(tuple, g->degree());
  if (sub->order() != g->order()) throw Error("relation_module: tuple does not generate");
  return relation_module(sub, F, limit);
}

int64_t h1(PermGroupPtr g, const GModule& m) {
  GroupAlgebra ga(std::move(g), *m.field);
  return ga.h012(m).h1;
}

int64_t h2(PermGroupPtr g, const GModule& m) {
  GroupAlgebra ga(std::move(g), *m.field);
  return ga.h012(m).h2;
}

namespace {

// dim of normalized derivations G\{1} -> M (c(xy) = c(x) rho(y) + c(y)).
size_t derivation_space_dim(const GModule& m, const std::vector<Perm>& elems,
                            const std::vector<Mat>& rho,
                            const std::vector<std::vector<uint32_t>>& mul) {
  const Field& F = *m.field;
  size_t n = elems.size();
  uint32_t md = m.dim;
  Echelon ech(F, (n - 1) * md);
  std::vector<uint8_t> row((n - 1) * md);
  for (uint32_t x = 1; x < n; ++x)
    for (uint32_t y = 1; y < n; ++y) {
      uint32_t xy = mul[x][y];
      // c(x) rho(y) + c(y) - c(xy) = 0 : one row per coordinate t
      for (uint32_t t = 0; t < md; ++t) {
        std::fill(row.begin(), row.end(), 0);
        bool nz = false;
        for (uint32_t r = 0; r < md; ++r) {
          gfel v = rho[y].get(r, t);
          if (v) {
            size_t c = size_t(x - 1) * md + r;
            row[c] = uint8_t(F.add(row[c], v));
            nz = true;
          }
        }
        {
          size_t c = size_t(y - 1) * md + t;
          row[c] = uint8_t(F.add(row[c], 1));
          nz = true;
        }
        if (xy != 0) {
          size_t c = size_t(xy - 1) * md + t;
          row[c] = uint8_t(F.sub(row[c], 1));
        }
        if (nz) ech.add(row);
      }
    }
  return (n - 1) * md - ech.rank();
}

}  // namespace

int64_t h1_bar_oracle(const GModule& m, size_t max_order) {
  const auto& elems = m.group->elements();
  size_t n = elems.size();
  if (n > max_order) throw LimitError("h1_bar_oracle: group too large");
  if (n == 1) return 0;
  std::unordered_map<Perm, uint32_t, PermHash> index;
  for (uint32_t i = 0; i < n; ++i) index.emplace(elems[i], i);
  std::vector<std::vector<uint32_t>> mul(n, std::vector<uint32_t>(n));
  for (uint32_t x = 0; x < n; ++x)
    for (uint32_t y = 0; y < n; ++y) mul[x][y] = index.at(elems[x] * elems[y]);
  std::vector<Mat> rho = rho_all(*m.group, elems, m);
  size_t der = derivation_space_dim(m, elems, rho, mul);
  int64_t h0 = int64_t(fixed_points(m).rows());
  return int64_t(der) - m.dim + h0;
}

int64_t h2_bar_oracle(const GModule& m, size_t max_order) {
  const auto& elems = m.group->elements();
  size_t n = elems.size();
  if (n > max_order) throw LimitError("h2_bar_oracle: group too large");
  if (n == 1) return 0;
  const Field& F = *m.field;
  uint32_t md = m.dim;
  std::unordered_map<Perm, uint32_t, PermHash> index;
  for (uint32_t i = 0; i < n; ++i) index.emplace(elems[i], i);
  std::vector<std::vector<uint32_t>> mul(n, std::vector<uint32_t>(n));
  for (uint32_t x = 0; x < n; ++x)
    for (uint32_t y = 0; y < n; ++y) mul[x][y] = index.at(elems[x] * elems[y]);
  std::vector<Mat> rho = rho_all(*m.group, elems, m);

  // unknowns: f(x,y) for x,y != 1, normalized
  auto cell = [n, md](uint32_t x, uint32_t y) {
    return (size_t(x - 1) * (n - 1) + (y - 1)) * md;
  };
  size_t unknowns = (n - 1) * (n - 1) * md;
  Echelon ech(F, unknowns);
  std::vector<uint8_t> row(unknowns);
  // f(x,y) rho(z) + f(xy,z) - f(x,yz) - f(y,z) = 0 for x,y,z != 1
  for (uint32_t x = 1; x < n; ++x)
    for (uint32_t y = 1; y < n; ++y)
      for (uint32_t z = 1; z < n; ++z) {
        uint32_t xy = mul[x][y], yz = mul[y][z];
        for (uint32_t t = 0; t < md; ++t) {
          std::fill(row.begin(), row.end(), 0);
          for (uint32_t r = 0; r < md; ++r) {
            gfel v = rho[z].get(r, t);
            if (v) {
              size_t c = cell(x, y) + r;
              row[c] = uint8_t(F.add(row[c], v));
            }
          }
          if (xy != 0) {
            size_t c = cell(xy, z) + t;
            row[c] = uint8_t(F.add(row[c], 1));
          }
          if (yz != 0) {
            size_t c = cell(x, yz) + t;
            row[c] = uint8_t(F.sub(row[c], 1));
          }
          {
            size_t c = cell(y, z) + t;
            row[c] = uint8_t(F.sub(row[c], 1));
          }
          ech.add(row);
        }
      }
  size_t z2 = unknowns - ech.rank();
  size_t der = derivation_space_dim(m, elems, rho, mul);
  size_t b2 = (n - 1) * md - der;
  return int64_t(z2) - int64_t(b2);
}

int64_t nu2_value(const CohomReport& r, uint32_t dim) {
  return ceil_div(r.h2 - r.h1 + r.h0, int64_t(dim));
}

int64_t nu2(PermGroupPtr g, const GModule& m) {
  GroupAlgebra ga(g, *m.field);
  return nu2_value(ga.h012(m), m.dim);
}

CohomReport kunneth_combine(const CohomReport& a, const CohomReport& b) {
  CohomReport r;
  r.method = "kunneth";
  r.h0 = a.h0 * b.h0;
  r.h1 = a.h1 * b.h0 + a.h0 * b.h1;
  r.h2 = a.h2 * b.h0 + a.h1 * b.h1 + a.h0 * b.h2;
  r.d = a.d + b.d;
  return r;
}

int64_t h2_semidirect_closed_form(const GModule& L, const GModule& U) {
  if (!L.same_context(U)) throw Error("closed form: group/field mismatch");
  uint64_t h = L.group->order();
  if (h % L.field->p() == 0)
    throw Error("closed form requires the characteristic to not divide |H|");
  return int64_t(hom_dim(L, U)) + int64_t(hom_dim(wedge2(L), U));
}

int64_t schur_p_rank(PermGroupPtr g, uint32_t p) {
  const Field& F = field_make(p, 1);
  GroupAlgebra ga(g, F);
  CohomReport r = ga.h012(trivial_module(g, F));
  return r.h2 - r.h1;
}

int64_t schur_min_generators(PermGroupPtr g) {
  int64_t best = 0;
  for (uint32_t p : prime_divisors(g->order())) best = std::max(best, schur_p_rank(g, p));
  return best;
}

}  // namespace profgrp
