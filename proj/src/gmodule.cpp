#include "profgrp/gmodule.hpp"

#include <unordered_map>

#include "profgrp/error.hpp"

namespace profgrp {

GModule trivial_module(PermGroupPtr g, const Field& f) {
  GModule m;
  m.group = std::move(g);
  m.field = &f;
  m.dim = 1;
  for (size_t i = 0; i < m.group->generators().size(); ++i)
    m.action.push_back(Mat::identity(f, 1));
  m.label = "trivial";
  return m;
}

GModule permutation_module(PermGroupPtr g, const Field& f) {
  GModule m;
  m.field = &f;
  m.dim = g->degree();
  for (const auto& p : g->generators()) {
    Mat a(f, m.dim, m.dim);
    for (uint32_t i = 0; i < m.dim; ++i) a.set(i, p[i], 1);
    m.action.push_back(std::move(a));
  }
  m.group = std::move(g);
  m.label = "perm";
  return m;
}

GModule regular_module(PermGroupPtr g, const Field& f, size_t limit) {
  const auto& elems = g->elements(limit);
  std::unordered_map<Perm, uint32_t, PermHash> index;
  for (uint32_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], i);
  GModule m;
  m.field = &f;
  m.dim = uint32_t(elems.size());
  for (const auto& p : g->generators()) {
    Mat a(f, m.dim, m.dim);
    for (uint32_t x = 0; x < m.dim; ++x) a.set(x, index.at(elems[x] * p), 1);
    m.action.push_back(std::move(a));
  }
  m.group = std::move(g);
  m.label = "regular";
  return m;
}

GModule dual(const GModule& m) {
  GModule d;
  d.group = m.group;
  d.field = m.field;
  d.dim = m.dim;
  for (const auto& a : m.action) d.action.push_back(inverse(a).transpose());
  d.label = "dual:" + m.label;
  return d;
}

GModule tensor(const GModule& m, const GModule& n) {
  if (!m.same_context(n)) throw Error("tensor: group/field mismatch");
  GModule t;
  t.group = m.group;
  t.field = m.field;
  t.dim = m.dim * n.dim;
  for (size_t i = 0; i < m.action.size(); ++i) t.action.push_back(kron(m.action[i], n.action[i]));
  t.label = "tensor:" + m.label + "," + n.label;
  return t;
}

GModule wedge2(const GModule& m) {
  const Field& F = *m.field;
  uint32_t n = m.dim;
  uint32_t d = n * (n - 1) / 2;
  auto idx = [n](uint32_t i, uint32_t j) {  // i < j
    return i * (2 * n - i - 1) / 2 + (j - i - 1);
  };
  GModule w;
  w.group = m.group;
  w.field = m.field;
  w.dim = d;
  for (const auto& a : m.action) {
    Mat b(F, d, d, true);
    for (uint32_t i = 0; i < n; ++i)
      for (uint32_t j = i + 1; j < n; ++j) {
        uint32_t row = idx(i, j);
        for (uint32_t k = 0; k < n; ++k)
          for (uint32_t l = k + 1; l < n; ++l) {
            gfel v = F.sub(F.mul(a.get(i, k), a.get(j, l)), F.mul(a.get(i, l), a.get(j, k)));
            if (v) b.set(row, idx(k, l), v);
          }
      }
    w.action.push_back(F.q() == 2 ? b.to_packed() : std::move(b));
  }
  w.label = "wedge2:" + m.label;
  return w;
}

Mat fixed_points(const GModule& m) {
  const Field& F = *m.field;
  if (m.action.empty()) return Mat::identity(F, m.dim);
  Mat stack(F, m.dim, m.dim * m.action.size(), true);
  for (size_t g = 0; g < m.action.size(); ++g)
    for (uint32_t i = 0; i < m.dim; ++i)
      for (uint32_t j = 0; j < m.dim; ++j) {
        gfel v = m.action[g].get(i, j);
        if (i == j) v = F.sub(v, 1);
        if (v) stack.set(i, g * m.dim + j, v);
      }
  return kernel(stack.transpose());
}

std::vector<Mat> hom_space(const GModule& m, const GModule& n) {
  if (!m.same_context(n)) throw Error("hom_space: group/field mismatch");
  const Field& F = *m.field;
  size_t unknowns = size_t(m.dim) * n.dim;
  Mat sys(F, m.action.size() * unknowns, unknowns, true);
  size_t row = 0;
  for (size_t g = 0; g < m.action.size(); ++g) {
    const Mat& A = m.action[g];
    const Mat& B = n.action[g];
    // (A X - X B)[i][j] = sum_k A[i][k] X[k][j] - sum_l X[i][l] B[l][j]
    for (uint32_t i = 0; i < m.dim; ++i)
      for (uint32_t j = 0; j < n.dim; ++j) {
        for (uint32_t k = 0; k < m.dim; ++k) {
          gfel v = A.get(i, k);
          if (v) {
            size_t c = size_t(k) * n.dim + j;
            sys.set(row, c, F.add(sys.get(row, c), v));
          }
        }
        for (uint32_t l = 0; l < n.dim; ++l) {
          gfel v = B.get(l, j);
          if (v) {
            size_t c = size_t(i) * n.dim + l;
            sys.set(row, c, F.sub(sys.get(row, c), v));
          }
        }
        ++row;
      }
  }
  Mat ker = kernel(sys);
  std::vector<Mat> out;
  for (size_t r = 0; r < ker.rows(); ++r) {
    Mat x(F, m.dim, n.dim, true);
    for (uint32_t i = 0; i < m.dim; ++i)
      for (uint32_t j = 0; j < n.dim; ++j) x.set(i, j, ker.get(r, size_t(i) * n.dim + j));
    out.push_back(std::move(x));
  }
  return out;
}

size_t hom_dim(const GModule& m, const GModule& n) { return hom_space(m, n).size(); }

Mat action_of_word(const GModule& m, const Word& w) {
  return evaluate(
      w, m.action, Mat::identity(*m.field, m.dim), [](const Mat& a, const Mat& b) { return a * b; },
      [](const Mat& a) { return inverse(a); });
}

Mat action_of_element(const GModule& m, const Perm& g) {
  std::vector<int32_t> word = m.group->factor(g);
  Mat acc = Mat::identity(*m.field, m.dim);
  for (int32_t l : word) {
    const Mat& a = m.action[Word::gen_of(l)];
    acc = Word::sign_of(l) > 0 ? acc * a : acc * inverse(a);
  }
  return acc;
}

bool satisfies_presentation(const GModule& m, const Presentation& p) {
  if (p.arity() != m.action.size()) return false;
  for (const auto& r : p.relators())
    if (!is_identity(action_of_word(m, r))) return false;
  return true;
}

GModule submodule_action(const GModule& m, const Mat& basis, const std::string& label) {
  const Field& F = *m.field;
  Ech e = rref(basis);
  uint32_t k = uint32_t(e.rank);
  GModule s;
  s.group = m.group;
  s.field = m.field;
  s.dim = k;
  for (const auto& a : m.action) {
    Mat img = e.r * a;
    Mat b(F, k, k, true);
    for (uint32_t i = 0; i < k; ++i)
      for (uint32_t j = 0; j < k; ++j) b.set(i, j, img.get(i, e.pivots[j]));
    // invariance check: img == b * e.r
    if (!(img == b * e.r)) throw Error("submodule_action: subspace not invariant");
    s.action.push_back(F.q() == 2 ? b.to_packed() : std::move(b));
  }
  s.label = label.empty() ? "sub:" + m.label : label;
  return s;
}

GModule quotient_action(const GModule& m, const Mat& basis, const std::string& label) {
  const Field& F = *m.field;
  Ech e = rref(basis);
  std::vector<char> is_pivot(m.dim, 0);
  for (uint32_t c : e.pivots) is_pivot[c] = 1;
  std::vector<uint32_t> free_cols;
  for (uint32_t c = 0; c < m.dim; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  uint32_t k = uint32_t(free_cols.size());

  auto reduce_vec = [&](std::vector<gfel>& v) {
    for (size_t i = 0; i < e.rank; ++i) {
      gfel c = v[e.pivots[i]];
      if (!c) continue;
      for (uint32_t j = 0; j < m.dim; ++j) v[j] = F.sub(v[j], F.mul(c, e.r.get(i, j)));
    }
  };

  GModule q;
  q.group = m.group;
  q.field = m.field;
  q.dim = k;
  for (const auto& a : m.action) {
    Mat b(F, k, k, true);
    for (uint32_t i = 0; i < k; ++i) {
      std::vector<gfel> v(m.dim, 0);
      for (uint32_t j = 0; j < m.dim; ++j) v[j] = a.get(free_cols[i], j);
      reduce_vec(v);
      for (uint32_t j = 0; j < k; ++j) b.set(i, j, v[free_cols[j]]);
    }
    q.action.push_back(F.q() == 2 ? b.to_packed() : std::move(b));
  }
  q.label = label.empty() ? "quot:" + m.label : label;
  return q;
}

Mat spin(const GModule& m, const Mat& seeds) {
  const Field& F = *m.field;
  Echelon ech(F, m.dim);
  std::vector<Mat> byte_action;
  for (const auto& a : m.action) byte_action.push_back(a.to_byte());
  std::vector<std::vector<uint8_t>> work;
  for (size_t r = 0; r < seeds.rows(); ++r) {
    std::vector<uint8_t> v(m.dim);
    for (uint32_t j = 0; j < m.dim; ++j) v[j] = uint8_t(seeds.get(r, j));
    if (ech.add(v) != SIZE_MAX) work.push_back(v);
  }
  while (!work.empty() && ech.rank() < m.dim) {
    std::vector<uint8_t> v = std::move(work.back());
    work.pop_back();
    for (const auto& a : byte_action) {
      std::vector<uint8_t> w(m.dim, 0);
      if (F.k() == 1) {
        for (uint32_t i = 0; i < m.dim; ++i) {
          uint32_t c = v[i];
          if (!c) continue;
          const uint8_t* row = a.row_u8(i);
          for (uint32_t j = 0; j < m.dim; ++j)
            w[j] = uint8_t((w[j] + c * row[j]) % F.p());
        }
      } else {
        for (uint32_t i = 0; i < m.dim; ++i) {
          gfel c = v[i];
          if (!c) continue;
          const uint8_t* row = a.row_u8(i);
          for (uint32_t j = 0; j < m.dim; ++j)
            if (row[j]) w[j] = uint8_t(F.add(w[j], F.mul(c, row[j])));
        }
      }
      if (ech.add(w) != SIZE_MAX) work.push_back(w);
    }
  }
  return ech.to_mat();
}

GModule extend_scalars(const GModule& m, const Field& f) {
  if (m.field->k() != 1 || f.p() != m.field->p())
    throw Error("extend_scalars: source must be a prime field of the same characteristic");
  GModule e;
  e.group = m.group;
  e.field = &f;
  e.dim = m.dim;
  for (const auto& a : m.action) {
    Mat b(f, m.dim, m.dim, true);
    for (uint32_t i = 0; i < m.dim; ++i)
      for (uint32_t j = 0; j < m.dim; ++j) b.set(i, j, a.get(i, j));
    e.action.push_back(f.q() == 2 ? b.to_packed() : std::move(b));
  }
  e.label = m.label + "@F" + std::to_string(f.q());
  return e;
}

GModule pullback(const GModule& m, PermGroupPtr h, const std::vector<Perm>& images) {
  if (images.size() != h->generators().size()) throw Error("pullback: image count mismatch");
  GModule p;
  p.field = m.field;
  p.dim = m.dim;
  for (const auto& img : images) p.action.push_back(action_of_element(m, img));
  p.group = std::move(h);
  p.label = "pullback:" + m.label;
  return p;
}

}  // namespace profgrp
