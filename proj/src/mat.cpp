#include "profgrp/mat.hpp"

#include <algorithm>

#include "profgrp/error.hpp"

namespace profgrp {

namespace {

// dst += c * src over bytes, no reduction (caller guarantees headroom).
inline void axpy_raw(uint8_t* dst, const uint8_t* src, uint8_t c, size_t n) {
  for (size_t j = 0; j < n; ++j) dst[j] = uint8_t(dst[j] + c * src[j]);
}

template <int P>
void reduce_row_t(uint8_t* r, size_t n) {
  for (size_t j = 0; j < n; ++j) r[j] = uint8_t(r[j] % P);
}

void reduce_row(uint8_t* r, size_t n, uint32_t p) {
  switch (p) {
    case 2: reduce_row_t<2>(r, n); break;
    case 3: reduce_row_t<3>(r, n); break;
    case 5: reduce_row_t<5>(r, n); break;
    case 7: reduce_row_t<7>(r, n); break;
    case 11: reduce_row_t<11>(r, n); break;
    case 13: reduce_row_t<13>(r, n); break;
    default:
      for (size_t j = 0; j < n; ++j) r[j] = uint8_t(r[j] % p);
  }
}

template <int P>
void scale_row_t(uint8_t* r, uint8_t c, size_t n) {
  for (size_t j = 0; j < n; ++j) r[j] = uint8_t(r[j] * c % P);
}

void scale_row(uint8_t* r, uint8_t c, size_t n, uint32_t p) {
  switch (p) {
    case 2: return;  // c is 1
    case 3: scale_row_t<3>(r, c, n); break;
    case 5: scale_row_t<5>(r, c, n); break;
    case 7: scale_row_t<7>(r, c, n); break;
    case 11: scale_row_t<11>(r, c, n); break;
    case 13: scale_row_t<13>(r, c, n); break;
    default:
      for (size_t j = 0; j < n; ++j) r[j] = uint8_t(uint32_t(r[j]) * c % p);
  }
}

// Row operations for the generic (extension field or large p) byte path.
inline void axpy_field(const Field& F, uint8_t* dst, const uint8_t* src, gfel c, size_t n) {
  for (size_t j = 0; j < n; ++j)
    if (src[j]) dst[j] = uint8_t(F.add(dst[j], F.mul(c, src[j])));
}

inline void scale_field(const Field& F, uint8_t* r, gfel c, size_t n) {
  for (size_t j = 0; j < n; ++j)
    if (r[j]) r[j] = uint8_t(F.mul(r[j], c));
}

bool lazy_ok(const Field& F) { return F.k() == 1 && F.p() <= 13; }

}  // namespace

Mat::Mat(const Field& F, size_t rows, size_t cols, bool force_byte)
    : f_(&F), rows_(rows), cols_(cols) {
  if (F.q() > 256) throw Error("matrices require q <= 256");
  packed_ = (F.q() == 2) && !force_byte;
  if (packed_) {
    wpr_ = (cols + 63) / 64;
    w_.assign(rows * wpr_, 0);
  } else {
    b_.assign(rows * cols, 0);
  }
}

Mat Mat::identity(const Field& F, size_t n, bool force_byte) {
  Mat m(F, n, n, force_byte);
  for (size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Mat Mat::to_byte() const {
  if (!packed_) return *this;
  Mat m(*f_, rows_, cols_, true);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j)
      if (get(i, j)) m.set(i, j, 1);
  return m;
}

Mat Mat::to_packed() const {
  if (packed_ || f_->q() != 2) return *this;
  Mat m(*f_, rows_, cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j)
      if (b_[i * cols_ + j] % 2) m.set(i, j, 1);
  return m;
}

Mat Mat::transpose() const {
  Mat m(*f_, cols_, rows_, !packed_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) {
      gfel v = get(i, j);
      if (v) m.set(j, i, v);
    }
  return m;
}

bool Mat::is_zero() const {
  if (packed_) {
    for (uint64_t w : w_)
      if (w) return false;
    return true;
  }
  for (uint8_t v : b_)
    if (v % f_->p() != 0 || (f_->k() > 1 && v != 0)) return false;
  return true;
}

void Mat::swap_rows(size_t i, size_t j) {
  if (i == j) return;
  if (packed_)
    std::swap_ranges(w_.begin() + i * wpr_, w_.begin() + (i + 1) * wpr_, w_.begin() + j * wpr_);
  else
    std::swap_ranges(b_.begin() + i * cols_, b_.begin() + (i + 1) * cols_, b_.begin() + j * cols_);
}

bool operator==(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  if (a.f_ == nullptr || b.f_ == nullptr) return a.f_ == b.f_;
  if (!(*a.f_ == *b.f_)) return false;
  for (size_t i = 0; i < a.rows_; ++i)
    for (size_t j = 0; j < a.cols_; ++j)
      if (a.get(i, j) != b.get(i, j)) return false;
  return true;
}

Mat operator*(const Mat& A, const Mat& B) {
  if (A.cols() != B.rows()) throw Error("matrix product dimension mismatch");
  const Field& F = A.field();
  if (A.packed() && B.packed()) {
    Mat C(F, A.rows(), B.cols());
    for (size_t i = 0; i < A.rows(); ++i) {
      uint64_t* out = C.row_w(i);
      const uint64_t* ra = A.row_w(i);
      for (size_t k = 0; k < A.cols(); ++k)
        if ((ra[k >> 6] >> (k & 63)) & 1) {
          const uint64_t* rb = B.row_w(k);
          for (size_t t = 0; t < B.wpr(); ++t) out[t] ^= rb[t];
        }
    }
    return C;
  }
  Mat a = A.to_byte(), b = B.to_byte();
  Mat C(F, A.rows(), B.cols(), true);
  if (F.k() == 1) {
    std::vector<uint32_t> acc(B.cols());
    for (size_t i = 0; i < a.rows(); ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      const uint8_t* ra = a.row_u8(i);
      for (size_t k = 0; k < a.cols(); ++k) {
        uint32_t c = ra[k];
        if (!c) continue;
        const uint8_t* rb = b.row_u8(k);
        for (size_t j = 0; j < b.cols(); ++j) acc[j] += c * rb[j];
      }
      uint8_t* out = C.row_u8(i);
      for (size_t j = 0; j < b.cols(); ++j) out[j] = uint8_t(acc[j] % F.p());
    }
  } else {
    for (size_t i = 0; i < a.rows(); ++i) {
      uint8_t* out = C.row_u8(i);
      const uint8_t* ra = a.row_u8(i);
      for (size_t k = 0; k < a.cols(); ++k)
        if (ra[k]) axpy_field(F, out, b.row_u8(k), ra[k], b.cols());
    }
  }
  return A.packed() || B.packed() ? C.to_packed() : C;
}

Mat operator+(const Mat& A, const Mat& B) {
  if (A.rows() != B.rows() || A.cols() != B.cols()) throw Error("matrix sum dimension mismatch");
  const Field& F = A.field();
  Mat C(F, A.rows(), A.cols(), !A.packed());
  for (size_t i = 0; i < A.rows(); ++i)
    for (size_t j = 0; j < A.cols(); ++j) C.set(i, j, F.add(A.get(i, j), B.get(i, j)));
  return C;
}

Mat neg(const Mat& A) {
  const Field& F = A.field();
  Mat C(F, A.rows(), A.cols(), !A.packed());
  for (size_t i = 0; i < A.rows(); ++i)
    for (size_t j = 0; j < A.cols(); ++j) C.set(i, j, F.neg(A.get(i, j)));
  return C;
}

Mat operator-(const Mat& A, const Mat& B) { return A + neg(B); }

Mat kron(const Mat& A, const Mat& B) {
  const Field& F = A.field();
  Mat C(F, A.rows() * B.rows(), A.cols() * B.cols(), true);
  for (size_t i = 0; i < A.rows(); ++i)
    for (size_t j = 0; j < A.cols(); ++j) {
      gfel a = A.get(i, j);
      if (!a) continue;
      for (size_t k = 0; k < B.rows(); ++k)
        for (size_t l = 0; l < B.cols(); ++l) {
          gfel b = B.get(k, l);
          if (b) C.set(i * B.rows() + k, j * B.cols() + l, F.mul(a, b));
        }
    }
  return A.packed() ? C.to_packed() : C;
}

Mat hstack(const Mat& A, const Mat& B) {
  Mat C(A.field(), A.rows(), A.cols() + B.cols(), true);
  for (size_t i = 0; i < A.rows(); ++i) {
    for (size_t j = 0; j < A.cols(); ++j) C.set(i, j, A.get(i, j));
    for (size_t j = 0; j < B.cols(); ++j) C.set(i, A.cols() + j, B.get(i, j));
  }
  return A.packed() ? C.to_packed() : C;
}

Mat vstack(const Mat& A, const Mat& B) {
  Mat C(A.field(), A.rows() + B.rows(), A.cols(), true);
  for (size_t i = 0; i < A.rows(); ++i)
    for (size_t j = 0; j < A.cols(); ++j) C.set(i, j, A.get(i, j));
  for (size_t i = 0; i < B.rows(); ++i)
    for (size_t j = 0; j < A.cols(); ++j) C.set(A.rows() + i, j, B.get(i, j));
  return A.packed() ? C.to_packed() : C;
}

Mat mat_pow(const Mat& A, uint64_t e) {
  Mat r = Mat::identity(A.field(), A.rows(), !A.packed());
  Mat b = A;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

bool is_identity(const Mat& A) {
  if (A.rows() != A.cols()) return false;
  for (size_t i = 0; i < A.rows(); ++i)
    for (size_t j = 0; j < A.cols(); ++j)
      if (A.get(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

uint64_t mat_hash(const Mat& A) {
  uint64_t h = 1469598103934665603ull;
  auto mix = [&h](uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(A.rows());
  mix(A.cols());
  if (!A.empty()) {
    mix(A.field().q());
    for (size_t i = 0; i < A.rows(); ++i)
      for (size_t j = 0; j < A.cols(); ++j) mix(A.get(i, j));
  }
  return h;
}

namespace {

Ech rref_packed(Mat a) {
  size_t rows = a.rows(), cols = a.cols(), wpr = a.wpr();
  std::vector<uint32_t> pivots;
  size_t r = 0;
  for (size_t col = 0; col < cols && r < rows; ++col) {
    size_t w = col >> 6;
    uint64_t bit = uint64_t(1) << (col & 63);
    size_t piv = SIZE_MAX;
    for (size_t i = r; i < rows; ++i)
      if (a.row_w(i)[w] & bit) {
        piv = i;
        break;
      }
    if (piv == SIZE_MAX) continue;
    a.swap_rows(r, piv);
    const uint64_t* src = a.row_w(r);
    for (size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      uint64_t* dst = a.row_w(i);
      if (dst[w] & bit)
        for (size_t t = w; t < wpr; ++t) dst[t] ^= src[t];
    }
    pivots.push_back(uint32_t(col));
    ++r;
  }
  Mat out(a.field(), r, cols);
  for (size_t i = 0; i < r; ++i) std::memcpy(out.row_w(i), a.row_w(i), wpr * 8);
  return Ech{std::move(out), std::move(pivots), r};
}

Ech rref_byte(Mat a0) {
  Mat a = a0.to_byte();
  const Field& F = a.field();
  const uint32_t p = F.p();
  size_t rows = a.rows(), cols = a.cols();
  const bool lazy = lazy_ok(F);
  std::vector<uint32_t> bound(rows, p - 1);
  std::vector<uint32_t> pivots;
  size_t r = 0;
  for (size_t col = 0; col < cols && r < rows; ++col) {
    size_t piv = SIZE_MAX;
    for (size_t i = r; i < rows; ++i) {
      gfel v = lazy ? gfel(a.row_u8(i)[col] % p) : a.row_u8(i)[col];
      if (v) {
        piv = i;
        break;
      }
    }
    if (piv == SIZE_MAX) continue;
    a.swap_rows(r, piv);
    std::swap(bound[r], bound[piv]);
    uint8_t* src = a.row_u8(r);
    if (lazy) {
      if (bound[r] > p - 1) reduce_row(src, cols, p);
      bound[r] = p - 1;
      gfel lead = src[col];
      if (lead != 1) scale_row(src, uint8_t(F.inv(lead)), cols, p);
      for (size_t i = 0; i < rows; ++i) {
        if (i == r) continue;
        uint8_t* dst = a.row_u8(i);
        uint32_t v = dst[col] % p;
        if (!v) continue;
        uint32_t c = p - v;
        if (bound[i] + c * (p - 1) > 255) {
          reduce_row(dst, cols, p);
          bound[i] = p - 1;
          v = dst[col];
          if (!v) continue;
          c = p - v;
        }
        axpy_raw(dst, src, uint8_t(c), cols);
        bound[i] += c * (p - 1);
      }
    } else {
      gfel lead = src[col];
      if (lead != 1) scale_field(F, src, F.inv(lead), cols);
      for (size_t i = 0; i < rows; ++i) {
        if (i == r) continue;
        uint8_t* dst = a.row_u8(i);
        if (!dst[col]) continue;
        axpy_field(F, dst, src, F.neg(dst[col]), cols);
      }
    }
    pivots.push_back(uint32_t(col));
    ++r;
  }
  Mat out(F, r, cols, true);
  for (size_t i = 0; i < r; ++i) {
    if (lazy && bound[i] > p - 1) reduce_row(a.row_u8(i), cols, p);
    std::memcpy(out.row_u8(i), a.row_u8(i), cols);
  }
  return Ech{std::move(out), std::move(pivots), r};
}

Mat kernel_from(const Ech& e, const Field& F, size_t cols, bool packed) {
  size_t nul = cols - e.rank;
  Mat out(F, nul, cols, !packed);
  std::vector<char> is_pivot(cols, 0);
  for (uint32_t c : e.pivots) is_pivot[c] = 1;
  size_t row = 0;
  for (size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    out.set(row, f, 1);
    for (size_t i = 0; i < e.rank; ++i) {
      gfel v = e.r.get(i, f);
      if (v) out.set(row, e.pivots[i], F.neg(v));
    }
    ++row;
  }
  return out;
}

}  // namespace

Ech rref(const Mat& A) { return A.packed() ? rref_packed(A) : rref_byte(A); }

size_t rank(const Mat& A) { return rref(A).rank; }

Mat kernel(const Mat& A) {
  Ech e = rref(A);
  return kernel_from(e, A.field(), A.cols(), A.packed());
}

std::optional<std::vector<gfel>> solve(const Mat& A, const std::vector<gfel>& b) {
  if (b.size() != A.rows()) throw Error("solve: rhs length mismatch");
  Mat aug(A.field(), A.rows(), A.cols() + 1, true);
  for (size_t i = 0; i < A.rows(); ++i) {
    for (size_t j = 0; j < A.cols(); ++j) aug.set(i, j, A.get(i, j));
    aug.set(i, A.cols(), b[i]);
  }
  Ech e = rref(aug);
  std::vector<gfel> x(A.cols(), 0);
  for (size_t i = 0; i < e.rank; ++i) {
    if (e.pivots[i] == A.cols()) return std::nullopt;
    x[e.pivots[i]] = e.r.get(i, A.cols());
  }
  return x;
}

namespace detail {
Ech rref_generic(const Mat& A) { return rref_byte(A); }
Mat kernel_generic(const Mat& A) {
  Ech e = rref_byte(A);
  return kernel_from(e, A.field(), A.cols(), false);
}
}  // namespace detail

Mat inverse(const Mat& A) {
  if (A.rows() != A.cols()) throw Error("inverse of non-square matrix");
  Ech e = rref(hstack(A, Mat::identity(A.field(), A.rows(), !A.packed())));
  if (e.rank < A.rows() || (e.rank && e.pivots[e.rank - 1] >= A.cols()))
    throw Error("matrix not invertible");
  Mat out(A.field(), A.rows(), A.cols(), !A.packed());
  for (size_t i = 0; i < A.rows(); ++i)
    for (size_t j = 0; j < A.cols(); ++j) out.set(i, j, e.r.get(i, A.cols() + j));
  return out;
}

size_t Echelon::reduce(std::vector<uint8_t>& v) const {
  const Field& F = *f_;
  const uint32_t p = F.p();
  const bool lazy = lazy_ok(F);
  for (size_t i = 0; i < rows_.size(); ++i) {
    uint32_t c = lazy ? v[pivots_[i]] % p : v[pivots_[i]];
    if (!c) continue;
    if (lazy) {
      // rows_ entries are reduced; keep v reduced before each combine.
      reduce_row(v.data(), width_, p);
      c = v[pivots_[i]];
      if (!c) continue;
      axpy_raw(v.data(), rows_[i].data(), uint8_t(p - c), width_);
    } else {
      axpy_field(F, v.data(), rows_[i].data(), F.neg(gfel(c)), width_);
    }
  }
  if (lazy) reduce_row(v.data(), width_, p);
  for (size_t j = 0; j < width_; ++j)
    if (v[j]) return j;
  return SIZE_MAX;
}

size_t Echelon::add(std::vector<uint8_t>& v) {
  size_t lead = reduce(v);
  if (lead == SIZE_MAX) return SIZE_MAX;
  const Field& F = *f_;
  if (v[lead] != 1) {
    gfel c = F.inv(v[lead]);
    if (F.k() == 1 && F.p() <= 13)
      scale_row(v.data(), uint8_t(c), width_, F.p());
    else
      scale_field(F, v.data(), c, width_);
  }
  // Keep RREF: clear this column from existing rows.
  for (size_t i = 0; i < rows_.size(); ++i) {
    uint8_t c = rows_[i][lead];
    if (!c) continue;
    if (lazy_ok(F)) {
      axpy_raw(rows_[i].data(), v.data(), uint8_t(F.neg(c)), width_);
      reduce_row(rows_[i].data(), width_, F.p());
    } else {
      axpy_field(F, rows_[i].data(), v.data(), F.neg(c), width_);
    }
  }
  size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < lead) ++pos;
  rows_.insert(rows_.begin() + pos, v);
  pivots_.insert(pivots_.begin() + pos, uint32_t(lead));
  return lead;
}

Mat Echelon::to_mat(bool force_byte) const {
  Mat m(*f_, rows_.size(), width_, force_byte);
  for (size_t i = 0; i < rows_.size(); ++i)
    for (size_t j = 0; j < width_; ++j)
      if (rows_[i][j]) m.set(i, j, rows_[i][j]);
  return m;
}

}  // namespace profgrp
