#pragma once

#include <cstdint>
#include <cstring>
#include <optional>
#include <vector>

#include "profgrp/gf.hpp"

namespace profgrp {

/// Dense matrix over a Field with q <= 256.
///
/// Storage is one byte per entry, except that F_2 matrices default to a
/// bit-packed representation (64 entries per word).  The byte layout can be
/// forced for F_2 (`force_byte`); rank/kernel results agree between the two
/// paths and the tests rely on that.
class Mat {
 public:
  Mat() = default;
  Mat(const Field& F, size_t rows, size_t cols, bool force_byte = false);
  static Mat identity(const Field& F, size_t n, bool force_byte = false);

  const Field& field() const { return *f_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool packed() const { return packed_; }
  bool empty() const { return f_ == nullptr; }

  gfel get(size_t i, size_t j) const {
    if (packed_) return gfel((w_[i * wpr_ + (j >> 6)] >> (j & 63)) & 1);
    return b_[i * cols_ + j];
  }
  void set(size_t i, size_t j, gfel v) {
    if (packed_) {
      uint64_t& w = w_[i * wpr_ + (j >> 6)];
      w = (w & ~(uint64_t(1) << (j & 63))) | (uint64_t(v & 1) << (j & 63));
    } else {
      b_[i * cols_ + j] = uint8_t(v);
    }
  }

  uint8_t* row_u8(size_t i) { return b_.data() + i * cols_; }
  const uint8_t* row_u8(size_t i) const { return b_.data() + i * cols_; }
  uint64_t* row_w(size_t i) { return w_.data() + i * wpr_; }
  const uint64_t* row_w(size_t i) const { return w_.data() + i * wpr_; }
  size_t wpr() const { return wpr_; }

  Mat to_byte() const;
  Mat to_packed() const;
  Mat transpose() const;
  bool is_zero() const;

  void swap_rows(size_t i, size_t j);

  friend bool operator==(const Mat& a, const Mat& b);
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

 private:
  const Field* f_ = nullptr;
  size_t rows_ = 0, cols_ = 0, wpr_ = 0;
  bool packed_ = false;
  std::vector<uint8_t> b_;
  std::vector<uint64_t> w_;
};

Mat operator*(const Mat& A, const Mat& B);
Mat operator+(const Mat& A, const Mat& B);
Mat operator-(const Mat& A, const Mat& B);
Mat neg(const Mat& A);
Mat kron(const Mat& A, const Mat& B);
Mat hstack(const Mat& A, const Mat& B);
Mat vstack(const Mat& A, const Mat& B);
Mat mat_pow(const Mat& A, uint64_t e);
Mat inverse(const Mat& A);
bool is_identity(const Mat& A);
uint64_t mat_hash(const Mat& A);

struct Ech {
  Mat r;                         // reduced row echelon form, zero rows dropped
  std::vector<uint32_t> pivots;  // strictly increasing pivot columns
  size_t rank = 0;
};

/// Reduced row echelon form with first-nonzero pivoting.
Ech rref(const Mat& A);
size_t rank(const Mat& A);

/// Basis of the right null space {x : A x^T = 0}, one vector per row,
/// ordered by free column.  A * kernel(A)^T = 0.
Mat kernel(const Mat& A);

/// Any x with A x = b (x, b column vectors), or nullopt when inconsistent.
std::optional<std::vector<gfel>> solve(const Mat& A, const std::vector<gfel>& b);

namespace detail {
/// Byte-path rref regardless of field (used to cross-check the packed F_2 path).
Ech rref_generic(const Mat& A);
Mat kernel_generic(const Mat& A);
}  // namespace detail

/// Incremental row-space echelonizer over byte vectors (RREF maintained).
class Echelon {
 public:
  Echelon(const Field& F, size_t width) : f_(&F), width_(width) {}

  /// Reduce v against the basis; if a nonzero remainder survives, insert it
  /// (normalized) and return its pivot column, else return SIZE_MAX.
  size_t add(std::vector<uint8_t>& v);
  /// Reduce v in place; returns leading column of the remainder or SIZE_MAX.
  size_t reduce(std::vector<uint8_t>& v) const;
  bool contains(std::vector<uint8_t> v) const { return reduce(v) == SIZE_MAX; }

  size_t rank() const { return rows_.size(); }
  size_t width() const { return width_; }
  const std::vector<uint8_t>& row(size_t i) const { return rows_[i]; }
  uint32_t pivot(size_t i) const { return pivots_[i]; }
  const std::vector<uint32_t>& pivots() const { return pivots_; }
  Mat to_mat(bool force_byte = true) const;

 private:
  const Field* f_;
  size_t width_;
  std::vector<std::vector<uint8_t>> rows_;
  std::vector<uint32_t> pivots_;
};

}  // namespace profgrp
