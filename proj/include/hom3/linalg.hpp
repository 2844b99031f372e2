#pragma once

// Dense exact linear algebra: vectors, matrices, rank-4 tensors and
// Gauss-Jordan elimination over Q.

#include "hom3/rational.hpp"

#include <array>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace hom3 {

using Vec = std::vector<Rat>;

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec &v);
Vec operator+(const Vec &a, const Vec &b);
Vec operator-(const Vec &a, const Vec &b);
Vec operator*(const Rat &s, const Vec &v);
Vec &operator+=(Vec &a, const Vec &b);
Vec &operator-=(Vec &a, const Vec &b);
Rat dot(const Vec &a, const Vec &b);
std::string to_string(const Vec &v);

/// Row-major dense matrix. A matrix of a linear map f stores f(e_j) in
/// column j.
class Mat {
public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols);
  Mat(std::initializer_list<std::initializer_list<Rat>> rows);

  static Mat identity(std::size_t n);
  static Mat diagonal(const Vec &entries);
  static Mat from_columns(const std::vector<Vec> &columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rat &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat &operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  Vec column(std::size_t c) const;
  Vec row(std::size_t r) const;
  Mat transpose() const;
  bool is_zero() const;
  bool is_symmetric() const;
  bool is_skew() const;

  Vec apply(const Vec &v) const;

  Mat &operator+=(const Mat &o);
  Mat &operator-=(const Mat &o);
  friend Mat operator+(Mat a, const Mat &b) { return a += b; }
  friend Mat operator-(Mat a, const Mat &b) { return a -= b; }
  friend Mat operator*(const Mat &a, const Mat &b);
  friend Mat operator*(const Rat &s, Mat m);
  friend bool operator==(const Mat &a, const Mat &b);

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

std::string to_string(const Mat &m);

/// Block diagonal a ⊕ b.
Mat direct_sum(const Mat &a, const Mat &b);

/// Dense rank-4 tensor indexed (i, j, k, l), last index fastest.
class Tensor4 {
public:
  Tensor4() = default;
  explicit Tensor4(std::array<std::size_t, 4> dims);

  const std::array<std::size_t, 4> &dims() const { return dims_; }
  std::size_t dim(std::size_t axis) const { return dims_[axis]; }

  Rat &operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    return data_[offset(i, j, k, l)];
  }
  const Rat &operator()(std::size_t i, std::size_t j, std::size_t k,
                        std::size_t l) const {
    return data_[offset(i, j, k, l)];
  }

  /// The fibre (i, j, k, *) as a vector.
  Vec fibre(std::size_t i, std::size_t j, std::size_t k) const;
  void set_fibre(std::size_t i, std::size_t j, std::size_t k, const Vec &v);

  /// The slice (i, j, *, *) read as a dims[2] x dims[3] matrix.
  Mat slice(std::size_t i, std::size_t j) const;
  void set_slice(std::size_t i, std::size_t j, const Mat &m);

  bool is_zero() const;
  friend bool operator==(const Tensor4 &a, const Tensor4 &b) = default;

private:
  std::size_t offset(std::size_t i, std::size_t j, std::size_t k,
                     std::size_t l) const {
    return ((i * dims_[1] + j) * dims_[2] + k) * dims_[3] + l;
  }

  std::array<std::size_t, 4> dims_{0, 0, 0, 0};
  std::vector<Rat> data_;
};

/// Reduced row echelon form together with the pivot column of each nonzero
/// row.
struct EchelonForm {
  Mat reduced;
  std::vector<std::size_t> pivots;
};

EchelonForm row_reduce(Mat m);
std::size_t rank(const Mat &m);

/// Result of solving system * x = rhs. When consistent, `particular` sets
/// every free variable to zero and `kernel` is the canonical (reduced
/// echelon) basis of the null space.
struct LinearSolution {
  bool consistent = false;
  Vec particular;
  std::vector<Vec> kernel;
};

LinearSolution solve_linear(const Mat &system, const Vec &rhs);

/// Canonical basis of the null space: the reduced echelon rows of any basis.
std::vector<Vec> kernel_basis(const Mat &system);

/// Canonical basis of span(vectors) in reduced echelon form.
std::vector<Vec> canonical_span(const std::vector<Vec> &vectors);

/// Exact inverse, or nullopt when m is singular. Throws InputError if m is
/// not square.
std::optional<Mat> mat_inverse(const Mat &m);

} // namespace hom3
