#include "hom3/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace hom3 {

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(const Vec &v) {
  return std::all_of(v.begin(), v.end(), [](const Rat &x) { return is_zero(x); });
}

Vec &operator+=(Vec &a, const Vec &b) {
  if (a.size() != b.size())
    throw InputError("vector length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!is_zero(b[i]))
      a[i] += b[i];
  return a;
}

Vec &operator-=(Vec &a, const Vec &b) {
  if (a.size() != b.size())
    throw InputError("vector length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!is_zero(b[i]))
      a[i] -= b[i];
  return a;
}

Vec operator+(const Vec &a, const Vec &b) {
  Vec r = a;
  return r += b;
}

Vec operator-(const Vec &a, const Vec &b) {
  Vec r = a;
  return r -= b;
}

Vec operator*(const Rat &s, const Vec &v) {
  Vec r(v.size());
  if (is_zero(s))
    return r;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!is_zero(v[i]))
      r[i] = s * v[i];
  return r;
}

Rat dot(const Vec &a, const Vec &b) {
  if (a.size() != b.size())
    throw InputError("vector length mismatch");
  Rat s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!is_zero(a[i]) && !is_zero(b[i]))
      s += a[i] * b[i];
  return s;
}

std::string to_string(const Vec &v) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < v.size(); ++i)
    out << (i ? ", " : "") << to_string(v[i]);
  out << ']';
  return out.str();
}

// ---------------------------------------------------------------------------
// Mat

Mat::Mat(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Mat::Mat(std::initializer_list<std::initializer_list<Rat>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto &r : rows) {
    if (r.size() != cols_)
      throw InputError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

Mat Mat::diagonal(const Vec &entries) {
  Mat m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i)
    m(i, i) = entries[i];
  return m;
}

Mat Mat::from_columns(const std::vector<Vec> &columns, std::size_t rows) {
  Mat m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows)
      throw InputError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r)
      m(r, c) = columns[c][r];
  }
  return m;
}

Vec Mat::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    v[r] = (*this)(r, c);
  return v;
}

Vec Mat::row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      t(c, r) = (*this)(r, c);
  return t;
}

bool Mat::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Rat &x) { return hom3::is_zero(x); });
}

bool Mat::is_symmetric() const {
  if (!is_square())
    return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r))
        return false;
  return true;
}

bool Mat::is_skew() const {
  if (!is_square())
    return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r; c < cols_; ++c)
      if ((*this)(r, c) != -(*this)(c, r))
        return false;
  return true;
}

Vec Mat::apply(const Vec &v) const {
  if (v.size() != cols_)
    throw InputError("matrix-vector shape mismatch: " + std::to_string(cols_) +
                     " columns vs vector of length " + std::to_string(v.size()));
  Vec out(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (hom3::is_zero(v[c]))
      continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Rat &a = (*this)(r, c);
      if (!hom3::is_zero(a))
        out[r] += a * v[c];
    }
  }
  return out;
}

Mat &Mat::operator+=(const Mat &o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw InputError("matrix shape mismatch in addition");
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!hom3::is_zero(o.data_[i]))
      data_[i] += o.data_[i];
  return *this;
}

Mat &Mat::operator-=(const Mat &o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw InputError("matrix shape mismatch in subtraction");
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!hom3::is_zero(o.data_[i]))
      data_[i] -= o.data_[i];
  return *this;
}

Mat operator*(const Mat &a, const Mat &b) {
  if (a.cols_ != b.rows_)
    throw InputError("matrix shape mismatch in product: " +
                     std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                     " times " + std::to_string(b.rows_) + "x" +
                     std::to_string(b.cols_));
  Mat m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rat &x = a(i, k);
      if (is_zero(x))
        continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rat &y = b(k, j);
        if (!is_zero(y))
          m(i, j) += x * y;
      }
    }
  return m;
}

Mat operator*(const Rat &s, Mat m) {
  for (auto &x : m.data_)
    x *= s;
  return m;
}

bool operator==(const Mat &a, const Mat &b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string to_string(const Mat &m) {
  std::ostringstream out;
  out << '[';
  for (std::size_t r = 0; r < m.rows(); ++r)
    out << (r ? ", " : "") << to_string(m.row(r));
  out << ']';
  return out.str();
}

Mat direct_sum(const Mat &a, const Mat &b) {
  Mat m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      m(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c)
      m(a.rows() + r, a.cols() + c) = b(r, c);
  return m;
}

// ---------------------------------------------------------------------------
// Tensor4

Tensor4::Tensor4(std::array<std::size_t, 4> dims)
    : dims_(dims), data_(dims[0] * dims[1] * dims[2] * dims[3]) {}

Vec Tensor4::fibre(std::size_t i, std::size_t j, std::size_t k) const {
  const auto begin = data_.begin() + static_cast<std::ptrdiff_t>(offset(i, j, k, 0));
  return Vec(begin, begin + static_cast<std::ptrdiff_t>(dims_[3]));
}

void Tensor4::set_fibre(std::size_t i, std::size_t j, std::size_t k, const Vec &v) {
  if (v.size() != dims_[3])
    throw InputError("fibre length mismatch");
  std::copy(v.begin(), v.end(),
            data_.begin() + static_cast<std::ptrdiff_t>(offset(i, j, k, 0)));
}

Mat Tensor4::slice(std::size_t i, std::size_t j) const {
  Mat m(dims_[2], dims_[3]);
  for (std::size_t a = 0; a < dims_[2]; ++a)
    for (std::size_t b = 0; b < dims_[3]; ++b)
      m(a, b) = (*this)(i, j, a, b);
  return m;
}

void Tensor4::set_slice(std::size_t i, std::size_t j, const Mat &m) {
  if (m.rows() != dims_[2] || m.cols() != dims_[3])
    throw InputError("slice shape mismatch");
  for (std::size_t a = 0; a < dims_[2]; ++a)
    for (std::size_t b = 0; b < dims_[3]; ++b)
      (*this)(i, j, a, b) = m(a, b);
}

bool Tensor4::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Rat &x) { return hom3::is_zero(x); });
}

// ---------------------------------------------------------------------------
// Elimination

EchelonForm row_reduce(Mat m) {
  EchelonForm out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && is_zero(m(pivot, col)))
      ++pivot;
    if (pivot == m.rows())
      continue;
    if (pivot != row)
      for (std::size_t c = 0; c < m.cols(); ++c)
        std::swap(m(pivot, c), m(row, c));
    const Rat inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c)
      m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m(r, col)))
        continue;
      const Rat factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!is_zero(m(row, c)))
          m(r, c) -= factor * m(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Mat &m) { return row_reduce(m).pivots.size(); }

std::vector<Vec> canonical_span(const std::vector<Vec> &vectors) {
  if (vectors.empty())
    return {};
  const std::size_t n = vectors.front().size();
  Mat m(vectors.size(), n);
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    if (vectors[r].size() != n)
      throw InputError("vector length mismatch in span");
    for (std::size_t c = 0; c < n; ++c)
      m(r, c) = vectors[r][c];
  }
  const auto ech = row_reduce(std::move(m));
  std::vector<Vec> basis;
  for (std::size_t r = 0; r < ech.pivots.size(); ++r)
    basis.push_back(ech.reduced.row(r));
  return basis;
}

namespace {

std::vector<Vec> kernel_from_echelon(const EchelonForm &ech, std::size_t n) {
  std::vector<bool> is_pivot(n, false);
  for (auto p : ech.pivots)
    is_pivot[p] = true;
  std::vector<Vec> raw;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f])
      continue;
    Vec v(n);
    v[f] = 1;
    for (std::size_t r = 0; r < ech.pivots.size(); ++r)
      v[ech.pivots[r]] = -ech.reduced(r, f);
    raw.push_back(std::move(v));
  }
  return canonical_span(raw);
}

} // namespace

std::vector<Vec> kernel_basis(const Mat &system) {
  return kernel_from_echelon(row_reduce(system), system.cols());
}

LinearSolution solve_linear(const Mat &system, const Vec &rhs) {
  if (rhs.size() != system.rows())
    throw InputError("solve_linear: system has " + std::to_string(system.rows()) +
                     " rows but rhs has length " + std::to_string(rhs.size()));
  const std::size_t n = system.cols();
  Mat augmented(system.rows(), n + 1);
  for (std::size_t r = 0; r < system.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c)
      augmented(r, c) = system(r, c);
    augmented(r, n) = rhs[r];
  }
  const auto ech = row_reduce(std::move(augmented));

  LinearSolution sol;
  if (!ech.pivots.empty() && ech.pivots.back() == n)
    return sol;
  sol.consistent = true;
  sol.particular = Vec(n);
  for (std::size_t r = 0; r < ech.pivots.size(); ++r)
    sol.particular[ech.pivots[r]] = ech.reduced(r, n);

  // The augmented column never holds a pivot here, so the coefficient part
  // of the reduced matrix is itself in reduced echelon form.
  EchelonForm coeff;
  coeff.pivots = ech.pivots;
  coeff.reduced = Mat(ech.reduced.rows(), n);
  for (std::size_t r = 0; r < ech.reduced.rows(); ++r)
    for (std::size_t c = 0; c < n; ++c)
      coeff.reduced(r, c) = ech.reduced(r, c);
  sol.kernel = kernel_from_echelon(coeff, n);
  return sol;
}

std::optional<Mat> mat_inverse(const Mat &m) {
  if (!m.is_square())
    throw InputError("mat_inverse: matrix is " + std::to_string(m.rows()) + "x" +
                     std::to_string(m.cols()) + ", not square");
  const std::size_t n = m.rows();
  if (n == 0)
    return Mat();
  Mat augmented(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c)
      augmented(r, c) = m(r, c);
    augmented(r, n + r) = 1;
  }
  const auto ech = row_reduce(std::move(augmented));
  if (ech.pivots.size() < n || ech.pivots[n - 1] != n - 1)
    return std::nullopt;
  Mat inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      inv(r, c) = ech.reduced(r, n + c);
  return inv;
}

} // namespace hom3
