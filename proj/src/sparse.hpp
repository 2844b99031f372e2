#pragma once

// Sparse helpers for the exhaustive enumerations. Structure constants of the
// algebras we check are overwhelmingly zero, so the hot loops walk nonzero
// entries only and accumulate into a dense buffer that tracks which slots it
// touched.

#include "hom3/linalg.hpp"

#include <cstdint>
#include <vector>

namespace hom3::detail {

struct Entry {
  std::uint32_t index;
  Rat value;
};
using SparseVec = std::vector<Entry>;

inline SparseVec sparse(const Vec &v) {
  SparseVec s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!is_zero(v[i]))
      s.push_back({static_cast<std::uint32_t>(i), v[i]});
  return s;
}

/// All fibres t(i,j,k,*) of a rank-4 tensor in sparse form.
class SparseFibres {
public:
  SparseFibres() = default;
  explicit SparseFibres(const Tensor4 &t)
      : d1_(t.dim(1)), d2_(t.dim(2)), data_(t.dim(0) * t.dim(1) * t.dim(2)) {
    for (std::size_t i = 0; i < t.dim(0); ++i)
      for (std::size_t j = 0; j < t.dim(1); ++j)
        for (std::size_t k = 0; k < t.dim(2); ++k)
          for (std::size_t l = 0; l < t.dim(3); ++l)
            if (!is_zero(t(i, j, k, l)))
              data_[(i * d1_ + j) * d2_ + k].push_back(
                  {static_cast<std::uint32_t>(l), t(i, j, k, l)});
  }

  const SparseVec &operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * d1_ + j) * d2_ + k];
  }

private:
  std::size_t d1_ = 0;
  std::size_t d2_ = 0;
  std::vector<SparseVec> data_;
};

/// Dense vector that remembers touched slots so it can be reset cheaply.
class Accumulator {
public:
  explicit Accumulator(std::size_t n) : values_(n), mark_(n, 0) {}

  void add(std::uint32_t i, const Rat &x) {
    if (!mark_[i]) {
      mark_[i] = 1;
      touched_.push_back(i);
    }
    values_[i] += x;
  }

  void add_scaled(const SparseVec &v, const Rat &s) {
    for (const auto &e : v)
      add(e.index, s * e.value);
  }

  void sub_scaled(const SparseVec &v, const Rat &s) {
    for (const auto &e : v)
      add(e.index, -(s * e.value));
  }

  bool is_zero() const {
    for (auto i : touched_)
      if (!hom3::is_zero(values_[i]))
        return false;
    return true;
  }

  Vec dense() const { return values_; }

  void clear() {
    for (auto i : touched_) {
      values_[i] = 0;
      mark_[i] = 0;
    }
    touched_.clear();
  }

private:
  Vec values_;
  std::vector<char> mark_;
  std::vector<std::uint32_t> touched_;
};

/// acc += s * [x, y, z] for sparse arguments.
inline void add_bracket(Accumulator &acc, const SparseFibres &c, const SparseVec &x,
                        const SparseVec &y, const SparseVec &z, const Rat &s) {
  for (const auto &a : x)
    for (const auto &b : y) {
      const Rat ab = s * a.value * b.value;
      for (const auto &d : z) {
        const auto &fib = c(a.index, b.index, d.index);
        if (fib.empty())
          continue;
        acc.add_scaled(fib, ab * d.value);
      }
    }
}

inline Vec bracket_dense(const SparseFibres &c, std::size_t n, const SparseVec &x,
                         const SparseVec &y, const SparseVec &z) {
  Accumulator acc(n);
  add_bracket(acc, c, x, y, z, Rat(1));
  return acc.dense();
}

} // namespace hom3::detail
