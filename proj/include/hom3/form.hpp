#pragma once

// Bilinear forms given by their Gram matrix: form(x, y) = x^T M y.

#include "hom3/linalg.hpp"
#include "hom3/report.hpp"

namespace hom3 {

class BilForm {
public:
  enum class Kind { symmetric, skew };

  BilForm() = default;
  /// Throws InputError when the matrix is not square or does not have the
  /// stated symmetry.
  BilForm(Mat matrix, Kind kind);

  std::size_t dim() const { return matrix_.rows(); }
  const Mat &matrix() const { return matrix_; }
  Kind kind() const { return kind_; }
  bool nondegenerate() const { return rank(matrix_) == matrix_.rows(); }

  Rat operator()(const Vec &x, const Vec &y) const;
  const Rat &operator()(std::size_t i, std::size_t j) const { return matrix_(i, j); }

  friend bool operator==(const BilForm &, const BilForm &) = default;

private:
  Mat matrix_;
  Kind kind_ = Kind::symmetric;
};

const char *to_string(BilForm::Kind kind);
BilForm::Kind parse_kind(const std::string &text);

/// Passing report when the form has full rank, else a failed fact.
CheckReport check_nondegenerate(const BilForm &form);

/// (x+ξ, y+η) = <x,η> + <ξ,y> on L ⊕ L*, basis (e_1..e_n, e_1*..e_n*).
BilForm standard_form(std::size_t n);

/// ω(x+f, y+g) = <f,y> - <g,x> on L ⊕ L*.
BilForm canonical_phase_form(std::size_t n);

} // namespace hom3
