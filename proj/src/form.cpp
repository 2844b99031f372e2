#include "hom3/form.hpp"

namespace hom3 {

BilForm::BilForm(Mat matrix, Kind kind) : matrix_(std::move(matrix)), kind_(kind) {
  if (!matrix_.is_square())
    throw InputError("bilinear form matrix is " + std::to_string(matrix_.rows()) + "x" +
                     std::to_string(matrix_.cols()) + ", expected square");
  if (kind_ == Kind::symmetric && !matrix_.is_symmetric())
    throw InputError("bilinear form is tagged symmetric but its matrix is not");
  if (kind_ == Kind::skew && !matrix_.is_skew())
    throw InputError("bilinear form is tagged skew but its matrix is not");
}

Rat BilForm::operator()(const Vec &x, const Vec &y) const {
  return dot(x, matrix_.apply(y));
}

const char *to_string(BilForm::Kind kind) {
  return kind == BilForm::Kind::symmetric ? "symmetric" : "skew";
}

BilForm::Kind parse_kind(const std::string &text) {
  if (text == "symmetric")
    return BilForm::Kind::symmetric;
  if (text == "skew")
    return BilForm::Kind::skew;
  throw InputError("unknown form kind '" + text + "' (expected symmetric or skew)");
}

CheckReport check_nondegenerate(const BilForm &form) {
  const std::size_t r = rank(form.matrix());
  if (r == form.dim())
    return passed_fact("nondegenerate");
  return failed_fact("nondegenerate", "rank " + std::to_string(r) + " < " +
                                          std::to_string(form.dim()));
}

BilForm standard_form(std::size_t n) {
  Mat m(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, n + i) = 1;
    m(n + i, i) = 1;
  }
  return BilForm(std::move(m), BilForm::Kind::symmetric);
}

BilForm canonical_phase_form(std::size_t n) {
  Mat m(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, n + i) = -1;
    m(n + i, i) = 1;
  }
  return BilForm(std::move(m), BilForm::Kind::skew);
}

} // namespace hom3
