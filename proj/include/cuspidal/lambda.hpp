#pragma once

// The matrix Lambda(n) relating the divisors of Delta_{p^i} to the height
// classes (P_{p^j}), its closed-form inverse, and an elimination oracle.
//
// Orientation: the transpose is stored row-major, row i = div(Delta_{p^i})
// in the (P_{p^j}) basis. The inverse acts on column vectors of divisor
// coefficients, a -> Lambda^{-1} a.

#include <algorithm>
#include <cstdlib>

#include "cuspidal/matrix.hpp"
#include "cuspidal/params.hpp"

namespace cuspidal {

enum class LambdaKind { Transpose, Inverse };

class LambdaMatrix {
 public:
  LambdaMatrix(ParamSpace ps, LambdaKind kind, Matrix<Rational> entries)
      : ps_(std::move(ps)), kind_(kind), entries_(std::move(entries)) {}

  const ParamSpace& params() const noexcept { return ps_; }
  LambdaKind kind() const noexcept { return kind_; }
  const Matrix<Rational>& entries() const noexcept { return entries_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }
  std::size_t size() const noexcept { return entries_.rows(); }

 private:
  ParamSpace ps_;
  LambdaKind kind_;
  Matrix<Rational> entries_;
};

/// (|p|^{r+1} - |p|^{r-1})(q-1): clears every denominator of Lambda^{-1}.
inline Integer lambda_inverse_scale(const ParamSpace& ps) {
  const Integer& P = ps.abs_p();
  const auto r = static_cast<unsigned long>(ps.r());
  return (ipow(P, r + 1) - ipow(P, r - 1)) * Integer(static_cast<long>(ps.q() - 1));
}

namespace detail {

inline Integer lambda_transpose_entry(const ParamSpace& ps, int i, int j) {
  const int r = ps.r();
  const Integer& P = ps.abs_p();
  if (j == 0) return ipow(P, static_cast<unsigned long>(r - i));
  if (j == r) return ipow(P, static_cast<unsigned long>(i));
  // Exponent uses m(j) = min(j, r-j); this matches the displayed matrix and
  // the ord formulas for Delta and Delta_n.
  const int m = std::min(j, r - j);
  return ipow(P, static_cast<unsigned long>(r - m - std::abs(i - j))) * Integer(static_cast<long>(ps.q() - 1));
}

// Case order matters for r = 1, where (1,0) and (r-1,r) fall on the
// positions of (r,0) and (0,r).
inline Integer scaled_inverse_entry(const ParamSpace& ps, int i, int j) {
  const int r = ps.r();
  const Integer& P = ps.abs_p();
  const Integer qm1(static_cast<long>(ps.q() - 1));
  if ((i == 0 && j == 0) || (i == r && j == r)) return P * qm1;
  if ((i == 1 && j == 0) || (i == r - 1 && j == r)) return -qm1;
  const int m = std::min(j, r - j);
  if (i == j && i >= 1 && i <= r - 1) return ipow(P, static_cast<unsigned long>(m - 1)) * (P * P + 1);
  if (std::abs(i - j) == 1 && j != 0 && j != r) return -ipow(P, static_cast<unsigned long>(m));
  return 0;
}

}  // namespace detail

inline LambdaMatrix build_lambda_transpose(const ParamSpace& ps) {
  const auto n = static_cast<std::size_t>(ps.r()) + 1;
  Matrix<Rational> m(n, n);
  for (int i = 0; i <= ps.r(); ++i)
    for (int j = 0; j <= ps.r(); ++j) m(i, j) = Rational(detail::lambda_transpose_entry(ps, i, j));
  return LambdaMatrix(ps, LambdaKind::Transpose, std::move(m));
}

/// Integer matrix S = (|p|^{r+1} - |p|^{r-1})(q-1) * Lambda^{-1}. Tridiagonal.
inline Matrix<Integer> scaled_lambda_inverse(const ParamSpace& ps) {
  const auto n = static_cast<std::size_t>(ps.r()) + 1;
  Matrix<Integer> s(n, n);
  for (int i = 0; i <= ps.r(); ++i)
    for (int j = 0; j <= ps.r(); ++j) s(i, j) = detail::scaled_inverse_entry(ps, i, j);
  return s;
}

/// Closed-form Lambda^{-1}. The identity Lambda^{-1} * Lambda = I is checked
/// on every construction.
inline LambdaMatrix build_lambda_inverse(const ParamSpace& ps) {
  const auto s = scaled_lambda_inverse(ps);
  const Integer scale = lambda_inverse_scale(ps);
  Matrix<Rational> inv(s.rows(), s.cols());
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < s.cols(); ++j) inv(i, j) = make_rational(s(i, j), scale);

  const auto lambda = build_lambda_transpose(ps).entries().transposed();
  if (!(inv * lambda == Matrix<Rational>::identity(inv.rows())))
    throw Error(Errc::CertificationFailure, "closed-form Lambda^{-1} is not an inverse at " + ps.to_string());
  return LambdaMatrix(ps, LambdaKind::Inverse, std::move(inv));
}

/// Inverse of Lambda = (M^T)^T by Gauss-Jordan elimination, independent of
/// the closed form. Input must be of kind Transpose.
inline LambdaMatrix invert_oracle(const LambdaMatrix& m) {
  if (m.kind() != LambdaKind::Transpose) throw std::invalid_argument("invert_oracle expects a Lambda^T matrix");
  return LambdaMatrix(m.params(), LambdaKind::Inverse, gauss_jordan_inverse(m.entries().transposed()));
}

}  // namespace cuspidal
