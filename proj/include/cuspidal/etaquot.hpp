#pragma once

// Formal Delta-quotients prod_i Delta_{p^i}^{e_i} with rational exponents, and
// the map g sending a degree-0 cuspidal divisor to the quotient whose divisor
// it is.

#include <string>
#include <vector>

#include "cuspidal/divisors.hpp"
#include "cuspidal/lambda.hpp"

namespace cuspidal {

class EtaQuotient {
 public:
  explicit EtaQuotient(ParamSpace ps) : ps_(std::move(ps)), exps_(static_cast<std::size_t>(ps_.r()) + 1) {}

  EtaQuotient(ParamSpace ps, std::vector<Rational> exps) : ps_(std::move(ps)), exps_(std::move(exps)) {
    if (exps_.size() != static_cast<std::size_t>(ps_.r()) + 1)
      throw Error(Errc::IndexOutOfRange, "quotient needs r+1 exponents, got " + std::to_string(exps_.size()));
  }

  const ParamSpace& params() const noexcept { return ps_; }
  const std::vector<Rational>& exponents() const noexcept { return exps_; }
  const Rational& operator[](std::size_t i) const { return exps_.at(i); }
  std::size_t size() const noexcept { return exps_.size(); }

  bool is_integral() const {
    for (const auto& e : exps_)
      if (e.get_den() != 1) return false;
    return true;
  }

  Rational exponent_sum() const {
    Rational s = 0;
    for (const auto& e : exps_) s += e;
    return s;
  }

  EtaQuotient& operator+=(const EtaQuotient& o) {
    if (!(ps_ == o.ps_)) throw std::invalid_argument("quotients over different levels");
    for (std::size_t i = 0; i < exps_.size(); ++i) exps_[i] += o.exps_[i];
    return *this;
  }
  friend EtaQuotient operator+(EtaQuotient a, const EtaQuotient& b) { return a += b; }
  friend bool operator==(const EtaQuotient& a, const EtaQuotient& b) { return a.ps_ == b.ps_ && a.exps_ == b.exps_; }

 private:
  ParamSpace ps_;
  std::vector<Rational> exps_;
};

/// g(D): exponents = Lambda^{-1} * coeffs(D). Requires deg D = 0.
inline EtaQuotient g_map(const CuspidalDivisor& d) {
  const auto& ps = d.params();
  if (const Integer deg = divisor_degree(d); deg != 0)
    throw Error(Errc::NonZeroDegree, "divisor has degree " + deg.get_str());
  const auto s = scaled_lambda_inverse(ps);
  const Integer scale = lambda_inverse_scale(ps);
  std::vector<Rational> exps(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    Integer acc = 0;
    for (std::size_t j = 0; j < d.size(); ++j) acc += s(i, j) * d[j];
    exps[i] = make_rational(acc, scale);
  }
  return EtaQuotient(ps, std::move(exps));
}

/// Coefficients of div(E) in the (P_{p^j}) basis: Lambda * exponents.
inline std::vector<Rational> divisor_of(const EtaQuotient& e) {
  return build_lambda_transpose(e.params()).entries().transposed() * e.exponents();
}

/// g(kC) = g(C)^k.
inline EtaQuotient scale(const EtaQuotient& e, const Integer& k) {
  auto exps = e.exponents();
  for (auto& x : exps) x *= Rational(k);
  return EtaQuotient(e.params(), std::move(exps));
}

/// Least k >= 1 with every exponent of E^k integral.
inline Integer min_integral_multiple(const EtaQuotient& e) {
  Integer l = 1;
  for (const auto& x : e.exponents()) l = ilcm(l, x.get_den());
  return l;
}

/// (Delta_{p^num} / Delta_{p^den})^exponent
struct QuotientFactor {
  int num;
  int den;
  Integer exponent;
};

struct QuotientFactorization {
  std::vector<QuotientFactor> factors;

  std::vector<Integer> expand(int r) const {
    std::vector<Integer> v(static_cast<std::size_t>(r) + 1);
    for (const auto& f : factors) {
      if (f.num < 0 || f.num > r || f.den < 0 || f.den > r)
        throw Error(Errc::IndexOutOfRange, "factor height outside 0.." + std::to_string(r));
      v[static_cast<std::size_t>(f.num)] += f.exponent;
      v[static_cast<std::size_t>(f.den)] -= f.exponent;
    }
    return v;
  }
};

/// True iff expanding F reproduces the exponent vector of the integral quotient E.
inline bool verify_factorization(const EtaQuotient& e, const QuotientFactorization& f) {
  if (!e.is_integral()) throw std::invalid_argument("verify_factorization expects an integral quotient");
  const auto v = f.expand(e.params().r());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (Rational(v[i]) != e[i]) return false;
  return true;
}

/// g([0]-[inf])^{|p|^{r+1}-|p|^{r-1}} = Delta^{|p|} Delta_p^{-1} Delta_{p^{r-1}} Delta_{p^r}^{-|p|}, r >= 3.
inline EtaQuotient zero_infty_integral_quotient(const ParamSpace& ps) {
  const int r = ps.r();
  if (r < 3) throw Error(Errc::InvalidR, "needs r >= 3, got r=" + std::to_string(r));
  std::vector<Rational> v(static_cast<std::size_t>(r) + 1);
  v[0] = Rational(ps.abs_p());
  v[1] = -1;
  v[static_cast<std::size_t>(r - 1)] += 1;
  v[static_cast<std::size_t>(r)] = Rational(-ps.abs_p());
  return EtaQuotient(ps, std::move(v));
}

namespace detail {
inline QuotientFactorization checked(const ParamSpace& ps, QuotientFactorization f, const EtaQuotient& target,
                                     const char* name) {
  if (!verify_factorization(target, f))
    throw Error(Errc::CertificationFailure, std::string(name) + " does not expand to its target at " + ps.to_string());
  return f;
}
}  // namespace detail

/// (Delta/Delta_{p^r})^{|p|} (Delta_{p^{r-1}}/Delta_p)
inline QuotientFactorization zero_infty_factorization(const ParamSpace& ps) {
  const int r = ps.r();
  QuotientFactorization f{{{0, r, ps.abs_p()}, {r - 1, 1, 1}}};
  return detail::checked(ps, std::move(f), zero_infty_integral_quotient(ps), "zero_infty_factorization");
}

/// Same quotient regrouped so that every factor with an odd shift has exponent 1:
///   r even: (Delta/Delta_{p^r})^{|p|+1} (Delta_{p^r}/Delta) (Delta_{p^{r-1}}/Delta_p)
///   r odd:  (Delta/Delta_{p^r})^{|p|+1} (Delta_{p^r}/Delta_p) (Delta_{p^{r-1}}/Delta)
inline QuotientFactorization zero_infty_root_factorization(const ParamSpace& ps) {
  const int r = ps.r();
  const Integer P1 = ps.abs_p() + 1;
  QuotientFactorization f = (r % 2 == 0) ? QuotientFactorization{{{0, r, P1}, {r, 0, 1}, {r - 1, 1, 1}}}
                                         : QuotientFactorization{{{0, r, P1}, {r, 1, 1}, {r - 1, 0, 1}}};
  return detail::checked(ps, std::move(f), zero_infty_integral_quotient(ps), "zero_infty_root_factorization");
}

}  // namespace cuspidal
