#pragma once

// Rational cuspidal divisors stored by height class: coeffs[i] is the
// coefficient of (P_{p^i}), the sum of all cusps of height p^i.

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cuspidal/params.hpp"

namespace cuspidal {

class CuspidalDivisor {
 public:
  explicit CuspidalDivisor(ParamSpace ps) : ps_(std::move(ps)), coeffs_(static_cast<std::size_t>(ps_.r()) + 1) {}

  CuspidalDivisor(ParamSpace ps, std::vector<Integer> coeffs) : ps_(std::move(ps)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != static_cast<std::size_t>(ps_.r()) + 1)
      throw Error(Errc::IndexOutOfRange, "divisor needs r+1 = " + std::to_string(ps_.r() + 1) + " coefficients, got " +
                                             std::to_string(coeffs_.size()));
  }

  const ParamSpace& params() const noexcept { return ps_; }
  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
  const Integer& operator[](std::size_t i) const { return coeffs_.at(i); }
  std::size_t size() const noexcept { return coeffs_.size(); }

  CuspidalDivisor& operator+=(const CuspidalDivisor& o) {
    check_same(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  CuspidalDivisor& operator-=(const CuspidalDivisor& o) {
    check_same(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  CuspidalDivisor& operator*=(const Integer& k) {
    for (auto& c : coeffs_) c *= k;
    return *this;
  }

  friend CuspidalDivisor operator+(CuspidalDivisor a, const CuspidalDivisor& b) { return a += b; }
  friend CuspidalDivisor operator-(CuspidalDivisor a, const CuspidalDivisor& b) { return a -= b; }
  friend CuspidalDivisor operator*(const Integer& k, CuspidalDivisor a) { return a *= k; }
  friend bool operator==(const CuspidalDivisor& a, const CuspidalDivisor& b) {
    return a.ps_ == b.ps_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void check_same(const CuspidalDivisor& o) const {
    if (!(ps_ == o.ps_)) throw std::invalid_argument("divisors over different levels");
  }

  ParamSpace ps_;
  std::vector<Integer> coeffs_;
};

/// deg (P_{p^i}): 1 at i in {0, r}, else |p|^{m-1}(|p|-1)/(q-1) with m = min(i, r-i).
inline Integer deg_Pd(const ParamSpace& ps, int i) {
  if (i < 0 || i > ps.r())
    throw Error(Errc::IndexOutOfRange, "height index " + std::to_string(i) + " outside 0.." + std::to_string(ps.r()));
  if (i == 0 || i == ps.r()) return 1;
  const int m = std::min(i, ps.r() - i);
  const Integer& P = ps.abs_p();
  return exact_div(ipow(P, static_cast<unsigned long>(m - 1)) * (P - 1), Integer(static_cast<long>(ps.q() - 1)));
}

inline Integer divisor_degree(const CuspidalDivisor& d) {
  Integer deg = 0;
  for (int i = 0; i <= d.params().r(); ++i) deg += d[static_cast<std::size_t>(i)] * deg_Pd(d.params(), i);
  return deg;
}

/// Single height class (P_{p^i}).
inline CuspidalDivisor height_class(const ParamSpace& ps, int i) {
  if (i < 0 || i > ps.r()) throw Error(Errc::IndexOutOfRange, "height index " + std::to_string(i));
  std::vector<Integer> c(static_cast<std::size_t>(ps.r()) + 1);
  c[static_cast<std::size_t>(i)] = 1;
  return CuspidalDivisor(ps, std::move(c));
}

/// C_i = (P_{p^i}) - deg(P_{p^i}) [inf], 0 <= i < r.
inline CuspidalDivisor generator_Ci(const ParamSpace& ps, int i) {
  if (i < 0 || i >= ps.r())
    throw Error(Errc::IndexOutOfRange, "generator index " + std::to_string(i) + " outside 0.." + std::to_string(ps.r() - 1));
  std::vector<Integer> c(static_cast<std::size_t>(ps.r()) + 1);
  c[static_cast<std::size_t>(i)] += 1;
  c[static_cast<std::size_t>(ps.r())] -= deg_Pd(ps, i);
  return CuspidalDivisor(ps, std::move(c));
}

/// [0] - [inf]; equal to C_0.
inline CuspidalDivisor zero_minus_infinity(const ParamSpace& ps) { return generator_Ci(ps, 0); }

/// Integer combination sum k_j * C_{i_j}, given as (k_j, i_j) pairs.
inline CuspidalDivisor combine_generators(const ParamSpace& ps, std::initializer_list<std::pair<Integer, int>> terms) {
  CuspidalDivisor out(ps);
  for (const auto& [k, i] : terms) out += k * generator_Ci(ps, i);
  return out;
}

enum class Witness { D1, DrMinus1 };

/// The divisors D_1 and D_{r-1} whose (q-1)-multiples are principal on X_0(T^r),
/// expanded into a flat coefficient vector. T-level only, r >= 4.
inline CuspidalDivisor redundancy_witness(const ParamSpace& ps, Witness which) {
  require_t_level(ps, "redundancy_witness");
  const int r = ps.r();
  if (r < 4) throw Error(Errc::InvalidR, "redundancy_witness needs r >= 4, got r=" + std::to_string(r));
  const auto q = ps.q();
  const int half = r / 2;
  const int m = (r - 1) / 2;
  auto C = [&](int i) { return generator_Ci(ps, i); };
  auto qp = [&](long e) { return ipow(q, static_cast<unsigned long>(e)); };

  if (which == Witness::D1) {
    Integer geo = 0;
    for (int i = 0; i <= r - 2; ++i) geo += qp(i);
    CuspidalDivisor d = C(1) - geo * C(0);
    for (int i = 2; i <= half; ++i) d += C(i);
    for (int i = half + 1; i <= r - 2; ++i) d += qp(2 * i - r) * C(i);
    return d;
  }

  CuspidalDivisor d = C(r - 1) + qp(r - 2) * C(0);
  for (int i = 2; i <= m; ++i) d -= (qp(r - 2 * i + 1) - qp(r - 2 * i)) * C(i);
  for (int i = m + 1; i <= r - 2; ++i) {
    const Integer k = qp(half) - qp(i - m) + 1;
    d += k * (C(i) - Integer(static_cast<long>(q)) * C(i + 1));
  }
  return d;
}

}  // namespace cuspidal
