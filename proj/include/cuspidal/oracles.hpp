#pragma once

// Reference closed forms used by the self-test and the test suites. Nothing
// in the computation path includes this header; every formula here is an
// independent statement of a value the engine must reproduce.

#include <numeric>
#include <vector>

#include "cuspidal/cochain.hpp"
#include "cuspidal/divisors.hpp"

namespace cuspidal::oracle {

/// r(Delta_{T^i})(e(m+1,0)): -q^{i-m}(q-1) if m <= i, else (q^{m+1-i}-q-1)(q-1).
inline Rational phi_e0(std::int64_t q, int i, long m) {
  const Integer qm1(static_cast<long>(q - 1));
  if (m <= i) return -Rational(ipow(q, static_cast<unsigned long>(i - m)) * qm1);
  return Rational((ipow(q, static_cast<unsigned long>(m + 1 - i)) - q - 1) * qm1);
}

/// r(Delta_{T^i})(e(m+1,pi^m)), m >= 1: -q^{|i-m|}(q-1).
inline Rational phi_pi(std::int64_t q, int i, long m) {
  const long e = m <= i ? i - m : m - i;
  return -Rational(ipow(q, static_cast<unsigned long>(e)) * Integer(static_cast<long>(q - 1)));
}

/// Values of r(Delta) and r(Delta_n) on e_a = e(2,pi), e_b = e(2,0), e_c = e(1,0)
/// for a level n of degree delta > 0.
struct EdgeTable {
  Rational delta_a, delta_b, delta_c;
  Rational level_a, level_b, level_c;
};

inline EdgeTable edge_table(std::int64_t q, long delta) {
  const Integer qm1(static_cast<long>(q - 1));
  const Integer qd1 = ipow(q, static_cast<unsigned long>(delta - 1));
  return {Rational(-qm1 * q),
          Rational((Integer(static_cast<long>(q * q - q - 1))) * qm1),
          Rational(-qm1),
          Rational(-qm1 * qd1),
          Rational(-qm1 * qd1),
          Rational(-qm1 * qd1 * q)};
}

/// Exponents of g([0]-[inf]): (|p|, -1, 0, ..., 0, 1, -|p|) / (|p|^{r+1} - |p|^{r-1}), r >= 3.
inline std::vector<Rational> g_zero_infty(const ParamSpace& ps) {
  const int r = ps.r();
  const Integer& P = ps.abs_p();
  const Integer s = ipow(P, static_cast<unsigned long>(r + 1)) - ipow(P, static_cast<unsigned long>(r - 1));
  std::vector<Rational> v(static_cast<std::size_t>(r) + 1);
  v[0] = make_rational(P, s);
  v[1] = make_rational(-1, s);
  v[static_cast<std::size_t>(r - 1)] += make_rational(1, s);
  v[static_cast<std::size_t>(r)] = make_rational(-P, s);
  return v;
}

/// |p|^{r-1}(|p|^2-1) / ((q^2-1) gcd(deg p, q-1))
inline Integer zero_infty_lower_closed_form(const ParamSpace& ps) {
  const Integer& P = ps.abs_p();
  const auto g = std::gcd(static_cast<std::int64_t>(ps.deg_p()), ps.q() - 1);
  return exact_div(ipow(P, static_cast<unsigned long>(ps.r() - 1)) * (P * P - 1),
                   Integer(static_cast<long>((ps.q() * ps.q() - 1) * g)));
}

/// |p|^{r-1}(|p|^2-1)/(q^2-1)
inline Integer main_theorem_order(const ParamSpace& ps) {
  const Integer& P = ps.abs_p();
  return exact_div(ipow(P, static_cast<unsigned long>(ps.r() - 1)) * (P * P - 1),
                   Integer(static_cast<long>(ps.q() * ps.q() - 1)));
}

/// Integer exponents of g(W)^{(q^2-1)(q-1)} for the redundancy witnesses on X_0(T^r).
inline std::vector<Integer> witness_exponents(const ParamSpace& ps, Witness which) {
  const int r = ps.r();
  const Integer q(static_cast<long>(ps.q()));
  std::vector<Integer> w(static_cast<std::size_t>(r) + 1);
  auto at = [&](int d) -> Integer& { return w[static_cast<std::size_t>(d)]; };
  if (which == Witness::D1) {
    at(0) += -q;
    at(1) += 1;
    at(r - 2) += 1;
    at(r - 1) += -1;
    at(r) += q - 1;
    return w;
  }
  at(0) = q - 1;
  if (r == 4) {
    at(1) = -q;
    at(2) = q * q + 1;
    at(3) = -q * q;
  } else if (r == 5) {
    at(2) = -q;
    at(3) = q + 1;
    at(4) = -q;
  } else if (r == 6) {
    at(2) = -2 * q + 1;
    at(3) = q * q + q;
    at(4) = -q * q;
  } else if (r % 2 == 1) {
    at(2) += -q + 1;
    at((r - 1) / 2) += -1;
    at((r + 1) / 2) += q + 1;
    at((r + 3) / 2) += -q;
  } else {
    at(2) += -q + 1;
    at((r - 2) / 2) += -q;
    at(r / 2) += q * q + q;
    at((r + 2) / 2) += -q * q;
  }
  return w;
}

}  // namespace cuspidal::oracle
