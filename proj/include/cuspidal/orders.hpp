#pragma once

// Order engine. A lower bound for ord(C) is the lcm of the denominators of
// r(g(C)) on a set of probe edges (kC principal forces r(g(kC)) integral).
// An upper bound comes from the maximal roots of Delta/Delta_{p^k} among
// modular units. The order is exact when the two agree.

#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "cuspidal/cochain.hpp"

namespace cuspidal {

/// lower | ord | upper; exact is set iff lower == upper.
struct OrderBound {
  Integer lower;
  Integer upper;
  std::optional<Integer> exact;
};

inline OrderBound combine_bounds(const Integer& lower, const Integer& upper) {
  if (lower < 1 || upper < 1) throw std::invalid_argument("order bounds must be positive");
  if (!divides(lower, upper))
    throw Error(Errc::InconsistentBounds, "lower bound " + lower.get_str() + " does not divide upper bound " + upper.get_str());
  OrderBound b{lower, upper, std::nullopt};
  if (lower == upper) b.exact = lower;
  return b;
}

/// Maximal root of Delta/Delta_{p^k} in O(Omega)^*.
inline Integer max_root_analytic(const ParamSpace& ps, long k) {
  if (k < 1) throw std::invalid_argument("max_root_analytic needs k >= 1");
  const Integer qm1(static_cast<long>(ps.q() - 1));
  if ((k * ps.deg_p()) % 2 == 0) return qm1 * (qm1 * (qm1 + 2));  // (q-1)(q^2-1)
  return qm1 * qm1;
}

/// Maximal root of Delta/Delta_{p^k} in the modular units on X_0(p^k).
inline Integer max_root_units(const ParamSpace& ps, long k) {
  if (k < 1) throw std::invalid_argument("max_root_units needs k >= 1");
  const auto q = ps.q();
  const long deg = k * ps.deg_p();
  if (deg % 2 == 0) return Integer(static_cast<long>(gcd3(q - 1, k, deg / 2))) * Integer(static_cast<long>(q * q - 1));
  return Integer(static_cast<long>(gcd3(q - 1, k, deg))) * Integer(static_cast<long>(q - 1));
}

/// Every element of C(p^r) has order dividing |p|^{r+1} - |p|^{r-1}.
inline Integer uniform_upper(const ParamSpace& ps) {
  const auto r = static_cast<unsigned long>(ps.r());
  return ipow(ps.abs_p(), r + 1) - ipow(ps.abs_p(), r - 1);
}

namespace detail {
inline bool q_even_or_deg_odd(const ParamSpace& ps) { return ps.q() % 2 == 0 || ps.deg_p() % 2 == 1; }
}  // namespace detail

inline Integer upper_zero_infty(const ParamSpace& ps) {
  if (ps.r() < 3) throw Error(Errc::InvalidR, "upper_zero_infty needs r >= 3, got r=" + std::to_string(ps.r()));
  const Integer& P = ps.abs_p();
  const Integer num = ipow(P, static_cast<unsigned long>(ps.r() - 1)) * (P * P - 1);
  Integer den(static_cast<long>(ps.q() * ps.q() - 1));
  if (!detail::q_even_or_deg_odd(ps)) den *= 2;
  return exact_div(num, den);
}

/// Upper bound for the order of C given g(C)^S = prod of the factors in F.
/// If each factor (Delta_{p^a}/Delta_{p^b})^e has a maximal N_f-th root, the
/// product has an M-th root with M = gcd_f(|e| N_f), so ord(C) | S/gcd(S, M).
/// N_f is taken as max_root_units(|b-a|) for shifted quotients as well.
inline Integer upper_from_factorization(const ParamSpace& ps, const Integer& scale, const QuotientFactorization& f) {
  Integer m = 0;
  for (const auto& fac : f.factors) {
    if (fac.num == fac.den || fac.exponent == 0) continue;
    Integer e = fac.exponent;
    if (e < 0) e = -e;
    m = igcd(m, e * max_root_units(ps, std::abs(fac.num - fac.den)));
  }
  if (m == 0) return 1;
  return exact_div(scale, igcd(scale, m));
}

/// lcm over the probes of the denominators of r(E)(probe).
inline Integer lower_multiple(const EtaQuotient& e, const std::vector<TreeEdge>& probes) {
  if (probes.empty()) throw std::invalid_argument("lower_multiple needs at least one probe edge");
  Integer l = 1;
  for (const auto& edge : probes) l = ilcm(l, denominator_of(eval_etaquotient(e, edge)));
  return l;
}

/// e(2,pi) followed by e(k,0) for k = 1..r*deg_p+1.
inline std::vector<TreeEdge> zero_infty_probes(const ParamSpace& ps) {
  std::vector<TreeEdge> probes{edge_a};
  const long kmax = static_cast<long>(ps.r()) * ps.deg_p() + 1;
  for (long k = 1; k <= kmax; ++k) probes.push_back(TreeEdge::zero(k));
  return probes;
}

/// Closed forms for r = 1, 2 (they are not specialisations of the r >= 3 bound).
inline Integer order_zero_infty_small_r(const ParamSpace& ps) {
  const Integer& P = ps.abs_p();
  const auto q = ps.q();
  if (ps.r() == 1) {
    const long den = ps.deg_p() % 2 == 1 ? q - 1 : q * q - 1;
    return exact_div(P - 1, Integer(den));
  }
  if (ps.r() == 2) {
    Integer den(static_cast<long>(q * q - 1));
    if (!detail::q_even_or_deg_odd(ps)) den *= 2;
    return exact_div(P * P - 1, den);
  }
  throw Error(Errc::InvalidR, "closed form only for r in {1,2}");
}

inline OrderBound order_zero_infty(const ParamSpace& ps, const std::vector<TreeEdge>& probes) {
  if (ps.r() <= 2) {
    const Integer o = order_zero_infty_small_r(ps);
    return combine_bounds(o, o);
  }
  const Integer lower = lower_multiple(g_map(zero_minus_infinity(ps)), probes);
  return combine_bounds(lower, upper_zero_infty(ps));
}

inline OrderBound order_zero_infty(const ParamSpace& ps) { return order_zero_infty(ps, zero_infty_probes(ps)); }

}  // namespace cuspidal
