#pragma once

// Values of the van der Put cochains r(Delta_{p^i}) on the two edge shapes
// e(k,0) and e(k,pi^{k-1}) of the Bruhat-Tits tree, extended linearly to
// Delta-quotients.

#include <string>

#include "cuspidal/etaquot.hpp"

namespace cuspidal {

enum class EdgeShape { Zero, PiPowKminus1 };

/// Edge pointing to infinity with origin v(k,u), u = 0 or u = pi^{k-1}.
struct TreeEdge {
  long k;
  EdgeShape shape;

  static constexpr TreeEdge zero(long k) { return {k, EdgeShape::Zero}; }
  static constexpr TreeEdge pi(long k) { return {k, EdgeShape::PiPowKminus1}; }

  std::string to_string() const {
    if (shape == EdgeShape::Zero) return "e(" + std::to_string(k) + ",0)";
    if (k == 2) return "e(2,pi)";
    return "e(" + std::to_string(k) + ",pi^" + std::to_string(k - 1) + ")";
  }

  friend bool operator==(const TreeEdge&, const TreeEdge&) = default;
};

inline constexpr TreeEdge edge_a = TreeEdge::pi(2);    // e(2,pi)
inline constexpr TreeEdge edge_b = TreeEdge::zero(2);  // e(2,0)
inline constexpr TreeEdge edge_c = TreeEdge::zero(1);  // e(1,0)

/// r(Delta)(e(m+1,0)): -q^{-m}(q-1) for m <= 0, (q^{m+1}-q-1)(q-1) otherwise.
inline Rational eval_delta_e_k0(const ParamSpace& ps, long m) {
  const auto q = ps.q();
  const Integer qm1(static_cast<long>(q - 1));
  if (m <= 0) return -Rational(ipow(q, static_cast<unsigned long>(-m)) * qm1);
  return Rational((ipow(q, static_cast<unsigned long>(m + 1)) - q - 1) * qm1);
}

namespace detail {
// r(Delta_{p^i})(e(k,0)) = r(Delta)(e(k - i*deg p, 0)).
inline Rational eval_shifted_e0(const ParamSpace& ps, int i, long k) {
  const long shift = static_cast<long>(i) * ps.deg_p();
  return eval_delta_e_k0(ps, k - 1 - shift);
}
}  // namespace detail

/// r(Delta_{p^i})(edge). Zero-shaped edges use the degree shift at any deg p.
/// Pi-shaped edges use the harmonicity recursion
///   (q-1) phi(e(m+1,pi^m)) = phi(e(m,0)) - phi(e(m+1,0)),  m >= 1,
/// and are served for deg p >= 2 only at e(2,pi).
inline Rational eval_delta_pi(const ParamSpace& ps, int i, const TreeEdge& edge) {
  if (i < 0 || i > ps.r())
    throw Error(Errc::IndexOutOfRange, "height index " + std::to_string(i) + " outside 0.." + std::to_string(ps.r()));
  if (edge.shape == EdgeShape::Zero) return detail::eval_shifted_e0(ps, i, edge.k);

  if (edge.k < 2) throw Error(Errc::UnsupportedEdge, edge.to_string() + " is not a supported pi-edge (need k >= 2)");
  if (!ps.t_level() && edge.k != 2)
    throw Error(Errc::UnsupportedEdge, edge.to_string() + " needs deg_p = 1 (only e(2,pi) is available for deg_p > 1)");
  const Rational diff = detail::eval_shifted_e0(ps, i, edge.k - 1) - detail::eval_shifted_e0(ps, i, edge.k);
  return diff / Rational(static_cast<long>(ps.q() - 1));
}

/// r(E)(edge) = sum_i e_i r(Delta_{p^i})(edge). Heights with exponent zero are skipped.
inline Rational eval_etaquotient(const EtaQuotient& e, const TreeEdge& edge) {
  Rational acc = 0;
  for (int i = 0; i <= e.params().r(); ++i) {
    const auto& x = e[static_cast<std::size_t>(i)];
    if (x == 0) continue;
    acc += x * eval_delta_pi(e.params(), i, edge);
  }
  return acc;
}

/// (q-1) phi(e(m+1,pi^m)) + phi(e(m+1,0)) == phi(e(m,0)) for phi = r(Delta_{T^i}).
inline bool harmonicity_check(const ParamSpace& ps, int i, long m) {
  require_t_level(ps, "harmonicity_check");
  if (m < 1) throw Error(Errc::UnsupportedEdge, "harmonicity_check needs m >= 1");
  const Rational lhs = Rational(static_cast<long>(ps.q() - 1)) * eval_delta_pi(ps, i, TreeEdge::pi(m + 1)) +
                       eval_delta_pi(ps, i, TreeEdge::zero(m + 1));
  return lhs == eval_delta_pi(ps, i, TreeEdge::zero(m));
}

}  // namespace cuspidal
