#pragma once

// Cyclic decomposition of the prime-to-(q-1) part of C(T^r), r >= 3:
//
//   <C_0> + sum_{i=2}^{m} <(q-1)C_i> + sum_{i=m+1}^{r-2} <(q-1)(C_i - qC_{i+1})>,
//   m = floor((r-1)/2),
//
// with every order certified by two computable facts: the denominator of the
// diagonal entry of the cochain evaluation matrix (lower bound, and the
// matrix is integral below the diagonal) equals the root-lemma upper bound
// with its (q-1) factor removed.

#include <string>
#include <vector>

#include "cuspidal/orders.hpp"

namespace cuspidal {

namespace detail {

inline void require_structure_level(const ParamSpace& ps, int min_r, const char* what) {
  require_t_level(ps, what);
  if (ps.r() < min_r)
    throw Error(Errc::InvalidR, std::string(what) + " needs r >= " + std::to_string(min_r) + ", got r=" + std::to_string(ps.r()));
}

inline Integer qpow(const ParamSpace& ps, long e) { return ipow(ps.q(), static_cast<unsigned long>(e)); }

inline Integer qi(const ParamSpace& ps) { return Integer(static_cast<long>(ps.q())); }

}  // namespace detail

/// q^{r-1}(q^2-1)(q-1): the exponent scaling that makes g(C_i) integral on X_0(T^r).
inline Integer structure_scale(const ParamSpace& ps) {
  const Integer q = detail::qi(ps);
  return detail::qpow(ps, ps.r() - 1) * (q * q - 1) * (q - 1);
}

/// Integral exponents of g(C_i)^{q^{r-1}(q^2-1)(q-1)}, 1 <= i <= r-1, read off
/// the three closed-form cases (1 <= i < r-2, i = r-2, i = r-1).
inline EtaQuotient scaled_generator_exponents(const ParamSpace& ps, int i) {
  detail::require_structure_level(ps, 4, "scaled_generator_exponents");
  const int r = ps.r();
  if (i < 1 || i > r - 1) throw Error(Errc::IndexOutOfRange, "scaled_generator_exponents index " + std::to_string(i));
  const Integer q = detail::qi(ps);
  std::vector<Rational> v(static_cast<std::size_t>(r) + 1);
  auto at = [&](int d) -> Rational& { return v[static_cast<std::size_t>(d)]; };
  if (i < r - 2) {
    const int m = std::min(i, r - i);
    const Integer qm = detail::qpow(ps, m);
    const Integer qm1 = detail::qpow(ps, m - 1);
    at(i - 1) += Rational(-qm);
    at(i + 1) += Rational(-qm);
    at(i) += Rational(qm1 * (q * q + 1));
    at(r - 1) += Rational(qm1 * (q - 1));
    at(r) += Rational(-qm * (q - 1));
  } else if (i == r - 2) {
    at(r - 3) = Rational(-q * q);
    at(r - 2) = Rational(q * q * q + q);
    at(r - 1) = Rational(-q);
    at(r) = Rational(-q * q * q + q * q);
  } else {
    at(r - 2) = Rational(-q);
    at(r - 1) = Rational(q * q + q);
    at(r) = Rational(-q * q);
  }
  return EtaQuotient(ps, std::move(v));
}

/// Regrouping of scaled_generator_exponents(i) into Delta-quotients chosen so that
/// the large exponents sit on even shifts.
inline QuotientFactorization generator_factorization(const ParamSpace& ps, int i) {
  const auto target = scaled_generator_exponents(ps, i);
  const int r = ps.r();
  const Integer q = detail::qi(ps);
  QuotientFactorization f;
  if (i < r - 2) {
    const int m = std::min(i, r - i);
    const Integer qm = detail::qpow(ps, m);
    const Integer qm1 = detail::qpow(ps, m - 1);
    if ((r - i) % 2 == 0) {
      f.factors = {{r - 1, i - 1, qm}, {r - 1, i + 1, qm}, {i, r, qm1 * (q * q + 1)}, {r, r - 1, qm1 * (q + 1)}};
    } else {
      // last exponent is q^m (q+1); q^{m-1}(q+1) would not expand to the target
      f.factors = {{r, i - 1, qm}, {r, i + 1, qm}, {i, r - 1, qm1 * (q * q + 1)}, {r - 1, r, qm * (q + 1)}};
    }
  } else if (i == r - 2) {
    f.factors = {{r - 1, r - 3, q * q}, {r - 2, r, q * (q * q + 1)}, {r, r - 1, q * (q + 1)}};
  } else {
    f.factors = {{r, r - 2, q}, {r - 1, r, q * (q + 1)}};
  }
  return detail::checked(ps, std::move(f), target, "generator_factorization");
}

/// C_i - q C_{i+1}
inline CuspidalDivisor paired_generator(const ParamSpace& ps, int i) {
  return generator_Ci(ps, i) - detail::qi(ps) * generator_Ci(ps, i + 1);
}

/// Factorization of g(C_i - qC_{i+1})^{q^{r-1}(q^2-1)(q-1)}, m+1 <= i <= r-2:
///   (D_{i+1}/D_{i-1})^{q^{r-i}} (D_i/D_{i+2})^{q^{r-i-1}(q^2+q+1)} (D_{i+2}/D_{i+1})^{q^{r-i-1}(q+1)^2}
inline QuotientFactorization paired_factorization(const ParamSpace& ps, int i) {
  detail::require_structure_level(ps, 4, "paired_factorization");
  const int r = ps.r();
  const int m = (r - 1) / 2;
  if (i < m + 1 || i > r - 2) throw Error(Errc::IndexOutOfRange, "paired_factorization index " + std::to_string(i));
  const Integer q = detail::qi(ps);
  const Integer a = detail::qpow(ps, r - i);
  const Integer b = detail::qpow(ps, r - i - 1) * (q * q + q + 1);
  QuotientFactorization f{{{i + 1, i - 1, a}, {i, i + 2, b}, {i + 2, i + 1, a + b}}};
  const auto target = scale(g_map(paired_generator(ps, i)), structure_scale(ps));
  return detail::checked(ps, std::move(f), target, "paired_factorization");
}

struct UpperBoundEntry {
  std::string label;
  CuspidalDivisor generator;
  Integer bound;  // ord(generator) divides this
};

/// Root-lemma divisibility bounds used by the structure theorem:
///   ord(C_0) | q^{r-1}
///   ord(C_i) | q^{r-m}(q-1), 1 <= i < r-2, m = min(i, r-i)
///   ord(C_{r-2}), ord(C_{r-1}) | q^{r-2}(q-1)
///   ord(C_i - qC_{i+1}) | q^i(q-1), floor((r-1)/2)+1 <= i <= r-2
/// For r = 3 only the C_0 entry is produced.
inline std::vector<UpperBoundEntry> structure_upper_bounds(const ParamSpace& ps) {
  detail::require_structure_level(ps, 3, "structure_upper_bounds");
  const int r = ps.r();
  const Integer qm1 = detail::qi(ps) - 1;
  std::vector<UpperBoundEntry> out;
  out.push_back({"C0", generator_Ci(ps, 0), detail::qpow(ps, r - 1)});
  if (r < 4) return out;
  for (int i = 1; i <= r - 1; ++i) {
    const Integer b = (i < r - 2) ? detail::qpow(ps, r - std::min(i, r - i)) * qm1 : detail::qpow(ps, r - 2) * qm1;
    out.push_back({"C" + std::to_string(i), generator_Ci(ps, i), b});
  }
  for (int i = (r - 1) / 2 + 1; i <= r - 2; ++i)
    out.push_back({"C" + std::to_string(i) + "-qC" + std::to_string(i + 1), paired_generator(ps, i),
                   detail::qpow(ps, i) * qm1});
  return out;
}

struct EvaluationMatrix {
  ParamSpace params;
  Matrix<Rational> entries;  // entries(i,j) = r(g(row i))(e(j+2,0))
  std::vector<std::string> row_labels;
  std::vector<CuspidalDivisor> row_generators;
  std::vector<TreeEdge> columns;

  bool strictly_lower_integral() const {
    for (std::size_t i = 0; i < entries.rows(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (!is_integral(entries(i, j))) return false;
    return true;
  }
};

/// (r-2)x(r-2) matrix of cochain values. Rows: C_0; C_{i+1} for 1 <= i < m;
/// C_{i+1} - qC_{i+2} for m <= i <= r-3. Columns: e(j+2,0).
inline EvaluationMatrix evaluation_matrix(const ParamSpace& ps) {
  detail::require_structure_level(ps, 3, "evaluation_matrix");
  const int r = ps.r();
  const int m = (r - 1) / 2;
  const auto n = static_cast<std::size_t>(r - 2);
  EvaluationMatrix em{ps, Matrix<Rational>(n, n), {}, {}, {}};
  for (int j = 0; j < r - 2; ++j) em.columns.push_back(TreeEdge::zero(j + 2));
  for (int i = 0; i < r - 2; ++i) {
    if (i == 0) {
      em.row_labels.push_back("C0");
      em.row_generators.push_back(generator_Ci(ps, 0));
    } else if (i < m) {
      em.row_labels.push_back("C" + std::to_string(i + 1));
      em.row_generators.push_back(generator_Ci(ps, i + 1));
    } else {
      em.row_labels.push_back("C" + std::to_string(i + 1) + "-qC" + std::to_string(i + 2));
      em.row_generators.push_back(paired_generator(ps, i + 1));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto g = g_map(em.row_generators[i]);
    for (std::size_t j = 0; j < n; ++j) em.entries(i, j) = eval_etaquotient(g, em.columns[j]);
  }
  return em;
}

struct StructureFactor {
  std::string label;            // e.g. "C0", "(q-1)C2", "(q-1)(C3-qC4)"
  CuspidalDivisor generator;    // without the (q-1) prefactor
  bool q_minus_1_prefactor;
  Integer order;
  Integer lower;                // diagonal denominator
  Integer upper;                // root-lemma bound with (q-1) removed
};

struct GroupStructure {
  ParamSpace params;
  std::vector<StructureFactor> factors;

  Integer order() const {
    Integer n = 1;
    for (const auto& f : factors) n *= f.order;
    return n;
  }
};

namespace detail {
inline bool is_power_of(const Integer& n, std::int64_t p) {
  if (n < 1) return false;
  Integer x = n;
  const Integer pp(static_cast<long>(p));
  while (x != 1) {
    if (!divides(pp, x)) return false;
    x = exact_div(x, pp);
  }
  return true;
}
}  // namespace detail

inline GroupStructure group_structure(const ParamSpace& ps) {
  detail::require_structure_level(ps, 3, "group_structure");
  const int r = ps.r();
  const int m = (r - 1) / 2;
  const Integer qm1 = detail::qi(ps) - 1;
  const auto em = evaluation_matrix(ps);
  if (!em.strictly_lower_integral())
    throw Error(Errc::CertificationFailure, "evaluation matrix is not integral below the diagonal at " + ps.to_string());

  const auto bounds = structure_upper_bounds(ps);
  auto bound_for = [&](const std::string& label) -> const Integer& {
    for (const auto& b : bounds)
      if (b.label == label) return b.bound;
    throw Error(Errc::CertificationFailure, "no upper bound for " + label);
  };

  GroupStructure gs{ps, {}};
  for (int i = 0; i < r - 2; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    const Integer lower = denominator_of(em.entries(idx, idx));
    Integer upper;
    Integer claimed;
    std::string label;
    if (i == 0) {
      upper = bound_for("C0");
      claimed = detail::qpow(ps, r - 1);
      label = "C0";
    } else {
      upper = exact_div(bound_for(em.row_labels[idx]), qm1);
      const int gi = i + 1;
      claimed = i < m ? detail::qpow(ps, r - gi) : detail::qpow(ps, gi);
      label = i < m ? "(q-1)C" + std::to_string(gi) : "(q-1)(C" + std::to_string(gi) + "-qC" + std::to_string(gi + 1) + ")";
    }
    if (lower != upper || lower != claimed || igcd(lower, qm1) != 1 || !detail::is_power_of(lower, ps.char_p()))
      throw Error(Errc::CertificationFailure, label + ": diagonal denominator " + lower.get_str() + ", stripped bound " +
                                                  upper.get_str() + ", expected " + claimed.get_str());
    gs.factors.push_back({label, em.row_generators[idx], i != 0, lower, lower, upper});
  }
  return gs;
}

/// q-exponent of |C(T^r)^{(q-1)}|: (r-1) + sum_{i=2}^{m}(r-i) + sum_{i=m+1}^{r-2} i.
inline long structure_order_exponent(int r) {
  const int m = (r - 1) / 2;
  long e = r - 1;
  for (int i = 2; i <= m; ++i) e += r - i;
  for (int i = m + 1; i <= r - 2; ++i) e += i;
  return e;
}

}  // namespace cuspidal
