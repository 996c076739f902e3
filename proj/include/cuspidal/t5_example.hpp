#pragma once

// Worked example at level T^5: the 5x5 tables r(g(C_i))(e(j+2,0)) and
// r(g(D_i))(e(j+2,0)) and the quotients g(D_i), rebuilt from the engine and
// compared entry by entry with their closed forms in q.

#include <array>
#include <string>
#include <vector>

#include "cuspidal/structure.hpp"

namespace cuspidal {

struct T5Report {
  std::int64_t q = 0;
  std::size_t checks = 0;
  std::vector<std::string> mismatches;
  Matrix<Rational> c_matrix;
  Matrix<Rational> d_matrix;
  std::vector<EtaQuotient> g_d;

  bool pass() const { return mismatches.empty(); }
};

namespace t5 {

using Table = std::array<std::array<Rational, 5>, 5>;

inline Rational frac(const Integer& n, const Integer& d) { return make_rational(n, d); }

inline Table expected_c_matrix(std::int64_t qq) {
  const Integer q(static_cast<long>(qq));
  const Integer q2 = q * q, q3 = q2 * q, q4 = q3 * q;
  const Rational a = frac(q4 - q3 + q2 - 2 * q + 1, q4);
  return {{
      {a, frac(2 * q3 - 2 * q2 - q + 1, q4), a, Rational(q - 1), Rational(q2 - q)},
      {frac(q4 - q3 - q + 1, q4), frac(q3 - q2 - q + 1, q4), frac(q2 - 2 * q + 1, q4), 0, 0},
      {Rational(q - 1), frac(q3 - q2 - q + 1, q3), frac(q2 - 2 * q + 1, q3), 0, 0},
      {Rational(q - 1), frac(q - 1, q), frac(q2 - 2 * q + 1, q3), 0, 0},
      {frac(q - 1, q), frac(q - 1, q2), frac(q - 1, q3), 0, 0},
  }};
}

inline Table expected_d_matrix(std::int64_t qq) {
  const Integer q(static_cast<long>(qq));
  const Integer q2 = q * q, q3 = q2 * q, q4 = q3 * q, q5 = q4 * q;
  const auto c = expected_c_matrix(qq);
  return {{
      c[0],
      {Rational(-q3 + q2 - q + 1), Rational(-2 * q2 + q + 1), Rational(-q3 - q + 2), Rational(-q4 + 1), Rational(-q5 + q)},
      c[2],
      {0, 0, frac(-q + 1, q3), 0, 0},
      {Rational(q2 - 1), Rational(q2 - 1), Rational(q3 - q2), Rational(q4 - q3), Rational(q5 - q4)},
  }};
}

/// g(D_i) as (integer exponent list over Delta, Delta_T, ..., Delta_{T^5}; root index).
inline std::vector<std::pair<std::array<Integer, 6>, Integer>> expected_g_d(std::int64_t qq) {
  const Integer q(static_cast<long>(qq));
  const Integer q2 = q * q, q3 = q2 * q, q4 = q3 * q;
  const Integer s = (q2 - 1) * (q - 1);
  return {
      {{q, -1, 0, 0, 1, -q}, q4 * (q2 - 1)},
      {{-q, 1, 0, 1, -1, q - 1}, s},
      {{0, -q, q2 + 1, -q, q - 1, -q2 + q}, q3 * s},
      {{0, 0, -q, q2 + q + 1, -q2 - q - 1, q}, q3 * s},
      {{q - 1, 0, -q, q + 1, -q, 0}, s},
  };
}

/// D_0..D_4 as written for level T^5.
inline std::vector<CuspidalDivisor> d_generators(const ParamSpace& ps) {
  const Integer q(static_cast<long>(ps.q()));
  auto C = [&](int i) { return generator_Ci(ps, i); };
  const Integer q2 = q * q, q3 = q2 * q;
  return {
      C(0),
      C(1) - (q3 + q2 + q + 1) * C(0) + C(2) + q * C(3),
      C(2),
      C(3) - q * C(4),
      C(4) + q3 * C(0) - (q2 - q) * C(2) + (q2 - q + 1) * (C(3) - q * C(4)),
  };
}

}  // namespace t5

inline T5Report verify_t5_example(std::int64_t q) {
  const auto ps = validate_params(q, 1, 5);
  T5Report rep;
  rep.q = q;
  auto check = [&](bool ok, const std::string& what) {
    ++rep.checks;
    if (!ok) rep.mismatches.push_back(what);
  };

  auto table = [&](const std::vector<CuspidalDivisor>& rows, const t5::Table& want, const char* name) {
    Matrix<Rational> got(5, 5);
    for (std::size_t i = 0; i < 5; ++i) {
      const auto g = g_map(rows[i]);
      for (std::size_t j = 0; j < 5; ++j) {
        got(i, j) = eval_etaquotient(g, TreeEdge::zero(static_cast<long>(j) + 2));
        check(got(i, j) == want[i][j], std::string(name) + "(" + std::to_string(i) + "," + std::to_string(j) +
                                           "): got " + got(i, j).get_str() + ", want " + want[i][j].get_str());
      }
    }
    return got;
  };

  std::vector<CuspidalDivisor> cs;
  for (int i = 0; i < 5; ++i) cs.push_back(generator_Ci(ps, i));
  const auto ds = t5::d_generators(ps);

  rep.c_matrix = table(cs, t5::expected_c_matrix(q), "C-matrix");
  rep.d_matrix = table(ds, t5::expected_d_matrix(q), "D-matrix");

  // D_1 and D_4 coincide with the general redundancy witnesses at r = 5.
  check(ds[1] == redundancy_witness(ps, Witness::D1), "D1 differs from redundancy_witness(D1)");
  check(ds[4] == redundancy_witness(ps, Witness::DrMinus1), "D4 differs from redundancy_witness(Dr-1)");

  const auto want_g = t5::expected_g_d(q);
  for (std::size_t i = 0; i < 5; ++i) {
    const auto g = g_map(ds[i]);
    rep.g_d.push_back(g);
    for (std::size_t j = 0; j < 6; ++j) {
      const Rational want = make_rational(want_g[i].first[j], want_g[i].second);
      check(g[j] == want, "g(D" + std::to_string(i) + ")[" + std::to_string(j) + "]: got " + g[j].get_str() + ", want " +
                              want.get_str());
    }
  }
  return rep;
}

}  // namespace cuspidal
