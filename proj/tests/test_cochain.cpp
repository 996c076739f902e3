#include <gtest/gtest.h>

#include "cuspidal/cochain.hpp"
#include "cuspidal/oracles.hpp"

using namespace cuspidal;

TEST(Cochain, DeltaOnZeroEdges) {
  for (auto q : {2, 3, 4, 5, 8, 9}) {
    const auto ps = validate_params(q, 1, 3);
    EXPECT_EQ(eval_delta_e_k0(ps, 0), -(q - 1));
    EXPECT_EQ(eval_delta_e_k0(ps, 1), (q * q - q - 1) * (q - 1));
  }
  EXPECT_EQ(eval_delta_e_k0(validate_params(2, 1, 3), -2), -4);
}

TEST(Cochain, TableValues) {
  const auto ps = validate_params(3, 2, 4);
  const Integer q = 3;
  EXPECT_EQ(eval_delta_pi(ps, 0, edge_a), Rational(-(q - 1) * q));
  EXPECT_EQ(eval_delta_pi(ps, 0, edge_b), Rational((q * q - q - 1) * (q - 1)));
  EXPECT_EQ(eval_delta_pi(ps, 0, edge_c), Rational(-(q - 1)));
  for (int k = 1; k <= 4; ++k)
    EXPECT_EQ(eval_delta_pi(ps, k, edge_a), -make_rational(q - 1, q) * Rational(ipow(ps.abs_p(), static_cast<unsigned long>(k))));
}

TEST(Cochain, ClosedFormEvaluations) {
  for (auto q : {2, 3, 4, 5})
    for (int r = 1; r <= 8; ++r) {
      const auto ps = validate_params(q, 1, r);
      for (int i = 0; i <= r; ++i)
        for (long m = -8; m <= 8; ++m) {
          EXPECT_EQ(eval_delta_pi(ps, i, TreeEdge::zero(m + 1)), oracle::phi_e0(q, i, m));
          if (m >= 1) {
            EXPECT_EQ(eval_delta_pi(ps, i, TreeEdge::pi(m + 1)), oracle::phi_pi(q, i, m));
          }
        }
      for (long m = 0; m <= r; ++m)
        EXPECT_EQ(eval_delta_pi(ps, r, TreeEdge::zero(m + 1)), -Rational(ipow(q, static_cast<unsigned long>(r - m)) * (q - 1)));
    }
}

TEST(Cochain, EtaQuotientEvaluation) {
  const auto ps = validate_params(2, 1, 3);
  EXPECT_EQ(eval_etaquotient(g_map(zero_minus_infinity(ps)), edge_a), make_rational(1, 4));
  EXPECT_EQ(eval_etaquotient(EtaQuotient(ps), edge_b), 0);
}

TEST(Cochain, IntegralQuotientIntegralValues) {
  const auto ps = validate_params(3, 1, 3);
  const EtaQuotient e(ps, {Rational(2), Rational(-5), Rational(1), Rational(7)});
  const auto v = eval_etaquotient(e, TreeEdge::zero(5));
  EXPECT_TRUE(is_integral(v));
  Rational brute = 0;
  for (int i = 0; i <= 3; ++i) brute += e[static_cast<std::size_t>(i)] * oracle::phi_e0(3, i, 4);
  EXPECT_EQ(v, brute);
  EXPECT_TRUE(divides(Integer(2), Integer(v.get_num())));
}

TEST(Cochain, Harmonicity) {
  EXPECT_TRUE(harmonicity_check(validate_params(2, 1, 3), 0, 2));
  EXPECT_TRUE(harmonicity_check(validate_params(3, 1, 4), 4, 5));
  EXPECT_TRUE(harmonicity_check(validate_params(2, 1, 3), 3, 1));
  for (auto q : {2, 3, 4, 5})
    for (int r = 1; r <= 6; ++r)
      for (int i = 0; i <= r; ++i)
        for (long m = 1; m <= 10; ++m) EXPECT_TRUE(harmonicity_check(validate_params(q, 1, r), i, m));
  EXPECT_THROW(harmonicity_check(validate_params(4, 2, 3), 0, 2), Error);
}

TEST(Cochain, UnsupportedEdges) {
  auto code = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::CertificationFailure;
  };
  const auto t = validate_params(2, 1, 3);
  const auto p2 = validate_params(2, 2, 3);
  EXPECT_EQ(code([&] { eval_delta_pi(t, 0, TreeEdge::pi(1)); }), Errc::UnsupportedEdge);
  EXPECT_EQ(code([&] { eval_delta_pi(p2, 1, TreeEdge::pi(3)); }), Errc::UnsupportedEdge);
  EXPECT_EQ(code([&] { eval_delta_pi(t, 4, edge_a); }), Errc::IndexOutOfRange);
  EXPECT_NO_THROW(eval_delta_pi(p2, 1, edge_a));
  EXPECT_EQ(edge_a.to_string(), "e(2,pi)");
  EXPECT_EQ(TreeEdge::pi(4).to_string(), "e(4,pi^3)");
  EXPECT_EQ(edge_c.to_string(), "e(1,0)");
}
