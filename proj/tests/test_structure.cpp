#include <gtest/gtest.h>

#include "cuspidal/t5_example.hpp"

using namespace cuspidal;

TEST(Structure, T5Factors) {
  const auto gs = group_structure(validate_params(2, 1, 5));
  ASSERT_EQ(gs.factors.size(), 3u);
  EXPECT_EQ(gs.factors[0].label, "C0");
  EXPECT_EQ(gs.factors[0].order, 16);
  EXPECT_EQ(gs.factors[1].label, "(q-1)C2");
  EXPECT_EQ(gs.factors[1].order, 8);
  EXPECT_EQ(gs.factors[2].label, "(q-1)(C3-qC4)");
  EXPECT_EQ(gs.factors[2].order, 8);
  const auto ps = validate_params(2, 1, 5);
  EXPECT_EQ(gs.factors[2].generator, generator_Ci(ps, 3) - Integer(2) * generator_Ci(ps, 4));
  EXPECT_EQ(gs.order(), 1024);
}

TEST(Structure, SmallLevels) {
  const auto t3 = group_structure(validate_params(2, 1, 3));
  ASSERT_EQ(t3.factors.size(), 1u);
  EXPECT_EQ(t3.factors[0].order, 4);
  const auto t4 = group_structure(validate_params(3, 1, 4));
  ASSERT_EQ(t4.factors.size(), 2u);
  EXPECT_EQ(t4.factors[0].order, 27);
  EXPECT_EQ(t4.factors[1].label, "(q-1)(C2-qC3)");
  EXPECT_EQ(t4.factors[1].order, 9);
}

TEST(Structure, EvaluationMatrixAtT5) {
  const auto em = evaluation_matrix(validate_params(2, 1, 5));
  ASSERT_EQ(em.entries.rows(), 3u);
  EXPECT_EQ(em.entries(0, 0), make_rational(9, 16));
  EXPECT_EQ(em.entries(1, 1), make_rational(3, 8));
  EXPECT_EQ(em.entries(2, 2), make_rational(-1, 8));
  EXPECT_TRUE(em.strictly_lower_integral());
  EXPECT_EQ(em.row_labels, (std::vector<std::string>{"C0", "C2", "C3-qC4"}));
}

TEST(Structure, DiagonalCertificates) {
  for (auto q : {2, 3, 4, 5})
    for (int r = 3; r <= 9; ++r) {
      const auto ps = validate_params(q, 1, r);
      const auto em = evaluation_matrix(ps);
      EXPECT_TRUE(em.strictly_lower_integral());
      EXPECT_EQ(denominator_of(em.entries(0, 0)), ipow(q, static_cast<unsigned long>(r - 1)));
      const auto gs = group_structure(ps);
      ASSERT_EQ(gs.factors.size(), static_cast<std::size_t>(r - 2));
      for (std::size_t i = 0; i < gs.factors.size(); ++i) {
        EXPECT_EQ(gs.factors[i].order, denominator_of(em.entries(i, i)));
        EXPECT_EQ(gs.factors[i].lower, gs.factors[i].upper);
      }
      EXPECT_EQ(gs.order(), ipow(q, static_cast<unsigned long>(structure_order_exponent(r))));
    }
}

TEST(Structure, UpperBoundsHoldForCertifiedGenerators) {
  // every tabulated bound kills the generator's g-quotient denominators on the probes
  for (auto q : {2, 3, 4})
    for (int r = 4; r <= 8; ++r) {
      const auto ps = validate_params(q, 1, r);
      for (const auto& e : structure_upper_bounds(ps)) {
        const auto g = g_map(e.generator);
        EXPECT_TRUE(divides(lower_multiple(g, zero_infty_probes(ps)), e.bound)) << e.label << " at " << ps.to_string();
      }
    }
}

TEST(Structure, GeneratorFactorizations) {
  for (auto q : {2, 3, 5})
    for (int r = 4; r <= 9; ++r) {
      const auto ps = validate_params(q, 1, r);
      for (int i = 1; i <= r - 1; ++i) {
        const auto f = generator_factorization(ps, i);
        EXPECT_TRUE(verify_factorization(scaled_generator_exponents(ps, i), f));
        EXPECT_EQ(scaled_generator_exponents(ps, i), scale(g_map(generator_Ci(ps, i)), structure_scale(ps)));
      }
      for (int i = (r - 1) / 2 + 1; i <= r - 2; ++i) EXPECT_NO_THROW(paired_factorization(ps, i));
    }
}

TEST(Structure, OrderExponent) {
  EXPECT_EQ(structure_order_exponent(3), 2);
  EXPECT_EQ(structure_order_exponent(5), 10);
  EXPECT_EQ(structure_order_exponent(4), 5);
}

TEST(Structure, Preconditions) {
  EXPECT_THROW(group_structure(validate_params(4, 2, 5)), Error);
  EXPECT_THROW(group_structure(validate_params(2, 1, 2)), Error);
}

TEST(T5, Reports) {
  for (auto q : {2, 3, 4, 5}) {
    const auto rep = verify_t5_example(q);
    EXPECT_TRUE(rep.pass()) << (rep.mismatches.empty() ? "" : rep.mismatches.front());
    EXPECT_EQ(rep.checks, 2u * 25 + 2 + 30);
  }
  const auto rep = verify_t5_example(2);
  EXPECT_EQ(rep.c_matrix(4, 0), make_rational(1, 2));
  EXPECT_EQ(rep.g_d[3].exponents(),
            (std::vector<Rational>{0, 0, make_rational(-2, 24), make_rational(7, 24), make_rational(-7, 24), make_rational(2, 24)}));
}
