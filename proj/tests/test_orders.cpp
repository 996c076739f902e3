#include <gtest/gtest.h>

#include "cuspidal/oracles.hpp"
#include "cuspidal/orders.hpp"

using namespace cuspidal;

TEST(Roots, Analytic) {
  EXPECT_EQ(max_root_analytic(validate_params(2, 1, 3), 2), 3);
  EXPECT_EQ(max_root_analytic(validate_params(3, 1, 3), 1), 4);
  EXPECT_EQ(max_root_analytic(validate_params(2, 2, 3), 1), 3);
  EXPECT_THROW(max_root_analytic(validate_params(2, 2, 3), 0), std::invalid_argument);
}

TEST(Roots, Units) {
  EXPECT_EQ(max_root_units(validate_params(5, 1, 3), 2), 24);
  EXPECT_EQ(max_root_units(validate_params(3, 2, 3), 1), 8);
  for (long k = 1; k <= 9; k += 2) EXPECT_EQ(max_root_units(validate_params(2, 1, 9), k), 1);
  // a unit root is an analytic root
  for (auto q : {2, 3, 4, 5, 7, 9})
    for (int d : {1, 2, 3})
      for (long k = 1; k <= 8; ++k) {
        const auto ps = validate_params(q, d, 8);
        EXPECT_TRUE(divides(max_root_units(ps, k), max_root_analytic(ps, k)));
      }
}

TEST(Bounds, Uniform) {
  EXPECT_EQ(uniform_upper(validate_params(2, 1, 3)), 12);
  EXPECT_EQ(uniform_upper(validate_params(2, 1, 5)), 48);
  EXPECT_EQ(uniform_upper(validate_params(3, 1, 3)), 72);
}

TEST(Bounds, UpperZeroInfty) {
  EXPECT_EQ(upper_zero_infty(validate_params(2, 1, 3)), 4);
  EXPECT_EQ(upper_zero_infty(validate_params(3, 2, 3)), 405);
  EXPECT_EQ(upper_zero_infty(validate_params(4, 2, 3)), 4352);
  EXPECT_THROW(upper_zero_infty(validate_params(2, 1, 2)), Error);
  for (auto q : {2, 3, 4, 5, 8, 9})
    for (int d : {1, 2, 3})
      for (int r = 3; r <= 8; ++r) {
        const auto ps = validate_params(q, d, r);
        EXPECT_TRUE(divides(upper_zero_infty(ps), uniform_upper(ps)));
      }
}

TEST(Bounds, FactorizationCrossCheck) {
  // the root lemma applied to the regrouped quotient reproduces the closed-form bound
  for (auto q : {2, 3, 4, 5, 8, 9})
    for (int d : {1, 2, 3})
      for (int r = 3; r <= 8; ++r) {
        const auto ps = validate_params(q, d, r);
        EXPECT_EQ(upper_from_factorization(ps, uniform_upper(ps), zero_infty_root_factorization(ps)), upper_zero_infty(ps))
            << ps.to_string();
      }
}

TEST(Bounds, LowerMultiple) {
  const auto ps = validate_params(2, 1, 3);
  const auto g = g_map(zero_minus_infinity(ps));
  EXPECT_EQ(lower_multiple(g, {edge_a}), 4);
  EXPECT_EQ(lower_multiple(zero_infty_integral_quotient(ps), zero_infty_probes(ps)), 1);
  EXPECT_THROW(lower_multiple(g, {}), std::invalid_argument);
}

TEST(Bounds, Combine) {
  EXPECT_EQ(*combine_bounds(4, 4).exact, 4);
  const auto b = combine_bounds(4, 12);
  EXPECT_FALSE(b.exact.has_value());
  EXPECT_EQ(b.lower, 4);
  EXPECT_EQ(b.upper, 12);
  try {
    combine_bounds(5, 12);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InconsistentBounds);
  }
}

TEST(Order, ZeroInfty) {
  EXPECT_EQ(*order_zero_infty(validate_params(2, 1, 4)).exact, 8);
  EXPECT_EQ(*order_zero_infty(validate_params(2, 1, 3)).exact, 4);
  EXPECT_EQ(*order_zero_infty(validate_params(3, 2, 3)).exact, 405);
  EXPECT_EQ(*order_zero_infty(validate_params(4, 2, 3)).exact, 4352);
  EXPECT_EQ(*order_zero_infty(validate_params(2, 2, 1)).exact, 1);
}

TEST(Order, TLevel) {
  for (auto q : {2, 3, 4, 5, 7, 8})
    for (int r = 3; r <= 9; ++r) {
      const auto b = order_zero_infty(validate_params(q, 1, r));
      ASSERT_TRUE(b.exact.has_value());
      EXPECT_EQ(*b.exact, ipow(q, static_cast<unsigned long>(r - 1)));
    }
}

TEST(Order, CoprimeDegree) {
  for (auto q : {2, 3, 4, 5, 8, 9})
    for (int d : {1, 2, 3, 4})
      for (int r = 3; r <= 7; ++r) {
        if (std::gcd<std::int64_t>(d, q - 1) != 1) continue;
        const auto ps = validate_params(q, d, r);
        const auto b = order_zero_infty(ps);
        ASSERT_TRUE(b.exact.has_value()) << ps.to_string();
        EXPECT_EQ(*b.exact, oracle::main_theorem_order(ps));
      }
}

TEST(Order, LowerDividesUpperEverywhere) {
  for (auto q : {2, 3, 4, 5, 7, 8, 9})
    for (int d : {1, 2, 3, 4})
      for (int r = 1; r <= 8; ++r) {
        const auto ps = validate_params(q, d, r);
        const auto b = order_zero_infty(ps);
        EXPECT_TRUE(divides(b.lower, b.upper));
        EXPECT_TRUE(divides(b.upper, uniform_upper(ps)));
        if (r >= 3) {
          EXPECT_TRUE(divides(oracle::zero_infty_lower_closed_form(ps), b.lower)) << ps.to_string();
        }
      }
}

TEST(Order, SingleProbeAtTLevel) {
  for (auto q : {2, 3, 4, 5})
    for (int r = 3; r <= 8; ++r) {
      const auto ps = validate_params(q, 1, r);
      EXPECT_EQ(lower_multiple(g_map(zero_minus_infinity(ps)), {edge_a}), oracle::zero_infty_lower_closed_form(ps));
    }
}
