#include <gtest/gtest.h>

#include "cuspidal/params.hpp"

using namespace cuspidal;

namespace {

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no cuspidal::Error thrown";
  return Errc::CertificationFailure;
}

}  // namespace

TEST(Params, ValidTuple) {
  const auto ps = validate_params(4, 2, 3);
  EXPECT_EQ(ps.q(), 4);
  EXPECT_EQ(ps.char_p(), 2);
  EXPECT_EQ(ps.deg_p(), 2);
  EXPECT_EQ(ps.r(), 3);
  EXPECT_EQ(ps.abs_p(), 16);
  EXPECT_FALSE(ps.t_level());
  EXPECT_TRUE(validate_params(3, 1, 2).t_level());
}

TEST(Params, Rejections) {
  EXPECT_EQ(code_of([] { validate_params(6, 1, 3); }), Errc::InvalidQ);
  EXPECT_EQ(code_of([] { validate_params(1, 1, 3); }), Errc::InvalidQ);
  EXPECT_EQ(code_of([] { validate_params(12, 1, 3); }), Errc::InvalidQ);
  EXPECT_EQ(code_of([] { validate_params(2, 0, 3); }), Errc::InvalidDegP);
  EXPECT_EQ(code_of([] { validate_params(2, 1, 0); }), Errc::InvalidR);
  EXPECT_EQ(code_of([] { require_t_level(validate_params(4, 2, 3), "test"); }), Errc::UnsupportedLevel);
}

TEST(Params, PrimePowersUpTo32) {
  const std::vector<std::int64_t> want{2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32};
  std::vector<std::int64_t> got;
  for (std::int64_t q = 0; q <= 32; ++q)
    if (prime_power_base(q)) got.push_back(q);
  EXPECT_EQ(got, want);
  EXPECT_EQ(*prime_power_base(27), 3);
  EXPECT_EQ(*prime_power_base(32), 2);
}

TEST(Params, ErrorText) {
  try {
    validate_params(6, 1, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(std::string(e.name()), "InvalidQ");
    EXPECT_EQ(std::string(e.what()).rfind("InvalidQ: ", 0), 0u);
  }
}

TEST(Arith, GcdAndDenominators) {
  EXPECT_EQ(gcd3(4, 2, 1), 1);
  EXPECT_EQ(gcd3(2, 2, 2), 2);
  EXPECT_EQ(gcd3(12, 8, 20), 4);
  EXPECT_EQ(denominator_of(make_rational(3, 12)), 4);
  EXPECT_EQ(denominator_of(Rational(5)), 1);
  EXPECT_EQ(denominator_of(make_rational(3 * 1, 3)), 1);  // (q^2-1)(q-1)/(|p|^2-1) at q=2
  EXPECT_TRUE(is_integral(make_rational(-6, 3)));
  EXPECT_FALSE(is_integral(make_rational(1, 2)));
}

TEST(Arith, Powers) {
  EXPECT_EQ(ipow(2, 10), 1024);
  EXPECT_EQ(ipow(Integer(3), 0), 1);
  EXPECT_EQ(rpow(2, -3), make_rational(1, 8));
  EXPECT_EQ(rpow(3, 2), Rational(9));
  EXPECT_EQ(ipow(16, 20), Integer("1208925819614629174706176"));
}

TEST(Arith, ExactDivision) {
  EXPECT_EQ(exact_div(Integer(4352 * 15), Integer(15)), 4352);
  EXPECT_THROW(exact_div(Integer(7), Integer(2)), std::logic_error);
  EXPECT_TRUE(divides(Integer(4), Integer(12)));
  EXPECT_FALSE(divides(Integer(5), Integer(12)));
  EXPECT_FALSE(divides(Integer(0), Integer(12)));
  EXPECT_EQ(ilcm(Integer(4), Integer(6)), 12);
}
