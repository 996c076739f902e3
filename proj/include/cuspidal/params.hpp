#pragma once

// Global parameters (q, deg p, r) of the level n = p^r in F_q[T], and the
// exact-integer/rational helpers every other header builds on.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

#include "cuspidal/error.hpp"

namespace cuspidal {

using Integer = mpz_class;
using Rational = mpq_class;  // always canonical: lowest terms, den > 0

inline Integer ipow(const Integer& base, unsigned long exp) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

inline Integer ipow(std::int64_t base, unsigned long exp) { return ipow(Integer(static_cast<long>(base)), exp); }

/// q^e for any integer e; negative exponents give 1/q^{-e}.
inline Rational rpow(std::int64_t base, long exp) {
  if (exp >= 0) return Rational(ipow(base, static_cast<unsigned long>(exp)));
  return Rational(Integer(1), ipow(base, static_cast<unsigned long>(-exp)));
}

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("make_rational: zero denominator");
  Rational x(num, den);
  x.canonicalize();
  return x;
}

inline Integer igcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer ilcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline bool divides(const Integer& d, const Integer& n) { return d != 0 && mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0; }

/// Exact quotient; throws if `d` does not divide `n`.
inline Integer exact_div(const Integer& n, const Integer& d) {
  if (!divides(d, n)) throw std::logic_error("exact_div: " + d.get_str() + " does not divide " + n.get_str());
  Integer out;
  mpz_divexact(out.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return out;
}

inline std::int64_t gcd3(std::int64_t a, std::int64_t b, std::int64_t c) {
  auto g2 = [](std::int64_t x, std::int64_t y) {
    x = x < 0 ? -x : x;
    y = y < 0 ? -y : y;
    while (y != 0) {
      const auto t = x % y;
      x = y;
      y = t;
    }
    return x;
  };
  return g2(g2(a, b), c);
}

/// Least m >= 1 with m*x integral.
inline Integer denominator_of(const Rational& x) { return x.get_den(); }

inline bool is_integral(const Rational& x) { return x.get_den() == 1; }

/// Returns the prime p with q = p^s, s >= 1, or nullopt.
inline std::optional<std::int64_t> prime_power_base(std::int64_t q) {
  if (q < 2) return std::nullopt;
  std::int64_t p = 0;
  for (std::int64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return q;  // q itself is prime
  while (q % p == 0) q /= p;
  if (q != 1) return std::nullopt;
  return p;
}

class ParamSpace {
 public:
  std::int64_t q() const noexcept { return q_; }
  std::int64_t char_p() const noexcept { return char_p_; }
  int deg_p() const noexcept { return deg_p_; }
  int r() const noexcept { return r_; }
  /// |p| = q^{deg p}
  const Integer& abs_p() const noexcept { return abs_p_; }

  bool t_level() const noexcept { return deg_p_ == 1; }

  std::string to_string() const {
    return "(q=" + std::to_string(q_) + ", deg_p=" + std::to_string(deg_p_) + ", r=" + std::to_string(r_) + ")";
  }

  friend bool operator==(const ParamSpace& a, const ParamSpace& b) {
    return a.q_ == b.q_ && a.deg_p_ == b.deg_p_ && a.r_ == b.r_;
  }

  friend ParamSpace validate_params(std::int64_t q, int deg_p, int r);

 private:
  ParamSpace(std::int64_t q, std::int64_t p, int deg_p, int r)
      : q_(q), char_p_(p), deg_p_(deg_p), r_(r), abs_p_(ipow(q, static_cast<unsigned long>(deg_p))) {}

  std::int64_t q_;
  std::int64_t char_p_;
  int deg_p_;
  int r_;
  Integer abs_p_;
};

inline ParamSpace validate_params(std::int64_t q, int deg_p, int r) {
  const auto p = prime_power_base(q);
  if (!p) throw Error(Errc::InvalidQ, "q=" + std::to_string(q) + " is not a prime power >= 2");
  if (deg_p < 1) throw Error(Errc::InvalidDegP, "deg_p=" + std::to_string(deg_p) + " must be >= 1");
  if (r < 1) throw Error(Errc::InvalidR, "r=" + std::to_string(r) + " must be >= 1");
  return ParamSpace(q, *p, deg_p, r);
}

inline void require_t_level(const ParamSpace& ps, const char* what) {
  if (!ps.t_level()) throw Error(Errc::UnsupportedLevel, std::string(what) + " needs deg_p = 1, got " + ps.to_string());
}

}  // namespace cuspidal
