#pragma once

// The exit criteria of the library, runnable as a unit: each criterion sweeps
// its parameter grid with exact arithmetic (zero tolerance) and reports the
// number of checks and the first failure.

#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "cuspidal/oracles.hpp"
#include "cuspidal/t5_example.hpp"

namespace cuspidal::acceptance {

struct Grid {
  std::vector<std::int64_t> qs{2, 3, 4, 5, 8, 9};
  std::vector<int> degs{1, 2, 3};
  int r_max = 8;
  std::vector<std::int64_t> t_qs{2, 3, 4, 5};
  int t_r_max = 8;
  int structure_r_max = 9;
  std::vector<std::int64_t> witness_qs{2, 3};
  int witness_r_max = 10;
  int random_divisors = 200;

  static Grid full() { return {}; }

  static Grid small() {
    Grid g;
    g.qs = {2, 3, 4};
    g.degs = {1, 2};
    g.r_max = 5;
    g.t_qs = {2, 3};
    g.t_r_max = 6;
    g.structure_r_max = 6;
    g.witness_r_max = 7;
    g.random_divisors = 20;
    return g;
  }
};

struct CriterionResult {
  int id = 0;
  std::string title;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool passed() const { return checks > 0 && failures == 0; }
};

class Recorder {
 public:
  Recorder(int id, std::string title) { res_.id = id, res_.title = std::move(title); }

  void check(bool ok, const std::function<std::string()>& what) {
    ++res_.checks;
    if (!ok && res_.failures++ == 0) res_.first_failure = what();
  }

  /// Runs `body`, turning any escaping exception into a recorded failure.
  template <typename F>
  void guarded(const std::string& where, F&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      check(false, [&] { return where + ": " + e.what(); });
    }
  }

  CriterionResult result() && { return std::move(res_); }

 private:
  CriterionResult res_;
};

namespace detail {

template <typename F>
void for_grid(const Grid& g, int r_min, F&& f) {
  for (auto q : g.qs)
    for (int d : g.degs)
      for (int r = r_min; r <= g.r_max; ++r) f(validate_params(q, d, r));
}

inline std::string at(const ParamSpace& ps) { return ps.to_string(); }

}  // namespace detail

inline CriterionResult lambda_inverse_identity(const Grid& g) {
  Recorder rec(1, "Lambda inverse identity and elimination oracle");
  detail::for_grid(g, 1, [&](const ParamSpace& ps) {
    rec.guarded(detail::at(ps), [&] {
      const auto lt = build_lambda_transpose(ps);
      const auto inv = build_lambda_inverse(ps);
      const auto id = inv.entries() * lt.entries().transposed();
      rec.check(id == Matrix<Rational>::identity(id.rows()), [&] { return "inverse identity fails at " + detail::at(ps); });
      rec.check(invert_oracle(lt).entries() == inv.entries(), [&] { return "oracle disagrees at " + detail::at(ps); });
    });
  });
  return std::move(rec).result();
}

inline CriterionResult eq1_reproduction(const Grid& g) {
  Recorder rec(2, "g([0]-[inf]) closed form");
  detail::for_grid(g, 3, [&](const ParamSpace& ps) {
    rec.guarded(detail::at(ps), [&] {
      rec.check(g_map(zero_minus_infinity(ps)).exponents() == oracle::g_zero_infty(ps),
                [&] { return "mismatch at " + detail::at(ps); });
    });
  });
  return std::move(rec).result();
}

inline CriterionResult t_level_order(const Grid& g) {
  Recorder rec(3, "ord([0]-[inf]) = q^{r-1} on X_0(T^r)");
  for (auto q : g.t_qs)
    for (int r = 3; r <= g.t_r_max; ++r) {
      const auto ps = validate_params(q, 1, r);
      rec.guarded(detail::at(ps), [&] {
        const auto b = order_zero_infty(ps);
        const Integer want = ipow(q, static_cast<unsigned long>(r - 1));
        rec.check(b.exact && *b.exact == want, [&] { return "not exactly " + want.get_str() + " at " + detail::at(ps); });
      });
    }
  rec.guarded("(2,1,3)", [&] {
    const auto b = order_zero_infty(validate_params(2, 1, 3));
    rec.check(b.exact && *b.exact == 4, [] { return "T^3 at q=2 is not 4"; });
  });
  return std::move(rec).result();
}

inline CriterionResult main_theorem_1(const Grid& g) {
  Recorder rec(4, "exact ord([0]-[inf]) when gcd(deg p, q-1) = 1");
  detail::for_grid(g, 3, [&](const ParamSpace& ps) {
    if (std::gcd(static_cast<std::int64_t>(ps.deg_p()), ps.q() - 1) != 1) return;
    rec.guarded(detail::at(ps), [&] {
      const auto b = order_zero_infty(ps);
      const Integer want = oracle::main_theorem_order(ps);
      rec.check(b.exact && *b.exact == want, [&] {
        return "at " + detail::at(ps) + ": [" + b.lower.get_str() + " | ord | " + b.upper.get_str() + "], want " + want.get_str();
      });
    });
  });
  rec.guarded("(4,2,3)", [&] {
    const auto b = order_zero_infty(validate_params(4, 2, 3));
    rec.check(b.exact && *b.exact == 4352, [] { return "(4,2,3) is not 4352"; });
  });
  return std::move(rec).result();
}

inline CriterionResult lower_bound_single_probe(const Grid& g) {
  Recorder rec(5, "denominator of r(g([0]-[inf]))(e(2,pi)) equals the closed-form lower bound");
  detail::for_grid(g, 3, [&](const ParamSpace& ps) {
    rec.guarded(detail::at(ps), [&] {
      const Integer den = denominator_of(eval_etaquotient(g_map(zero_minus_infinity(ps)), edge_a));
      const Integer want = oracle::zero_infty_lower_closed_form(ps);
      rec.check(den == want,
                [&] { return "at " + detail::at(ps) + ": denominator " + den.get_str() + ", closed form " + want.get_str(); });
    });
  });
  return std::move(rec).result();
}

inline CriterionResult small_r_closed_forms(const Grid& g) {
  Recorder rec(6, "r = 1, 2 closed forms");
  for (auto q : g.qs)
    for (int d : g.degs)
      for (int r : {1, 2}) {
        const auto ps = validate_params(q, d, r);
        rec.guarded(detail::at(ps), [&] {
          const Integer& P = ps.abs_p();
          Integer want;
          if (r == 1)
            want = d % 2 == 1 ? Integer((P - 1) / (q - 1)) : Integer((P - 1) / (q * q - 1));
          else
            want = (q % 2 == 0 || d % 2 == 1) ? Integer((P * P - 1) / (q * q - 1)) : Integer((P * P - 1) / (2 * (q * q - 1)));
          const auto b = order_zero_infty(ps);
          rec.check(b.exact && *b.exact == want, [&] { return "at " + detail::at(ps) + " want " + want.get_str(); });
          rec.check(divides(want, uniform_upper(ps)), [&] { return "does not divide uniform bound at " + detail::at(ps); });
        });
      }
  rec.check(*order_zero_infty(validate_params(2, 2, 1)).exact == 1, [] { return "(2,2,1) is not 1"; });
  return std::move(rec).result();
}

inline CriterionResult cochain_closed_forms(const Grid& g) {
  Recorder rec(7, "cochain engine reproduces the closed-form evaluations");
  for (auto q : g.qs) {
    for (int r = 1; r <= g.r_max; ++r) {
      const auto ps = validate_params(q, 1, r);
      for (int i = 0; i <= r; ++i)
        for (long m = -8; m <= 8; ++m) {
          rec.guarded(detail::at(ps), [&] {
            rec.check(eval_delta_pi(ps, i, TreeEdge::zero(m + 1)) == oracle::phi_e0(q, i, m), [&] {
              return "e(" + std::to_string(m + 1) + ",0), i=" + std::to_string(i) + " at " + detail::at(ps);
            });
            if (m >= 1)
              rec.check(eval_delta_pi(ps, i, TreeEdge::pi(m + 1)) == oracle::phi_pi(q, i, m), [&] {
                return "e(" + std::to_string(m + 1) + ",pi^m), i=" + std::to_string(i) + " at " + detail::at(ps);
              });
          });
        }
    }
    // table values: phi = r(Delta), phi_n = r(Delta_n) with deg n = i * deg p
    for (int d : g.degs)
      for (int i = 1; i <= g.r_max; ++i) {
        const auto ps = validate_params(q, d, g.r_max);
        const auto t = oracle::edge_table(q, static_cast<long>(i) * d);
        auto where = [&] { return "table at " + detail::at(ps) + ", i=" + std::to_string(i); };
        rec.check(eval_delta_pi(ps, 0, edge_a) == t.delta_a, where);
        rec.check(eval_delta_pi(ps, 0, edge_b) == t.delta_b, where);
        rec.check(eval_delta_pi(ps, 0, edge_c) == t.delta_c, where);
        rec.check(eval_delta_pi(ps, i, edge_a) == t.level_a, where);
        rec.check(eval_delta_pi(ps, i, edge_b) == t.level_b, where);
        rec.check(eval_delta_pi(ps, i, edge_c) == t.level_c, where);
      }
  }
  return std::move(rec).result();
}

inline CriterionResult t5_example(const Grid& g) {
  Recorder rec(8, "T^5 worked example");
  for (auto q : g.t_qs) {
    rec.guarded("q=" + std::to_string(q), [&] {
      const auto rep = verify_t5_example(q);
      rec.check(rep.pass() && rep.checks > 0, [&] {
        return "q=" + std::to_string(q) + ": " + (rep.mismatches.empty() ? std::string("no checks") : rep.mismatches.front());
      });
    });
  }
  return std::move(rec).result();
}

inline CriterionResult structure_theorem(const Grid& g) {
  Recorder rec(9, "prime-to-(q-1) part of C(T^r)");
  for (auto q : g.t_qs)
    for (int r = 3; r <= g.structure_r_max; ++r) {
      const auto ps = validate_params(q, 1, r);
      rec.guarded(detail::at(ps), [&] {
        const auto gs = group_structure(ps);
        const int m = (r - 1) / 2;
        std::vector<std::pair<std::string, Integer>> want{{"C0", ipow(q, static_cast<unsigned long>(r - 1))}};
        for (int i = 2; i <= m; ++i) want.push_back({"(q-1)C" + std::to_string(i), ipow(q, static_cast<unsigned long>(r - i))});
        for (int i = (r + 1) / 2; i <= r - 2; ++i)
          want.push_back({"(q-1)(C" + std::to_string(i) + "-qC" + std::to_string(i + 1) + ")", ipow(q, static_cast<unsigned long>(i))});
        bool same = gs.factors.size() == want.size();
        for (std::size_t k = 0; same && k < want.size(); ++k)
          same = gs.factors[k].label == want[k].first && gs.factors[k].order == want[k].second &&
                 gs.factors[k].lower == gs.factors[k].upper;
        rec.check(same, [&] { return "factor list differs at " + detail::at(ps); });
        for (const auto& f : gs.factors)
          rec.check(cuspidal::detail::is_power_of(f.order, ps.char_p()),
                    [&] { return f.label + " order not a power of p at " + detail::at(ps); });
        rec.check(static_cast<int>(gs.factors.size()) == r - 2, [&] { return "factor count at " + detail::at(ps); });
        rec.check(gs.order() == ipow(q, static_cast<unsigned long>(structure_order_exponent(r))),
                  [&] { return "group order at " + detail::at(ps); });
      });
    }
  return std::move(rec).result();
}

inline CriterionResult redundancy_witnesses(const Grid& g) {
  Recorder rec(10, "g(D_1), g(D_{r-1}) closed forms");
  for (auto q : g.witness_qs)
    for (int r = 4; r <= g.witness_r_max; ++r) {
      const auto ps = validate_params(q, 1, r);
      const Integer s = Integer(static_cast<long>(q * q - 1)) * Integer(static_cast<long>(q - 1));
      for (auto w : {Witness::D1, Witness::DrMinus1}) {
        rec.guarded(detail::at(ps), [&] {
          const auto e = scale(g_map(redundancy_witness(ps, w)), s);
          const auto want = oracle::witness_exponents(ps, w);
          bool same = e.is_integral();
          for (std::size_t i = 0; same && i < want.size(); ++i) same = e[i] == Rational(want[i]);
          rec.check(same, [&] { return std::string(w == Witness::D1 ? "D1" : "Dr-1") + " at " + detail::at(ps); });
        });
      }
    }
  return std::move(rec).result();
}

/// Uniform random degree-0 divisor with |a_i| <= bound for i < r; a_r fixes the degree.
template <typename Rng>
CuspidalDivisor random_degree_zero(const ParamSpace& ps, Rng& rng, long bound = 50) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  std::vector<Integer> c(static_cast<std::size_t>(ps.r()) + 1);
  Integer deg = 0;
  for (int i = 0; i < ps.r(); ++i) {
    c[static_cast<std::size_t>(i)] = dist(rng);
    deg += c[static_cast<std::size_t>(i)] * deg_Pd(ps, i);
  }
  c[static_cast<std::size_t>(ps.r())] = -deg;  // deg(P_{p^r}) = 1
  return CuspidalDivisor(ps, std::move(c));
}

inline CriterionResult property_suites(const Grid& g) {
  Recorder rec(11, "div(g(D)) = D, sum of exponents, harmonicity, lower | upper");
  std::mt19937_64 rng(0x5eed);
  detail::for_grid(g, 1, [&](const ParamSpace& ps) {
    rec.guarded(detail::at(ps), [&] {
      const Integer clear = lambda_inverse_scale(ps);
      for (int n = 0; n < g.random_divisors; ++n) {
        const auto d = random_degree_zero(ps, rng);
        const auto e = g_map(d);
        const auto back = divisor_of(e);
        bool same = true;
        for (std::size_t i = 0; same && i < back.size(); ++i) same = back[i] == Rational(d[i]);
        rec.check(same, [&] { return "div(g(D)) != D at " + detail::at(ps); });
        rec.check(e.exponent_sum() == 0, [&] { return "exponent sum nonzero at " + detail::at(ps); });
        rec.check(divides(min_integral_multiple(e), clear), [&] { return "denominators not cleared at " + detail::at(ps); });
      }
      if (ps.t_level())
        for (int i = 0; i <= ps.r(); ++i)
          for (long m = 1; m <= 8; ++m)
            rec.check(harmonicity_check(ps, i, m), [&] { return "harmonicity at " + detail::at(ps); });
      if (ps.r() >= 3) {
        // combine_bounds throws InconsistentBounds when lower does not divide upper
        const auto b = order_zero_infty(ps);
        rec.check(divides(b.lower, b.upper), [&] { return "lower does not divide upper at " + detail::at(ps); });
      }
    });
  });
  return std::move(rec).result();
}

inline std::vector<CriterionResult> run_all(const Grid& g) {
  return {lambda_inverse_identity(g), eq1_reproduction(g),   t_level_order(g),      main_theorem_1(g),
          lower_bound_single_probe(g), small_r_closed_forms(g), cochain_closed_forms(g), t5_example(g),
          structure_theorem(g),        redundancy_witnesses(g), property_suites(g)};
}

inline std::vector<std::function<CriterionResult(const Grid&)>> criteria() {
  return {lambda_inverse_identity, eq1_reproduction,     t_level_order,        main_theorem_1,
          lower_bound_single_probe, small_r_closed_forms, cochain_closed_forms, t5_example,
          structure_theorem,        redundancy_witnesses, property_suites};
}

}  // namespace cuspidal::acceptance
