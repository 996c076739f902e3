// cuspidal: command-line front end.
//
// Exit status: 0 success, 1 domain error (or a failing selftest), 2 usage error.
// Big integers are decimal strings; rationals are {"num": "...", "den": "..."}.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <future>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "cuspidal/acceptance.hpp"

using namespace cuspidal;
using json = nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json to_json(const Integer& n) { return n.get_str(); }
json to_json(const Rational& x) { return {{"num", x.get_num().get_str()}, {"den", x.get_den().get_str()}}; }

template <typename T>
json to_json(const std::vector<T>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

json to_json(const ParamSpace& ps) {
  return {{"q", ps.q()}, {"char_p", ps.char_p()}, {"deg_p", ps.deg_p()}, {"r", ps.r()}, {"abs_p", ps.abs_p().get_str()}};
}

template <typename T>
json to_json(const Matrix<T>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string str(const Integer& n) { return n.get_str(); }
std::string str(const Rational& x) { return x.get_str(); }

template <typename T>
std::string table(const Matrix<T>& m) {
  std::vector<std::string> cells;
  std::size_t w = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      cells.push_back(str(m(i, j)));
      w = std::max(w, cells.back().size());
    }
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "  " : "") << std::setw(static_cast<int>(w)) << cells[i * m.cols() + j];
    os << '\n';
  }
  return os.str();
}

template <typename T>
std::string joined(const std::vector<T>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + str(v[i]);
  return s;
}

/// Result of a subcommand: the JSON document, its table rendering, and the exit status.
struct Output {
  json doc;
  std::string text;
  int status = 0;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

Integer parse_integer(const std::string& s, const std::string& flag) {
  Integer n;
  if (s.empty() || n.set_str(s, 10) != 0) throw UsageError(flag + ": not an integer: '" + s + "'");
  return n;
}

TreeEdge parse_edge(const std::string& s) {
  const auto parts = split(s, ',');
  if (parts.size() != 2) throw UsageError("--edge: expected k,0 or k,pi, got '" + s + "'");
  const Integer k = parse_integer(parts[0], "--edge");
  if (!k.fits_slong_p()) throw UsageError("--edge: k out of range");
  if (parts[1] == "0") return TreeEdge::zero(k.get_si());
  if (parts[1] == "pi") return TreeEdge::pi(k.get_si());
  throw UsageError("--edge: expected k,0 or k,pi, got '" + s + "'");
}

Output cmd_lambda(const ParamSpace& ps, bool inverse) {
  const auto lm = inverse ? build_lambda_inverse(ps) : build_lambda_transpose(ps);
  Output out;
  out.doc = {{"kind", inverse ? "inverse" : "transpose"}, {"params", to_json(ps)}};
  if (inverse) {
    out.doc["entries"] = to_json(lm.entries());
    out.doc["scale"] = to_json(lambda_inverse_scale(ps));
    out.doc["scaled_entries"] = to_json(scaled_lambda_inverse(ps));
    out.text = "Lambda^{-1} = (1/" + lambda_inverse_scale(ps).get_str() + ") *\n" + table(scaled_lambda_inverse(ps));
  } else {
    Matrix<Integer> m(lm.size(), lm.size());
    for (std::size_t i = 0; i < lm.size(); ++i)
      for (std::size_t j = 0; j < lm.size(); ++j) m(i, j) = lm(i, j).get_num();
    out.doc["entries"] = to_json(m);
    out.text = "Lambda^T =\n" + table(m);
  }
  return out;
}

Output cmd_gmap(const ParamSpace& ps, const std::string& coeffs) {
  std::vector<Integer> c;
  for (const auto& s : split(coeffs, ',')) c.push_back(parse_integer(s, "--coeffs"));
  if (c.size() != static_cast<std::size_t>(ps.r()) + 1)
    throw UsageError("--coeffs: expected " + std::to_string(ps.r() + 1) + " values, got " + std::to_string(c.size()));
  const CuspidalDivisor d(ps, c);
  const auto e = g_map(d);
  Output out;
  out.doc = {{"params", to_json(ps)},
             {"divisor", to_json(d.coeffs())},
             {"exponents", to_json(e.exponents())},
             {"min_integral_multiple", to_json(min_integral_multiple(e))}};
  std::ostringstream os;
  for (std::size_t i = 0; i < e.size(); ++i) os << "Delta_{p^" << i << "}: " << e[i].get_str() << '\n';
  os << "clears at " << min_integral_multiple(e).get_str() << '\n';
  out.text = os.str();
  return out;
}

Output cmd_cochain(const ParamSpace& ps, int height, const std::string& edge_s) {
  const auto edge = parse_edge(edge_s);
  const auto v = eval_delta_pi(ps, height, edge);
  Output out;
  out.doc = {{"params", to_json(ps)}, {"height", height}, {"edge", edge.to_string()}, {"value", to_json(v)}};
  out.text = "r(Delta_{p^" + std::to_string(height) + "})(" + edge.to_string() + ") = " + v.get_str() + "\n";
  return out;
}

Output cmd_order(const ParamSpace& ps) {
  const auto b = order_zero_infty(ps);
  Output out;
  out.doc = {{"lower", to_json(b.lower)}, {"upper", to_json(b.upper)}};
  if (b.exact) out.doc["exact"] = to_json(*b.exact);
  out.text = b.exact ? "ord([0]-[inf]) = " + b.exact->get_str() + "\n"
                     : b.lower.get_str() + " | ord([0]-[inf]) | " + b.upper.get_str() + "\n";
  return out;
}

Output cmd_structure(const ParamSpace& ps) {
  const auto gs = group_structure(ps);
  Output out;
  json factors = json::array();
  for (const auto& f : gs.factors) {
    factors.push_back({{"label", f.label}, {"order", to_json(f.order)}, {"generator", to_json(f.generator.coeffs())}});
    out.text += f.label + ":" + f.order.get_str() + "\n";
  }
  out.doc = {{"params", to_json(ps)}, {"factors", factors}, {"order", to_json(gs.order())}};
  return out;
}

Output cmd_verify_t5(std::int64_t q) {
  const auto rep = verify_t5_example(q);
  Output out;
  json gd = json::array();
  for (const auto& g : rep.g_d) gd.push_back(to_json(g.exponents()));
  out.doc = {{"q", q},
             {"pass", rep.pass()},
             {"checks", rep.checks},
             {"mismatches", rep.mismatches},
             {"c_matrix", to_json(rep.c_matrix)},
             {"d_matrix", to_json(rep.d_matrix)},
             {"g_d", gd}};
  std::ostringstream os;
  os << "C-matrix\n" << table(rep.c_matrix) << "D-matrix\n" << table(rep.d_matrix);
  for (std::size_t i = 0; i < rep.g_d.size(); ++i) os << "g(D" << i << ") = " << joined(rep.g_d[i].exponents()) << '\n';
  os << (rep.pass() ? "pass" : "FAIL") << " (" << rep.checks << " checks)\n";
  for (const auto& m : rep.mismatches) os << "  " << m << '\n';
  out.text = os.str();
  out.status = rep.pass() ? 0 : 1;
  return out;
}

Output cmd_selftest(const std::string& grid_name) {
  const auto grid = grid_name == "full" ? acceptance::Grid::full() : acceptance::Grid::small();
  std::vector<std::future<acceptance::CriterionResult>> jobs;
  for (auto& c : acceptance::criteria()) jobs.push_back(std::async(std::launch::async, c, std::cref(grid)));

  Output out;
  json rows = json::array();
  bool all = true;
  for (auto& j : jobs) {
    const auto r = j.get();
    all = all && r.passed();
    json row = {{"id", r.id}, {"title", r.title}, {"passed", r.passed()}, {"checks", r.checks}, {"failures", r.failures}};
    if (!r.passed()) row["first_failure"] = r.first_failure;
    rows.push_back(std::move(row));
    out.text += std::string(r.passed() ? "[PASS] " : "[FAIL] ") + std::to_string(r.id) + " " + r.title + "\n";
    if (!r.passed()) out.text += "       " + r.first_failure + "\n";
  }
  out.doc = {{"grid", grid_name}, {"criteria", rows}, {"passed", all}};
  out.status = all ? 0 : 1;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rational cuspidal divisor class groups of X_0(p^r) over F_q(T)"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "table";
  std::string out_path;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--out", out_path, "Also write the output document to this file");

  std::int64_t q = 0;
  int deg_p = 1, r = 0, height = 0;
  bool inverse = false;
  std::string coeffs, edge, grid = "small";

  auto add_level = [&](CLI::App* sub, bool with_deg) {
    sub->add_option("--q", q, "Size of the constant field")->required();
    if (with_deg) sub->add_option("--deg-p", deg_p, "Degree of the prime p")->required();
    sub->add_option("--r", r, "Exponent of the level p^r")->required();
  };

  auto* lambda = app.add_subcommand("lambda", "Print Lambda^T, or Lambda^{-1} with --inverse");
  add_level(lambda, true);
  lambda->add_flag("--inverse", inverse, "Print the inverse");

  auto* gmap = app.add_subcommand("gmap", "Delta-quotient g(D) of a degree-0 divisor");
  add_level(gmap, true);
  gmap->add_option("--coeffs", coeffs, "a0,...,ar in the (P_{p^i}) basis")->required();

  auto* cochain = app.add_subcommand("cochain-eval", "r(Delta_{p^i}) on an edge");
  add_level(cochain, true);
  cochain->add_option("--height", height, "i in 0..r")->required();
  cochain->add_option("--edge", edge, "k,0 or k,pi")->required();

  auto* order = app.add_subcommand("order", "Order bounds of [0]-[inf]");
  add_level(order, true);

  auto* structure = app.add_subcommand("structure", "Prime-to-(q-1) part of C(T^r)");
  add_level(structure, false);

  auto* t5 = app.add_subcommand("verify-t5", "Check the level T^5 example");
  t5->add_option("--q", q, "Size of the constant field")->required();

  auto* selftest = app.add_subcommand("selftest", "Run the acceptance criteria");
  selftest->add_option("--grid", grid, "Parameter grid")->check(CLI::IsMember({"small", "full"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Output out;
  try {
    auto level = [&] { return validate_params(q, deg_p, r); };
    if (*lambda) out = cmd_lambda(level(), inverse);
    else if (*gmap) out = cmd_gmap(level(), coeffs);
    else if (*cochain) out = cmd_cochain(level(), height, edge);
    else if (*order) out = cmd_order(level());
    else if (*structure) out = cmd_structure(validate_params(q, 1, r));
    else if (*t5) out = cmd_verify_t5(validate_params(q, 1, 5).q());
    else out = cmd_selftest(grid);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    out.doc = {{"error", e.name()}, {"message", e.what()}};
    out.text = std::string("error: ") + e.what() + "\n";
    out.status = 1;
    if (format == "table") return 1;
  }

  const std::string text = format == "json" ? out.doc.dump() + "\n" : out.text;
  std::cout << text;
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f || !(f << text)) {
      std::cerr << "error: cannot write " << out_path << '\n';
      return 1;
    }
  }
  return out.status;
}
