// supercalc: command-line front end for the exact superspace engine.

#include <CLI11.hpp>
#include <iostream>
#include <regex>
#include <sstream>

#include "supercalc/distributions.hpp"
#include "supercalc/errors.hpp"
#include "supercalc/harmonics.hpp"
#include "supercalc/integration.hpp"
#include "supercalc/operators.hpp"
#include "supercalc/parse.hpp"
#include "supercalc/transforms.hpp"
#include "supercalc/verify/io.hpp"
#include "supercalc/verify/suites.hpp"

namespace sc = supercalc;
namespace sv = supercalc::verify;
using nlohmann::json;

namespace {

struct SpaceArgs {
  int m = 3;
  int n = 1;
  bool doubled = false;

  sc::SpaceSignature space() const {
    sc::SpaceSignature s{m, n, doubled};
    s.validate();
    return s;
  }
};

void add_space(CLI::App* app, SpaceArgs& s, bool allow_doubled = true) {
  app->add_option("--m", s.m, "bosonic dimension")->required();
  app->add_option("--n", s.n, "half the number of anticommuting variables")->required();
  if (allow_doubled) app->add_flag("--doubled", s.doubled, "enable the second anticommuting set y1..y2n");
}

void emit(const sc::Element& e, bool text) {
  if (text) {
    std::cout << sc::format(e) << "\n";
  } else {
    std::cout << sv::to_json(e).dump() << "\n";
  }
}

std::vector<sc::Rational> parse_rational_list(const std::string& text) {
  std::vector<sc::Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(sc::parse_rational(item));
  return out;
}

// "m=2..4,n=0..3"
std::vector<sc::SpaceSignature> parse_grid(const std::string& text) {
  static const std::regex part(R"(\s*([mn])\s*=\s*(\d+)(?:\.\.(\d+))?\s*)");
  int m_lo = 2, m_hi = 4, n_lo = 0, n_hi = 3;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::smatch mt;
    if (!std::regex_match(item, mt, part)) throw std::invalid_argument("bad grid component '" + item + "'");
    const int lo = std::stoi(mt[2]);
    const int hi = mt[3].matched ? std::stoi(mt[3]) : lo;
    (mt[1] == "m" ? m_lo : n_lo) = lo;
    (mt[1] == "m" ? m_hi : n_hi) = hi;
  }
  std::vector<sc::SpaceSignature> out;
  for (int m = m_lo; m <= m_hi; ++m) {
    for (int n = n_lo; n <= n_hi; ++n) out.push_back({m, n, false});
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact calculus in superspace: operators, integrals, distributions, harmonics, transforms"};
  app.require_subcommand(1);

  // op
  SpaceArgs op_space;
  std::string op_kind, op_expr;
  bool op_text = false;
  auto* op = app.add_subcommand("op", "apply a differential operator");
  op->add_option("kind", op_kind, "dirac|dirac-right|laplace|euler|gamma|lb")
      ->required()
      ->check(CLI::IsMember({"dirac", "dirac-right", "laplace", "euler", "gamma", "lb"}));
  op->add_option("expr", op_expr, "expression")->required();
  add_space(op, op_space);
  op->add_flag("--text", op_text, "print the canonical expression instead of JSON");

  // int
  SpaceArgs int_space;
  std::string int_kind, int_expr, int_radius = "1";
  int int_k = 0;
  bool int_text = false;
  auto* integ = app.add_subcommand("int", "integrate a polynomial");
  integ->add_option("kind", int_kind, "berezin|pizzetti|supersphere|superball|gaussian|phi")
      ->required()
      ->check(CLI::IsMember({"berezin", "pizzetti", "supersphere", "superball", "gaussian", "phi"}));
  integ->add_option("expr", int_expr, "expression")->required();
  integ->add_option("--radius", int_radius, "positive rational radius for supersphere");
  integ->add_option("--k", int_k, "index of phi_k");
  add_space(integ, int_space);
  integ->add_flag("--text", int_text, "print the canonical expression instead of JSON");

  // dist
  SpaceArgs dist_space;
  std::string dist_kind, dist_shift = "1", dist_pair;
  bool dist_dirac = false, dist_json = false;
  auto* dist = app.add_subcommand("dist", "expand a radial distribution");
  dist->add_option("kind", dist_kind, "heaviside|delta")->required()->check(CLI::IsMember({"heaviside", "delta"}));
  dist->add_option("--shift", dist_shift, "rational c in D(x^2 + c)");
  dist->add_flag("--apply-dirac", dist_dirac, "apply the Dirac operator to the expansion");
  dist->add_option("--pair", dist_pair, "integrate the distribution against this expression");
  dist->add_flag("--json", dist_json, "JSON output");
  add_space(dist, dist_space, false);

  // harmonics
  SpaceArgs harm_space;
  int harm_k = 0, harm_weyl = 1;
  bool harm_monogenic = false, harm_json = false;
  auto* harm = app.add_subcommand("harmonics", "basis of spherical harmonics or monogenics of degree k");
  harm->add_option("--k", harm_k, "degree")->required();
  harm->add_flag("--monogenic", harm_monogenic, "kernel of the Dirac operator instead of the Laplacian");
  harm->add_option("--weyl-bound", harm_weyl, "Weyl degree filtration for monogenics");
  harm->add_flag("--json", harm_json, "JSON output");
  add_space(harm, harm_space, false);

  // uniqueness
  SpaceArgs uniq_space;
  int uniq_degree = 0;
  bool uniq_json = false;
  auto* uniq = app.add_subcommand("uniqueness", "certificate that the supersphere integral is the unique orthogonal one");
  uniq->add_option("--degree", uniq_degree, "degree bound for the integration-space certificate (default 2n+2)");
  uniq->add_flag("--json", uniq_json, "JSON output");
  add_space(uniq, uniq_space, false);

  // radon
  SpaceArgs radon_space;
  std::string radon_y, radon_p = "0", radon_route = "both", radon_f = "1";
  double radon_tol = 1e-6;
  bool radon_json = false;
  auto* radon = app.add_subcommand("radon", "Radon transform of P exp(x^2)");
  radon->add_option("--y", radon_y, "bosonic direction, comma separated rationals")->required();
  radon->add_option("--p", radon_p, "rational offset");
  radon->add_option("--route", radon_route, "fourier|direct|both")->check(CLI::IsMember({"fourier", "direct", "both"}));
  radon->add_option("--tol", radon_tol, "agreement and quadrature tolerance");
  radon->add_option("--f", radon_f, "polynomial P in f = P exp(x^2)");
  radon->add_flag("--json", radon_json, "JSON output");
  add_space(radon, radon_space, false);

  // verify
  SpaceArgs ver_space;
  std::string ver_suite, ver_grid = "m=2..4,n=0..3";
  int ver_degree = 4, ver_trials = 100;
  std::uint64_t ver_seed = 7;
  bool ver_json = false, ver_timing = false;
  auto* ver = app.add_subcommand("verify", "replay a theorem on seeded inputs");
  ver->add_option("suite", ver_suite, "suite name or 'all'")->required();
  ver->add_option("--m", ver_space.m, "bosonic dimension");
  ver->add_option("--n", ver_space.n, "half the number of anticommuting variables");
  ver->add_option("--degree", ver_degree, "degree bound");
  ver->add_option("--trials", ver_trials, "number of seeded trials");
  ver->add_option("--seed", ver_seed, "seed");
  ver->add_option("--grid", ver_grid, "space grid for 'all', e.g. m=2..4,n=0..3");
  ver->add_flag("--json", ver_json, "JSON report");
  ver->add_flag("--timing", ver_timing, "include wall time in the report");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*op) {
      const auto space = op_space.space();
      const sc::Element f = sc::parse(op_expr, space);
      static const std::map<std::string, sc::OperatorKind> kinds{
          {"dirac", sc::OperatorKind::dirac_left()}, {"dirac-right", sc::OperatorKind::dirac_right()},
          {"laplace", sc::OperatorKind::laplace()},  {"euler", sc::OperatorKind::euler()},
          {"gamma", sc::OperatorKind::gamma()},      {"lb", sc::OperatorKind::laplace_beltrami()}};
      emit(sc::apply(kinds.at(op_kind), f), op_text);
      return 0;
    }
    if (*integ) {
      const auto space = int_space.space();
      const sc::Element f = sc::parse(int_expr, space);
      const sc::Rational radius = sc::parse_rational(int_radius);
      if (sgn(radius) <= 0) throw std::invalid_argument("radius must be positive");
      sc::Element value;
      if (int_kind == "berezin") {
        value = sc::berezin(f);
      } else if (int_kind == "pizzetti") {
        value = sc::pizzetti_supersphere(f);
      } else if (int_kind == "supersphere") {
        value = sc::supersphere_radius(f, radius);
      } else if (int_kind == "superball") {
        value = sc::superball(f);
      } else if (int_kind == "gaussian") {
        value = sc::gaussian_integral(f);
      } else {
        value = sc::phi_k(f, int_k);
      }
      emit(value, int_text);
      return 0;
    }
    if (*dist) {
      const auto space = dist_space.space();
      const auto kind = dist_kind == "heaviside" ? sc::RadialKind::Heaviside : sc::RadialKind::Delta;
      sc::RadialDistribution d = sc::expand_radial(kind, sc::parse_rational(dist_shift), space);
      if (dist_dirac) d = sc::dirac_on_radial(d);
      if (!dist_pair.empty()) {
        emit(sc::pair_radial(d, sc::parse(dist_pair, space)), !dist_json);
      } else if (dist_json) {
        std::cout << sv::to_json(d).dump(2) << "\n";
      } else {
        std::cout << sc::to_string(d) << "\n";
      }
      return 0;
    }
    if (*harm) {
      const auto space = harm_space.space();
      const sc::GradedBasis basis =
          harm_monogenic ? sc::monogenic_basis(harm_k, space, harm_weyl) : sc::harmonic_basis(harm_k, space);
      json out = sv::to_json(basis);
      out["space"] = sv::to_json(space);
      out["kind"] = harm_monogenic ? "monogenic" : "harmonic";
      if (harm_monogenic) {
        out["weyl_bound"] = harm_weyl;
      } else {
        out["expected_dimension"] = sc::expected_harmonic_dimension(harm_k, space);
      }
      if (harm_json) {
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << out["kind"].get<std::string>() << " basis, degree " << harm_k << ", dimension "
                  << basis.dimension();
        if (!harm_monogenic) std::cout << " (expected " << out["expected_dimension"].get<long>() << ")";
        std::cout << "\n";
        for (const auto& v : basis.vectors) std::cout << "  " << sc::format(v) << "\n";
      }
      return 0;
    }
    if (*uniq) {
      const auto space = uniq_space.space();
      const sc::UniquenessReport r = sc::uniqueness_check(space);
      const int d = uniq_degree > 0 ? uniq_degree : 2 * space.n + 2;
      const sc::IntegrationSpace is = sc::integration_space(space, d);
      json out = sv::to_json(r);
      out["integration_space"] = {{"degree", d},
                                  {"solution_dimension", is.solution_dimension},
                                  {"determined_by_fermionic_powers", is.determined_by_fermionic_powers},
                                  {"basis_rank", is.basis_rank},
                                  {"basis_satisfies_constraints", is.basis_satisfies_constraints}};
      if (uniq_json) {
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << "space " << space.to_string() << ", t = " << r.t << (r.pole_case ? " (pole case)" : "") << "\n";
        for (const auto& e : r.entries) {
          std::cout << "  k=" << e.k << "  C_k = " << sc::format_scalar_expr(e.c_k)
                    << "  no x^2 factor: " << (e.not_divisible && e.not_divisible_bivariate ? "yes" : "no") << "\n";
        }
        std::cout << "  solution dimension " << r.solution_dimension << ", basis rank " << r.basis_rank << "\n";
        std::cout << (r.passed ? "passed" : "FAILED") << "\n";
      }
      return r.passed ? 0 : 1;
    }
    if (*radon) {
      const auto space = radon_space.space();
      const auto f = sc::times_exp_x_squared(sc::parse(radon_f, space));
      const auto y = parse_rational_list(radon_y);
      const sc::Rational p = sc::parse_rational(radon_p);
      json out{{"space", sv::to_json(space)}, {"f", radon_f + " * exp(x^2)"}, {"p", sc::to_string(p)}};
      std::map<sc::SuperMonomial, std::complex<double>> fourier_values, direct_values;
      auto channels_json = [&](const std::map<sc::SuperMonomial, std::complex<double>>& vals) {
        json arr = json::array();
        for (const auto& [mono, v] : vals) {
          json t = sv::to_json(mono, space);
          t["re"] = v.real();
          t["im"] = v.imag();
          arr.push_back(std::move(t));
        }
        return arr;
      };
      if (radon_route != "direct") {
        const sc::RadonValue rv = sc::radon_fourier(f, y);
        fourier_values = rv.evaluate(p.get_d());
        out["fourier"] = sv::to_json(rv);
        out["fourier_sample"] = channels_json(fourier_values);
      }
      if (radon_route != "fourier") {
        sc::RadonQuadSpec spec;
        spec.tolerance = radon_tol;
        const sc::NumericChannels direct = sc::radon_direct_numeric(f, y, p, spec);
        direct_values = direct.values;
        out["direct_sample"] = channels_json(direct_values);
        out["direct_error"] = direct.error;
      }
      int code = 0;
      if (radon_route == "both") {
        const double rel = sc::relative_disagreement(fourier_values, direct_values);
        out["relative_disagreement"] = rel;
        out["agree"] = rel <= radon_tol;
        code = rel <= radon_tol ? 0 : 1;
      }
      if (radon_json) {
        std::cout << out.dump(2) << "\n";
      } else {
        auto show = [&](const char* label, const std::map<sc::SuperMonomial, std::complex<double>>& vals) {
          std::cout << label << "\n";
          for (const auto& [mono, v] : vals) {
            std::cout << "  " << sc::format(sc::Element::monomial(space, mono)) << ": " << v.real();
            if (v.imag() != 0) std::cout << (v.imag() < 0 ? " - " : " + ") << std::abs(v.imag()) << " i";
            std::cout << "\n";
          }
        };
        if (radon_route != "direct") show("fourier route", fourier_values);
        if (radon_route != "fourier") show("direct route", direct_values);
        if (radon_route == "both") std::cout << "relative disagreement " << out["relative_disagreement"].get<double>() << "\n";
      }
      return code;
    }
    if (*ver) {
      std::vector<sv::SuiteReport> reports;
      if (ver_suite == "all") {
        for (const auto& space : parse_grid(ver_grid)) {
          for (const auto& name : sv::suite_names()) reports.push_back(sv::run_suite(name, space, ver_degree, ver_trials, ver_seed));
        }
      } else {
        reports.push_back(sv::run_suite(ver_suite, ver_space.space(), ver_degree, ver_trials, ver_seed));
      }
      bool ok = true;
      json arr = json::array();
      for (const auto& r : reports) {
        ok = ok && r.passed();
        arr.push_back(sv::to_json(r, ver_timing));
      }
      if (ver_json) {
        std::cout << (reports.size() == 1 ? arr[0] : arr).dump(2) << "\n";
      } else {
        for (const auto& r : reports) {
          std::cout << (r.passed() ? "PASS " : "FAIL ") << r.suite << " " << r.space.to_string();
          if (!r.skipped.empty()) std::cout << " (skipped: " << r.skipped << ")";
          if (ver_timing) std::cout << " " << r.wall_seconds << " s";
          std::cout << "\n";
          for (const auto& f : r.failures) {
            std::cout << "  trial " << f.trial << ": " << f.input << "\n    lhs: " << f.lhs << "\n    rhs: " << f.rhs << "\n";
          }
        }
      }
      return ok ? 0 : 1;
    }
  } catch (const sc::SyntaxError& e) {
    std::cerr << "SyntaxError: " << e.what() << "\n";
    return 2;
  } catch (const sc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
