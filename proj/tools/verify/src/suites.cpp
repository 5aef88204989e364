#include "supercalc/verify/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <mutex>
#include <thread>

#include "supercalc/distributions.hpp"
#include "supercalc/errors.hpp"
#include "supercalc/harmonics.hpp"
#include "supercalc/integration.hpp"
#include "supercalc/operators.hpp"
#include "supercalc/parse.hpp"
#include "supercalc/transforms.hpp"
#include "supercalc/verify/io.hpp"
#include "supercalc/verify/numeric.hpp"
#include "supercalc/verify/random.hpp"

namespace supercalc::verify {

int thread_limit() {
  if (const char* env = std::getenv("SUPERCALC_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<Failure> run_trials(int trials, const std::function<std::optional<Failure>(int)>& check) {
  std::vector<Failure> failures;
  std::mutex lock;
  std::atomic<int> next{0};
  std::exception_ptr error;
  auto worker = [&] {
    for (int t = next++; t < trials; t = next++) {
      try {
        if (auto f = check(t)) {
          f->trial = t;
          std::lock_guard<std::mutex> g(lock);
          failures.push_back(std::move(*f));
        }
      } catch (...) {
        std::lock_guard<std::mutex> g(lock);
        if (!error) error = std::current_exception();
      }
    }
  };
  const int threads = std::min(thread_limit(), std::max(trials, 1));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
  std::sort(failures.begin(), failures.end(), [](const Failure& a, const Failure& b) { return a.trial < b.trial; });
  return failures;
}

namespace {

using Check = std::function<std::optional<Failure>(int)>;

std::optional<Failure> compare(const std::string& input, const Element& lhs, const Element& rhs) {
  if (lhs == rhs) return std::nullopt;
  return Failure{0, input, format(lhs), format(rhs)};
}

bool pole(int twice) { return twice <= 0 && twice % 2 == 0; }

struct Context {
  SpaceSignature space;
  int degree;
  int trials;
  std::uint64_t seed;
  SuiteReport* report;

  ElementGenerator gen(int trial, int stream = 0) const {
    return ElementGenerator(space, derive_seed(seed, static_cast<std::uint64_t>(trial) * 8 + static_cast<std::uint64_t>(stream)));
  }
  void run(const Check& check) const { report->failures = run_trials(trials, check); }
  void run(int count, const Check& check) const { report->failures = run_trials(count, check); }
  bool skip_unless(bool condition, const std::string& why) const {
    if (!condition) report->skipped = why;
    return !condition;
  }
};

void dirac_square(const Context& c) {
  c.run([&](int t) {
    auto g = c.gen(t);
    RandomOptions opt;
    opt.max_degree = c.degree;
    const Element f = g.element(opt);
    return compare(format(f), dirac_left(dirac_left(f)), laplace(f));
  });
}

void relations_laplace(const Context& c) {
  const int superdim = c.space.superdimension();
  const Element x2 = x_squared(c.space);
  c.run([&](int t) {
    auto g = c.gen(t);
    RandomOptions opt;
    opt.homogeneous = true;
    opt.max_degree = t % (std::min(c.degree, 4) + 1);
    const int k = opt.max_degree;
    const int tt = 1 + (t / 5) % 3;
    Element r = g.element(opt);
    r = r.homogeneous_part(k);
    const Element lhs = laplace(mul(power(x2, tt), r));
    const Element rhs = mul(power(x2, tt - 1), r) * Scalar(2L * tt * (2L * k + superdim + 2L * tt - 2)) +
                        mul(power(x2, tt), laplace(r));
    return compare("t=" + std::to_string(tt) + " R=" + format(r), lhs, rhs);
  });
}

void pizzetti_closed(const Context& c) {
  if (c.skip_unless(c.space.m >= 2, "needs m >= 2")) return;
  std::vector<SuperMonomial> monos;
  for (int k = 0; k <= c.degree; ++k) {
    const auto layer = monomial_basis(k, c.space);
    monos.insert(monos.end(), layer.begin(), layer.end());
  }
  c.report->trials = static_cast<int>(monos.size());
  c.run(static_cast<int>(monos.size()), [&](int t) {
    const Element f = Element::monomial(c.space, monos[static_cast<std::size_t>(t)]);
    return compare(format(f), pizzetti_supersphere(f), supersphere_closed(f, Rational(1)));
  });
}

void green_superball(const Context& c) {
  if (c.skip_unless(c.space.m >= 2, "needs m >= 2")) return;
  c.run([&](int t) -> std::optional<Failure> {
    auto g = c.gen(t);
    RandomOptions opt;
    opt.max_degree = std::min(c.degree, 3);
    opt.max_terms = 4;
    const Element f = g.element(opt);
    const Element h = g.element(opt);
    if (superball_cauchy_check(f, h)) return std::nullopt;
    const Element lhs = superball(mul(dirac_right(f), h) + mul(f, dirac_left(h)));
    const Element rhs = -pizzetti_supersphere(mul(mul(f, vector_x(c.space)), h));
    return Failure{0, "f=" + format(f) + " g=" + format(h), format(lhs), format(rhs)};
  });
}

void gamma_annihilation(const Context& c) {
  if (c.skip_unless(c.space.m >= 2, "needs m >= 2")) return;
  c.run([&](int t) -> std::optional<Failure> {
    auto g = c.gen(t);
    const RandomOptions opt = scalar_polynomials(c.degree);
    const Element f = g.element(opt);
    const Element h = g.element(opt);
    const Element zero(c.space);
    if (auto bad = compare("Gamma f, f=" + format(f), pizzetti_supersphere(gamma_op(f)), zero)) return bad;
    if (auto bad = compare("LB f, f=" + format(f), pizzetti_supersphere(laplace_beltrami(f)), zero)) return bad;
    const Element sphere = pizzetti_supersphere(mul(f, euler(h)) - mul(euler(f), h));
    // Minus sign: Delta = d_x^2 is minus the classical Laplacian, so n = 0
    // must reduce to the classical Green identity.
    const Element ball = -superball(mul(f, laplace(h)) - mul(laplace(f), h));
    return compare("Green f=" + format(f) + " g=" + format(h), sphere, ball);
  });
}

RandomOptions fermionic_weight(int max_degree) {
  RandomOptions opt;
  opt.fermionic_only = true;
  opt.max_degree = max_degree;
  opt.max_terms = 4;
  return opt;
}

void fermionic_cauchy(const Context& c) {
  if (c.skip_unless(c.space.n >= 1, "needs n >= 1")) return;
  c.run([&](int t) -> std::optional<Failure> {
    auto g = c.gen(t);
    RandomOptions opt;
    opt.max_degree = c.degree;
    opt.max_terms = 5;
    const Element f = g.element(opt);
    const Element h = g.element(opt);
    const Element alpha = g.element(fermionic_weight(2 * c.space.n));
    if (fermionic_cauchy_check(f, h, alpha)) return std::nullopt;
    return Failure{0, "f=" + format(f) + " g=" + format(h) + " alpha=" + format(alpha), "identity", "violated"};
  });
}

void box_cauchy(const Context& c) {
  if (c.skip_unless(c.space.m >= 2, "needs m >= 2")) return;
  c.run([&](int t) -> std::optional<Failure> {
    auto g = c.gen(t);
    RandomOptions opt;
    opt.max_degree = c.degree;
    opt.max_terms = 5;
    const Element f = g.element(opt);
    const Element h = g.element(opt);
    const Element beta = c.space.n > 0 ? g.element(fermionic_weight(2 * c.space.n)) : Element(c.space);
    if (box_cauchy_check(f, h, beta)) return std::nullopt;
    return Failure{0, "f=" + format(f) + " g=" + format(h) + " beta=" + format(beta), "identity", "violated"};
  });
}

void heaviside_dirac(const Context& c) {
  const std::vector<Rational> shifts{Rational(1), Rational(4), make_rational(1, 4)};
  c.report->trials = static_cast<int>(shifts.size());
  const Element two_x = vector_x(c.space) * Scalar(2);
  c.run(static_cast<int>(shifts.size()), [&](int t) -> std::optional<Failure> {
    const Rational& shift = shifts[static_cast<std::size_t>(t)];
    const RadialDistribution lhs = dirac_on_radial(expand_radial(RadialKind::Heaviside, shift, c.space));
    const RadialDistribution rhs = left_multiply(two_x, expand_radial(RadialKind::Delta, shift, c.space));
    if (lhs == rhs) return std::nullopt;
    return Failure{0, "shift=" + to_string(shift), to_string(lhs), to_string(rhs)};
  });
}

void orthogonality(const Context& c) {
  if (c.skip_unless(c.space.m >= 2 && c.space.n >= 1, "needs m >= 2 and n >= 1")) return;
  const OrthogonalityResult r = orthogonality_check(c.space, c.degree);
  c.report->trials = r.triples;
  c.report->notes.push_back("index triples: " + std::to_string(r.triples) + ", off-diagonal pairs: " +
                            std::to_string(r.off_diagonal_checked));
  for (const auto& s : r.off_diagonal_nonzero) c.report->failures.push_back({0, s, "nonzero", "0"});
  for (const auto& s : r.diagonal_zero) c.report->failures.push_back({0, s, "0", "nonzero"});
}

void uniqueness(const Context& c) {
  if (c.skip_unless(c.space.m >= 2, "needs m >= 2")) return;
  const UniquenessReport r = uniqueness_check(c.space);
  c.report->trials = 1;
  c.report->notes.push_back(to_json(r).dump());
  if (!r.passed) c.report->failures.push_back({0, c.space.to_string(), "uniqueness certificate", "failed"});
}

void gaussian_rmnss(const Context& c) {
  if (c.skip_unless(c.space.m >= 2, "needs m >= 2")) return;
  const int superdim = c.space.superdimension();
  c.run([&](int t) -> std::optional<Failure> {
    auto g = c.gen(t);
    RandomOptions opt = scalar_polynomials(0);
    opt.homogeneous = true;
    opt.max_degree = 2 * (t % (std::min(c.degree, 6) / 2 + 1));
    const int k = opt.max_degree;
    const Element r = g.element(opt).homogeneous_part(k);
    const Element direct = gaussian_integral(r);
    if (auto bad = compare("merged R=" + format(r), direct, gaussian_merged(r))) return bad;
    if (!pole(k + superdim)) {
      const Element rhs = pizzetti_supersphere(r) * (gamma_half(HalfInt{k + superdim}) * Scalar(make_rational(1, 2)));
      return compare("Gamma form R=" + format(r), direct, rhs);
    }
    return std::nullopt;
  });
}

void radial_decomposition(const Context& c) {
  if (c.skip_unless(c.space.m >= 2 && c.space.superdimension() > 0, "needs m >= 2 and M > 0")) return;
  const int superdim = c.space.superdimension();
  c.run([&](int t) -> std::optional<Failure> {
    auto g = c.gen(t);
    RandomOptions opt = scalar_polynomials(std::min(c.degree, 4));
    opt.max_terms = 6;
    const Element p = g.element(opt);
    if (auto bad = compare("P=" + format(p), radial_integral(p), gaussian_integral(p))) return bad;
    if (t != 0 || c.space.m > 4) return std::nullopt;
    // numeric oracle on f(x) = P exp(x^2) at two radii
    const auto profile = radial_profile(p);
    const NumericSuperfunction nf = channelize(times_exp_x_squared(p));
    QuadSpec quad;
    quad.tolerance = 1e-6;
    for (double radius : {1.0, 1.5}) {
      const NumericResult num = numeric_supersphere(nf, radius, quad);
      std::map<SuperMonomial, double> exact;
      for (const auto& [k, coeff] : profile) {
        for (const auto& [word, s] : coeff.terms()) {
          exact[word] += s.to_complex().real() * std::pow(radius, k + superdim - 1) * std::exp(-radius * radius);
        }
      }
      double diff = 0;
      for (const auto& [w, v] : exact) diff = std::max(diff, std::abs(v - (num.values.count(w) ? num.values.at(w) : 0.0)));
      for (const auto& [w, v] : num.values) diff = std::max(diff, std::abs(v - (exact.count(w) ? exact.at(w) : 0.0)));
      if (diff > 1e-6) {
        return Failure{0, "numeric P=" + format(p) + " R=" + std::to_string(radius), std::to_string(diff), "<= 1e-6"};
      }
    }
    return std::nullopt;
  });
}

void radius_scaling(const Context& c) {
  if (c.skip_unless(c.space.m >= 2, "needs m >= 2")) return;
  const std::vector<Rational> radii{Rational(2), make_rational(1, 2), Rational(3)};
  const int superdim = c.space.superdimension();
  c.run([&](int t) {
    auto g = c.gen(t);
    RandomOptions opt;
    opt.max_degree = c.degree;
    const Element f = g.element(opt);
    const Rational& r = radii[static_cast<std::size_t>(t) % radii.size()];
    const Element scaled = pizzetti_supersphere(scale_variables(f, r)) * Scalar(rational_pow(r, superdim - 1));
    return compare("R=" + to_string(r) + " f=" + format(f), supersphere_closed(f, r), scaled);
  });
}

void phi_basis(const Context& c) {
  if (c.skip_unless(c.space.m >= 2, "needs m >= 2")) return;
  const int n = c.space.n;
  const IntegrationSpace is = integration_space(c.space, std::max(c.degree, 2 * n + 2));
  c.report->notes.push_back("solution dimension " + std::to_string(is.solution_dimension) + ", basis rank " +
                            std::to_string(is.basis_rank));
  if (is.solution_dimension != n + 1 || !is.determined_by_fermionic_powers || is.basis_rank != n + 1 ||
      !is.basis_satisfies_constraints) {
    c.report->failures.push_back({-1, "integration space certificate", std::to_string(is.solution_dimension),
                                  std::to_string(n + 1)});
  }
  const Element x2 = x_squared(c.space);
  auto failures = run_trials(c.trials, [&](int t) {
    auto g = c.gen(t);
    RandomOptions opt;
    opt.max_degree = c.degree;
    const Element f = g.element(opt);
    const int k = t % (n + 1);
    return compare("k=" + std::to_string(k) + " f=" + format(f), phi_k(mul(x2, f), k), -phi_k(f, k));
  });
  c.report->failures.insert(c.report->failures.end(), failures.begin(), failures.end());
}

void fischer(const Context& c) {
  const int superdim = c.space.superdimension();
  if (c.skip_unless(!pole(superdim), "Fischer decomposition needs M outside -2N")) return;
  const Element x2 = x_squared(c.space);
  c.run([&](int t) -> std::optional<Failure> {
    auto g = c.gen(t);
    RandomOptions opt;
    opt.homogeneous = true;
    opt.max_degree = c.degree;
    const Element f = g.element(opt).homogeneous_part(c.degree);
    Element rebuilt(c.space);
    for (const auto& [j, h] : fischer_project(f)) {
      if (!laplace(h).is_zero() || !(h.homogeneous_part(c.degree - 2 * j) == h)) {
        return Failure{0, format(f), "component " + std::to_string(j) + " = " + format(h), "harmonic"};
      }
      rebuilt += mul(power(x2, j), h);
    }
    return compare(format(f), rebuilt, f);
  });
}

void dirac_preimage_suite(const Context& c) {
  c.run([&](int t) {
    auto g = c.gen(t);
    RandomOptions opt;
    opt.max_degree = std::min(c.degree, 3);
    opt.max_terms = 6;
    const Element h = g.element(opt);
    return compare(format(h), dirac_left(dirac_preimage(h, opt.max_degree)), h);
  });
}

std::string scientific(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

void radon_dual(const Context& c) {
  const RadonDualResult r = radon_dual_check(c.space);
  c.report->trials = r.samples;
  c.report->notes.push_back("max relative disagreement " + scientific(r.max_disagreement));
  c.report->notes.push_back("F+ F- constant " + r.fourier_constant + (r.fourier_constant_shared ? " (shared)" : " (not shared)"));
  if (r.max_disagreement > 1e-6) {
    c.report->failures.push_back({0, "radon routes", scientific(r.max_disagreement), "<= 1e-6"});
  }
  if (!r.fourier_constant_shared) c.report->failures.push_back({0, "F+ F-", "input-dependent", "one global constant"});
}

const std::map<std::string, void (*)(const Context&)>& registry() {
  static const std::map<std::string, void (*)(const Context&)> table{
      {"dirac-square", dirac_square},
      {"relations-laplace", relations_laplace},
      {"pizzetti-closed", pizzetti_closed},
      {"green-superball", green_superball},
      {"gamma-annihilation", gamma_annihilation},
      {"fermionic-cauchy", fermionic_cauchy},
      {"box-cauchy", box_cauchy},
      {"heaviside-dirac", heaviside_dirac},
      {"orthogonality", orthogonality},
      {"uniqueness", uniqueness},
      {"gaussian-rmnss", gaussian_rmnss},
      {"radial-decomposition", radial_decomposition},
      {"radius-scaling", radius_scaling},
      {"phi-basis", phi_basis},
      {"fischer", fischer},
      {"dirac-preimage", dirac_preimage_suite},
      {"radon-dual", radon_dual},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteReport run_suite(const std::string& id, const SpaceSignature& space, int degree, int trials, std::uint64_t seed) {
  const auto it = registry().find(id);
  if (it == registry().end()) throw UnknownSuite("unknown suite '" + id + "'");
  space.validate();
  if (degree < 0 || trials < 0) throw std::invalid_argument("degree and trials must be non-negative");
  SuiteReport report;
  report.suite = id;
  report.space = space;
  report.degree = degree;
  report.trials = trials;
  report.seed = seed;
  const auto start = std::chrono::steady_clock::now();
  it->second(Context{space, degree, trials, seed, &report});
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

nlohmann::json to_json(const SuiteReport& r, bool include_timing) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : r.failures) {
    failures.push_back({{"trial", f.trial}, {"input", f.input}, {"lhs", f.lhs}, {"rhs", f.rhs}});
  }
  nlohmann::json out{{"suite", r.suite},   {"space", to_json(r.space)}, {"degree", r.degree},
                     {"trials", r.trials}, {"seed", r.seed},            {"passed", r.passed()},
                     {"failures", failures}};
  if (!r.skipped.empty()) out["skipped"] = r.skipped;
  if (!r.notes.empty()) out["notes"] = r.notes;
  if (include_timing) out["wall_seconds"] = r.wall_seconds;
  return out;
}

OrthogonalityResult orthogonality_check(const SpaceSignature& space, int max_sum, int basis_cap) {
  struct Piece {
    std::string label;
    std::vector<Element> products;
  };
  const int n = space.n;
  std::vector<Piece> pieces;
  for (int i = 0; i <= max_sum; ++i) {
    for (int p = 0; i + p <= max_sum; ++p) {
      for (int q = 0; i + p + q <= max_sum; ++q) {
        if (!(q < n) || !(i < n - q + 1)) continue;
        const Element f = f_kpq(i, p, q, space);
        auto hb = bosonic_harmonic_basis(p, space).vectors;
        auto hf = fermionic_harmonic_basis(q, space).vectors;
        if (static_cast<int>(hb.size()) > basis_cap) hb.resize(static_cast<std::size_t>(basis_cap));
        if (static_cast<int>(hf.size()) > basis_cap) hf.resize(static_cast<std::size_t>(basis_cap));
        Piece piece{"(" + std::to_string(i) + "," + std::to_string(p) + "," + std::to_string(q) + ")", {}};
        for (const auto& b : hb) {
          for (const auto& h : hf) piece.products.push_back(mul(mul(f, b), h));
        }
        if (!piece.products.empty()) pieces.push_back(std::move(piece));
      }
    }
  }
  OrthogonalityResult out;
  out.triples = static_cast<int>(pieces.size());
  for (std::size_t a = 0; a < pieces.size(); ++a) {
    bool diagonal_nonzero = false;
    for (const auto& u : pieces[a].products) {
      for (const auto& v : pieces[a].products) {
        if (!pizzetti_supersphere(mul(u, v)).is_zero()) diagonal_nonzero = true;
      }
    }
    if (!diagonal_nonzero) out.diagonal_zero.push_back(pieces[a].label);
    for (std::size_t b = a + 1; b < pieces.size(); ++b) {
      ++out.off_diagonal_checked;
      bool zero = true;
      for (const auto& u : pieces[a].products) {
        for (const auto& v : pieces[b].products) {
          if (!pizzetti_supersphere(mul(u, v)).is_zero()) zero = false;
        }
      }
      if (!zero) out.off_diagonal_nonzero.push_back(pieces[a].label + "x" + pieces[b].label);
    }
  }
  return out;
}

RadonDualResult radon_dual_check(const SpaceSignature& space) {
  const int m = space.m;
  // unit directions with rational entries, padded with zeros
  const std::vector<std::vector<Rational>> base{
      {make_rational(3, 5), make_rational(4, 5)},  {Rational(1), Rational(0)},
      {make_rational(5, 13), make_rational(12, 13)}, {Rational(0), Rational(1)},
      {make_rational(8, 17), make_rational(-15, 17)}};
  const std::vector<Rational> ps{Rational(0), make_rational(1, 2), Rational(-1), make_rational(3, 4), Rational(2)};
  std::vector<std::string> sources{"1", "x1"};
  if (space.n >= 1) {
    sources.push_back("q1*q2");
    sources.push_back("x1*q1*q2");
  }
  RadonDualResult out;
  std::optional<Scalar> constant;
  out.fourier_constant_shared = true;
  for (const auto& src : sources) {
    const GaussianClassFunction f = times_exp_x_squared(parse(src, space));
    // F+ F- f against f
    const GaussianClassFunction back = super_fourier(super_fourier(f, FourierSign::Minus), FourierSign::Plus);
    const Element target = fermionic_part(f);
    const SuperMonomial lead = target.terms().begin()->first;
    const Scalar ratio = back.poly.coefficient(lead) * target.coefficient(lead).inverse();
    if (!(back.poly == target * ratio) || !(back.bos_rate == f.bos_rate)) out.fourier_constant_shared = false;
    if (!constant) constant = ratio;
    if (!(*constant == ratio)) out.fourier_constant_shared = false;

    for (std::size_t s = 0; s < base.size(); ++s) {
      std::vector<Rational> y(static_cast<std::size_t>(m));
      if (m == 1) {
        y[0] = Rational(1);
      } else {
        for (std::size_t i = 0; i < 2; ++i) y[i] = base[s][i];
      }
      const RadonValue rv = radon_fourier(f, y);
      const NumericChannels direct = radon_direct_numeric(f, y, ps[s]);
      out.max_disagreement = std::max(out.max_disagreement, relative_disagreement(rv.evaluate(ps[s].get_d()), direct.values));
      ++out.samples;
    }
  }
  out.fourier_constant = constant ? format_scalar_expr(*constant) : "";
  return out;
}

}  // namespace supercalc::verify
