#pragma once

// Theorem-replay suites. Each suite is deterministic in (space, degree,
// trials, seed); trials run in parallel with per-trial derived seeds.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "supercalc/superalgebra.hpp"

namespace supercalc::verify {

struct Failure {
  int trial = 0;
  std::string input;
  std::string lhs;
  std::string rhs;
};

struct SuiteReport {
  std::string suite;
  SpaceSignature space{};
  int degree = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  std::vector<Failure> failures;
  std::string skipped;             // reason, empty if the suite ran
  std::vector<std::string> notes;  // extra facts worth reporting
  double wall_seconds = 0.0;

  bool passed() const { return failures.empty(); }
};

const std::vector<std::string>& suite_names();

/// Throws UnknownSuite for names outside suite_names().
SuiteReport run_suite(const std::string& id, const SpaceSignature& space, int degree, int trials, std::uint64_t seed);

/// Without wall time unless asked, so reports are reproducible byte for byte.
nlohmann::json to_json(const SuiteReport& report, bool include_timing = false);

/// SUPERCALC_THREADS if set, else the hardware concurrency.
int thread_limit();

/// Runs check(trial) for every trial, collecting failures in trial order.
std::vector<Failure> run_trials(int trials, const std::function<std::optional<Failure>(int)>& check);

struct OrthogonalityResult {
  int triples = 0;
  int off_diagonal_checked = 0;
  std::vector<std::string> off_diagonal_nonzero;  // "(i,p,q)x(j,r,s)"
  std::vector<std::string> diagonal_zero;         // "(i,p,q)"
  bool passed() const { return off_diagonal_nonzero.empty() && diagonal_zero.empty(); }
};

/// Supersphere Gram entries of f_{i,p,q} H^b_p H^f_q over all valid index
/// triples with i + p + q <= max_sum, using up to basis_cap harmonics each.
OrthogonalityResult orthogonality_check(const SpaceSignature& space, int max_sum, int basis_cap = 3);

struct RadonDualResult {
  double max_disagreement = 0.0;
  int samples = 0;
  bool fourier_constant_shared = false;
  std::string fourier_constant;  // F+ F- f / f
};

/// Fourier route against the direct route for P exp(x^2),
/// P in {1, x1, q1 q2, x1 q1 q2}, at five (y_b, p) samples with |y_b| = 1.
RadonDualResult radon_dual_check(const SpaceSignature& space);

}  // namespace supercalc::verify
