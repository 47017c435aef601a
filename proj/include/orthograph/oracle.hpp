#pragma once

#include "orthograph/bj_decide.hpp"

#include <cstdint>
#include <functional>

namespace orthograph {

struct MinNormConfig {
  int restarts = 8;      // extra random starts beyond the zero start
  int iterations = 500;  // total descent iterations per start
  std::uint64_t seed = 1;
};

// Upper bound on min_c ||a + b c||, by smoothed-norm descent from multiple
// starts. Decreasing in `iterations`; at convergence it matches the true
// minimum to well below 1e-6 on desk-scale instances. Uses only the norm
// definition, none of the closed-form machinery it is meant to validate.
double min_norm_search(const Mat& a, const Mat& b, const MinNormConfig& cfg = {});

// Exact mutual strong orthogonality over an all-scalar signature, decided by
// minimizing each coordinate independently: min_c |a + bc| = |a| if b = 0,
// else 0. Independent of strong_orth_scalars.
bool exhaustive_scalar_orth(const DirectSumElement& u, const DirectSumElement& v);

struct GateFailure {
  std::string check;
  DirectSumElement first;
  DirectSumElement second;
  double discrepancy = 0;
};

struct GateConfig {
  std::vector<int> sizes{2, 3, 4, 5};
  int pairs_per_size = 1000;  // matrix-level distance + contradiction checks
  int directsum_trials = 100;
  int m2_trials = 200;
  int scalar_trials = 200;
  MinNormConfig search{2, 400, 1};
  int n_threads = 0;  // 0 = hardware concurrency
  ToleranceConfig tol;
  // Distance formula under test; defaults to ideal_distance. Injectable so the
  // gate can prove it detects a corrupted formula.
  std::function<double(const Mat&, const Mat&, const ToleranceConfig&)> distance_fn;
};

struct GateReport {
  bool passed = true;
  int trials = 0;
  double max_distance_discrepancy = 0;
  std::vector<GateFailure> failures;  // capped at 16
};

// Randomized validation of every derived rule: the ideal-distance formula
// against min_norm_search, firm agreement of the two matrix checkers, the
// direct-sum max rule against per-coordinate search, the scalar rule against
// exhaustive_scalar_orth, and the M_2 image-line rule against the mutual
// checker. Deterministic per seed.
GateReport derived_rule_gate(std::uint64_t seed, const GateConfig& cfg = {});

}  // namespace orthograph
