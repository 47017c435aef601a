#pragma once

#include "orthograph/bj_decide.hpp"

namespace orthograph {

enum class LowerBoundStatus { Proven, Refuted, NotApplicable };

struct ProofStep {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct LowerBoundReport {
  DirectSumElement first;
  DirectSumElement second;
  int claimed_min_distance = 0;
  std::vector<ProofStep> steps;
  LowerBoundStatus overall = LowerBoundStatus::NotApplicable;
  std::string note;
};

const char* to_string(LowerBoundStatus s);

// Exact support/max analysis over signature (1,...,1): proves distance >= 3
// (non-adjacent and no common neighbor) or refutes it with a witness.
LowerBoundReport no_common_neighbor_scalars(const DirectSumElement& u,
                                            const DirectSumElement& v);

// Replays the C + M_2 distance-4 case analysis: non-adjacency, no common
// neighbor, and the three structural length-3 cases. Proven means distance
// >= 4 for the pair.
LowerBoundReport c_m2_distance4(const DirectSumElement& u, const DirectSumElement& v,
                                const ToleranceConfig& tol = {});

// Dominant rank-one M_2 coordinate with image lines neither equal nor
// orthogonal: proves distance >= 3 for any signature containing the pattern.
LowerBoundReport dominant_m2_distance_ge3(const DirectSumElement& u,
                                          const DirectSumElement& v, int i,
                                          const ToleranceConfig& tol = {});

}  // namespace orthograph
