#pragma once

#include "orthograph/algebra_core.hpp"
#include "orthograph/types.hpp"

#include <optional>

namespace orthograph {

// Witness for a positive strong-orthogonality verdict: a unit vector x at one
// coordinate with ||a_i x|| = ||a|| and b_i* a_i x = 0 (both after scaling).
struct OrthCertificate {
  int coordinate_index = 0;
  Vec witness;
  double norm_residual = 0;  // | ||a_i x|| - ||a|| | / ||a||
  double orth_residual = 0;  // || b_i* a_i x || / (||a|| ||b_i||), 0 if b_i = 0
};

struct OrthDecision {
  Tri verdict = Tri::Uncertain;
  double margin = 0;  // distance from the decision threshold, relative scale
  std::optional<OrthCertificate> certificate;
};

struct OrthDecisionPair {
  OrthDecision forward;   // a perp^S b
  OrthDecision backward;  // b perp^S a
  bool adjacent() const {
    return forward.verdict == Tri::Yes && backward.verdict == Tri::Yes;
  }
};

// Distance from a to the right ideal b*M_n: || (I - P_b) a ||.
double ideal_distance(const Mat& a, const Mat& b, const ToleranceConfig& tol = {});

// a perp^S b in M_n, via the leading-subspace criterion cross-checked against
// the ideal-distance criterion; firm verdicts require agreement.
OrthDecision strong_orth_matrix(const Mat& a, const Mat& b, const ToleranceConfig& tol = {});

// Same decision with the two internal criteria reported separately.
struct MatrixDecisionDetail {
  Tri subspace_verdict = Tri::Uncertain;
  Tri distance_verdict = Tri::Uncertain;
  double subspace_value = 0;  // sigma_min(b* U) / ||b||
  double distance_gap = 0;    // (||a|| - ideal_distance) / ||a||
  OrthDecision fused;
};
MatrixDecisionDetail strong_orth_matrix_detailed(const Mat& a, const Mat& b,
                                                 const ToleranceConfig& tol = {});

// a perp^S b in a direct sum: the max of coordinate ideal distances must reach
// ||a||, with the certificate taken at an achieving coordinate.
OrthDecision strong_orth_directsum(const DirectSumElement& a, const DirectSumElement& b,
                                   const ToleranceConfig& tol = {});

// Both directions; "adjacent" iff both verdicts are yes.
OrthDecisionPair mutual_strong_orth(const DirectSumElement& a, const DirectSumElement& b,
                                    const ToleranceConfig& tol = {});

// Exact decision over signature (1,...,1): a perp^S b iff the max of |a_i|
// over {i : b_i = 0} equals max |a_i|. Zero tests are exact on input values.
bool strong_orth_scalars_one_way(const DirectSumElement& a, const DirectSumElement& b);
bool strong_orth_scalars(const DirectSumElement& a, const DirectSumElement& b);

// Isolated iff every coordinate is invertible.
Tri is_isolated_vertex(const DirectSumElement& a, const ToleranceConfig& tol = {});

// Connected-component label of a rank-one 2x2 matrix: the canonical
// representative of { x, x_perp } where Im a = Lin{x}.
struct M2ComponentLabel {
  Vec line;  // unit vector in C^2, phase-normalized, lexicographically canonical
};
M2ComponentLabel m2_component(const Mat& a, const ToleranceConfig& tol = {});

bool same_m2_component(const M2ComponentLabel& x, const M2ComponentLabel& y,
                       const ToleranceConfig& tol = {});

// For rank-one 2x2 a, b: mutual strong orthogonality iff image lines orthogonal.
bool m2_adjacent(const Mat& a, const Mat& b, const ToleranceConfig& tol = {});

}  // namespace orthograph
