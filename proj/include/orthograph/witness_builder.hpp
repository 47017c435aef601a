#pragma once

#include "orthograph/bj_decide.hpp"

namespace orthograph {

enum class TheoremCase {
  SameVertex,
  Adjacent,
  DistinctCoordinates,
  ViaUnit,
  Combination,
  TwoMatrixSummands,
  CPlusM3,
  ThreeSummands,
  MatrixAlgebra,
  HardCaseFallback,
};

const char* to_string(TheoremCase c);

// Length bound promised by each construction (edge count).
int theorem_case_bound(TheoremCase c);

// A certified path: consecutive vertices mutually strong orthogonal, with the
// decision pair for every edge in both directions.
struct PathWitness {
  std::vector<DirectSumElement> vertices;
  std::vector<OrthDecisionPair> edge_certificates;
  TheoremCase theorem_case = TheoremCase::Adjacent;

  int length() const { return static_cast<int>(edge_certificates.size()); }
};

// Rank-one v v* for a unit v in ker(a*). Satisfies a* (v v*) = 0, hence
// mutual strong orthogonality with a.
Mat annihilator_witness(const Mat& a, const ToleranceConfig& tol = {});

// u_i, v_j nonzero non-invertible at distinct coordinates: length-3 path with
// zero-padded rank-one middles.
PathWitness path_distinct_coordinates(const DirectSumElement& u, const DirectSumElement& v,
                                      int i, int j, const ToleranceConfig& tol = {});

// Non-invertibles only at coordinate k, dominated in norm on both sides:
// length-2 path through the identity-at-k vertex.
PathWitness path_via_unit(const DirectSumElement& u, const DirectSumElement& v, int k,
                          const ToleranceConfig& tol = {});

// u dominated at k, v strictly dominant at k: length-3 path through the
// identity-at-k vertex and a norm-padded annihilator of v_k.
PathWitness path_combination(const DirectSumElement& u, const DirectSumElement& v, int k,
                             const ToleranceConfig& tol = {});

// Two matrix summands (both sizes >= 2), non-invertibles strictly dominant at
// the same coordinate: length-3 path with corner-diagonal padding.
PathWitness path_two_matrix_summands(const DirectSumElement& u, const DirectSumElement& v,
                                     const ToleranceConfig& tol = {});

// C + M_3 with strictly dominant non-invertible matrix parts: length-3 path
// through the constructed idempotents e and f.
PathWitness path_c_plus_m3(const DirectSumElement& u, const DirectSumElement& v,
                           const ToleranceConfig& tol = {});

// k >= 3 summands, non-invertibles strictly dominant at coordinate i with
// n_i >= 2: length-3 path with identity padding at opposite ends.
PathWitness path_three_summands(const DirectSumElement& u, const DirectSumElement& v, int i,
                                const ToleranceConfig& tol = {});

// Dispatcher: classifies the pair, delegates to the matching construction and
// returns a certified path of length <= 4. The C + M_2 dominant regime goes
// through the fallback search (theorem_case = HardCaseFallback).
PathWitness route(const DirectSumElement& u, const DirectSumElement& v,
                  const ToleranceConfig& tol = {});

// Revalidates every edge with mutual_strong_orth; throws ConstructionError on
// any non-firm edge. Used by constructors and available to callers.
void validate_path(PathWitness& path, const ToleranceConfig& tol = {});

}  // namespace orthograph
