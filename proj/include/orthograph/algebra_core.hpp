#pragma once

#include "orthograph/types.hpp"

namespace orthograph {

// Largest singular value. Zero exactly when m = 0.
double operator_norm(const Mat& m);

// Max of coordinate operator norms (the direct-sum norm).
double operator_norm(const DirectSumElement& v);

// Orthonormal basis (as matrix columns) of the span of the left singular
// vectors whose singular value lies within eps_tie * sigma_max of sigma_max.
// These span { m x : ||x|| = 1, ||m x|| = ||m|| }.
Mat leading_left_singular_basis(const Mat& m, const ToleranceConfig& tol = {});

// Companion right-singular basis for the same tie cluster, plus the clustered
// singular values. Column i of `right` maps under m to sigma(i) * left.col(i).
struct LeadingSingularData {
  Mat left;
  Mat right;
  Eigen::VectorXd sigmas;
  double sigma_max = 0;
};
LeadingSingularData leading_singular_data(const Mat& m, const ToleranceConfig& tol = {});

// Orthogonal projection onto Im(m); the zero matrix maps to the zero projection.
Mat range_projection(const Mat& m, const ToleranceConfig& tol = {});

// Unit vector spanning ker(m*) with the smallest singular value reported, or
// more precisely the left singular vector for sigma_min. Callers check the
// returned sigma against their own thresholds.
struct KernelVector {
  Vec v;
  double sigma_min = 0;
};
KernelVector adjoint_kernel_vector(const Mat& m);

// Tri-state invertibility with the margin conventions of ToleranceConfig.
Tri is_invertible(const Mat& m, const ToleranceConfig& tol = {});

// Scales so the max coordinate norm is 1 and rotates the global phase so the
// largest-modulus entry (ties: coordinate index, then row-major) is real
// positive. Constant on rays and idempotent.
DirectSumElement normalize_projective(const DirectSumElement& v);

// Grid-rounded dedup key for normalized vertices (1e-6 grid).
std::string projective_key(const DirectSumElement& v);

}  // namespace orthograph
