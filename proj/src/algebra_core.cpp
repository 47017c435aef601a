#include "orthograph/algebra_core.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <cstdio>

namespace orthograph {

namespace {

Eigen::JacobiSVD<Mat> full_svd(const Mat& m) {
  return Eigen::JacobiSVD<Mat>(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
}

}  // namespace

double operator_norm(const Mat& m) {
  validate_matrix(m);
  if (m.isZero(0.0)) return 0.0;
  Eigen::JacobiSVD<Mat> svd(m);
  return svd.singularValues()(0);
}

double operator_norm(const DirectSumElement& v) {
  double best = 0.0;
  for (const Mat& m : v.coords) best = std::max(best, operator_norm(m));
  return best;
}

LeadingSingularData leading_singular_data(const Mat& m, const ToleranceConfig& tol) {
  validate_matrix(m);
  tol.validate();
  if (m.isZero(0.0)) throw DegenerateInputError("leading singular basis of the zero matrix");
  auto svd = full_svd(m);
  const Eigen::VectorXd& s = svd.singularValues();
  const double smax = s(0);
  Eigen::Index r = 1;
  while (r < s.size() && s(r) >= smax * (1.0 - tol.eps_tie)) ++r;
  LeadingSingularData out;
  out.left = svd.matrixU().leftCols(r);
  out.right = svd.matrixV().leftCols(r);
  out.sigmas = s.head(r);
  out.sigma_max = smax;
  return out;
}

Mat leading_left_singular_basis(const Mat& m, const ToleranceConfig& tol) {
  return leading_singular_data(m, tol).left;
}

Mat range_projection(const Mat& m, const ToleranceConfig& tol) {
  validate_matrix(m);
  tol.validate();
  if (m.isZero(0.0)) return Mat::Zero(m.rows(), m.rows());
  auto svd = full_svd(m);
  const Eigen::VectorXd& s = svd.singularValues();
  const double cutoff = tol.eps_rank * s(0);
  Eigen::Index r = 0;
  while (r < s.size() && s(r) > cutoff) ++r;
  Mat u = svd.matrixU().leftCols(r);
  return u * u.adjoint();
}

KernelVector adjoint_kernel_vector(const Mat& m) {
  validate_matrix(m);
  if (m.rows() != m.cols()) throw InputError("adjoint_kernel_vector expects a square matrix");
  if (m.isZero(0.0)) {
    KernelVector kv;
    kv.v = Vec::Unit(m.rows(), 0);
    kv.sigma_min = 0.0;
    return kv;
  }
  auto svd = full_svd(m);
  const Eigen::Index last = svd.singularValues().size() - 1;
  KernelVector kv;
  kv.v = svd.matrixU().col(last);
  kv.sigma_min = svd.singularValues()(last);
  return kv;
}

Tri is_invertible(const Mat& m, const ToleranceConfig& tol) {
  validate_matrix(m);
  tol.validate();
  if (m.rows() != m.cols()) throw InputError("is_invertible expects a square matrix");
  if (m.isZero(0.0)) return Tri::No;
  Eigen::JacobiSVD<Mat> svd(m);
  const Eigen::VectorXd& s = svd.singularValues();
  const double smax = s(0);
  const double smin = s(s.size() - 1);
  if (smin <= tol.eps_rank * smax) return Tri::No;
  if (smin > tol.uncertain_factor * tol.eps_rank * smax) return Tri::Yes;
  return Tri::Uncertain;
}

DirectSumElement normalize_projective(const DirectSumElement& v) {
  if (v.is_zero()) throw DegenerateInputError("cannot normalize the zero element");
  double scale = operator_norm(v);
  DirectSumElement out = v;
  for (Mat& m : out.coords) m /= scale;
  // global phase: largest-modulus entry, first occurrence wins
  Complex pivot(0, 0);
  double best = -1.0;
  for (const Mat& m : out.coords)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j)
        if (std::abs(m(i, j)) > best) {
          best = std::abs(m(i, j));
          pivot = m(i, j);
        }
  const Complex phase = std::conj(pivot) / std::abs(pivot);
  for (Mat& m : out.coords) m *= phase;
  return out;
}

std::string projective_key(const DirectSumElement& v) {
  DirectSumElement n = normalize_projective(v);
  std::string key;
  char buf[64];
  for (const Mat& m : n.coords)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j) {
        const double re = std::round(m(i, j).real() * 1e6) / 1e6;
        const double im = std::round(m(i, j).imag() * 1e6) / 1e6;
        std::snprintf(buf, sizeof(buf), "%.6f,%.6f;", re + 0.0, im + 0.0);
        key += buf;
      }
  return key;
}

}  // namespace orthograph
