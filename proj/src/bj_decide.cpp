#include "orthograph/bj_decide.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>

namespace orthograph {

namespace {

// Distance of a measured value from the firm-side threshold of its band.
double band_margin(double value, double lo, double hi) {
  if (value <= lo) return lo - value;
  if (value > hi) return value - hi;
  return std::min(value - lo, hi - value);
}

Tri band_verdict(double value, double lo, double hi) {
  if (value <= lo) return Tri::Yes;
  if (value > hi) return Tri::No;
  return Tri::Uncertain;
}

Tri fuse(Tri s, Tri d) {
  if (s == d) return s;
  return Tri::Uncertain;
}

Vec phase_normalize(const Vec& v) {
  Eigen::Index best = 0;
  for (Eigen::Index i = 1; i < v.size(); ++i)
    if (std::abs(v(i)) > std::abs(v(best))) best = i;
  return v * (std::conj(v(best)) / std::abs(v(best)));
}

Vec perp2(const Vec& v) {
  Vec p(2);
  p(0) = -std::conj(v(1));
  p(1) = std::conj(v(0));
  return p;
}

// Image line of a rank-one matrix, with the rank-one check.
Vec rank_one_image(const Mat& a, const ToleranceConfig& tol) {
  validate_matrix(a);
  if (a.rows() != a.cols()) throw InputError("expected a square matrix");
  if (a.isZero(0.0)) throw InputError("expected a nonzero matrix");
  Eigen::JacobiSVD<Mat> svd(a, Eigen::ComputeFullU);
  const Eigen::VectorXd& s = svd.singularValues();
  if (s.size() > 1 && s(1) > tol.eps_rank * s(0) * tol.uncertain_factor)
    throw InputError("expected a rank-one matrix");
  return svd.matrixU().col(0);
}

}  // namespace

double ideal_distance(const Mat& a, const Mat& b, const ToleranceConfig& tol) {
  validate_matrix(a);
  validate_matrix(b);
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw InputError("ideal_distance: size mismatch");
  if (a.isZero(0.0)) return 0.0;
  const Mat p = range_projection(b, tol);
  const Mat res = a - p * a;
  return std::min(operator_norm(res), operator_norm(a));
}

MatrixDecisionDetail strong_orth_matrix_detailed(const Mat& a, const Mat& b,
                                                 const ToleranceConfig& tol) {
  validate_matrix(a);
  validate_matrix(b);
  tol.validate();
  if (a.isZero(0.0)) throw DegenerateInputError("strong_orth_matrix: a = 0");
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw InputError("strong_orth_matrix: size mismatch");

  const auto lead = leading_singular_data(a, tol);
  const double na = lead.sigma_max;
  const double nb = operator_norm(b);

  MatrixDecisionDetail detail;
  OrthDecision dec;
  Vec y;  // combination of leading right singular vectors

  if (nb == 0.0) {
    dec.verdict = Tri::Yes;
    dec.margin = 1.0;
    detail.subspace_verdict = detail.distance_verdict = Tri::Yes;
    y = Vec::Unit(lead.right.cols(), 0);
  } else {
    // subspace criterion: ker(b*) must meet the leading left subspace
    const Mat m = b.adjoint() * lead.left;
    Eigen::JacobiSVD<Mat> msvd(m, Eigen::ComputeFullV);
    const Eigen::VectorXd& s = msvd.singularValues();
    detail.subspace_value = s(s.size() - 1) / nb;
    const Tri sub = band_verdict(detail.subspace_value, tol.eps_rank,
                                 tol.uncertain_factor * tol.eps_rank);
    const double ms = band_margin(detail.subspace_value, tol.eps_rank,
                                  tol.uncertain_factor * tol.eps_rank);

    // ideal-distance criterion: min_c ||a + bc|| must reach ||a||
    detail.distance_gap = (na - ideal_distance(a, b, tol)) / na;
    const Tri dist = band_verdict(detail.distance_gap, tol.eps_orth,
                                  tol.uncertain_factor * tol.eps_orth);
    const double md = band_margin(detail.distance_gap, tol.eps_orth,
                                  tol.uncertain_factor * tol.eps_orth);

    detail.subspace_verdict = sub;
    detail.distance_verdict = dist;
    dec.verdict = fuse(sub, dist);
    dec.margin = std::min(ms, md);

    if (dec.verdict == Tri::Yes) {
      // minimize || b* a V y || over unit y in the tie cluster
      const Mat w = b.adjoint() * lead.left * lead.sigmas.asDiagonal();
      Eigen::JacobiSVD<Mat> wsvd(w, Eigen::ComputeFullV);
      y = wsvd.matrixV().col(wsvd.matrixV().cols() - 1);
    }
  }

  if (dec.verdict == Tri::Yes) {
    OrthCertificate cert;
    cert.coordinate_index = 0;
    cert.witness = lead.right * y;
    const Vec ax = a * cert.witness;
    cert.norm_residual = std::abs(ax.norm() - na) / na;
    cert.orth_residual = nb == 0.0 ? 0.0 : (b.adjoint() * ax).norm() / (na * nb);
    if (cert.norm_residual > tol.eps_orth || cert.orth_residual > tol.eps_orth) {
      dec.verdict = Tri::Uncertain;  // could not certify
    } else {
      dec.certificate = cert;
    }
  }
  detail.fused = dec;
  return detail;
}

OrthDecision strong_orth_matrix(const Mat& a, const Mat& b, const ToleranceConfig& tol) {
  return strong_orth_matrix_detailed(a, b, tol).fused;
}

OrthDecision strong_orth_directsum(const DirectSumElement& a, const DirectSumElement& b,
                                   const ToleranceConfig& tol) {
  tol.validate();
  if (a.signature != b.signature) throw InputError("strong_orth_directsum: signature mismatch");
  if (a.is_zero()) throw DegenerateInputError("strong_orth_directsum: a = 0");

  const int k = a.signature.summands();
  const double na = operator_norm(a);

  // route 1: coordinates minimize independently, so the max ideal distance
  // must reach the global norm
  double dmax = 0.0;
  std::vector<double> coord_norm(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) {
    coord_norm[static_cast<size_t>(i)] = operator_norm(a.coords[static_cast<size_t>(i)]);
    dmax = std::max(dmax, ideal_distance(a.coords[static_cast<size_t>(i)],
                                         b.coords[static_cast<size_t>(i)], tol));
  }
  const double gap = (na - dmax) / na;
  const Tri dist = band_verdict(gap, tol.eps_orth, tol.uncertain_factor * tol.eps_orth);
  const double md = band_margin(gap, tol.eps_orth, tol.uncertain_factor * tol.eps_orth);

  // route 2: some norm-achieving coordinate must certify on its own
  Tri sub = Tri::No;
  double ms = md;
  OrthDecision best_coord;
  int best_index = -1;
  for (int i = 0; i < k; ++i) {
    if (coord_norm[static_cast<size_t>(i)] < na * (1.0 - tol.eps_tie)) continue;
    OrthDecision d = strong_orth_matrix(a.coords[static_cast<size_t>(i)],
                                        b.coords[static_cast<size_t>(i)], tol);
    if (d.verdict == Tri::Yes) {
      sub = Tri::Yes;
      best_coord = d;
      best_index = i;
      ms = d.margin;
      break;
    }
    if (d.verdict == Tri::Uncertain) sub = Tri::Uncertain;
  }

  OrthDecision dec;
  dec.verdict = fuse(sub, dist);
  dec.margin = std::min(ms, md);
  if (dec.verdict == Tri::Yes && best_index >= 0) {
    OrthCertificate cert = *best_coord.certificate;
    cert.coordinate_index = best_index;
    // rescale residuals to the global norm
    const Mat& ai = a.coords[static_cast<size_t>(best_index)];
    const Mat& bi = b.coords[static_cast<size_t>(best_index)];
    const Vec ax = ai * cert.witness;
    const double nbi = operator_norm(bi);
    cert.norm_residual = std::abs(ax.norm() - na) / na;
    cert.orth_residual = nbi == 0.0 ? 0.0 : (bi.adjoint() * ax).norm() / (na * nbi);
    if (cert.norm_residual > tol.eps_orth || cert.orth_residual > tol.eps_orth)
      dec.verdict = Tri::Uncertain;
    else
      dec.certificate = cert;
  }
  return dec;
}

OrthDecisionPair mutual_strong_orth(const DirectSumElement& a, const DirectSumElement& b,
                                    const ToleranceConfig& tol) {
  if (b.is_zero()) throw DegenerateInputError("mutual_strong_orth: b = 0");
  OrthDecisionPair pair;
  pair.forward = strong_orth_directsum(a, b, tol);
  pair.backward = strong_orth_directsum(b, a, tol);
  return pair;
}

bool strong_orth_scalars_one_way(const DirectSumElement& a, const DirectSumElement& b) {
  if (a.signature != b.signature) throw InputError("strong_orth_scalars: signature mismatch");
  if (!a.signature.all_scalar()) throw InputError("strong_orth_scalars: signature must be all 1s");
  if (a.is_zero()) throw DegenerateInputError("strong_orth_scalars: a = 0");
  double max_all = 0.0, max_on_zero = -1.0;
  for (size_t i = 0; i < a.coords.size(); ++i) {
    const double mod = std::abs(a.coords[i](0, 0));
    max_all = std::max(max_all, mod);
    const Complex bi = b.coords[i](0, 0);
    if (bi.real() == 0.0 && bi.imag() == 0.0) max_on_zero = std::max(max_on_zero, mod);
  }
  return max_on_zero == max_all;
}

bool strong_orth_scalars(const DirectSumElement& a, const DirectSumElement& b) {
  return strong_orth_scalars_one_way(a, b) && strong_orth_scalars_one_way(b, a);
}

Tri is_isolated_vertex(const DirectSumElement& a, const ToleranceConfig& tol) {
  if (a.is_zero()) throw DegenerateInputError("is_isolated_vertex: zero element");
  bool uncertain = false;
  for (const Mat& m : a.coords) {
    switch (is_invertible(m, tol)) {
      case Tri::No: return Tri::No;
      case Tri::Uncertain: uncertain = true; break;
      case Tri::Yes: break;
    }
  }
  return uncertain ? Tri::Uncertain : Tri::Yes;
}

M2ComponentLabel m2_component(const Mat& a, const ToleranceConfig& tol) {
  if (a.rows() != 2 || a.cols() != 2) throw InputError("m2_component expects a 2x2 matrix");
  const Vec x = rank_one_image(a, tol);
  Vec c1 = phase_normalize(x);
  Vec c2 = phase_normalize(perp2(x));
  // lexicographic pick between the line and its orthogonal complement
  auto less = [](const Vec& u, const Vec& v) {
    for (Eigen::Index i = 0; i < u.size(); ++i) {
      if (u(i).real() != v(i).real()) return u(i).real() < v(i).real();
      if (u(i).imag() != v(i).imag()) return u(i).imag() < v(i).imag();
    }
    return false;
  };
  return M2ComponentLabel{less(c1, c2) ? c1 : c2};
}

bool same_m2_component(const M2ComponentLabel& x, const M2ComponentLabel& y,
                       const ToleranceConfig& tol) {
  const double overlap = std::abs(x.line.dot(y.line));
  return overlap >= 1.0 - tol.eps_orth * tol.uncertain_factor ||
         overlap <= tol.eps_orth * tol.uncertain_factor;
}

bool m2_adjacent(const Mat& a, const Mat& b, const ToleranceConfig& tol) {
  const Vec xa = rank_one_image(a, tol);
  const Vec xb = rank_one_image(b, tol);
  return std::abs(xa.dot(xb)) <= tol.uncertain_factor * tol.eps_rank;
}

}  // namespace orthograph
