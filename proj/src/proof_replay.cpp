#include "orthograph/proof_replay.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <sstream>

namespace orthograph {

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

// Image line of a rank-one 2x2 coordinate, or nullopt when not rank one.
std::optional<Vec> image_line_2x2(const Mat& m, const ToleranceConfig& tol) {
  if (m.rows() != 2 || m.cols() != 2 || m.isZero(0.0)) return std::nullopt;
  Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullU);
  const Eigen::VectorXd& s = svd.singularValues();
  if (s(1) > tol.uncertain_factor * tol.eps_rank * s(0)) return std::nullopt;
  return Vec(svd.matrixU().col(0));
}

bool strictly_dominant_at(const DirectSumElement& e, int i) {
  const double ni = operator_norm(e.coords[static_cast<size_t>(i)]);
  for (int c = 0; c < e.signature.summands(); ++c)
    if (c != i && operator_norm(e.coords[static_cast<size_t>(c)]) >= ni) return false;
  return true;
}

bool only_noninvertible_at(const DirectSumElement& e, int i, const ToleranceConfig& tol) {
  for (int c = 0; c < e.signature.summands(); ++c) {
    const Tri inv = is_invertible(e.coords[static_cast<size_t>(c)], tol);
    if (c == i ? inv != Tri::No : inv != Tri::Yes) return false;
  }
  return true;
}

}  // namespace

const char* to_string(LowerBoundStatus s) {
  switch (s) {
    case LowerBoundStatus::Proven: return "proven";
    case LowerBoundStatus::Refuted: return "refuted";
    default: return "not-applicable";
  }
}

LowerBoundReport no_common_neighbor_scalars(const DirectSumElement& u,
                                            const DirectSumElement& v) {
  LowerBoundReport rep;
  rep.first = u;
  rep.second = v;
  if (u.signature != v.signature || !u.signature.all_scalar() || u.is_zero() || v.is_zero()) {
    rep.note = "requires nonzero elements over an all-scalar signature";
    return rep;
  }
  const int k = u.signature.summands();

  // adjacency is decided exactly for scalars
  {
    ProofStep step{"non-adjacency", false, ""};
    const bool adjacent = strong_orth_scalars(u, v);
    step.passed = !adjacent;
    step.detail = adjacent ? "vertices are adjacent; distance is 1"
                           : "exact scalar test: not mutually strong orthogonal";
    rep.steps.push_back(step);
    if (adjacent) {
      rep.overall = LowerBoundStatus::Refuted;
      rep.claimed_min_distance = 1;
      return rep;
    }
  }

  // support/max sets, computed exactly on the input literals
  std::vector<int> zu, mu, zv, mv;
  auto classify = [&](const DirectSumElement& e, std::vector<int>& zeros, std::vector<int>& maxs) {
    double best = 0.0;
    std::vector<double> mods;
    for (int i = 0; i < k; ++i) {
      const Complex c = e.coords[static_cast<size_t>(i)](0, 0);
      mods.push_back(std::abs(c));
      best = std::max(best, mods.back());
      if (c.real() == 0.0 && c.imag() == 0.0) zeros.push_back(i);
    }
    for (int i = 0; i < k; ++i)
      if (mods[static_cast<size_t>(i)] == best) maxs.push_back(i);
  };
  classify(u, zu, mu);
  classify(v, zv, mv);
  {
    ProofStep step{"support-constraints", true, ""};
    std::ostringstream os;
    os << "a common neighbor must vanish on a max coordinate of each vertex and "
          "attain its own max on each vertex's zero set; |Z_u|=" << zu.size()
       << " |M_u|=" << mu.size() << " |Z_v|=" << zv.size() << " |M_v|=" << mv.size();
    step.detail = os.str();
    rep.steps.push_back(step);
  }

  // feasibility: support {i1, i2} with max there, zeros covering M_u and M_v
  ProofStep feas{"feasibility-search", true, "no support pattern satisfies all constraints"};
  bool found = false;
  int wi1 = -1, wi2 = -1;
  for (int i1 : zu) {
    for (int i2 : zv) {
      bool j1 = false, j2 = false;
      for (int j : mu)
        if (j != i1 && j != i2) j1 = true;
      for (int j : mv)
        if (j != i1 && j != i2) j2 = true;
      if (j1 && j2) {
        found = true;
        wi1 = i1;
        wi2 = i2;
        break;
      }
    }
    if (found) break;
  }
  if (found) {
    feas.passed = false;
    std::ostringstream os;
    os << "common neighbor exists with support {" << wi1 << "," << wi2 << "}";
    feas.detail = os.str();
  }
  rep.steps.push_back(feas);

  if (found) {
    rep.overall = LowerBoundStatus::Refuted;
    rep.claimed_min_distance = 2;
  } else {
    rep.overall = LowerBoundStatus::Proven;
    rep.claimed_min_distance = 3;
    rep.note = "non-adjacent and no common neighbor: distance >= 3";
  }
  return rep;
}

namespace {

// Shared steps 1-2: with both non-invertibles rank one, strictly dominant at
// the same M_2 coordinate and image lines in general position, the pair is
// non-adjacent and admits no common neighbor.
bool dominant_m2_core(LowerBoundReport& rep, const DirectSumElement& u,
                      const DirectSumElement& v, int i, const Vec& x1, const Vec& x2,
                      const ToleranceConfig& tol) {
  const double overlap = std::abs(x1.dot(x2));
  {
    ProofStep step{"non-adjacency", false, ""};
    const bool lines_adjacent = m2_adjacent(u.coords[static_cast<size_t>(i)],
                                            v.coords[static_cast<size_t>(i)], tol);
    const bool pair_adjacent = mutual_strong_orth(u, v, tol).adjacent();
    step.passed = !lines_adjacent && !pair_adjacent;
    step.detail = "adjacency would force the dominant coordinates mutually orthogonal; "
                  "image overlap |<x1,x2>| = " + fmt(overlap);
    rep.steps.push_back(step);
    if (!step.passed) return false;
  }
  {
    ProofStep step{"no-common-neighbor", false, ""};
    // the neighbor's M_2 part must be a nonzero rank-one with image orthogonal
    // to two non-parallel lines; the stacked constraint matrix has full rank
    Mat constraints(2, 2);
    constraints.row(0) = x1.adjoint();
    constraints.row(1) = x2.adjoint();
    Eigen::JacobiSVD<Mat> svd(constraints);
    const double smin = svd.singularValues()(1);
    step.passed = smin > tol.uncertain_factor * tol.eps_rank;
    step.detail = "stacked image constraints force b = 0 (sigma_min = " + fmt(smin) +
                  "); b = 0 leaves no norm-attaining coordinate for the neighbor";
    rep.steps.push_back(step);
    if (!step.passed) return false;
  }
  return true;
}

}  // namespace

LowerBoundReport dominant_m2_distance_ge3(const DirectSumElement& u,
                                          const DirectSumElement& v, int i,
                                          const ToleranceConfig& tol) {
  LowerBoundReport rep;
  rep.first = u;
  rep.second = v;
  if (u.signature != v.signature || i < 0 || i >= u.signature.summands() ||
      u.signature.sizes[static_cast<size_t>(i)] != 2) {
    rep.note = "coordinate i must be an M_2 summand";
    return rep;
  }
  if (!only_noninvertible_at(u, i, tol) || !only_noninvertible_at(v, i, tol) ||
      !strictly_dominant_at(u, i) || !strictly_dominant_at(v, i)) {
    rep.note = "requires the non-invertibles strictly dominant at coordinate i";
    return rep;
  }
  const auto x1 = image_line_2x2(u.coords[static_cast<size_t>(i)], tol);
  const auto x2 = image_line_2x2(v.coords[static_cast<size_t>(i)], tol);
  if (!x1 || !x2) {
    rep.note = "M_2 coordinates must be rank one";
    return rep;
  }
  const double overlap = std::abs(x1->dot(*x2));
  const double band = tol.uncertain_factor * tol.eps_orth;
  if (overlap <= band || overlap >= 1.0 - band) {
    rep.note = "image lines equal or orthogonal; a different regime applies";
    return rep;
  }
  if (dominant_m2_core(rep, u, v, i, *x1, *x2, tol)) {
    rep.overall = LowerBoundStatus::Proven;
    rep.claimed_min_distance = 3;
    rep.note = "non-adjacent with no common neighbor: distance >= 3";
  } else {
    rep.overall = LowerBoundStatus::Refuted;
  }
  return rep;
}

LowerBoundReport c_m2_distance4(const DirectSumElement& u, const DirectSumElement& v,
                                const ToleranceConfig& tol) {
  LowerBoundReport rep;
  rep.first = u;
  rep.second = v;
  if (u.signature != v.signature || u.signature.summands() != 2) {
    rep.note = "signature must be C + M_2";
    return rep;
  }
  int s = -1, m = -1;
  for (int c = 0; c < 2; ++c)
    (u.signature.sizes[static_cast<size_t>(c)] == 1 ? s : m) = c;
  if (s < 0 || m < 0 || u.signature.sizes[static_cast<size_t>(m)] != 2) {
    rep.note = "signature must be C + M_2";
    return rep;
  }
  const Mat& m1 = u.coords[static_cast<size_t>(m)];
  const Mat& m2 = v.coords[static_cast<size_t>(m)];
  const double alpha = std::abs(u.coords[static_cast<size_t>(s)](0, 0));
  const double beta = std::abs(v.coords[static_cast<size_t>(s)](0, 0));
  const auto x1 = image_line_2x2(m1, tol);
  const auto x2 = image_line_2x2(m2, tol);
  if (!x1 || !x2 || alpha == 0.0 || beta == 0.0 || alpha >= operator_norm(m1) ||
      beta >= operator_norm(m2)) {
    rep.note = "requires nonzero scalars strictly below rank-one matrix norms";
    return rep;
  }
  const double overlap = std::abs(x1->dot(*x2));
  const double band = tol.uncertain_factor * tol.eps_orth;
  if (overlap <= band || overlap >= 1.0 - band) {
    rep.note = "image lines equal or orthogonal; the pair is closer than 4";
    return rep;
  }

  if (!dominant_m2_core(rep, u, v, m, *x1, *x2, tol)) {
    rep.overall = LowerBoundStatus::Refuted;
    return rep;
  }

  // step 3: no length-3 path. Both middle M_2 parts are forced rank one with
  // images on the orthogonal-complement lines; all three structural cases
  // reduce to |<x1_perp, x2_perp>| = |<x1, x2>| != 0.
  bool all = true;
  for (const char* name : {"length3-scalars-zero", "length3-scalars-invertible",
                           "length3-scalars-mixed"}) {
    ProofStep step{name, overlap > band, ""};
    step.detail = "middle images forced onto the perpendicular lines; "
                  "|<x1_perp, x2_perp>| = " + fmt(overlap) + " != 0";
    all = all && step.passed;
    rep.steps.push_back(step);
  }
  if (all) {
    rep.overall = LowerBoundStatus::Proven;
    rep.claimed_min_distance = 4;
    rep.note = "no path of length <= 3 exists; with the constructed length-4 path "
               "the distance is exactly 4";
  } else {
    rep.overall = LowerBoundStatus::Refuted;
  }
  return rep;
}

}  // namespace orthograph
