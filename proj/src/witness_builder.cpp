#include "orthograph/witness_builder.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>

namespace orthograph {

namespace {

// Columns spanning the orthogonal complement of the column span of `cols`.
Mat orth_complement(const Mat& cols) {
  const Eigen::Index n = cols.rows();
  if (cols.cols() == 0) return Mat::Identity(n, n);
  Eigen::JacobiSVD<Mat> svd(cols, Eigen::ComputeFullU);
  const Eigen::VectorXd& s = svd.singularValues();
  Eigen::Index rank = 0;
  const double cutoff = s.size() > 0 ? s(0) * 1e-12 : 0.0;
  while (rank < s.size() && s(rank) > cutoff) ++rank;
  return svd.matrixU().rightCols(n - rank);
}

DirectSumElement zero_element(const AlgebraSignature& sig) {
  std::vector<Mat> coords;
  for (int n : sig.sizes) coords.push_back(Mat::Zero(n, n));
  return DirectSumElement(sig, std::move(coords));
}

DirectSumElement supported_at(const AlgebraSignature& sig, int i, const Mat& m) {
  DirectSumElement e = zero_element(sig);
  e.coords[static_cast<size_t>(i)] = m;
  return e;
}

Mat unit_rank_one(int n) { return Mat::Identity(n, n).col(0) * Mat::Identity(n, n).col(0).adjoint(); }

bool noninvertible(const Mat& m, const ToleranceConfig& tol) {
  return is_invertible(m, tol) == Tri::No;
}

void require(bool cond, const char* msg) {
  if (!cond) throw ConstructionError(msg);
}

PathWitness finish(std::vector<DirectSumElement> vertices, TheoremCase c,
                   const ToleranceConfig& tol) {
  PathWitness path;
  path.theorem_case = c;
  for (const DirectSumElement& v : vertices)
    path.vertices.push_back(normalize_projective(v));
  validate_path(path, tol);
  return path;
}

PathWitness reversed(PathWitness p) {
  std::reverse(p.vertices.begin(), p.vertices.end());
  std::reverse(p.edge_certificates.begin(), p.edge_certificates.end());
  for (OrthDecisionPair& e : p.edge_certificates) std::swap(e.forward, e.backward);
  return p;
}

}  // namespace

const char* to_string(TheoremCase c) {
  switch (c) {
    case TheoremCase::SameVertex: return "same-vertex";
    case TheoremCase::Adjacent: return "adjacent";
    case TheoremCase::DistinctCoordinates: return "distinct-coordinates";
    case TheoremCase::ViaUnit: return "via-unit";
    case TheoremCase::Combination: return "combination";
    case TheoremCase::TwoMatrixSummands: return "two-matrix-summands";
    case TheoremCase::CPlusM3: return "c-plus-m3";
    case TheoremCase::ThreeSummands: return "three-summands";
    case TheoremCase::MatrixAlgebra: return "matrix-algebra";
    default: return "hard-case-fallback";
  }
}

int theorem_case_bound(TheoremCase c) {
  switch (c) {
    case TheoremCase::SameVertex: return 0;
    case TheoremCase::Adjacent: return 1;
    case TheoremCase::ViaUnit: return 2;
    case TheoremCase::MatrixAlgebra: return 4;
    case TheoremCase::HardCaseFallback: return 4;
    default: return 3;
  }
}

void validate_path(PathWitness& path, const ToleranceConfig& tol) {
  path.edge_certificates.clear();
  for (size_t i = 0; i + 1 < path.vertices.size(); ++i) {
    OrthDecisionPair pair = mutual_strong_orth(path.vertices[i], path.vertices[i + 1], tol);
    if (!pair.adjacent())
      throw ConstructionError("path edge " + std::to_string(i) + " failed to certify");
    path.edge_certificates.push_back(std::move(pair));
  }
  if (path.length() > theorem_case_bound(path.theorem_case))
    throw ConstructionError("path exceeds its theorem bound");
}

Mat annihilator_witness(const Mat& a, const ToleranceConfig& tol) {
  validate_matrix(a);
  if (a.isZero(0.0)) throw DegenerateInputError("annihilator_witness: a = 0");
  if (a.rows() != a.cols()) throw InputError("annihilator_witness expects a square matrix");
  if (is_invertible(a, tol) != Tri::No)
    throw NoWitnessError("annihilator_witness: matrix is not firmly non-invertible");
  const KernelVector kv = adjoint_kernel_vector(a);
  return kv.v * kv.v.adjoint();
}

PathWitness path_distinct_coordinates(const DirectSumElement& u, const DirectSumElement& v,
                                      int i, int j, const ToleranceConfig& tol) {
  require(u.signature == v.signature, "signature mismatch");
  require(i != j, "coordinates must be distinct");
  const auto& ui = u.coords[static_cast<size_t>(i)];
  const auto& vj = v.coords[static_cast<size_t>(j)];
  require(ui.isZero(0.0) || noninvertible(ui, tol), "u_i must be non-invertible");
  require(vj.isZero(0.0) || noninvertible(vj, tol), "v_j must be non-invertible");

  const Mat ai = ui.isZero(0.0) ? unit_rank_one(u.signature.sizes[static_cast<size_t>(i)])
                                : annihilator_witness(ui, tol);
  const Mat bj = vj.isZero(0.0) ? unit_rank_one(u.signature.sizes[static_cast<size_t>(j)])
                                : annihilator_witness(vj, tol);
  return finish({u, supported_at(u.signature, i, ai), supported_at(u.signature, j, bj), v},
                TheoremCase::DistinctCoordinates, tol);
}

namespace {

struct DominancePattern {
  std::vector<double> norms;
  double max_other;  // max norm over coordinates != k
};

DominancePattern norms_around(const DirectSumElement& u, int k) {
  DominancePattern p;
  p.max_other = 0.0;
  for (int c = 0; c < u.signature.summands(); ++c) {
    p.norms.push_back(operator_norm(u.coords[static_cast<size_t>(c)]));
    if (c != k) p.max_other = std::max(p.max_other, p.norms.back());
  }
  return p;
}

void require_only_noninvertible_at(const DirectSumElement& u, int k, const ToleranceConfig& tol) {
  for (int c = 0; c < u.signature.summands(); ++c) {
    const Mat& m = u.coords[static_cast<size_t>(c)];
    if (c == k)
      require(m.isZero(0.0) || noninvertible(m, tol), "coordinate k must be non-invertible");
    else
      require(is_invertible(m, tol) == Tri::Yes, "coordinates other than k must be invertible");
  }
}

}  // namespace

PathWitness path_via_unit(const DirectSumElement& u, const DirectSumElement& v, int k,
                          const ToleranceConfig& tol) {
  require(u.signature == v.signature, "signature mismatch");
  require_only_noninvertible_at(u, k, tol);
  require_only_noninvertible_at(v, k, tol);
  const auto pu = norms_around(u, k);
  const auto pv = norms_around(v, k);
  require(pu.max_other >= pu.norms[static_cast<size_t>(k)] * (1.0 - tol.eps_tie),
          "u_k must not strictly dominate");
  require(pv.max_other >= pv.norms[static_cast<size_t>(k)] * (1.0 - tol.eps_tie),
          "v_k must not strictly dominate");

  const int n = u.signature.sizes[static_cast<size_t>(k)];
  return finish({u, supported_at(u.signature, k, Mat::Identity(n, n)), v},
                TheoremCase::ViaUnit, tol);
}

PathWitness path_combination(const DirectSumElement& u, const DirectSumElement& v, int k,
                             const ToleranceConfig& tol) {
  require(u.signature == v.signature, "signature mismatch");
  require_only_noninvertible_at(u, k, tol);
  require_only_noninvertible_at(v, k, tol);
  const auto pu = norms_around(u, k);
  const auto pv = norms_around(v, k);
  require(pu.max_other >= pu.norms[static_cast<size_t>(k)] * (1.0 - tol.eps_tie),
          "u_k must not strictly dominate");
  require(pv.norms[static_cast<size_t>(k)] > pv.max_other, "v_k must strictly dominate");

  const Mat bprime = annihilator_witness(v.coords[static_cast<size_t>(k)], tol);
  const double nb = operator_norm(bprime);
  const int n = u.signature.sizes[static_cast<size_t>(k)];
  DirectSumElement mid2 = zero_element(u.signature);
  for (int c = 0; c < u.signature.summands(); ++c) {
    const int nc = u.signature.sizes[static_cast<size_t>(c)];
    mid2.coords[static_cast<size_t>(c)] =
        c == k ? bprime : Mat(nb * Mat::Identity(nc, nc));
  }
  return finish({u, supported_at(u.signature, k, Mat::Identity(n, n)), mid2, v},
                TheoremCase::Combination, tol);
}

PathWitness path_two_matrix_summands(const DirectSumElement& u, const DirectSumElement& v,
                                     const ToleranceConfig& tol) {
  require(u.signature == v.signature, "signature mismatch");
  require(u.signature.summands() == 2, "exactly two summands required");
  require(u.signature.sizes[0] >= 2 && u.signature.sizes[1] >= 2,
          "both summands must be matrix algebras");

  // locate the common non-invertible coordinate
  int q = -1;
  for (int c = 0; c < 2; ++c)
    if (noninvertible(u.coords[static_cast<size_t>(c)], tol)) q = c;
  require(q >= 0, "no non-invertible coordinate in u");
  const int o = 1 - q;
  require_only_noninvertible_at(u, q, tol);
  require_only_noninvertible_at(v, q, tol);
  require(!u.coords[static_cast<size_t>(q)].isZero(0.0) &&
              !v.coords[static_cast<size_t>(q)].isZero(0.0),
          "non-invertible coordinates must be nonzero");
  const auto pu = norms_around(u, q);
  const auto pv = norms_around(v, q);
  require(pu.norms[static_cast<size_t>(q)] > pu.max_other, "u_q must strictly dominate");
  require(pv.norms[static_cast<size_t>(q)] > pv.max_other, "v_q must strictly dominate");

  const Mat a1 = annihilator_witness(u.coords[static_cast<size_t>(q)], tol);
  const Mat c1 = annihilator_witness(v.coords[static_cast<size_t>(q)], tol);
  const int no = u.signature.sizes[static_cast<size_t>(o)];
  Mat diag_first = Mat::Zero(no, no);
  diag_first(0, 0) = operator_norm(a1);
  Mat diag_last = Mat::Zero(no, no);
  diag_last(no - 1, no - 1) = operator_norm(c1);

  DirectSumElement mid1 = zero_element(u.signature);
  mid1.coords[static_cast<size_t>(q)] = a1;
  mid1.coords[static_cast<size_t>(o)] = diag_first;
  DirectSumElement mid2 = zero_element(u.signature);
  mid2.coords[static_cast<size_t>(q)] = c1;
  mid2.coords[static_cast<size_t>(o)] = diag_last;
  return finish({u, mid1, mid2, v}, TheoremCase::TwoMatrixSummands, tol);
}

namespace {

// Shared construction for C + M_n (n >= 3): builds the idempotents e and f and
// the length-3 path through (0, e) and (||f||, f).
PathWitness c_plus_mn_path(const DirectSumElement& u, const DirectSumElement& v,
                           int scalar_idx, int matrix_idx, TheoremCase tag,
                           const ToleranceConfig& tol) {
  const Mat& b = u.coords[static_cast<size_t>(matrix_idx)];
  const Mat& d = v.coords[static_cast<size_t>(matrix_idx)];
  const int n = static_cast<int>(b.rows());
  require(n >= 3, "matrix summand must be at least 3x3");
  require(!u.coords[static_cast<size_t>(scalar_idx)].isZero(0.0) &&
              !v.coords[static_cast<size_t>(scalar_idx)].isZero(0.0),
          "scalar coordinates must be nonzero");
  require(noninvertible(b, tol) && noninvertible(d, tol),
          "matrix coordinates must be non-invertible");
  require(std::abs(u.coords[static_cast<size_t>(scalar_idx)](0, 0)) < operator_norm(b),
          "|a| < ||b|| required");
  require(std::abs(v.coords[static_cast<size_t>(scalar_idx)](0, 0)) < operator_norm(d),
          "|c| < ||d|| required");

  const Vec bx = leading_left_singular_basis(b, tol).col(0);  // direction of b x, ||bx||=||b||
  const Vec vb = adjoint_kernel_vector(b).v;
  const Vec vd = adjoint_kernel_vector(d).v;

  // prefer w orthogonal to v_b as well, so that {v_b, w} is orthonormal as-is
  Mat span3(n, 3);
  span3.col(0) = bx;
  span3.col(1) = vd;
  span3.col(2) = vb;
  Mat comp = orth_complement(span3);
  Vec w;
  if (comp.cols() > 0) {
    w = comp.col(0);
  } else {
    Mat span2(n, 2);
    span2.col(0) = bx;
    span2.col(1) = vd;
    w = orth_complement(span2).col(0);
    w -= vb * vb.dot(w);  // Gram-Schmidt against v_b
    require(w.norm() > 1e-8, "degenerate w in C+M_n construction");
    w.normalize();
  }

  const Mat e = vb * vb.adjoint() + w * w.adjoint();
  const Mat f = vd * vd.adjoint();

  DirectSumElement mid1 = zero_element(u.signature);
  mid1.coords[static_cast<size_t>(matrix_idx)] = e;
  DirectSumElement mid2 = zero_element(u.signature);
  mid2.coords[static_cast<size_t>(scalar_idx)] =
      Mat::Constant(1, 1, Complex(operator_norm(f), 0.0));
  mid2.coords[static_cast<size_t>(matrix_idx)] = f;
  return finish({u, mid1, mid2, v}, tag, tol);
}

}  // namespace

PathWitness path_c_plus_m3(const DirectSumElement& u, const DirectSumElement& v,
                           const ToleranceConfig& tol) {
  require(u.signature == v.signature, "signature mismatch");
  require(u.signature.summands() == 2, "exactly two summands required");
  int s = -1, m = -1;
  for (int c = 0; c < 2; ++c)
    (u.signature.sizes[static_cast<size_t>(c)] == 1 ? s : m) = c;
  require(s >= 0 && m >= 0 && u.signature.sizes[static_cast<size_t>(m)] == 3,
          "signature must be C + M_3");
  return c_plus_mn_path(u, v, s, m, TheoremCase::CPlusM3, tol);
}

PathWitness path_three_summands(const DirectSumElement& u, const DirectSumElement& v, int i,
                                const ToleranceConfig& tol) {
  require(u.signature == v.signature, "signature mismatch");
  const int k = u.signature.summands();
  require(k >= 3, "at least three summands required");
  require(u.signature.sizes[static_cast<size_t>(i)] >= 2, "n_i >= 2 required");
  require_only_noninvertible_at(u, i, tol);
  require_only_noninvertible_at(v, i, tol);
  require(!u.coords[static_cast<size_t>(i)].isZero(0.0) &&
              !v.coords[static_cast<size_t>(i)].isZero(0.0),
          "non-invertible coordinates must be nonzero");
  const auto pu = norms_around(u, i);
  const auto pv = norms_around(v, i);
  require(pu.norms[static_cast<size_t>(i)] > pu.max_other, "u_i must strictly dominate");
  require(pv.norms[static_cast<size_t>(i)] > pv.max_other, "v_i must strictly dominate");

  const Mat ap = annihilator_witness(u.coords[static_cast<size_t>(i)], tol);
  const Mat bp = annihilator_witness(v.coords[static_cast<size_t>(i)], tol);

  // identity padding at opposite ends, away from coordinate i
  const int pad2 = (i == k - 1) ? 0 : k - 1;
  int pad1 = 0;
  while (pad1 == i || pad1 == pad2) ++pad1;

  DirectSumElement mid1 = zero_element(u.signature);
  mid1.coords[static_cast<size_t>(i)] = ap;
  mid1.coords[static_cast<size_t>(pad1)] =
      operator_norm(ap) *
      Mat::Identity(u.signature.sizes[static_cast<size_t>(pad1)],
                    u.signature.sizes[static_cast<size_t>(pad1)]);
  DirectSumElement mid2 = zero_element(u.signature);
  mid2.coords[static_cast<size_t>(i)] = bp;
  mid2.coords[static_cast<size_t>(pad2)] =
      operator_norm(bp) *
      Mat::Identity(u.signature.sizes[static_cast<size_t>(pad2)],
                    u.signature.sizes[static_cast<size_t>(pad2)]);
  return finish({u, mid1, mid2, v}, TheoremCase::ThreeSummands, tol);
}

namespace {

// Path inside a single matrix algebra M_n.
PathWitness single_summand_route(const DirectSumElement& u, const DirectSumElement& v,
                                 const ToleranceConfig& tol) {
  const Mat& a = u.coords[0];
  const Mat& b = v.coords[0];
  const int n = static_cast<int>(a.rows());
  require(n >= 2, "M_1 has no non-isolated vertices");

  // kernel bases of the adjoints
  auto kernel_basis = [&](const Mat& m) {
    Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullU);
    const Eigen::VectorXd& s = svd.singularValues();
    Eigen::Index r = 0;
    while (r < s.size() && s(r) > tol.eps_rank * s(0)) ++r;
    return Mat(svd.matrixU().rightCols(s.size() - r));
  };
  const Mat ka = kernel_basis(a);
  const Mat kb = kernel_basis(b);
  require(ka.cols() > 0 && kb.cols() > 0, "both matrices must be non-invertible");
  const Vec va = ka.col(0);
  const Vec vbv = kb.col(0);

  auto wrap = [&](const Mat& m) { return supported_at(u.signature, 0, m); };

  // single common-neighbor candidates
  for (const Vec* c : {&va, &vbv}) {
    const DirectSumElement mid = wrap(*c * c->adjoint());
    if (mutual_strong_orth(u, mid, tol).adjacent() &&
        mutual_strong_orth(mid, v, tol).adjacent())
      return finish({u, mid, v}, TheoremCase::MatrixAlgebra, tol);
  }

  // rank-one middles with orthogonal images: x1 in ker a*, x2 in ker b*, x1 _|_ x2
  auto cross_orthogonal = [&](const Mat& first, const Mat& second) -> std::optional<std::pair<Vec, Vec>> {
    const Vec x2 = second.col(0);
    const Eigen::RowVectorXcd row = x2.adjoint() * first;
    Eigen::JacobiSVD<Mat> svd(row, Eigen::ComputeFullV);
    if (first.cols() > 1 || row.norm() <= 1e-9) {
      const Vec y = svd.matrixV().col(first.cols() - 1);
      Vec x1 = first * y;
      if ((x2.adjoint() * x1).norm() <= 1e-8 && x1.norm() > 1e-8) {
        x1.normalize();
        return std::make_pair(x1, x2);
      }
    }
    return std::nullopt;
  };
  if (auto p = cross_orthogonal(ka, kb)) {
    return finish({u, wrap(p->first * p->first.adjoint()),
                   wrap(p->second * p->second.adjoint()), v},
                  TheoremCase::MatrixAlgebra, tol);
  }
  if (auto p = cross_orthogonal(kb, ka)) {
    return finish({u, wrap(p->second * p->second.adjoint()),
                   wrap(p->first * p->first.adjoint()), v},
                  TheoremCase::MatrixAlgebra, tol);
  }

  if (n >= 4) {
    // rank-two projection middles around non-orthogonal kernel directions
    const Vec ua = leading_left_singular_basis(a, tol).col(0);
    const Vec ub = leading_left_singular_basis(b, tol).col(0);
    Mat c2(n, 3);
    c2.col(0) = vbv;
    c2.col(1) = ub;
    c2.col(2) = va;
    const Vec z2 = orth_complement(c2).col(0);
    Mat c1(n, 3);
    c1.col(0) = va;
    c1.col(1) = ua;
    c1.col(2) = z2;
    const Vec z1 = orth_complement(c1).col(0);
    return finish({u, wrap(va * va.adjoint() + z1 * z1.adjoint()),
                   wrap(vbv * vbv.adjoint() + z2 * z2.adjoint()), v},
                  TheoremCase::MatrixAlgebra, tol);
  }
  if (n == 3) {
    // three rank-one middles; matches the diameter-4 regime of M_3
    Mat span(n, 2);
    span.col(0) = va;
    span.col(1) = vbv;
    const Vec mid = orth_complement(span).col(0);
    return finish({u, wrap(va * va.adjoint()), wrap(mid * mid.adjoint()),
                   wrap(vbv * vbv.adjoint()), v},
                  TheoremCase::MatrixAlgebra, tol);
  }
  throw ConstructionError("vertices lie in different connected components of M_2");
}

// Fallback for the C + M_2 dominant regime: template midpoints, then the
// generic length-4 route through annihilator vertices and a scalar bridge.
PathWitness hard_case_fallback(const DirectSumElement& u, const DirectSumElement& v, int q,
                               const ToleranceConfig& tol) {
  const AlgebraSignature& sig = u.signature;
  const int k = sig.summands();
  const int nq = sig.sizes[static_cast<size_t>(q)];

  std::vector<DirectSumElement> templates;
  templates.push_back(supported_at(sig, q, Mat::Identity(nq, nq)));
  const Mat au = annihilator_witness(u.coords[static_cast<size_t>(q)], tol);
  const Mat av = annihilator_witness(v.coords[static_cast<size_t>(q)], tol);
  for (const Mat* w : {&au, &av}) {
    templates.push_back(supported_at(sig, q, *w));
    DirectSumElement padded = zero_element(sig);
    for (int c = 0; c < k; ++c) {
      const int nc = sig.sizes[static_cast<size_t>(c)];
      padded.coords[static_cast<size_t>(c)] =
          c == q ? *w : Mat(operator_norm(*w) * Mat::Identity(nc, nc));
    }
    templates.push_back(padded);
  }
  for (int c = 0; c < k; ++c) {
    if (c == q) continue;
    const int nc = sig.sizes[static_cast<size_t>(c)];
    templates.push_back(supported_at(sig, c, Mat::Identity(nc, nc)));
  }

  for (const DirectSumElement& mid : templates) {
    if (mutual_strong_orth(u, mid, tol).adjacent() &&
        mutual_strong_orth(mid, v, tol).adjacent())
      return finish({u, mid, v}, TheoremCase::HardCaseFallback, tol);
  }
  for (const DirectSumElement& m1 : templates)
    for (const DirectSumElement& m2 : templates) {
      if (projective_key(m1) == projective_key(m2)) continue;
      if (mutual_strong_orth(u, m1, tol).adjacent() &&
          mutual_strong_orth(m1, m2, tol).adjacent() &&
          mutual_strong_orth(m2, v, tol).adjacent())
        return finish({u, m1, m2, v}, TheoremCase::HardCaseFallback, tol);
    }

  // length 4: zero-padded annihilators bridged through a vertex on the other
  // coordinates (disjoint supports make every edge coordinatewise orthogonal)
  DirectSumElement bridge = zero_element(sig);
  for (int c = 0; c < k; ++c)
    if (c != q) {
      const int nc = sig.sizes[static_cast<size_t>(c)];
      bridge.coords[static_cast<size_t>(c)] = Mat::Identity(nc, nc);
    }
  require(!bridge.is_zero(), "no bridging coordinate available");
  return finish({u, supported_at(sig, q, au), bridge, supported_at(sig, q, av), v},
                TheoremCase::HardCaseFallback, tol);
}

}  // namespace

PathWitness route(const DirectSumElement& u, const DirectSumElement& v,
                  const ToleranceConfig& tol) {
  if (u.signature != v.signature) throw InputError("route: signature mismatch");
  if (u.is_zero() || v.is_zero()) throw DegenerateInputError("route: zero element");
  if (is_isolated_vertex(u, tol) != Tri::No || is_isolated_vertex(v, tol) != Tri::No)
    throw InputError("route: isolated vertex");

  const DirectSumElement nu = normalize_projective(u);
  const DirectSumElement nv = normalize_projective(v);
  if (projective_key(nu) == projective_key(nv)) {
    PathWitness p;
    p.theorem_case = TheoremCase::SameVertex;
    p.vertices = {nu};
    return p;
  }
  {
    OrthDecisionPair pair = mutual_strong_orth(nu, nv, tol);
    if (pair.adjacent()) {
      PathWitness p;
      p.theorem_case = TheoremCase::Adjacent;
      p.vertices = {nu, nv};
      p.edge_certificates = {std::move(pair)};
      return p;
    }
  }

  const int k = nu.signature.summands();
  if (k == 1) return single_summand_route(nu, nv, tol);

  auto noninv_set = [&](const DirectSumElement& e) {
    std::vector<int> out;
    for (int c = 0; c < k; ++c)
      if (is_invertible(e.coords[static_cast<size_t>(c)], tol) == Tri::No) out.push_back(c);
    return out;
  };
  const std::vector<int> su = noninv_set(nu);
  const std::vector<int> sv = noninv_set(nv);
  require(!su.empty() && !sv.empty(), "route: could not classify invertibility firmly");

  for (int i : su)
    for (int j : sv)
      if (i != j) return path_distinct_coordinates(nu, nv, i, j, tol);

  const int q = su[0];  // common unique non-invertible coordinate
  const auto pu = norms_around(nu, q);
  const auto pv = norms_around(nv, q);
  const bool u_dominated = pu.max_other >= pu.norms[static_cast<size_t>(q)] * (1.0 - tol.eps_tie);
  const bool v_dominated = pv.max_other >= pv.norms[static_cast<size_t>(q)] * (1.0 - tol.eps_tie);

  if (u_dominated && v_dominated) return path_via_unit(nu, nv, q, tol);
  if (u_dominated) return path_combination(nu, nv, q, tol);
  if (v_dominated) return reversed(path_combination(nv, nu, q, tol));

  // both strictly dominant at q
  const int nq = nu.signature.sizes[static_cast<size_t>(q)];
  require(nq >= 2, "strict dominance by a scalar coordinate is impossible");
  if (k >= 3) return path_three_summands(nu, nv, q, tol);
  const int no = nu.signature.sizes[static_cast<size_t>(1 - q)];
  if (no >= 2) return path_two_matrix_summands(nu, nv, tol);
  if (nq >= 3) return c_plus_mn_path(nu, nv, 1 - q, q, TheoremCase::CPlusM3, tol);
  return hard_case_fallback(nu, nv, q, tol);
}

}  // namespace orthograph
