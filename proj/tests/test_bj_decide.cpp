#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orthograph/bj_decide.hpp"

#include <random>

using namespace orthograph;

namespace {

Mat random_mat(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> d(0.0, 1.0);
  Mat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Complex(d(rng), d(rng));
  return m;
}

Mat diag2(double a, double b) {
  Mat m = Mat::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

DirectSumElement scalars(std::vector<Complex> vals) {
  std::vector<Mat> coords;
  for (const Complex& v : vals) coords.push_back(Mat::Constant(1, 1, v));
  return DirectSumElement(AlgebraSignature(std::vector<int>(vals.size(), 1)), coords);
}

}  // namespace

TEST_CASE("ideal distance on known instances") {
  // b's image is Lin{(1,-1)}, orthogonal to the image of the all-ones matrix
  Mat b(2, 2);
  b << 1.0, 1.0, -1.0, -1.0;
  CHECK(ideal_distance(Mat::Ones(2, 2), b) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(ideal_distance(Mat::Ones(2, 2), Mat::Zero(2, 2)) == doctest::Approx(2.0));
  CHECK(ideal_distance(Mat::Ones(2, 2), Mat::Identity(2, 2)) == doctest::Approx(0.0));
  CHECK(ideal_distance(Mat::Zero(2, 2), Mat::Ones(2, 2)) == 0.0);
}

TEST_CASE("ideal distance never exceeds the norm") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    const int n = 2 + t % 4;
    const Mat a = random_mat(n, rng);
    const Mat b = random_mat(n, rng);
    const double d = ideal_distance(a, b);
    CHECK(d >= 0.0);
    CHECK(d <= operator_norm(a) + 1e-12);
  }
}

TEST_CASE("identity is strongly orthogonal to a proper projection, not conversely") {
  const Mat id = Mat::Identity(2, 2);
  const Mat p = diag2(1.0, 0.0);
  const OrthDecision fwd = strong_orth_matrix(id, p);
  CHECK(fwd.verdict == Tri::Yes);
  REQUIRE(fwd.certificate.has_value());
  CHECK(fwd.certificate->norm_residual < 1e-8);
  CHECK(fwd.certificate->orth_residual < 1e-8);
  CHECK(strong_orth_matrix(p, id).verdict == Tri::No);
}

TEST_CASE("b = 0 makes every nonzero a strongly orthogonal") {
  const OrthDecision d = strong_orth_matrix(Mat::Ones(3, 3), Mat::Zero(3, 3));
  CHECK(d.verdict == Tri::Yes);
  CHECK(d.margin == doctest::Approx(1.0));
}

TEST_CASE("a* b = 0 forces mutual strong orthogonality") {
  AlgebraSignature sig({2});
  DirectSumElement a(sig, {diag2(1.0, 0.0)});
  DirectSumElement b(sig, {diag2(0.0, 1.0)});
  CHECK(mutual_strong_orth(a, b).adjacent());
}

TEST_CASE("yes-certificates are sound") {
  std::mt19937_64 rng(17);
  int yes_seen = 0;
  for (int t = 0; t < 200; ++t) {
    const int n = 2 + t % 3;
    Mat a = random_mat(n, rng);
    {  // make a singular so orthogonal partners exist
      Eigen::JacobiSVD<Mat> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
      Eigen::VectorXd s = svd.singularValues();
      s(s.size() - 1) = 0.0;
      a = svd.matrixU() * s.asDiagonal() * svd.matrixV().adjoint();
    }
    Mat b = random_mat(n, rng);
    if (t % 2 == 0) {
      Eigen::JacobiSVD<Mat> svd(a, Eigen::ComputeFullU);
      const Vec y = svd.matrixU().col(0);
      b -= y * (y.adjoint() * b);  // force orthogonality
    }
    const OrthDecision d = strong_orth_matrix(a, b);
    if (d.verdict != Tri::Yes) continue;
    ++yes_seen;
    REQUIRE(d.certificate.has_value());
    const Vec x = d.certificate->witness;
    CHECK(x.norm() == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(std::abs((a * x).norm() - operator_norm(a)) < 1e-7 * operator_norm(a));
    CHECK((b.adjoint() * a * x).norm() < 1e-7 * operator_norm(a) * (operator_norm(b) + 1.0));
  }
  CHECK(yes_seen > 50);
}

TEST_CASE("verdicts are invariant under rescaling") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> scale(0.1, 10.0);
  for (int t = 0; t < 50; ++t) {
    const int n = 2 + t % 3;
    const Mat a = random_mat(n, rng);
    const Mat b = random_mat(n, rng);
    const Complex sa = scale(rng) * std::exp(Complex(0.0, scale(rng)));
    const Complex sb = scale(rng) * std::exp(Complex(0.0, scale(rng)));
    CHECK(strong_orth_matrix(a, b).verdict == strong_orth_matrix(Mat(sa * a), Mat(sb * b)).verdict);
  }
}

TEST_CASE("detailed decision never produces firm contradictions") {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 200; ++t) {
    const int n = 2 + t % 4;
    const auto det = strong_orth_matrix_detailed(random_mat(n, rng), random_mat(n, rng));
    const bool clash = (det.subspace_verdict == Tri::Yes && det.distance_verdict == Tri::No) ||
                       (det.subspace_verdict == Tri::No && det.distance_verdict == Tri::Yes);
    CHECK_FALSE(clash);
  }
}

TEST_CASE("wrapper and detailed decision agree") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 50; ++t) {
    const Mat a = random_mat(3, rng);
    const Mat b = random_mat(3, rng);
    CHECK(strong_orth_matrix(a, b).verdict == strong_orth_matrix_detailed(a, b).fused.verdict);
  }
}

TEST_CASE("direct-sum decision with norm-achieving coordinate certificates") {
  AlgebraSignature sig({2, 2});
  const Mat id = Mat::Identity(2, 2);
  const Mat p = diag2(1.0, 0.0);
  DirectSumElement u(sig, {id, p});
  DirectSumElement v(sig, {p, id});
  const OrthDecision fwd = strong_orth_directsum(u, v);
  CHECK(fwd.verdict == Tri::Yes);
  REQUIRE(fwd.certificate.has_value());
  CHECK(fwd.certificate->coordinate_index == 0);
  CHECK(mutual_strong_orth(u, v).adjacent());
}

TEST_CASE("degenerate inputs are rejected") {
  AlgebraSignature sig({2});
  DirectSumElement zero(sig, {Mat::Zero(2, 2)});
  DirectSumElement one(sig, {Mat::Identity(2, 2)});
  CHECK_THROWS_AS(strong_orth_directsum(zero, one), DegenerateInputError);
  CHECK_THROWS_AS(mutual_strong_orth(one, zero), DegenerateInputError);
  CHECK_THROWS_AS(strong_orth_matrix(Mat::Zero(2, 2), Mat::Ones(2, 2)), DegenerateInputError);
}

TEST_CASE("exact scalar rule") {
  CHECK(strong_orth_scalars(scalars({0.0, 1.0}), scalars({1.0, 0.0})));
  CHECK_FALSE(strong_orth_scalars(scalars({1.0, 1.0}), scalars({1.0, 1.0})));
  // one-way only: max of u on zeros of v must reach max of u
  CHECK(strong_orth_scalars_one_way(scalars({2.0, 1.0}), scalars({0.0, 1.0})));
  CHECK_FALSE(strong_orth_scalars_one_way(scalars({1.0, 2.0}), scalars({0.0, 1.0})));
  CHECK_THROWS_AS(strong_orth_scalars(scalars({0.0, 0.0}), scalars({1.0, 0.0})),
                  DegenerateInputError);
}

TEST_CASE("scalar rule matches the general decision procedure") {
  std::mt19937_64 rng(37);
  const double pool[] = {0.0, 0.0, 1.0, -1.0, 2.0, 0.5};
  for (int t = 0; t < 200; ++t) {
    const size_t k = 2 + rng() % 4;
    std::vector<Complex> cu, cv;
    for (size_t i = 0; i < k; ++i) {
      cu.push_back(pool[rng() % 6]);
      cv.push_back(pool[rng() % 6]);
    }
    DirectSumElement u = scalars(cu), v = scalars(cv);
    if (u.is_zero() || v.is_zero()) continue;
    const OrthDecision d = strong_orth_directsum(u, v);
    if (d.verdict == Tri::Uncertain) continue;
    CHECK((d.verdict == Tri::Yes) == strong_orth_scalars_one_way(u, v));
  }
}

TEST_CASE("isolated vertices are exactly the all-invertible elements") {
  AlgebraSignature sig({1, 2});
  DirectSumElement inv(sig, {Mat::Constant(1, 1, Complex(1.0)), Mat::Identity(2, 2)});
  DirectSumElement sing(sig, {Mat::Constant(1, 1, Complex(1.0)), diag2(1.0, 0.0)});
  CHECK(is_isolated_vertex(inv) == Tri::Yes);
  CHECK(is_isolated_vertex(sing) == Tri::No);
}

TEST_CASE("M_2 component labels") {
  const M2ComponentLabel la = m2_component(diag2(2.0, 0.0));
  Vec e1 = Vec::Zero(2);
  e1(0) = 1.0;
  const M2ComponentLabel le1{e1};
  CHECK(same_m2_component(la, le1));

  const M2ComponentLabel lones = m2_component(Mat::Ones(2, 2));
  Vec d(2);
  d << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  CHECK(same_m2_component(lones, M2ComponentLabel{d}));
  CHECK_FALSE(same_m2_component(la, lones));

  // the label identifies a line with its orthogonal complement
  const M2ComponentLabel lperp = m2_component(diag2(0.0, 2.0));
  CHECK(same_m2_component(la, lperp));
}

TEST_CASE("rank-one adjacency in M_2 is image-line orthogonality") {
  CHECK(m2_adjacent(diag2(1.0, 0.0), diag2(0.0, 3.0)));
  CHECK_FALSE(m2_adjacent(diag2(1.0, 0.0), Mat::Ones(2, 2)));
  CHECK_THROWS_AS(m2_adjacent(Mat::Identity(2, 2), diag2(1.0, 0.0)), InputError);

  AlgebraSignature sig({2});
  std::mt19937_64 rng(41);
  for (int t = 0; t < 100; ++t) {
    Vec x = random_mat(2, rng).col(0).normalized();
    Vec y;
    if (t % 3 == 0) {
      y = Vec(2);
      y(0) = -std::conj(x(1));
      y(1) = std::conj(x(0));
    } else {
      y = random_mat(2, rng).col(0).normalized();
    }
    const Mat a = x * random_mat(2, rng).col(0).adjoint();
    const Mat b = y * random_mat(2, rng).col(0).adjoint();
    if (operator_norm(a) < 1e-3 || operator_norm(b) < 1e-3) continue;
    const auto pair = mutual_strong_orth(DirectSumElement(sig, {a}), DirectSumElement(sig, {b}));
    if (pair.forward.verdict == Tri::Uncertain || pair.backward.verdict == Tri::Uncertain)
      continue;
    CHECK(m2_adjacent(a, b) == pair.adjacent());
  }
}
