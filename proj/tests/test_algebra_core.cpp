#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orthograph/algebra_core.hpp"

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

}  // namespace

TEST_CASE("operator norm on known matrices") {
  CHECK(operator_norm(Mat::Ones(2, 2)) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(operator_norm(Mat::Identity(3, 3)) == doctest::Approx(1.0));
  CHECK(operator_norm(Mat::Zero(2, 2)) == 0.0);
  Mat nil = Mat::Zero(2, 2);
  nil(0, 1) = 3.0;
  CHECK(operator_norm(nil) == doctest::Approx(3.0));
}

TEST_CASE("direct-sum norm is the max over coordinates") {
  AlgebraSignature sig({1, 2});
  DirectSumElement e(sig, {Mat::Constant(1, 1, Complex(1.5)), Mat::Ones(2, 2)});
  CHECK(operator_norm(e) == doctest::Approx(2.0));
}

TEST_CASE("leading left singular basis of the all-ones matrix") {
  const Mat u = leading_left_singular_basis(Mat::Ones(2, 2));
  REQUIRE(u.cols() == 1);
  Vec dir(2);
  dir << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  CHECK(std::abs(dir.dot(u.col(0))) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("leading singular data spans the full tie cluster of a unitary") {
  const auto lead = leading_singular_data(Mat::Identity(2, 2));
  CHECK(lead.left.cols() == 2);
  CHECK(lead.sigma_max == doctest::Approx(1.0));
  CHECK((lead.left.adjoint() * lead.left - Mat::Identity(2, 2)).norm() < 1e-12);
}

TEST_CASE("range projection of the all-ones matrix") {
  const Mat p = range_projection(Mat::Ones(2, 2));
  CHECK((p - Mat::Constant(2, 2, 0.5)).norm() < 1e-12);
  CHECK((range_projection(Mat::Identity(3, 3)) - Mat::Identity(3, 3)).norm() < 1e-12);
  CHECK(range_projection(Mat::Zero(2, 2)).norm() == 0.0);
}

TEST_CASE("range projection is idempotent and hermitian on random input") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 20; ++t) {
    const Mat m = random_mat(2 + t % 3, rng);
    const Mat p = range_projection(m);
    CHECK((p * p - p).norm() < 1e-10);
    CHECK((p - p.adjoint()).norm() < 1e-10);
    CHECK((p * m - m).norm() < 1e-9 * operator_norm(m));
  }
}

TEST_CASE("adjoint kernel vector") {
  Mat d = Mat::Zero(2, 2);
  d(0, 0) = 2.0;
  const KernelVector kv = adjoint_kernel_vector(d);
  CHECK(kv.sigma_min == doctest::Approx(0.0));
  CHECK(std::abs(kv.v(1)) == doctest::Approx(1.0));
  CHECK((d.adjoint() * kv.v).norm() < 1e-12);

  const KernelVector full = adjoint_kernel_vector(Mat::Identity(2, 2));
  CHECK(full.sigma_min == doctest::Approx(1.0));

  const KernelVector zero = adjoint_kernel_vector(Mat::Zero(3, 3));
  CHECK(zero.sigma_min == 0.0);
  CHECK(zero.v.norm() == doctest::Approx(1.0));
}

TEST_CASE("tri-state invertibility with the relative band") {
  CHECK(is_invertible(Mat::Identity(2, 2)) == Tri::Yes);
  Mat d = Mat::Zero(2, 2);
  d(0, 0) = 1.0;
  CHECK(is_invertible(d) == Tri::No);
  d(1, 1) = 5e-9;  // between eps_rank and 10*eps_rank
  CHECK(is_invertible(d) == Tri::Uncertain);
  d(1, 1) = 1e-6;
  CHECK(is_invertible(d) == Tri::Yes);
}

TEST_CASE("projective normalization is constant on rays and idempotent") {
  std::mt19937_64 rng(11);
  AlgebraSignature sig({2, 3});
  for (int t = 0; t < 30; ++t) {
    DirectSumElement e(sig, {random_mat(2, rng), random_mat(3, rng)});
    const DirectSumElement n1 = normalize_projective(e);
    const Complex scale = Complex(1.7, -0.4) * (1.0 + t * 0.1);
    std::vector<Mat> scaled;
    for (const Mat& m : e.coords) scaled.push_back(Mat(scale * m));
    const DirectSumElement n2 = normalize_projective(DirectSumElement(sig, scaled));
    for (int c = 0; c < 2; ++c)
      CHECK((n1.coords[static_cast<size_t>(c)] - n2.coords[static_cast<size_t>(c)]).norm() <
            1e-10);
    CHECK(operator_norm(n1) == doctest::Approx(1.0));
    const DirectSumElement n3 = normalize_projective(n1);
    for (int c = 0; c < 2; ++c)
      CHECK((n1.coords[static_cast<size_t>(c)] - n3.coords[static_cast<size_t>(c)]).norm() <
            1e-12);
  }
}

TEST_CASE("projective keys merge rays and separate distinct vertices") {
  AlgebraSignature sig({2});
  DirectSumElement a(sig, {Mat::Ones(2, 2)});
  DirectSumElement b(sig, {Mat(Complex(0.0, 3.0) * Mat::Ones(2, 2))});
  Mat other = Mat::Zero(2, 2);
  other(0, 0) = 1.0;
  DirectSumElement c(sig, {other});
  CHECK(projective_key(normalize_projective(a)) == projective_key(normalize_projective(b)));
  CHECK(projective_key(normalize_projective(a)) != projective_key(normalize_projective(c)));
}

TEST_CASE("element validation rejects malformed input") {
  AlgebraSignature sig({2});
  CHECK_THROWS_AS(DirectSumElement(sig, {Mat::Zero(3, 3)}), InputError);
  CHECK_THROWS_AS(DirectSumElement(sig, {}), InputError);
  Mat bad = Mat::Zero(2, 2);
  bad(0, 0) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(DirectSumElement(sig, {bad}), InputError);
  CHECK_THROWS_AS(AlgebraSignature({0}), InputError);
  CHECK_THROWS_AS(AlgebraSignature(std::vector<int>{}), InputError);
}
