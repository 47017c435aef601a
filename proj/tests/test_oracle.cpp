#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orthograph/oracle.hpp"

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

DirectSumElement scalars(std::vector<Complex> vals) {
  std::vector<Mat> coords;
  for (const Complex& v : vals) coords.push_back(Mat::Constant(1, 1, v));
  return DirectSumElement(AlgebraSignature(std::vector<int>(vals.size(), 1)), coords);
}

const MinNormConfig kFast{2, 400, 1};

}  // namespace

TEST_CASE("search returns the norm when b = 0 and near zero when b is invertible") {
  CHECK(min_norm_search(Mat::Ones(2, 2), Mat::Zero(2, 2)) == doctest::Approx(2.0));
  std::mt19937_64 rng(5);
  for (int t = 0; t < 5; ++t) {
    const Mat a = random_mat(3, rng);
    const Mat b = Mat::Identity(3, 3) + 0.2 * random_mat(3, rng);
    CHECK(min_norm_search(a, b, kFast) < 1e-6);
  }
}

TEST_CASE("search recovers the known distance for orthogonal image lines") {
  Mat b(2, 2);
  b << 1.0, 1.0, -1.0, -1.0;
  CHECK(min_norm_search(Mat::Ones(2, 2), b, kFast) == doctest::Approx(2.0).epsilon(1e-7));
}

TEST_CASE("search agrees with the closed-form distance on random pairs") {
  std::mt19937_64 rng(7);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const int n = 2 + t % 3;
    const Mat a = random_mat(n, rng);
    const Mat b = random_mat(n, rng);
    MinNormConfig cfg = kFast;
    cfg.seed = static_cast<std::uint64_t>(t) + 10;
    const double s = min_norm_search(a, b, cfg);
    const double d = ideal_distance(a, b);
    CHECK(s >= d - 1e-6);  // upper-bound property
    worst = std::max(worst, std::abs(s - d));
  }
  CHECK(worst <= 1e-6);
}

TEST_CASE("search value decreases with more iterations") {
  std::mt19937_64 rng(9);
  const Mat a = random_mat(4, rng);
  const Mat b = random_mat(4, rng);
  const double coarse = min_norm_search(a, b, MinNormConfig{0, 25, 1});
  const double fine = min_norm_search(a, b, MinNormConfig{2, 500, 1});
  CHECK(fine <= coarse + 1e-12);
}

TEST_CASE("exhaustive scalar decision on known tuples") {
  CHECK(exhaustive_scalar_orth(scalars({0.0, 1.0}), scalars({1.0, 0.0})));
  CHECK_FALSE(exhaustive_scalar_orth(scalars({1.0, 1.0}), scalars({1.0, 1.0})));
  CHECK_THROWS_AS(exhaustive_scalar_orth(scalars({0.0, 0.0}), scalars({1.0, 0.0})),
                  DegenerateInputError);
  CHECK_THROWS_AS(
      exhaustive_scalar_orth(scalars(std::vector<Complex>(13, 1.0)),
                             scalars(std::vector<Complex>(13, 1.0))),
      InputError);
}

TEST_CASE("exhaustive scalar decision matches the support rule") {
  std::mt19937_64 rng(11);
  const double pool[] = {0.0, 0.0, 1.0, -1.0, 2.0, 0.5};
  for (int t = 0; t < 300; ++t) {
    const size_t k = 2 + rng() % 5;
    std::vector<Complex> cu, cv;
    for (size_t i = 0; i < k; ++i) {
      cu.push_back(pool[rng() % 6]);
      cv.push_back(pool[rng() % 6]);
    }
    DirectSumElement u = scalars(cu), v = scalars(cv);
    if (u.is_zero() || v.is_zero()) continue;
    CHECK(exhaustive_scalar_orth(u, v) == strong_orth_scalars(u, v));
  }
}

TEST_CASE("gate passes at default tolerances and is deterministic per seed") {
  GateConfig cfg;
  cfg.sizes = {2, 3};
  cfg.pairs_per_size = 60;
  cfg.directsum_trials = 20;
  cfg.m2_trials = 50;
  cfg.scalar_trials = 50;
  cfg.n_threads = 1;
  const GateReport r1 = derived_rule_gate(42, cfg);
  const GateReport r2 = derived_rule_gate(42, cfg);
  CHECK(r1.passed);
  CHECK(r1.max_distance_discrepancy <= 1e-6);
  CHECK(r1.trials == r2.trials);
  CHECK(r1.max_distance_discrepancy == r2.max_distance_discrepancy);
}

TEST_CASE("gate detects a corrupted distance formula") {
  GateConfig cfg;
  cfg.sizes = {2};
  cfg.pairs_per_size = 20;
  cfg.directsum_trials = 4;
  cfg.m2_trials = 0;
  cfg.scalar_trials = 0;
  cfg.n_threads = 1;
  cfg.distance_fn = [](const Mat& a, const Mat& b, const ToleranceConfig& tol) {
    return -ideal_distance(a, b, tol);  // mutated sign
  };
  const GateReport rep = derived_rule_gate(42, cfg);
  CHECK_FALSE(rep.passed);
  REQUIRE(!rep.failures.empty());
  CHECK(rep.failures[0].check == "distance-formula");
  // the counterexample is a well-formed element pair
  CHECK(rep.failures[0].first.signature.summands() == 1);
  CHECK_FALSE(rep.failures[0].first.is_zero());
}
