#include "orthograph/oracle.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <random>
#include <thread>
#include <vector>

namespace orthograph {

namespace {

using Eigen::VectorXd;

Mat unpack(const VectorXd& x, Eigen::Index rows, Eigen::Index cols) {
  Mat c(rows, cols);
  Eigen::Index k = 0;
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) {
      c(i, j) = Complex(x(k), x(k + 1));
      k += 2;
    }
  return c;
}

// Smoothed largest singular value of a + b c at smoothing width mu, with the
// gradient in the real parametrization of c. Also reports the exact value.
double smooth_eval(const Mat& a, const Mat& b, const VectorXd& x, double mu,
                   VectorXd& grad, double& sigma_max) {
  const Mat c = unpack(x, b.cols(), a.cols());
  const Mat m = a + b * c;
  Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::VectorXd& s = svd.singularValues();
  sigma_max = s(0);
  VectorXd w = ((s.array() - s(0)) / mu).exp();
  const double z = w.sum();
  w /= z;
  Mat g = Mat::Zero(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (w(i) > 1e-300)
      g += w(i) * svd.matrixU().col(i) * svd.matrixV().col(i).adjoint();
  const Mat gc = b.adjoint() * g;
  grad.resize(x.size());
  Eigen::Index k = 0;
  for (Eigen::Index j = 0; j < gc.cols(); ++j)
    for (Eigen::Index i = 0; i < gc.rows(); ++i) {
      grad(k) = gc(i, j).real();
      grad(k + 1) = gc(i, j).imag();
      k += 2;
    }
  return s(0) + mu * std::log(z);
}

// Limited-memory quasi-Newton descent on the smoothed objective; tracks the
// best exact value seen across all evaluations.
void lbfgs_stage(const Mat& a, const Mat& b, VectorXd& x, double mu, int max_iters,
                 double gtol, double& best) {
  constexpr int kMem = 8;
  std::vector<VectorXd> ss, ys;
  std::vector<double> rho;
  VectorXd g, gn;
  double smax = 0;
  double f = smooth_eval(a, b, x, mu, g, smax);
  best = std::min(best, smax);

  for (int iter = 0; iter < max_iters; ++iter) {
    if (g.norm() <= gtol) break;

    VectorXd q = g;
    const int h = static_cast<int>(ss.size());
    std::vector<double> alpha(static_cast<size_t>(h));
    for (int i = h - 1; i >= 0; --i) {
      alpha[static_cast<size_t>(i)] =
          rho[static_cast<size_t>(i)] * ss[static_cast<size_t>(i)].dot(q);
      q -= alpha[static_cast<size_t>(i)] * ys[static_cast<size_t>(i)];
    }
    if (h > 0) {
      const VectorXd& yl = ys.back();
      q *= ss.back().dot(yl) / yl.squaredNorm();
    }
    for (int i = 0; i < h; ++i) {
      const double beta = rho[static_cast<size_t>(i)] * ys[static_cast<size_t>(i)].dot(q);
      q += (alpha[static_cast<size_t>(i)] - beta) * ss[static_cast<size_t>(i)];
    }
    VectorXd d = -q;
    double gd = g.dot(d);
    if (gd > -1e-14 * g.norm() * d.norm()) {
      d = -g;
      gd = -g.squaredNorm();
    }

    double t = h == 0 ? 1.0 / std::max(1.0, g.norm()) : 1.0;
    double fn = f;
    VectorXd xn;
    bool ok = false;
    while (t > 1e-16) {
      xn = x + t * d;
      fn = smooth_eval(a, b, xn, mu, gn, smax);
      best = std::min(best, smax);
      if (fn <= f + 1e-4 * t * gd) {
        ok = true;
        break;
      }
      t *= 0.5;
    }
    if (!ok || f - fn <= 1e-16 * std::abs(f) + 1e-300) {
      if (ok) {
        x = xn;
      }
      break;
    }

    VectorXd sv = xn - x;
    VectorXd yv = gn - g;
    const double sy = sv.dot(yv);
    if (sy > 1e-14 * sv.norm() * yv.norm()) {
      if (static_cast<int>(ss.size()) == kMem) {
        ss.erase(ss.begin());
        ys.erase(ys.begin());
        rho.erase(rho.begin());
      }
      ss.push_back(std::move(sv));
      ys.push_back(std::move(yv));
      rho.push_back(1.0 / sy);
    }
    x = std::move(xn);
    f = fn;
    g = std::move(gn);
  }
}

Mat random_gaussian(int rows, int cols, std::mt19937_64& rng) {
  std::normal_distribution<double> dist(0.0, 1.0);
  Mat m(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) m(i, j) = Complex(dist(rng), dist(rng));
  return m;
}

// Zero out the smallest singular value.
Mat deflate(const Mat& m) {
  Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::VectorXd s = svd.singularValues();
  s(s.size() - 1) = 0.0;
  return svd.matrixU() * s.asDiagonal() * svd.matrixV().adjoint();
}

void parallel_for(int count, int n_threads, const std::function<void(int)>& body) {
  if (n_threads <= 0) {
    n_threads = static_cast<int>(std::thread::hardware_concurrency());
    if (n_threads <= 0) n_threads = 4;
  }
  n_threads = std::min(n_threads, std::max(1, count));
  if (n_threads == 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  for (int t = 0; t < n_threads; ++t)
    pool.emplace_back([&, t] {
      for (int i = t; i < count; i += n_threads) body(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace

double min_norm_search(const Mat& a, const Mat& b, const MinNormConfig& cfg) {
  validate_matrix(a);
  validate_matrix(b);
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw InputError("min_norm_search: size mismatch");
  const double na = operator_norm(a);
  if (na == 0.0) return 0.0;
  const double nb = operator_norm(b);
  if (nb == 0.0) return na;

  const int params = static_cast<int>(2 * b.cols() * a.cols());
  const int stages = 5;  // mu: 1e-1, 1e-3, ..., 1e-9 relative to ||a||
  const int per_stage = std::max(10, cfg.iterations / stages);
  std::mt19937_64 rng(cfg.seed);
  std::normal_distribution<double> dist(0.0, 1.0);

  double best = na;  // value at c = 0
  for (int start = 0; start <= std::max(0, cfg.restarts); ++start) {
    VectorXd x = VectorXd::Zero(params);
    if (start > 0) {
      for (int i = 0; i < params; ++i) x(i) = dist(rng) * na / nb;
    }
    for (int stage = 0; stage < stages; ++stage) {
      const double mu = na * std::pow(10.0, -1 - 2 * stage);
      lbfgs_stage(a, b, x, mu, per_stage, na * 1e-12 + mu * 1e-5, best);
    }
  }
  return best;
}

bool exhaustive_scalar_orth(const DirectSumElement& u, const DirectSumElement& v) {
  if (u.signature != v.signature || !u.signature.all_scalar())
    throw InputError("exhaustive_scalar_orth: signatures must match and be all 1s");
  if (u.is_zero() || v.is_zero())
    throw DegenerateInputError("exhaustive_scalar_orth: zero element");
  if (u.signature.summands() > 12)
    throw InputError("exhaustive_scalar_orth: k must be <= 12");

  auto one_way = [](const DirectSumElement& a, const DirectSumElement& b) {
    // min_c max_i |a_i + b_i c_i|: each coordinate minimizes to 0 unless b_i = 0
    double norm_a = 0.0, min_norm = 0.0;
    for (size_t i = 0; i < a.coords.size(); ++i) {
      const double mod = std::abs(a.coords[i](0, 0));
      norm_a = std::max(norm_a, mod);
      const Complex bi = b.coords[i](0, 0);
      if (bi.real() == 0.0 && bi.imag() == 0.0) min_norm = std::max(min_norm, mod);
    }
    return min_norm == norm_a;
  };
  return one_way(u, v) && one_way(v, u);
}

namespace {

void record(GateReport& rep, std::mutex& mu, const std::string& check,
            const DirectSumElement& a, const DirectSumElement& b, double disc) {
  std::lock_guard<std::mutex> lock(mu);
  rep.passed = false;
  if (rep.failures.size() < 16) rep.failures.push_back({check, a, b, disc});
}

DirectSumElement wrap(const Mat& m) {
  return DirectSumElement(AlgebraSignature({static_cast<int>(m.rows())}), {m});
}

}  // namespace

GateReport derived_rule_gate(std::uint64_t seed, const GateConfig& cfg) {
  cfg.tol.validate();
  auto dist_fn = cfg.distance_fn
                     ? cfg.distance_fn
                     : [](const Mat& a, const Mat& b, const ToleranceConfig& t) {
                         return ideal_distance(a, b, t);
                       };
  GateReport rep;
  std::mutex mu;

  // matrix pairs: distance formula vs search, and checker agreement
  for (int n : cfg.sizes) {
    std::mt19937_64 rng(seed * 1315423911u + static_cast<std::uint64_t>(n));
    std::vector<std::pair<Mat, Mat>> items;
    items.reserve(static_cast<size_t>(cfg.pairs_per_size));
    for (int i = 0; i < cfg.pairs_per_size; ++i) {
      Mat a = random_gaussian(n, n, rng);
      Mat b = random_gaussian(n, n, rng);
      switch (i % 4) {
        case 1:
          a = deflate(a);
          break;
        case 2:
          a = deflate(a);
          b = deflate(b);
          break;
        case 3: {
          // orthogonal by construction: Im(b) perpendicular to the leading image
          a = deflate(a);
          Eigen::JacobiSVD<Mat> svd(a, Eigen::ComputeFullU);
          const Vec y = svd.matrixU().col(0);
          b -= y * (y.adjoint() * b);
          break;
        }
        default:
          break;
      }
      items.emplace_back(std::move(a), std::move(b));
    }
    parallel_for(cfg.pairs_per_size, cfg.n_threads, [&](int i) {
      const Mat& a = items[static_cast<size_t>(i)].first;
      const Mat& b = items[static_cast<size_t>(i)].second;
      MinNormConfig mc = cfg.search;
      mc.seed = seed + static_cast<std::uint64_t>(i) * 2654435761u + static_cast<std::uint64_t>(n);
      const double d = dist_fn(a, b, cfg.tol);
      const double s = min_norm_search(a, b, mc);
      const double disc = s - d;
      {
        std::lock_guard<std::mutex> lock(mu);
        rep.trials++;
        rep.max_distance_discrepancy = std::max(rep.max_distance_discrepancy, std::abs(disc));
      }
      if (std::abs(disc) > 1e-6)
        record(rep, mu, "distance-formula", wrap(a), wrap(b), disc);
      const auto det = strong_orth_matrix_detailed(a, b, cfg.tol);
      const bool clash = (det.subspace_verdict == Tri::Yes && det.distance_verdict == Tri::No) ||
                         (det.subspace_verdict == Tri::No && det.distance_verdict == Tri::Yes);
      if (clash)
        record(rep, mu, "checker-contradiction", wrap(a), wrap(b),
               det.subspace_value - det.distance_gap);
    });
  }

  // direct sums: the max rule against per-coordinate search
  {
    const std::vector<std::vector<int>> sigs{{2, 2}, {1, 3}, {1, 2}, {2, 3}};
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    std::vector<std::pair<DirectSumElement, DirectSumElement>> items;
    for (int i = 0; i < cfg.directsum_trials; ++i) {
      const auto& sz = sigs[static_cast<size_t>(i) % sigs.size()];
      std::vector<Mat> ca, cb;
      for (int n : sz) {
        Mat a = random_gaussian(n, n, rng);
        Mat b = random_gaussian(n, n, rng);
        if (i % 3 == 1 && n > 1) a = deflate(a);
        if (i % 5 == 2) b.setZero();
        ca.push_back(std::move(a));
        cb.push_back(std::move(b));
      }
      AlgebraSignature sig(sz);
      items.emplace_back(DirectSumElement(sig, std::move(ca)),
                         DirectSumElement(sig, std::move(cb)));
    }
    parallel_for(cfg.directsum_trials, cfg.n_threads, [&](int i) {
      const auto& [a, b] = items[static_cast<size_t>(i)];
      double oracle_d = 0.0, formula_d = 0.0;
      for (size_t c = 0; c < a.coords.size(); ++c) {
        MinNormConfig mc = cfg.search;
        mc.seed = seed + 77777u * static_cast<std::uint64_t>(i) + c;
        oracle_d = std::max(oracle_d, min_norm_search(a.coords[c], b.coords[c], mc));
        formula_d = std::max(formula_d, dist_fn(a.coords[c], b.coords[c], cfg.tol));
      }
      {
        std::lock_guard<std::mutex> lock(mu);
        rep.trials++;
        rep.max_distance_discrepancy =
            std::max(rep.max_distance_discrepancy, std::abs(oracle_d - formula_d));
      }
      if (std::abs(oracle_d - formula_d) > 1e-6)
        record(rep, mu, "directsum-max-rule", a, b, oracle_d - formula_d);
    });
  }

  // scalars: closed support rule against per-coordinate minimization
  {
    std::mt19937_64 rng(seed ^ 0xc2b2ae3d27d4eb4full);
    const Complex pool[] = {Complex(0), Complex(0), Complex(1),  Complex(-1),
                            Complex(2), Complex(0.5), Complex(0, 1), Complex(0)};
    for (int t = 0; t < cfg.scalar_trials; ++t) {
      const int k = 2 + static_cast<int>(rng() % 5);
      AlgebraSignature sig(std::vector<int>(static_cast<size_t>(k), 1));
      auto draw = [&] {
        std::vector<Mat> cs;
        for (int i = 0; i < k; ++i) {
          Mat m(1, 1);
          m(0, 0) = pool[rng() % 8];
          cs.push_back(m);
        }
        return DirectSumElement(sig, cs);
      };
      DirectSumElement u = draw(), v = draw();
      if (u.is_zero() || v.is_zero()) continue;
      rep.trials++;
      if (exhaustive_scalar_orth(u, v) != strong_orth_scalars(u, v))
        record(rep, mu, "scalar-rule", u, v, 1.0);
    }
  }

  // M_2 rank-one pairs: image-line rule against the mutual checker
  {
    std::mt19937_64 rng(seed ^ 0x165667b19e3779f9ull);
    for (int t = 0; t < cfg.m2_trials; ++t) {
      Vec x = random_gaussian(2, 1, rng);
      x.normalize();
      Vec y;
      if (t % 4 == 0) {
        y = Vec(2);  // exactly orthogonal images: adjacency must hold
        y(0) = -std::conj(x(1));
        y(1) = std::conj(x(0));
      } else {
        y = random_gaussian(2, 1, rng);
        y.normalize();
      }
      const Mat a = x * random_gaussian(2, 1, rng).adjoint();
      const Mat b = y * random_gaussian(2, 1, rng).adjoint();
      if (operator_norm(a) < 1e-3 || operator_norm(b) < 1e-3) continue;
      const auto pair = mutual_strong_orth(wrap(a), wrap(b), cfg.tol);
      if (pair.forward.verdict == Tri::Uncertain || pair.backward.verdict == Tri::Uncertain)
        continue;
      rep.trials++;
      if (m2_adjacent(a, b, cfg.tol) != pair.adjacent())
        record(rep, mu, "m2-image-line-rule", wrap(a), wrap(b), std::abs(x.dot(y)));
    }
  }

  return rep;
}

}  // namespace orthograph
