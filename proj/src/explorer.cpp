#include "orthograph/explorer.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <deque>
#include <random>
#include <set>
#include <thread>

namespace orthograph {

namespace {

Mat random_gaussian(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> dist(0.0, 1.0);
  Mat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Complex(dist(rng), dist(rng));
  return m;
}

// Zero out the smallest singular value.
Mat deflate_to_singular(const Mat& m) {
  if (m.rows() == 1) return Mat::Zero(1, 1);
  Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::VectorXd s = svd.singularValues();
  s(s.size() - 1) = 0.0;
  return svd.matrixU() * s.asDiagonal() * svd.matrixV().adjoint();
}

// Non-invertible template shapes for one summand.
std::vector<Mat> special_templates(int n) {
  std::vector<Mat> out;
  if (n == 1) {
    out.push_back(Mat::Zero(1, 1));
    return out;
  }
  Mat e11 = Mat::Zero(n, n);
  e11(0, 0) = 1.0;
  out.push_back(e11);
  out.push_back(Mat(2.0 * e11));
  Mat corank = Mat::Identity(n, n);
  corank(n - 1, n - 1) = 0.0;
  out.push_back(corank);
  out.push_back(Mat(2.0 * corank));
  out.push_back(Mat::Ones(n, n));
  Mat nil = Mat::Zero(n, n);
  nil(0, n - 1) = 2.0;
  out.push_back(nil);
  Mat diag2 = Mat::Zero(n, n);
  diag2(0, 0) = 2.0;
  if (n >= 2) diag2(1, 1) = 0.0;
  out.push_back(diag2);
  return out;
}

std::vector<Mat> fill_templates(int n) {
  Mat id = Mat::Identity(n, n);
  return {Mat::Zero(n, n), id, Mat(2.0 * id), Mat(0.5 * id)};
}

class VertexCollector {
 public:
  VertexCollector(VertexSet& vs, const ToleranceConfig& tol, int cap)
      : vs_(vs), tol_(tol), cap_(cap) {}

  bool full() const { return cap_ > 0 && static_cast<int>(vs_.vertices.size()) >= cap_; }

  void add(const DirectSumElement& raw) {
    if (full() || raw.is_zero()) return;
    DirectSumElement v = normalize_projective(raw);
    if (is_isolated_vertex(v, tol_) != Tri::No) return;
    const std::string key = projective_key(v);
    if (!seen_.insert(key).second) return;
    vs_.vertices.push_back(std::move(v));
  }

 private:
  VertexSet& vs_;
  const ToleranceConfig& tol_;
  int cap_;
  std::set<std::string> seen_;
};

void sample_random_singular(VertexCollector& out, const AlgebraSignature& sig, int count,
                            std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int k = sig.summands();
  std::uniform_int_distribution<int> pick(0, k - 1);
  for (int attempt = 0; attempt < count * 20 && !out.full(); ++attempt) {
    std::vector<Mat> coords;
    for (int n : sig.sizes) coords.push_back(random_gaussian(n, rng));
    const int idx = pick(rng);
    coords[static_cast<size_t>(idx)] = deflate_to_singular(coords[static_cast<size_t>(idx)]);
    out.add(DirectSumElement(sig, std::move(coords)));
  }
}

void sample_structured(VertexCollector& out, const AlgebraSignature& sig) {
  const int k = sig.summands();
  // one special coordinate, uniform fill elsewhere
  for (int i = 0; i < k && !out.full(); ++i) {
    for (const Mat& s : special_templates(sig.sizes[static_cast<size_t>(i)])) {
      for (size_t fi = 0; fi < 4; ++fi) {
        std::vector<Mat> coords;
        for (int c = 0; c < k; ++c) {
          const int n = sig.sizes[static_cast<size_t>(c)];
          coords.push_back(c == i ? s : fill_templates(n)[fi]);
        }
        try {
          out.add(DirectSumElement(sig, std::move(coords)));
        } catch (const DegenerateInputError&) {
        }
      }
    }
  }
  // norm-padded specials (the combination-theorem middles)
  for (int i = 0; i < k && !out.full(); ++i) {
    for (const Mat& s : special_templates(sig.sizes[static_cast<size_t>(i)])) {
      const double ns = operator_norm(s);
      if (ns == 0.0) continue;
      std::vector<Mat> coords;
      for (int c = 0; c < k; ++c) {
        const int n = sig.sizes[static_cast<size_t>(c)];
        coords.push_back(c == i ? s : Mat(ns * Mat::Identity(n, n)));
      }
      out.add(DirectSumElement(sig, std::move(coords)));
    }
  }
  // scalar extremal patterns: zero at i, dominant at j, ones elsewhere
  for (int i = 0; i < k && !out.full(); ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      std::vector<Mat> coords;
      for (int c = 0; c < k; ++c) {
        const int n = sig.sizes[static_cast<size_t>(c)];
        double val = c == i ? 0.0 : (c == j ? 2.0 : 1.0);
        coords.push_back(Mat(val * Mat::Identity(n, n)));
      }
      try {
        out.add(DirectSumElement(sig, std::move(coords)));
      } catch (const DegenerateInputError&) {
      }
    }
}

}  // namespace

const char* to_string(SamplingStrategy s) {
  switch (s) {
    case SamplingStrategy::RandomSingular: return "random-singular";
    case SamplingStrategy::StructuredTemplates: return "structured-templates";
    default: return "user-supplied";
  }
}

SamplingStrategy sampling_strategy_from_string(const std::string& s) {
  if (s == "random-singular") return SamplingStrategy::RandomSingular;
  if (s == "structured-templates") return SamplingStrategy::StructuredTemplates;
  if (s == "user-supplied") return SamplingStrategy::UserSupplied;
  throw InputError("unknown sampling strategy: " + s);
}

VertexSet sample_vertices(const AlgebraSignature& signature, SamplingStrategy strategy,
                          int count, std::uint64_t seed, const ToleranceConfig& tol) {
  if (count < 1) throw InputError("count must be >= 1");
  VertexSet vs;
  vs.signature = signature;
  vs.strategy = strategy;
  vs.seed = seed;
  VertexCollector collector(vs, tol, count);
  switch (strategy) {
    case SamplingStrategy::RandomSingular:
      sample_random_singular(collector, signature, count, seed);
      break;
    case SamplingStrategy::StructuredTemplates:
      sample_structured(collector, signature);
      break;
    case SamplingStrategy::UserSupplied:
      throw InputError("user-supplied strategy requires explicit vertices");
  }
  return vs;
}

VertexSet user_vertex_set(const AlgebraSignature& signature,
                          std::vector<DirectSumElement> vertices, const ToleranceConfig& tol) {
  VertexSet vs;
  vs.signature = signature;
  vs.strategy = SamplingStrategy::UserSupplied;
  VertexCollector collector(vs, tol, 0);
  for (const DirectSumElement& v : vertices) {
    if (v.signature != signature) throw InputError("vertex signature mismatch");
    collector.add(v);
  }
  return vs;
}

OrthographSample build_graph(const VertexSet& vs, const ToleranceConfig& tol, int n_threads) {
  const int n = static_cast<int>(vs.vertices.size());
  OrthographSample g;
  g.vertex_set = vs;
  g.adjacency.assign(static_cast<size_t>(n), std::vector<bool>(static_cast<size_t>(n), false));

  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

  std::vector<OrthDecisionPair> results(pairs.size());
  auto work = [&](size_t begin, size_t end) {
    for (size_t p = begin; p < end; ++p)
      results[p] = mutual_strong_orth(vs.vertices[static_cast<size_t>(pairs[p].first)],
                                      vs.vertices[static_cast<size_t>(pairs[p].second)], tol);
  };
  if (n_threads <= 1 || pairs.size() < 2) {
    work(0, pairs.size());
  } else {
    std::vector<std::thread> threads;
    const size_t chunk = (pairs.size() + static_cast<size_t>(n_threads) - 1) /
                         static_cast<size_t>(n_threads);
    for (int t = 0; t < n_threads; ++t) {
      const size_t begin = static_cast<size_t>(t) * chunk;
      if (begin >= pairs.size()) break;
      threads.emplace_back(work, begin, std::min(begin + chunk, pairs.size()));
    }
    for (auto& t : threads) t.join();
  }

  for (size_t p = 0; p < pairs.size(); ++p) {
    const auto [i, j] = pairs[p];
    OrthDecisionPair& pair = results[p];
    if (pair.adjacent()) {
      g.adjacency[static_cast<size_t>(i)][static_cast<size_t>(j)] = true;
      g.adjacency[static_cast<size_t>(j)][static_cast<size_t>(i)] = true;
      g.edges.emplace(std::make_pair(i, j), std::move(pair));
    } else if (pair.forward.verdict == Tri::Uncertain ||
               pair.backward.verdict == Tri::Uncertain) {
      g.uncertain_pairs.emplace_back(i, j);
    }
  }
  return g;
}

int bfs_distance(const OrthographSample& g, int u, int v) {
  const int n = static_cast<int>(g.vertex_set.vertices.size());
  if (u < 0 || u >= n || v < 0 || v >= n) throw InputError("bfs_distance: vertex out of range");
  if (u == v) return 0;
  std::vector<int> dist(static_cast<size_t>(n), kInfiniteDistance);
  std::deque<int> queue{u};
  dist[static_cast<size_t>(u)] = 0;
  while (!queue.empty()) {
    const int cur = queue.front();
    queue.pop_front();
    for (int next = 0; next < n; ++next) {
      if (!g.adjacency[static_cast<size_t>(cur)][static_cast<size_t>(next)]) continue;
      if (dist[static_cast<size_t>(next)] != kInfiniteDistance) continue;
      dist[static_cast<size_t>(next)] = dist[static_cast<size_t>(cur)] + 1;
      if (next == v) return dist[static_cast<size_t>(next)];
      queue.push_back(next);
    }
  }
  return kInfiniteDistance;
}

std::vector<int> components(const OrthographSample& g) {
  const int n = static_cast<int>(g.vertex_set.vertices.size());
  std::vector<int> comp(static_cast<size_t>(n), -1);
  int next_id = 0;
  for (int start = 0; start < n; ++start) {
    if (comp[static_cast<size_t>(start)] >= 0) continue;
    comp[static_cast<size_t>(start)] = next_id;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      const int cur = queue.front();
      queue.pop_front();
      for (int nb = 0; nb < n; ++nb)
        if (g.adjacency[static_cast<size_t>(cur)][static_cast<size_t>(nb)] &&
            comp[static_cast<size_t>(nb)] < 0) {
          comp[static_cast<size_t>(nb)] = next_id;
          queue.push_back(nb);
        }
    }
    ++next_id;
  }
  return comp;
}

std::optional<int> find_vertex(const OrthographSample& g, const DirectSumElement& v) {
  const std::string key = projective_key(v);
  for (size_t i = 0; i < g.vertex_set.vertices.size(); ++i)
    if (projective_key(g.vertex_set.vertices[i]) == key) return static_cast<int>(i);
  return std::nullopt;
}

TheoremDiameter theorem_diameter(const AlgebraSignature& signature) {
  TheoremDiameter out;
  const auto& sizes = signature.sizes;
  if (sizes.size() == 1) {
    const int n = sizes[0];
    if (n == 1) {
      out.description = "empty orthograph: every nonzero scalar is invertible";
    } else if (n == 2) {
      out.description =
          "disconnected: components S_x of rank-one matrices with image Lin{x} or "
          "Lin{x}^perp; within a component every cross-class pair is adjacent "
          "(per-component diameter <= 2)";
    } else if (n == 3) {
      out.is_number = true;
      out.value = 4;
    } else {
      out.is_number = true;
      out.value = 3;
    }
    return out;
  }
  bool all_scalar = signature.all_scalar();
  if (all_scalar) {
    out.is_number = true;
    out.value = sizes.size() == 2 ? 1 : 3;
    return out;
  }
  std::vector<int> sorted = sizes;
  std::sort(sorted.begin(), sorted.end());
  if (sorted == std::vector<int>{1, 2}) {
    out.is_number = true;
    out.value = 4;
    return out;
  }
  out.is_number = true;
  out.value = 3;
  return out;
}

DiameterBound diameter_lower_bound(const OrthographSample& g) {
  DiameterBound best;
  const int n = static_cast<int>(g.vertex_set.vertices.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int d = bfs_distance(g, i, j);
      if (d != kInfiniteDistance && d > best.value) {
        best.value = d;
        best.first = i;
        best.second = j;
      }
    }
  return best;
}

}  // namespace orthograph
