#pragma once

#include "orthograph/bj_decide.hpp"

#include <cstdint>
#include <map>
#include <optional>

namespace orthograph {

enum class SamplingStrategy { RandomSingular, StructuredTemplates, UserSupplied };

const char* to_string(SamplingStrategy s);
SamplingStrategy sampling_strategy_from_string(const std::string& s);

struct VertexSet {
  AlgebraSignature signature;
  std::vector<DirectSumElement> vertices;  // normalized, deduplicated, non-isolated
  SamplingStrategy strategy = SamplingStrategy::RandomSingular;
  std::uint64_t seed = 0;
};

struct OrthographSample {
  VertexSet vertex_set;
  std::vector<std::vector<bool>> adjacency;              // symmetric, irreflexive
  std::map<std::pair<int, int>, OrthDecisionPair> edges;  // certificates, i < j
  std::vector<std::pair<int, int>> uncertain_pairs;
};

// Deterministic given seed. RandomSingular draws Gaussian coordinates and
// deflates one to rank deficiency; StructuredTemplates enumerates the vertex
// shapes used by the proofs (count caps the enumeration).
VertexSet sample_vertices(const AlgebraSignature& signature, SamplingStrategy strategy,
                          int count, std::uint64_t seed, const ToleranceConfig& tol = {});

VertexSet user_vertex_set(const AlgebraSignature& signature,
                          std::vector<DirectSumElement> vertices,
                          const ToleranceConfig& tol = {});

// Adjacency by mutual_strong_orth on all unordered pairs; uncertain verdicts
// are recorded and treated as non-edges. Pair evaluation order-independent,
// so the result does not depend on n_threads.
OrthographSample build_graph(const VertexSet& vs, const ToleranceConfig& tol = {},
                             int n_threads = 1);

constexpr int kInfiniteDistance = -1;

int bfs_distance(const OrthographSample& g, int u, int v);

// Component index per vertex, indices contiguous from 0.
std::vector<int> components(const OrthographSample& g);

// Index of a vertex projectively equal to v, if sampled.
std::optional<int> find_vertex(const OrthographSample& g, const DirectSumElement& v);

struct TheoremDiameter {
  bool is_number = false;
  int value = 0;            // valid when is_number
  std::string description;  // structural descriptor otherwise
};

// Exact lookup from the classification theorems.
TheoremDiameter theorem_diameter(const AlgebraSignature& signature);

struct DiameterBound {
  int value = 0;
  int first = -1;
  int second = -1;
};

// Max finite BFS distance within components of the sample (a lower-bound
// exhibit for the sample only).
DiameterBound diameter_lower_bound(const OrthographSample& g);

}  // namespace orthograph
