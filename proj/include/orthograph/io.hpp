#pragma once

#include "orthograph/explorer.hpp"
#include "orthograph/oracle.hpp"
#include "orthograph/proof_replay.hpp"
#include "orthograph/witness_builder.hpp"

#include <json.hpp>

#include <string>

namespace orthograph {

using Json = nlohmann::json;

// ElementDocument: {"signature": [n1,...], "coords": [matrix...]} with each
// matrix a list of rows and each entry an [re, im] pair.
Json element_to_json(const DirectSumElement& e);
DirectSumElement element_from_json(const Json& j);

// File helpers; parse errors surface as InputError with position info.
DirectSumElement load_element(const std::string& path);
void save_json(const Json& j, const std::string& path);

// "n1+n2+...+nk"
AlgebraSignature parse_signature(const std::string& s);
std::string signature_string(const AlgebraSignature& sig);

Json tolerances_to_json(const ToleranceConfig& tol);
Json decision_to_json(const OrthDecision& d);
Json decision_pair_to_json(const OrthDecisionPair& p);
Json path_to_json(const PathWitness& p);
Json lower_bound_to_json(const LowerBoundReport& r);
Json sample_to_json(const OrthographSample& g);
Json gate_to_json(const GateReport& g);

// Self-contained run record: inputs, tolerances and seed always embedded.
struct RunReport {
  std::string command;
  Json inputs = Json::object();
  ToleranceConfig tolerances;
  std::uint64_t seed = 0;
  double wall_time_ms = 0;
  Json payload = Json::object();

  Json to_json() const;
};

}  // namespace orthograph
