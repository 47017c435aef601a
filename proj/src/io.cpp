#include "orthograph/io.hpp"

#include <fstream>
#include <sstream>

namespace orthograph {

namespace {

Json complex_to_json(const Complex& c) { return Json::array({c.real(), c.imag()}); }

Json matrix_to_json(const Mat& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Complex complex_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw InputError(where + ": expected an [re, im] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

Mat matrix_from_json(const Json& j, int n, const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw InputError(where + ": expected " + std::to_string(n) + " rows");
  Mat m(n, n);
  for (int i = 0; i < n; ++i) {
    const Json& row = j[static_cast<size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw InputError(where + ", row " + std::to_string(i) + ": expected " +
                       std::to_string(n) + " entries");
    for (int c = 0; c < n; ++c)
      m(i, c) = complex_from_json(row[static_cast<size_t>(c)],
                                  where + "[" + std::to_string(i) + "][" +
                                      std::to_string(c) + "]");
  }
  return m;
}

}  // namespace

Json element_to_json(const DirectSumElement& e) {
  Json coords = Json::array();
  for (const Mat& m : e.coords) coords.push_back(matrix_to_json(m));
  return Json{{"signature", e.signature.sizes}, {"coords", std::move(coords)}};
}

DirectSumElement element_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("signature") || !j.contains("coords"))
    throw InputError("element document must have 'signature' and 'coords'");
  const Json& sig = j["signature"];
  if (!sig.is_array() || sig.empty())
    throw InputError("'signature' must be a non-empty integer list");
  std::vector<int> sizes;
  for (const Json& s : sig) {
    if (!s.is_number_integer() || s.get<int>() < 1)
      throw InputError("'signature' entries must be positive integers");
    sizes.push_back(s.get<int>());
  }
  const Json& coords = j["coords"];
  if (!coords.is_array() || coords.size() != sizes.size())
    throw InputError("'coords' must list one matrix per signature entry");
  std::vector<Mat> ms;
  for (size_t i = 0; i < sizes.size(); ++i)
    ms.push_back(matrix_from_json(coords[i], sizes[i], "coords[" + std::to_string(i) + "]"));
  return DirectSumElement(AlgebraSignature(sizes), std::move(ms));
}

DirectSumElement load_element(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
  return element_from_json(j);
}

void save_json(const Json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open file for writing: " + path);
  out << j.dump(2) << "\n";
}

AlgebraSignature parse_signature(const std::string& s) {
  std::vector<int> sizes;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, '+')) {
    try {
      size_t pos = 0;
      const int n = std::stoi(part, &pos);
      if (pos != part.size() || n < 1) throw std::invalid_argument(part);
      sizes.push_back(n);
    } catch (const std::exception&) {
      throw InputError("malformed signature '" + s + "': expected n1+n2+...+nk");
    }
  }
  if (sizes.empty()) throw InputError("malformed signature '" + s + "'");
  return AlgebraSignature(sizes);
}

std::string signature_string(const AlgebraSignature& sig) {
  std::string out;
  for (size_t i = 0; i < sig.sizes.size(); ++i) {
    if (i) out += "+";
    out += std::to_string(sig.sizes[i]);
  }
  return out;
}

Json tolerances_to_json(const ToleranceConfig& tol) {
  return Json{{"eps_rank", tol.eps_rank},
              {"eps_tie", tol.eps_tie},
              {"eps_orth", tol.eps_orth},
              {"uncertain_factor", tol.uncertain_factor}};
}

Json decision_to_json(const OrthDecision& d) {
  Json j{{"verdict", to_string(d.verdict)}, {"margin", d.margin}};
  if (d.certificate) {
    const OrthCertificate& c = *d.certificate;
    Json w = Json::array();
    for (Eigen::Index i = 0; i < c.witness.size(); ++i)
      w.push_back(complex_to_json(c.witness(i)));
    j["certificate"] = Json{{"coordinate_index", c.coordinate_index},
                            {"witness", std::move(w)},
                            {"norm_residual", c.norm_residual},
                            {"orth_residual", c.orth_residual}};
  }
  return j;
}

Json decision_pair_to_json(const OrthDecisionPair& p) {
  return Json{{"forward", decision_to_json(p.forward)},
              {"backward", decision_to_json(p.backward)},
              {"adjacent", p.adjacent()}};
}

Json path_to_json(const PathWitness& p) {
  Json vs = Json::array();
  for (const DirectSumElement& v : p.vertices) vs.push_back(element_to_json(v));
  Json es = Json::array();
  for (const OrthDecisionPair& e : p.edge_certificates) es.push_back(decision_pair_to_json(e));
  return Json{{"case", to_string(p.theorem_case)},
              {"length", p.length()},
              {"vertices", std::move(vs)},
              {"edges", std::move(es)}};
}

Json lower_bound_to_json(const LowerBoundReport& r) {
  Json steps = Json::array();
  for (const ProofStep& s : r.steps)
    steps.push_back(Json{{"name", s.name}, {"passed", s.passed}, {"detail", s.detail}});
  return Json{{"first", element_to_json(r.first)},
              {"second", element_to_json(r.second)},
              {"status", to_string(r.overall)},
              {"claimed_min_distance", r.claimed_min_distance},
              {"steps", std::move(steps)},
              {"note", r.note}};
}

Json sample_to_json(const OrthographSample& g) {
  Json vs = Json::array();
  for (const DirectSumElement& v : g.vertex_set.vertices) vs.push_back(element_to_json(v));
  Json adj = Json::array();
  for (const auto& row : g.adjacency) {
    Json r = Json::array();
    for (bool e : row) r.push_back(e);
    adj.push_back(std::move(r));
  }
  Json unc = Json::array();
  for (const auto& [i, j] : g.uncertain_pairs) unc.push_back(Json::array({i, j}));
  return Json{{"signature", g.vertex_set.signature.sizes},
              {"strategy", to_string(g.vertex_set.strategy)},
              {"seed", g.vertex_set.seed},
              {"vertex_count", g.vertex_set.vertices.size()},
              {"vertices", std::move(vs)},
              {"adjacency", std::move(adj)},
              {"uncertain_pairs", std::move(unc)}};
}

Json gate_to_json(const GateReport& g) {
  Json fails = Json::array();
  for (const GateFailure& f : g.failures)
    fails.push_back(Json{{"check", f.check},
                         {"first", element_to_json(f.first)},
                         {"second", element_to_json(f.second)},
                         {"discrepancy", f.discrepancy}});
  return Json{{"passed", g.passed},
              {"trials", g.trials},
              {"max_distance_discrepancy", g.max_distance_discrepancy},
              {"failures", std::move(fails)}};
}

Json RunReport::to_json() const {
  return Json{{"command", command},
              {"inputs", inputs},
              {"tolerances", tolerances_to_json(tolerances)},
              {"seed", seed},
              {"wall_time_ms", wall_time_ms},
              {"result", payload}};
}

}  // namespace orthograph
