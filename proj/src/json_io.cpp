#include "erdos/json_io.hpp"

namespace erdos {

using nlohmann::json;

json to_json(const Rational& q) { return q.str(); }

json to_json(const Permutation& p) { return p.one_based(); }

json to_json(const RationalMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (const auto& q : m.row(i)) row.push_back(q.str());
    rows.push_back(std::move(row));
  }
  return rows;
}

json approx_json(const RationalMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (const auto& q : m.row(i)) row.push_back(q.to_double());
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const ConvexDecomposition& d) {
  json terms = json::array();
  for (const auto& t : d.terms) terms.push_back({{"coef", t.coef.str()}, {"perm", to_json(t.perm)}});
  return terms;
}

json to_json(const MaxTraceCertificate& c) {
  json witnesses = json::array();
  for (std::size_t k = 0; k < c.witnesses.size() && k < kMaxWitnessesShown; ++k) witnesses.push_back(to_json(c.witnesses[k]));
  const char* method = c.method == MaxTraceMethod::hungarian ? "hungarian" : "brute";
  return {{"value", c.value.str()},
          {"witnesses", std::move(witnesses)},
          {"witness_count", c.witnesses.size()},
          {"witnesses_complete", c.method == MaxTraceMethod::brute},
          {"method", method}};
}

json to_json(const ErdosVerdict& v) {
  return {{"erdos", v.erdos}, {"frob_sq", v.frob_sq.str()}, {"delta", v.delta.str()}, {"maxtr", to_json(v.certificate)}};
}

json to_json(const ErdosClass& c, bool approx) {
  json support = json::array();
  for (const auto& p : c.support) support.push_back(to_json(p));
  json weights = json::array();
  for (const auto& w : c.weights) weights.push_back(w.str());
  json out = {{"matrix", to_json(c.canonical.matrix())},
              {"support", std::move(support)},
              {"weights", std::move(weights)},
              {"value", c.common_value.str()},
              {"frob_sq", c.frob_sq.str()},
              {"sources", c.sources}};
  if (approx) out["matrix_approx"] = approx_json(c.canonical.matrix());
  return out;
}

json to_json(const EnumerationReport& r, bool approx) {
  json classes = json::array();
  for (const auto& c : r.classes) classes.push_back(to_json(c, approx));
  json frontier = json::array();
  for (const auto& root : r.frontier) {
    json perms = json::array();
    for (const auto& p : root) perms.push_back(to_json(p));
    frontier.push_back(std::move(perms));
  }
  return {{"class_count", r.classes.size()},
          {"classes", std::move(classes)},
          {"max_support", r.max_support},
          {"workers", r.workers},
          {"sets_visited", r.sets_visited},
          {"rejected_dependent", r.rejected_dependent},
          {"rejected_negative", r.rejected_negative},
          {"rejected_maxtr", r.rejected_maxtr},
          {"skipped_equivalent", r.skipped_equivalent},
          {"elapsed_ms", r.elapsed.count()},
          {"complete", r.complete},
          {"frontier", std::move(frontier)}};
}

json envelope(const std::string& command, int n, json payload) {
  return {{"command", command}, {"n", n}, {"payload", std::move(payload)}, {"tool_version", kToolVersion}};
}

Permutation permutation_from_json(const json& j) { return Permutation::from_one_based(j.get<std::vector<int>>()); }

}  // namespace erdos
