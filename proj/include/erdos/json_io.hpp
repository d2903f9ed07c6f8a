#pragma once

#include <json.hpp>
#include <string>

#include "erdos/assignment.hpp"
#include "erdos/birkhoff.hpp"
#include "erdos/enumerator.hpp"
#include "erdos/matrix.hpp"
#include "erdos/permutation.hpp"
#include "erdos/rational.hpp"
#include "erdos/surd.hpp"

namespace erdos {

inline constexpr const char* kToolVersion = "0.3.0";

/// Witness lists in output are cut to this many entries.
inline constexpr std::size_t kMaxWitnessesShown = 100;

// Every rational is rendered as its exact "p/q" literal; with `approx` a
// sibling "*_approx" field carries a decimal rendering.
nlohmann::json to_json(const Rational& q);
nlohmann::json to_json(const Permutation& p);  // 1-based image list
nlohmann::json to_json(const RationalMatrix& m);
nlohmann::json approx_json(const RationalMatrix& m);
nlohmann::json to_json(const ConvexDecomposition& d);
nlohmann::json to_json(const MaxTraceCertificate& c);
nlohmann::json to_json(const ErdosVerdict& v);
nlohmann::json to_json(const ErdosClass& c, bool approx = false);
nlohmann::json to_json(const EnumerationReport& r, bool approx = false);

/// {"command", "n", "payload", "tool_version"}.
nlohmann::json envelope(const std::string& command, int n, nlohmann::json payload);

Permutation permutation_from_json(const nlohmann::json& j);

}  // namespace erdos
