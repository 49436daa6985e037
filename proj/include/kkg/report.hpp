#pragma once

// JSON documents for results, plus a flat CSV view of the same document.

#include <cstdint>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "kkg/groupalg.hpp"
#include "kkg/ring_selftest.hpp"

namespace kkg {

using json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "kkg";
inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kReportSchemaVersion = 1;

inline json group_json(const GroupDesc& g) {
  const Ring& R = *g.ring;
  return json{{"name", g.name()}, {"family", to_string(g.family)}, {"n", g.n}, {"ring", to_string(R.kind())},
              {"p", R.p()},       {"f", R.f()},                    {"r", R.r()}};
}

inline json regime_json(const Regime& reg) {
  return json{{"p_ge_n", reg.p_ge_n}, {"applies", reg.applies}, {"clause", reg.clause}};
}

inline json exponent_json(const ExponentResult& e) {
  json j{{"value", e.value},
         {"method", to_string(e.method)},
         {"examined", e.examined},
         {"witness", render_matrix(e.lower_witness)},
         {"witness_index", e.witness_index},
         {"upper_bound", e.upper_bound.value},
         {"upper_bound_derivation", e.upper_bound.derivation}};
  return j;
}

inline json profile_json(const KuelshammerProfile& prof) {
  return json{{"p", prof.p},
              {"kuelshammer_dims", prof.dims},
              {"stab_index", prof.stab_index},
              {"reynolds_dim", prof.reynolds_dim},
              {"p_regular_classes", prof.p_regular_classes}};
}

/// Per-group record: group, order, num_classes, p_exponent, kuelshammer_dims,
/// stab_index, reynolds_dim, regime.
inline json summary_json(const GroupSummary& s) {
  const GroupDesc& g = s.group;
  return json{{"group", group_json(g)},
              {"order", s.order},
              {"num_classes", s.num_classes},
              {"p_exponent", exponent_json(s.sylow)},
              {"kuelshammer_dims", s.profile.dims},
              {"stab_index", s.profile.stab_index},
              {"p_power_stab", s.profile_exponent},
              {"reynolds_dim", s.profile.reynolds_dim},
              {"p_regular_classes", s.profile.p_regular_classes},
              {"regime", regime_json(theorem_regime(g.n, g.p(), g.r()))}};
}

inline json comparison_json(const ComparisonReport& rep) {
  return json{{"a", summary_json(rep.a)},
              {"b", summary_json(rep.b)},
              {"verdict", to_string(rep.verdict)},
              {"reasons", rep.reasons},
              {"regime", regime_json(rep.regime)}};
}

inline json selftest_json(const RingSelftestReport& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"witness", c.witness}});
  json j{{"kind", to_string(rep.kind)}, {"p", rep.p}, {"f", rep.f}, {"r", rep.r},
         {"characteristic", rep.characteristic}};
  j["cardinality"] = rep.cardinality;
  j["unit_count"] = rep.unit_count ? json(rep.unit_count) : json(nullptr);
  j["exhaustive"] = rep.exhaustive;
  j["passed"] = rep.passed();
  j["checks"] = std::move(checks);
  return j;
}

/// Top-level envelope shared by every command.
inline json envelope(const std::string& command, json parameters, json results, json timings) {
  return json{{"schema_version", kReportSchemaVersion},
              {"tool", {{"name", kToolName}, {"version", kToolVersion}}},
              {"command", command},
              {"parameters", std::move(parameters)},
              {"results", std::move(results)},
              {"timings", std::move(timings)}};
}

namespace detail {

inline std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline void flatten(const json& j, const std::string& path, std::ostringstream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
  } else if (j.is_array()) {
    if (j.empty()) out << csv_quote(path) << ",\n";
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", out);
  } else if (j.is_string()) {
    out << csv_quote(path) << "," << csv_quote(j.get<std::string>()) << "\n";
  } else {
    out << csv_quote(path) << "," << j.dump() << "\n";
  }
}

}  // namespace detail

/// "path,value" rows, one per scalar leaf; numbers are printed exactly as in
/// the JSON encoding.
inline std::string to_csv(const json& j) {
  std::ostringstream out;
  out << "path,value\n";
  detail::flatten(j, "", out);
  return out.str();
}

}  // namespace kkg
