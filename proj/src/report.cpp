#include "sombor/report.hpp"

#include <cstdio>
#include <sstream>

#include "sombor/graph_io.hpp"

namespace sombor {

std::string format_value(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

nlohmann::json radical_terms_json(const RadicalSum& s) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [radicand, coeff] : s.terms())
    out.push_back({{"radicand", radicand}, {"coefficient", coeff.to_string()}});
  return out;
}

RadicalSum radical_terms_from_json(const nlohmann::json& terms) {
  std::vector<RadicalSum::Term> raw;
  for (const auto& t : terms)
    raw.emplace_back(t.at("radicand").get<std::uint64_t>(), Rational::parse(t.at("coefficient").get<std::string>()));
  return RadicalSum::from_terms(std::move(raw));
}

nlohmann::json to_json(const ExtremalResult& result) {
  nlohmann::json witnesses = nlohmann::json::array();
  for (const Graph& g : result.witnesses) witnesses.push_back(to_graph6(g));
  return {
      {"optimum_float", result.optimum_float},
      {"optimum_radical_terms", radical_terms_json(result.optimum)},
      {"witnesses_graph6", witnesses},
      {"class_size", result.class_size},
      {"universe_size", result.universe_size},
  };
}

nlohmann::json to_json(const TheoremReport& report) {
  nlohmann::json params = {{"n", report.params.n}};
  if (report.params.delta) params["delta"] = *report.params.delta;
  if (report.params.g) params["g"] = *report.params.g;
  if (report.params.k) params["k"] = *report.params.k;
  if (report.params.r) params["r"] = *report.params.r;
  return {
      {"theorem", to_string(report.id)},
      {"params", params},
      {"bound_float", report.bound_value.value()},
      {"bound_radical_terms", radical_terms_json(report.bound_value)},
      {"optimum_float", report.search_value.value()},
      {"optimum_radical_terms", radical_terms_json(report.search_value)},
      {"bound_matches", report.bound_matches},
      {"characterization_holds", report.characterization_holds},
      {"passed", report.passed()},
      {"witnesses_graph6", report.witnesses},
      {"predicted_graph6", report.predicted},
      {"class_size", report.class_size},
      {"seconds", report.seconds},
  };
}

std::string csv_header() { return "theorem,params,bound,optimum,match,witness_count,seconds"; }

std::string to_csv_row(const TheoremReport& report) {
  std::ostringstream os;
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.3f", report.seconds);
  os << to_string(report.id) << ',' << report.params.describe() << ',' << format_value(report.bound_value.value())
     << ',' << format_value(report.search_value.value()) << ',' << (report.passed() ? "true" : "false") << ','
     << report.witnesses.size() << ',' << secs;
  return os.str();
}

}  // namespace sombor
