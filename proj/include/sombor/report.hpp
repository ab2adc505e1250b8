#pragma once

#include <string>

#include <json.hpp>

#include "sombor/enumeration.hpp"
#include "sombor/radical_sum.hpp"
#include "sombor/theorems.hpp"

namespace sombor {

/// 12 significant digits, as printed everywhere in reports.
std::string format_value(double value);

/// [{"radicand": 2, "coefficient": "10"}, ...]
nlohmann::json radical_terms_json(const RadicalSum& s);
RadicalSum radical_terms_from_json(const nlohmann::json& terms);

/// Fields: optimum_float, optimum_radical_terms, witnesses_graph6,
/// class_size, universe_size.
nlohmann::json to_json(const ExtremalResult& result);

nlohmann::json to_json(const TheoremReport& report);

/// theorem,params,bound,optimum,match,witness_count,seconds
std::string csv_header();
std::string to_csv_row(const TheoremReport& report);

}  // namespace sombor
