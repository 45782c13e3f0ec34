#pragma once

#include <json.hpp>

#include <string>

#include "core/deciders.hpp"
#include "core/graph.hpp"
#include "core/int_matrix.hpp"

namespace stratifold {

nlohmann::json to_json(const AbelianGroup& g);
nlohmann::json to_json(const ValidationReport& r);
nlohmann::json to_json(const ShapeFlags& s);
nlohmann::json to_json(const ReductionTrace& t);
// Edge indices in witnesses are resolved against g.
nlohmann::json to_json(const Verdict& v, const StratifoldGraph& g, bool include_trace);

// Coefficients Z/n, "0" when the orders list is empty, else "Z2 + Z6".
std::string mod_group_string(const std::vector<std::int64_t>& orders);

std::string witness_text(const Witness& w, const StratifoldGraph& g);
// One line, e.g. "SimplyConnected (Theorem: linear gcd criterion)".
std::string verdict_text(const Verdict& v, const StratifoldGraph& g);
std::string trace_text(const ReductionTrace& t);
std::string validation_text(const ValidationReport& r);

}  // namespace stratifold
