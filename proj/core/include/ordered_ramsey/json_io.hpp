#pragma once

#include <nlohmann/json.hpp>

#include "ordered_ramsey/block_coloring.hpp"
#include "ordered_ramsey/edge_coloring.hpp"
#include "ordered_ramsey/matrix_patterns.hpp"
#include "ordered_ramsey/ordered_graph.hpp"
#include "ordered_ramsey/ramsey_engine.hpp"

// JSON formats.  Parsers validate structurally and reject malformed input
// with errc::parse_error, or with the specific violation (self-loop,
// duplicate-edge, ...) where one applies.
//
//   graph     {"n": 6, "edges": [[0, 3], [1, 2]]}          edges sorted, u < v
//   matrix    {"rows": 2, "cols": 2, "ones": [[0, 1], [1, 0]]}   row-major
//   grid      {"k": 4, "palette": 2, "rows": [[2,2,2,1], [1,1,2], [1,2], [2]]}
//             rows from the diagonal cell rightward
//   coloring  {"n": 4, "t": 2, "colors": [c01, c02, c12, c03, c13, c23]}
//             flat list in (v, u) edge order

namespace ordered_ramsey {

nlohmann::json graph_to_json(const OrderedGraph& g);
OrderedGraph graph_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const ZeroOneMatrix& m);
ZeroOneMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json grid_to_json(const BlockColoring& b);
BlockColoring grid_from_json(const nlohmann::json& j);

nlohmann::json coloring_to_json(const EdgeColoring& c);
EdgeColoring coloring_from_json(const nlohmann::json& j);

nlohmann::json embedding_to_json(const Embedding& e);

nlohmann::json extremal_result_to_json(const ExtremalResult& r);
ExtremalResult extremal_result_from_json(const nlohmann::json& j);

nlohmann::json derive_result_to_json(const DeriveResult& r);

nlohmann::json ramsey_result_to_json(const RamseyResult& r);
RamseyResult ramsey_result_from_json(const nlohmann::json& j);

nlohmann::json bound_report_to_json(const BoundReport& r);

/// Parses text as JSON, mapping nlohmann exceptions to errc::parse_error.
nlohmann::json parse_json_text(const std::string& text);

}  // namespace ordered_ramsey
