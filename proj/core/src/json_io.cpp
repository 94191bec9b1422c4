#include "ordered_ramsey/json_io.hpp"

#include <string>
#include <utility>
#include <vector>

namespace ordered_ramsey {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* key) {
    if (!j.is_object()) fail(errc::parse_error, "expected a JSON object");
    auto it = j.find(key);
    if (it == j.end())
        fail(errc::parse_error, std::string("missing field '") + key + "'");
    return *it;
}

int int_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_number_integer())
        fail(errc::parse_error, std::string("field '") + key + "' must be an integer");
    return v.get<int>();
}

long long long_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_number_integer())
        fail(errc::parse_error, std::string("field '") + key + "' must be an integer");
    return v.get<long long>();
}

bool bool_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_boolean())
        fail(errc::parse_error, std::string("field '") + key + "' must be a boolean");
    return v.get<bool>();
}

std::string string_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_string())
        fail(errc::parse_error, std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

std::vector<std::pair<int, int>> pair_list(const json& j, const char* key) {
    const json& arr = field(j, key);
    if (!arr.is_array())
        fail(errc::parse_error, std::string("field '") + key + "' must be an array");
    std::vector<std::pair<int, int>> out;
    out.reserve(arr.size());
    for (const json& e : arr) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            fail(errc::parse_error,
                 std::string("entries of '") + key + "' must be integer pairs");
        out.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return out;
}

json pairs_to_json(const std::vector<std::pair<int, int>>& pairs) {
    json arr = json::array();
    for (auto [a, b] : pairs) arr.push_back(json::array({a, b}));
    return arr;
}

}  // namespace

json graph_to_json(const OrderedGraph& g) {
    return json{{"n", g.n}, {"edges", pairs_to_json(g.edges)}};
}

OrderedGraph graph_from_json(const json& j) {
    return make_graph(int_field(j, "n"), pair_list(j, "edges"));
}

json matrix_to_json(const ZeroOneMatrix& m) {
    return json{{"rows", m.rows}, {"cols", m.cols}, {"ones", pairs_to_json(m.ones())}};
}

ZeroOneMatrix matrix_from_json(const json& j) {
    int rows = int_field(j, "rows");
    int cols = int_field(j, "cols");
    ZeroOneMatrix m(rows, cols);
    for (auto [i, c] : pair_list(j, "ones")) {
        if (i < 0 || i >= rows || c < 0 || c >= cols)
            fail(errc::parse_error, "matrix entry outside the stated dimensions");
        m.set(i, c);
    }
    return m;
}

json grid_to_json(const BlockColoring& b) {
    json rows = json::array();
    for (int i = 0; i < b.k; ++i) rows.push_back(b.row(i));
    return json{{"k", b.k}, {"palette", b.palette}, {"rows", rows}};
}

BlockColoring grid_from_json(const json& j) {
    int k = int_field(j, "k");
    int palette = int_field(j, "palette");
    if (k < 1 || palette < 1)
        fail(errc::parse_error, "grid needs k >= 1 and palette >= 1");
    BlockColoring b(k, palette, 1);
    const json& rows = field(j, "rows");
    if (!rows.is_array() || static_cast<int>(rows.size()) != k)
        fail(errc::parse_error, "grid needs exactly k rows");
    for (int i = 0; i < k; ++i) {
        const json& row = rows[i];
        if (!row.is_array() || static_cast<int>(row.size()) != k - i)
            fail(errc::parse_error,
                 "grid row " + std::to_string(i) + " must hold " +
                     std::to_string(k - i) + " cells");
        for (int off = 0; off < k - i; ++off) {
            if (!row[off].is_number_integer())
                fail(errc::parse_error, "grid cells must be integers");
            b.set_color(i, i + off, row[off].get<int>());
        }
    }
    require_valid(b);
    return b;
}

json coloring_to_json(const EdgeColoring& c) {
    return json{{"n", c.n}, {"t", c.t}, {"colors", c.colors}};
}

EdgeColoring coloring_from_json(const json& j) {
    EdgeColoring c;
    c.n = int_field(j, "n");
    c.t = int_field(j, "t");
    const json& colors = field(j, "colors");
    if (!colors.is_array())
        fail(errc::parse_error, "field 'colors' must be an array");
    for (const json& x : colors) {
        if (!x.is_number_integer())
            fail(errc::parse_error, "edge colors must be integers");
        c.colors.push_back(x.get<int>());
    }
    require_valid(c);
    return c;
}

json embedding_to_json(const Embedding& e) { return json{{"map", e.map}}; }

json extremal_result_to_json(const ExtremalResult& r) {
    return json{{"pattern", matrix_to_json(r.pattern)},
                {"m", r.m},
                {"n", r.n},
                {"value", r.value},
                {"witness", matrix_to_json(r.witness)},
                {"exhaustive", r.exhaustive}};
}

ExtremalResult extremal_result_from_json(const json& j) {
    ExtremalResult r;
    r.pattern = matrix_from_json(field(j, "pattern"));
    r.m = int_field(j, "m");
    r.n = int_field(j, "n");
    r.value = int_field(j, "value");
    r.witness = matrix_from_json(field(j, "witness"));
    r.exhaustive = bool_field(j, "exhaustive");
    return r;
}

json derive_result_to_json(const DeriveResult& r) {
    const char* status = r.status == DeriveStatus::found       ? "found"
                         : r.status == DeriveStatus::not_found ? "not-found"
                                                               : "budget-exceeded";
    json out{{"status", status}, {"states_explored", r.states_explored}};
    if (r.derivation) {
        json steps = json::array();
        for (const ElementaryOp& op : r.derivation->steps)
            steps.push_back(
                json{{"side", elementary_side_name(op.side)}, {"index", op.index}});
        out["derivation"] =
            json{{"steps", steps}, {"result", matrix_to_json(r.derivation->result)}};
    } else {
        out["derivation"] = nullptr;
    }
    return out;
}

json ramsey_result_to_json(const RamseyResult& r) {
    const char* kind = r.kind == RamseyResult::Kind::exact     ? "exact"
                       : r.kind == RamseyResult::Kind::bounded ? "bounded"
                                                               : "lower-only";
    json out{{"graph", graph_to_json(r.graph)},
             {"t", r.t},
             {"kind", kind},
             {"lo", r.lo},
             {"budget_hit", r.budget_hit},
             {"stats",
              json{{"nodes", r.stats.nodes},
                   {"wall_ms", r.stats.wall_ms},
                   {"workers", r.stats.workers}}}};
    if (r.kind != RamseyResult::Kind::lower_only) out["hi"] = r.hi;
    out["witness"] = r.witness ? coloring_to_json(*r.witness) : json(nullptr);
    return out;
}

RamseyResult ramsey_result_from_json(const json& j) {
    RamseyResult r;
    r.graph = graph_from_json(field(j, "graph"));
    r.t = int_field(j, "t");
    std::string kind = string_field(j, "kind");
    if (kind == "exact")
        r.kind = RamseyResult::Kind::exact;
    else if (kind == "bounded")
        r.kind = RamseyResult::Kind::bounded;
    else if (kind == "lower-only")
        r.kind = RamseyResult::Kind::lower_only;
    else
        fail(errc::parse_error, "unknown result kind '" + kind + "'");
    r.lo = int_field(j, "lo");
    r.hi = r.kind == RamseyResult::Kind::lower_only ? 0 : int_field(j, "hi");
    r.budget_hit = bool_field(j, "budget_hit");
    const json& stats = field(j, "stats");
    r.stats.nodes = long_field(stats, "nodes");
    r.stats.wall_ms = long_field(stats, "wall_ms");
    r.stats.workers = int_field(stats, "workers");
    const json& witness = field(j, "witness");
    if (!witness.is_null()) r.witness = coloring_from_json(witness);
    return r;
}

json bound_report_to_json(const BoundReport& r) {
    json entries = json::array();
    for (const BoundEntry& e : r.entries)
        entries.push_back(
            json{{"source", e.source},
                 {"kind", e.kind == BoundEntry::Kind::lower ? "lower" : "upper"},
                 {"value", e.value},
                 {"note", e.note}});
    json skipped = json::array();
    for (const auto& [source, reason] : r.skipped)
        skipped.push_back(json{{"source", source}, {"reason", reason}});
    return json{{"graph", graph_to_json(r.graph)},
                {"t", r.t},
                {"entries", entries},
                {"skipped", skipped}};
}

json parse_json_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        fail(errc::parse_error, e.what());
    }
}

}  // namespace ordered_ramsey
