#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ordered_ramsey/json_io.hpp"
#include "ordered_ramsey/version.hpp"
#include "repro.hpp"
#include "result_cache.hpp"

using namespace ordered_ramsey;
using nlohmann::json;

namespace {

constexpr const char* k_default_cache = ".ordered-ramsey-cache.jsonl";

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::invalid_argument, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str());
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// flag wins over the environment; absent both means hardware parallelism
int resolved_workers(int flag_value) {
    if (flag_value >= 0) return flag_value;
    if (const char* env = std::getenv("ORDERED_RAMSEY_WORKERS")) {
        try {
            return std::stoi(env);
        } catch (...) {
            fail(errc::invalid_argument,
                 "ORDERED_RAMSEY_WORKERS is not an integer: " + std::string(env));
        }
    }
    return 0;
}

OrderedGraph generate_family(const std::string& family,
                             const std::vector<int>& params) {
    auto need = [&](std::size_t k) {
        if (params.size() != k)
            fail(errc::invalid_argument,
                 family + " takes " + std::to_string(k) + " parameter(s)");
    };
    if (family == "monotone_path") return need(1), monotone_path(params[0]);
    if (family == "alternating_path") return need(1), alternating_path(params[0]);
    if (family == "complete") return need(1), complete(params[0]);
    if (family == "edgeless") return need(1), edgeless(params[0]);
    if (family == "nested_pair") return need(2), nested_pair(params[0], params[1]);
    if (family == "crossing_pair") return need(2), crossing_pair(params[0], params[1]);
    if (family == "nested_pair_stitched")
        return need(2), nested_pair_stitched(params[0], params[1]);
    if (family == "crossing_pair_stitched")
        return need(2), crossing_pair_stitched(params[0], params[1]);
    fail(errc::invalid_argument, "unknown family '" + family + "'");
}

std::set<int> parse_pattern_ids(const std::string& text) {
    std::set<int> ids;
    std::istringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            ids.insert(std::stoi(item));
        } catch (...) {
            fail(errc::invalid_argument, "bad pattern id list '" + text + "'");
        }
    }
    if (ids.empty()) fail(errc::invalid_argument, "empty pattern id list");
    return ids;
}

json occurrence_to_json(const PatternOccurrence& o) {
    return {{"pattern", o.pattern_id}, {"row0", o.row0}, {"row1", o.row1},
            {"col0", o.col0},          {"col1", o.col1}, {"color", o.color}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification and search toolkit for ordered Ramsey numbers"};
    app.set_version_flag("--version", std::string(k_version));
    app.require_subcommand(1);
    int rc = 0;

    // graph info / graph gen
    auto* graph_cmd = app.add_subcommand("graph", "inspect and generate ordered graphs");
    graph_cmd->require_subcommand(1);
    std::string info_path;
    auto* info = graph_cmd->add_subcommand("info", "summarize a graph file");
    info->add_option("file", info_path, "graph JSON file")->required();
    info->callback([&] {
        OrderedGraph g = graph_from_json(load_json(info_path));
        json j = graph_to_json(g);
        int chi = interval_chromatic(g);
        j["interval_chromatic"] = chi;
        j["stitched"] = is_stitched(g);
        j["parts"] = nullptr;
        j["core"] = nullptr;
        if (chi == 2) {
            try {
                auto [m, n] = parts_2ichromatic(g);
                j["parts"] = json::array({m, n});
                j["core"] = matrix_to_json(core_matrix(g));
            } catch (const error& e) {
                if (e.code() != errc::ambiguous_split) throw;
            }
        }
        emit(j);
    });

    std::string gen_family;
    std::vector<int> gen_params;
    auto* gen = graph_cmd->add_subcommand("gen", "emit a generator family member");
    gen->add_option("family", gen_family, "generator name")->required();
    gen->add_option("params", gen_params, "family parameters");
    gen->callback([&] { emit(graph_to_json(generate_family(gen_family, gen_params))); });

    // contains
    std::string con_host, con_pattern;
    auto* con = app.add_subcommand("contains", "order-preserving containment");
    con->add_option("host", con_host, "host graph file")->required();
    con->add_option("pattern", con_pattern, "pattern graph file")->required();
    con->callback([&] {
        auto emb = contains(graph_from_json(load_json(con_host)),
                            graph_from_json(load_json(con_pattern)));
        json j{{"found", emb.has_value()}, {"embedding", nullptr}};
        if (emb) j["embedding"] = embedding_to_json(*emb);
        emit(j);
        rc = emb ? 0 : 1;
    });

    // ramsey exact / ramsey bounds
    auto* ramsey_cmd = app.add_subcommand("ramsey", "numbers, searched or bounded");
    ramsey_cmd->require_subcommand(1);
    std::string rx_path, rx_cache = k_default_cache;
    int rx_colors = 2, rx_nmax = 64, rx_workers = -1;
    long long rx_budget = 1'000'000'000;
    bool rx_nocache = false;
    auto* rexact = ramsey_cmd->add_subcommand("exact", "smallest unavoidable K_N");
    rexact->add_option("graph", rx_path, "graph JSON file")->required();
    rexact->add_option("--colors", rx_colors, "number of colors");
    rexact->add_option("--nmax", rx_nmax, "largest N to try");
    rexact->add_option("--budget", rx_budget, "search node budget");
    rexact->add_option("--workers", rx_workers, "worker threads, 0 = auto");
    rexact->add_option("--cache", rx_cache, "result cache path");
    rexact->add_flag("--no-cache", rx_nocache, "bypass the result cache");
    rexact->callback([&] {
        OrderedGraph g = graph_from_json(load_json(rx_path));
        SearchOptions opt;
        opt.budget = rx_budget;
        opt.workers = resolved_workers(rx_workers);
        json key{{"graph", graph_to_json(g)},
                 {"colors", rx_colors},
                 {"nmax", rx_nmax},
                 {"budget", opt.budget},
                 {"workers", opt.workers}};
        cli::ResultCache cache(rx_cache, !rx_nocache);
        json out;
        if (auto hit = cache.lookup("ramsey", key)) {
            std::cerr << "cache hit\n";
            out = *hit;
        } else {
            out = ramsey_result_to_json(ramsey_exact(g, rx_colors, rx_nmax, opt));
            cache.store("ramsey", key, out);
        }
        emit(out);
        rc = ramsey_result_from_json(out).kind == RamseyResult::Kind::exact ? 0 : 3;
    });

    std::string rb_path;
    int rb_colors = 2;
    auto* rbounds = ramsey_cmd->add_subcommand("bounds", "applicable formula bounds");
    rbounds->add_option("graph", rb_path, "graph JSON file")->required();
    rbounds->add_option("--colors", rb_colors, "number of colors");
    rbounds->callback([&] {
        emit(bound_report_to_json(
            bound_report(graph_from_json(load_json(rb_path)), rb_colors)));
    });

    // construct
    std::string cons_kind;
    std::vector<int> cons_params;
    int cons_expand = 0;
    auto* cons = app.add_subcommand(
        "construct", "published grids, recursive grids, threshold colorings");
    cons->add_option("kind", cons_kind,
                     "fig3|fig4a|fig4b|tcolor1|tcolor2|tcolor3|nested|crossing|es")
        ->required();
    cons->add_option("params", cons_params, "construction parameters");
    cons->add_option("--expand", cons_expand, "blocks become r consecutive vertices");
    cons->callback([&] {
        auto need = [&](std::size_t k) {
            if (cons_params.size() != k)
                fail(errc::invalid_argument,
                     cons_kind + " takes " + std::to_string(k) + " parameter(s)");
        };
        if (cons_expand < 0)
            fail(errc::invalid_argument, "--expand must be positive");
        std::optional<BlockColoring> grid;
        std::optional<EdgeColoring> coloring;
        if (cons_kind == "fig3") need(0), grid = figure3();
        else if (cons_kind == "fig4a") need(0), grid = figure4a();
        else if (cons_kind == "fig4b") need(0), grid = figure4b();
        else if (cons_kind == "tcolor1")
            need(1), grid = tcolor_grid(TColorVariant::G1, cons_params[0]);
        else if (cons_kind == "tcolor2")
            need(1), grid = tcolor_grid(TColorVariant::G2, cons_params[0]);
        else if (cons_kind == "tcolor3")
            need(1), grid = tcolor_grid(TColorVariant::G3, cons_params[0]);
        else if (cons_kind == "nested")
            need(2), coloring = threshold_nested(cons_params[0], cons_params[1]);
        else if (cons_kind == "crossing")
            need(2), coloring = threshold_crossing(cons_params[0], cons_params[1]);
        else if (cons_kind == "es")
            need(1), coloring = es_coloring(cons_params[0]);
        else
            fail(errc::invalid_argument, "unknown construction '" + cons_kind + "'");
        if (coloring) {
            if (cons_expand != 0)
                fail(errc::invalid_argument,
                     "--expand applies to block grids, not colorings");
            emit(coloring_to_json(*coloring));
        } else if (cons_expand > 0) {
            emit(coloring_to_json(expand(*grid, cons_expand)));
        } else {
            emit(grid_to_json(*grid));
        }
    });

    // verify
    std::string ver_coloring, ver_graph;
    auto* ver = app.add_subcommand("verify", "check a coloring against a graph");
    ver->add_option("coloring", ver_coloring, "coloring JSON file")->required();
    ver->add_option("graph", ver_graph, "graph JSON file")->required();
    ver->callback([&] {
        EdgeColoring c = coloring_from_json(load_json(ver_coloring));
        OrderedGraph g = graph_from_json(load_json(ver_graph));
        for (int color = 1; color <= c.t; ++color) {
            if (auto emb = mono_copy(c, g, color)) {
                emit(json{{"free", false},
                          {"color", color},
                          {"copy", embedding_to_json(*emb)}});
                rc = 1;
                return;
            }
        }
        emit(json{{"free", true}, {"color", nullptr}, {"copy", nullptr}});
    });

    // patterns check / patterns search
    auto* pat = app.add_subcommand("patterns", "forbidden block patterns");
    pat->require_subcommand(1);
    std::string pc_path;
    bool pc_exempt = false;
    auto* pcheck = pat->add_subcommand("check", "report avoided patterns in a grid");
    pcheck->add_option("grid", pc_path, "grid JSON file")->required();
    pcheck->add_flag("--exempt-diag-p1", pc_exempt,
                     "ignore pattern 1 occurrences using a diagonal cell");
    pcheck->callback([&] {
        BlockColoring b = grid_from_json(load_json(pc_path));
        std::set<int> avoided = pattern_report(b, pc_exempt);
        json hits = json::array();
        for (int id = 1; id <= 4; ++id) {
            if (avoided.count(id)) continue;
            hits.push_back(
                occurrence_to_json(*find_pattern(b, BlockPattern::get(id), pc_exempt)));
        }
        emit(json{{"k", b.k},
                  {"palette", b.palette},
                  {"exempt_diag_p1", pc_exempt},
                  {"avoided", avoided},
                  {"hit", hits}});
    });

    int ps_size = 0;
    std::string ps_avoid;
    bool ps_exempt = false;
    auto* psearch = pat->add_subcommand("search", "least 2-colored grid avoiding patterns");
    psearch->add_option("--size", ps_size, "grid size k")->required();
    psearch->add_option("--avoid", ps_avoid, "comma-separated pattern ids")->required();
    psearch->add_flag("--exempt-diag-p1", ps_exempt,
                      "ignore pattern 1 occurrences using a diagonal cell");
    psearch->callback([&] {
        auto got =
            exhaustive_triangular_search(ps_size, parse_pattern_ids(ps_avoid), ps_exempt);
        if (got) {
            emit(json{{"found", true}, {"status", "found"}, {"grid", grid_to_json(*got)}});
        } else {
            emit(json{{"found", false},
                      {"status", "none (exhausted)"},
                      {"grid", nullptr}});
            rc = 1;
        }
    });

    // matrix ex / matrix minimalist / matrix derive
    auto* mat = app.add_subcommand("matrix", "0/1 matrix pattern machinery");
    mat->require_subcommand(1);
    std::string mx_path, mx_cache = k_default_cache;
    int mx_m = 0, mx_n = 0;
    bool mx_nocache = false;
    auto* mex = mat->add_subcommand("ex", "extremal number of a pattern");
    mex->add_option("matrix", mx_path, "matrix JSON file")->required();
    mex->add_option("--m", mx_m, "host rows")->required();
    mex->add_option("--n", mx_n, "host columns")->required();
    mex->add_option("--cache", mx_cache, "result cache path");
    mex->add_flag("--no-cache", mx_nocache, "bypass the result cache");
    mex->callback([&] {
        ZeroOneMatrix a = matrix_from_json(load_json(mx_path));
        json key{{"matrix", matrix_to_json(a)}, {"m", mx_m}, {"n", mx_n}};
        cli::ResultCache cache(mx_cache, !mx_nocache);
        json out;
        if (auto hit = cache.lookup("extremal", key)) {
            std::cerr << "cache hit\n";
            out = *hit;
        } else {
            out = extremal_result_to_json(extremal_number(a, mx_m, mx_n));
            cache.store("extremal", key, out);
        }
        emit(out);
    });

    std::string mm_path;
    std::vector<int> mm_window{5, 5};
    auto* mmin = mat->add_subcommand("minimalist", "formula check over a window");
    mmin->add_option("matrix", mm_path, "matrix JSON file")->required();
    mmin->add_option("--window", mm_window, "max host rows and columns")->expected(2);
    mmin->callback([&] {
        ZeroOneMatrix a = matrix_from_json(load_json(mm_path));
        MinimalistWindow w = is_minimalist_window(a, mm_window[0], mm_window[1]);
        json j{{"minimalist", w.minimalist},
               {"window", mm_window},
               {"counterexample", nullptr}};
        if (w.counterexample)
            j["counterexample"] = {{"m", w.counterexample->m},
                                   {"n", w.counterexample->n},
                                   {"extremal", w.counterexample->extremal},
                                   {"formula", w.counterexample->formula}};
        emit(j);
        rc = w.minimalist ? 0 : 1;
    });

    std::string md_path;
    long long md_states = 1'000'000;
    auto* mder = mat->add_subcommand("derive", "elementary derivation from [[1]]");
    mder->add_option("matrix", md_path, "matrix JSON file")->required();
    mder->add_option("--max-states", md_states, "breadth-first state budget");
    mder->callback([&] {
        DeriveResult r = derive_minimalist(matrix_from_json(load_json(md_path)), md_states);
        emit(derive_result_to_json(r));
        rc = r.status == DeriveStatus::found          ? 0
             : r.status == DeriveStatus::not_found    ? 1
                                                      : 3;
    });

    // repro
    std::string rp_id;
    auto* rp = app.add_subcommand("repro", "self-contained reproduction checks");
    rp->add_option("id", rp_id, "thm1|cor1|cor2|cor3|prop3|prop4|prop5|remark|es|minimalist3x3")
        ->required();
    rp->callback([&] {
        cli::ReproOutcome o = cli::run_repro(rp_id);
        emit(json{{"id", rp_id},
                  {"verdict", o.pass ? "PASS" : "FAIL"},
                  {"checks", o.checks}});
        std::cerr << "repro " << rp_id << ": " << (o.pass ? "PASS" : "FAIL") << "\n";
        rc = o.pass ? 0 : 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << " [" << errc_name(e.code()) << "]\n";
        switch (e.code()) {
            case errc::capacity_exceeded:
            case errc::budget_exceeded:
                return 3;
            default:
                return 2;
        }
    }
    return rc;
}
