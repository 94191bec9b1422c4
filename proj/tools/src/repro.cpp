#include "repro.hpp"

#include <random>

#include "ordered_ramsey/json_io.hpp"

namespace ordered_ramsey::cli {
namespace {

using nlohmann::json;

struct Checker {
    ReproOutcome out;

    void add(const std::string& name, bool ok, json extra = json::object()) {
        extra["name"] = name;
        extra["pass"] = ok;
        out.checks.push_back(std::move(extra));
        out.pass = out.pass && ok;
    }
};

void check_exact(Checker& ck, const std::string& name, const OrderedGraph& g,
                 int expect) {
    RamseyResult r = ramsey_exact(g, 2);
    bool ok = r.kind == RamseyResult::Kind::exact && r.lo == expect &&
              r.witness && r.witness->n == expect - 1 && is_free(*r.witness, g);
    ck.add(name, ok,
           {{"expected", expect},
            {"got", r.kind == RamseyResult::Kind::exact ? json(r.lo) : json(nullptr)},
            {"witness_vertices", r.witness ? json(r.witness->n) : json(nullptr)}});
}

ReproOutcome repro_thm1() {
    Checker ck;
    EdgeColoring c = expand(figure3(), 2);
    ck.add("expanded-4x4-grid-free-of-alternating-path-6",
           c.n == 8 && is_free(c, alternating_path(6)), {{"vertices", c.n}});

    // three further stitched graphs with parts (3, 3), drawn reproducibly
    std::mt19937 rng(20240815);
    int made = 0, attempts = 0;
    while (made < 3 && attempts < 10000) {
        ++attempts;
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < 3; ++u)
            for (int v = 3; v < 6; ++v)
                if (rng() & 1) edges.emplace_back(u, v);
        OrderedGraph g = make_graph(6, std::move(edges));
        if (interval_chromatic(g) != 2 || !is_stitched(g)) continue;
        if (parts_2ichromatic(g) != std::pair{3, 3}) continue;
        if (g.edges == alternating_path(6).edges) continue;
        ++made;
        ck.add("random-stitched-graph-" + std::to_string(made), is_free(c, g),
               {{"graph", graph_to_json(g)}});
    }
    ck.add("three-random-graphs-generated", made == 3,
           {{"made", made}, {"certifies", "R_2 >= 9 for parts (3, 3), r = 2"}});
    return ck.out;
}

ReproOutcome repro_cor1() {
    Checker ck;
    EdgeColoring c = expand(figure4a(), 2);
    ck.add("expanded-5x5-grid-free-of-alternating-path-6",
           c.n == 10 && is_free(c, alternating_path(6)),
           {{"vertices", c.n}, {"certifies", "R_2 >= 11 = 5r + 1, r = 2"}});
    return ck.out;
}

ReproOutcome repro_cor2() {
    Checker ck;
    EdgeColoring c = expand(figure4b(), 2);
    ck.add("expanded-5x5-grid-free-of-crossing-pair-stitched-3-3",
           c.n == 10 && is_free(c, crossing_pair_stitched(3, 3)),
           {{"vertices", c.n}, {"certifies", "R_2 >= 11 = 5r + 1, r = 2"}});
    return ck.out;
}

ReproOutcome repro_cor3() {
    Checker ck;
    for (int t = 3; t <= 4; ++t) {
        EdgeColoring g1 = expand(tcolor_grid(TColorVariant::G1, t), 1);
        ck.add("t" + std::to_string(t) + "-grid1-free-of-alternating-path-4",
               g1.n == 2 * t && is_free(g1, alternating_path(4)),
               {{"vertices", g1.n},
                {"certifies", "R_t >= " + std::to_string(2 * t + 1)}});
        EdgeColoring g2 = expand(tcolor_grid(TColorVariant::G2, t), 1);
        ck.add("t" + std::to_string(t) + "-grid2-free-of-alternating-path-4",
               g2.n == 2 * t + 1 && is_free(g2, alternating_path(4)),
               {{"vertices", g2.n},
                {"certifies", "R_t >= " + std::to_string(2 * t + 2)}});
        EdgeColoring g3 = expand(tcolor_grid(TColorVariant::G3, t), 1);
        ck.add("t" + std::to_string(t) + "-grid3-free-of-crossing-pair-stitched-2-2",
               g3.n == 2 * t + 1 && is_free(g3, crossing_pair_stitched(2, 2)),
               {{"vertices", g3.n},
                {"certifies", "R_t >= " + std::to_string(2 * t + 2)}});
    }
    return ck.out;
}

ReproOutcome repro_prop3() {
    Checker ck;
    check_exact(ck, "nested-pair-2-2", nested_pair(2, 2), 2 * 2 + 2 * 2 - 2);
    check_exact(ck, "nested-pair-2-3", nested_pair(2, 3), 2 * 2 + 2 * 3 - 2);
    return ck.out;
}

ReproOutcome repro_prop4() {
    Checker ck;
    check_exact(ck, "crossing-pair-2-2", crossing_pair(2, 2), 2 + 2 + 2 - 1);
    check_exact(ck, "crossing-pair-3-2", crossing_pair(3, 2), 3 + 2 + 3 - 1);
    return ck.out;
}

ReproOutcome repro_prop5() {
    Checker ck;
    BoundReport rep = bound_report(alternating_path(4), 2);
    bool lower6 = false, upper9 = false;
    for (const auto& e : rep.entries) {
        if (e.source == "cor1" && e.kind == BoundEntry::Kind::lower && e.value == 6)
            lower6 = true;
        if (e.source == "prop5" && e.kind == BoundEntry::Kind::upper && e.value == 9)
            upper9 = true;
    }
    ck.add("alternating-path-4-lower-6", lower6);
    ck.add("alternating-path-4-derivation-upper-9", upper9);

    bool dominates = true;
    for (int n = 4; n <= 200; n += 2)
        if (minimalist_upper_expression(2, n / 2, n / 2) <
            alternating_path_upper_expression(n))
            dominates = false;
    ck.add("expression-dominates-alternating-path-bound-even-4-200", dominates);
    return ck.out;
}

ReproOutcome repro_remark() {
    Checker ck;
    auto run = [&](int k, std::set<int> avoid, bool exempt, bool expect_some) {
        auto got = exhaustive_triangular_search(k, avoid, exempt);
        bool ok = got.has_value() == expect_some;
        if (got)
            for (int id : avoid)
                if (find_pattern(*got, BlockPattern::get(id), exempt)) ok = false;
        json ids = json::array();
        for (int id : avoid) ids.push_back(id);
        std::string name = "k" + std::to_string(k) + "-avoid";
        for (int id : avoid) name += "-" + std::to_string(id);
        if (exempt) name += "-exempt";
        ck.add(name, ok,
               {{"avoid", ids},
                {"expected", expect_some ? "some" : "none"},
                {"got", got ? "some" : "none"}});
    };
    run(6, {2}, false, false);
    run(6, {3, 4}, false, false);
    run(5, {2}, false, true);
    run(5, {3, 4}, false, true);
    run(5, {1, 2, 3, 4}, true, false);
    run(4, {1, 2, 3, 4}, true, true);
    return ck.out;
}

ReproOutcome repro_es() {
    Checker ck;
    check_exact(ck, "monotone-path-3", monotone_path(3), (3 - 1) * (3 - 1) + 1);
    EdgeColoring c = es_coloring(4);
    ck.add("product-coloring-free-of-monotone-path-4",
           c.n == 9 && is_free(c, monotone_path(4)),
           {{"vertices", c.n},
            {"certifies", "R_2 >= 10; the matching upper bound is not claimed"}});
    return ck.out;
}

ReproOutcome repro_minimalist3x3() {
    Checker ck;
    ZeroOneMatrix pm(3, 3);
    pm.set(0, 1);
    pm.set(1, 0);
    pm.set(2, 0);
    pm.set(2, 2);

    bool formula = true;
    for (int m = 3; m <= 5; ++m)
        for (int n = 3; n <= 5; ++n)
            if (extremal_number(pm, m, n).value != 2 * m + 2 * n - 4) formula = false;
    ck.add("extremal-matches-2m-2n-4-on-3..5", formula);

    ck.add("no-elementary-derivation",
           derive_minimalist(pm).status == DeriveStatus::not_found);

    ZeroOneMatrix ell(2, 2);
    ell.set(0, 1);
    ell.set(1, 0);
    ell.set(1, 1);
    DeriveResult d = derive_minimalist(ell);
    bool cert = d.status == DeriveStatus::found && d.derivation.has_value();
    ck.add("l-shape-derivation-found", cert,
           cert ? json{{"steps", d.derivation->steps.size()}} : json::object());
    ck.add("l-shape-window-5-5-passes", is_minimalist_window(ell, 5, 5).minimalist);
    return ck.out;
}

}  // namespace

const std::vector<std::string>& repro_ids() {
    static const std::vector<std::string> ids = {
        "thm1",  "cor1",   "cor2", "cor3", "prop3",
        "prop4", "prop5", "remark", "es",  "minimalist3x3"};
    return ids;
}

ReproOutcome run_repro(const std::string& id) {
    if (id == "thm1") return repro_thm1();
    if (id == "cor1") return repro_cor1();
    if (id == "cor2") return repro_cor2();
    if (id == "cor3") return repro_cor3();
    if (id == "prop3") return repro_prop3();
    if (id == "prop4") return repro_prop4();
    if (id == "prop5") return repro_prop5();
    if (id == "remark") return repro_remark();
    if (id == "es") return repro_es();
    if (id == "minimalist3x3") return repro_minimalist3x3();
    fail(errc::invalid_argument, "unknown repro id '" + id + "'");
}

}  // namespace ordered_ramsey::cli
