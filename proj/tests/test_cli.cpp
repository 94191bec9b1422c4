#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "ordered_ramsey/json_io.hpp"

using namespace ordered_ramsey;
using nlohmann::json;

namespace {

struct CmdResult {
    int exit_code = -1;
    std::string out;
    json parsed() const { return parse_json_text(out); }
};

std::string cli_binary() {
    const char* p = std::getenv("ORDERED_RAMSEY_CLI");
    REQUIRE_MESSAGE(p != nullptr, "ORDERED_RAMSEY_CLI must point at the binary");
    return p;
}

std::string& work_dir() {
    static std::string dir = [] {
        char tmpl[] = "/tmp/ordered_ramsey_cli_XXXXXX";
        char* d = mkdtemp(tmpl);
        REQUIRE(d != nullptr);
        return std::string(d);
    }();
    return dir;
}

CmdResult run(const std::vector<std::string>& args, const std::string& env = "") {
    std::string cmd = "cd '" + work_dir() + "' && " + env + " '" + cli_binary() + "'";
    for (const auto& a : args) cmd += " '" + a + "'";
    cmd += " 2>/dev/null";
    std::FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    CmdResult r;
    char buf[4096];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
    int status = pclose(p);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string write_file(const std::string& name, const json& content) {
    std::string path = work_dir() + "/" + name;
    std::ofstream(path) << content.dump() << "\n";
    return path;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("graph generation and info") {
    CmdResult gen = run({"graph", "gen", "nested_pair", "2", "2"});
    REQUIRE(gen.exit_code == 0);
    CHECK(graph_from_json(gen.parsed()) == nested_pair(2, 2));

    std::string path = write_file("n22.json", gen.parsed());
    CmdResult info = run({"graph", "info", path});
    REQUIRE(info.exit_code == 0);
    json j = info.parsed();
    CHECK(j["n"] == 4);
    CHECK(j["interval_chromatic"] == 2);
    CHECK(j["stitched"] == false);
    CHECK(j["parts"].is_null());  // split is ambiguous for the nested pair

    CmdResult alt = run({"graph", "gen", "alternating_path", "6"});
    std::string alt_path = write_file("p6.json", alt.parsed());
    json aj = run({"graph", "info", alt_path}).parsed();
    CHECK(aj["stitched"] == true);
    CHECK(aj["parts"] == json::array({3, 3}));
    CHECK(matrix_from_json(aj["core"]) == core_matrix(alternating_path(6)));

    CHECK(run({"graph", "gen", "octopus", "3"}).exit_code == 2);
    CHECK(run({"graph", "gen", "nested_pair", "2"}).exit_code == 2);
    CHECK(run({"graph", "info", work_dir() + "/missing.json"}).exit_code == 2);
}

TEST_CASE("containment queries") {
    std::string host = write_file("host.json", graph_to_json(alternating_path(6)));
    std::string yes = write_file("yes.json", graph_to_json(nested_pair(2, 2)));
    std::string no = write_file("no.json", graph_to_json(complete(4)));

    CmdResult pos = run({"contains", host, yes});
    REQUIRE(pos.exit_code == 0);
    CHECK(pos.parsed()["found"] == true);
    Embedding emb{pos.parsed()["embedding"]["map"].get<std::vector<int>>()};
    CHECK(is_embedding(alternating_path(6), nested_pair(2, 2), emb));

    CmdResult neg = run({"contains", host, no});
    CHECK(neg.exit_code == 1);
    CHECK(neg.parsed()["found"] == false);
}

TEST_CASE("ramsey search and bounds") {
    std::string path = write_file("c22.json", graph_to_json(crossing_pair(2, 2)));
    CmdResult r = run({"ramsey", "exact", path, "--colors", "2", "--no-cache"});
    REQUIRE(r.exit_code == 0);
    json j = r.parsed();
    CHECK(j["kind"] == "exact");
    CHECK(j["lo"] == 5);
    RamseyResult parsed = ramsey_result_from_json(j);
    REQUIRE(parsed.witness.has_value());
    CHECK(is_free(*parsed.witness, crossing_pair(2, 2)));

    CmdResult tight = run({"ramsey", "exact", path, "--budget", "1", "--no-cache"});
    CHECK(tight.exit_code == 3);
    CHECK(tight.parsed()["kind"] != "exact");
    CHECK(tight.parsed()["budget_hit"] == true);

    CmdResult bounds = run({"ramsey", "bounds", path});
    REQUIRE(bounds.exit_code == 0);
    CHECK(!bounds.parsed()["entries"].empty());

    SUBCASE("workers come from the flag, then the environment") {
        CmdResult env_run =
            run({"ramsey", "exact", path, "--no-cache"}, "ORDERED_RAMSEY_WORKERS=2");
        CHECK(env_run.parsed()["stats"]["workers"] == 2);
        CmdResult flag_run = run({"ramsey", "exact", path, "--workers", "1", "--no-cache"},
                                 "ORDERED_RAMSEY_WORKERS=2");
        CHECK(flag_run.parsed()["stats"]["workers"] == 1);
    }
}

TEST_CASE("result cache") {
    std::string path = write_file("mp3.json", graph_to_json(monotone_path(3)));
    std::string cache = work_dir() + "/cache.jsonl";
    std::remove(cache.c_str());  // subcases re-run the body; start fresh each time
    std::vector<std::string> args = {"ramsey", "exact", path, "--cache", cache};

    CmdResult cold = run(args);
    REQUIRE(cold.exit_code == 0);
    CmdResult warm = run(args);
    REQUIRE(warm.exit_code == 0);
    CHECK(cold.out == warm.out);

    std::ifstream in(cache);
    std::string line;
    REQUIRE(std::getline(in, line));
    json rec = parse_json_text(line);
    CHECK(rec.contains("version"));
    CHECK(rec.contains("timestamp"));
    CHECK(rec["kind"] == "ramsey");

    SUBCASE("tampered witnesses are rejected") {
        json bad = rec;
        bad["result"]["witness"]["colors"][0] =
            bad["result"]["witness"]["colors"][0] == 1 ? 2 : 1;
        std::ofstream(cache) << bad.dump() << "\n";
        CHECK(run(args).exit_code == 2);
    }
    SUBCASE("malformed lines are rejected") {
        std::ofstream(cache, std::ios::app) << "{nope\n";
        CHECK(run(args).exit_code == 2);
    }
    SUBCASE("different parameters miss") {
        CmdResult other = run({"ramsey", "exact", path, "--cache", cache, "--nmax", "32"});
        REQUIRE(other.exit_code == 0);
        std::ifstream reread(cache);
        int lines = 0;
        while (std::getline(reread, line)) ++lines;
        CHECK(lines == 2);
    }
}

TEST_CASE("constructions") {
    CmdResult fig = run({"construct", "fig3"});
    REQUIRE(fig.exit_code == 0);
    CHECK(grid_from_json(fig.parsed()) == figure3());

    CmdResult t4 = run({"construct", "tcolor2", "4"});
    CHECK(grid_from_json(t4.parsed()) == tcolor_grid(TColorVariant::G2, 4));

    CmdResult exp = run({"construct", "fig4a", "--expand", "2"});
    EdgeColoring c = coloring_from_json(exp.parsed());
    CHECK(c.n == 10);
    CHECK(is_free(c, alternating_path(6)));

    CmdResult thr = run({"construct", "crossing", "3", "2"});
    CHECK(coloring_from_json(thr.parsed()) == threshold_crossing(3, 2));
    CHECK(run({"construct", "crossing", "3", "2", "--expand", "2"}).exit_code == 2);
    CHECK(run({"construct", "fig3", "7"}).exit_code == 2);
    CHECK(run({"construct", "gadget"}).exit_code == 2);
}

TEST_CASE("verification") {
    std::string col = write_file("es4.json", coloring_to_json(es_coloring(4)));
    std::string good = write_file("mp4.json", graph_to_json(monotone_path(4)));
    std::string bad = write_file("mp2.json", graph_to_json(monotone_path(2)));

    CmdResult free = run({"verify", col, good});
    CHECK(free.exit_code == 0);
    CHECK(free.parsed()["free"] == true);

    CmdResult hit = run({"verify", col, bad});
    CHECK(hit.exit_code == 1);
    json j = hit.parsed();
    CHECK(j["free"] == false);
    Embedding emb{j["copy"]["map"].get<std::vector<int>>()};
    CHECK(es_coloring(4).color(emb.map[0], emb.map[1]) == j["color"].get<int>());
}

TEST_CASE("pattern commands") {
    std::string grid = write_file("fig3.json", grid_to_json(figure3()));
    json lax = run({"patterns", "check", grid, "--exempt-diag-p1"}).parsed();
    CHECK(lax["avoided"] == json::array({1, 2, 3, 4}));
    CHECK(lax["hit"].empty());
    json strict = run({"patterns", "check", grid}).parsed();
    CHECK(strict["avoided"] == json::array({2, 3, 4}));
    CHECK(strict["hit"][0]["pattern"] == 1);

    CmdResult some = run({"patterns", "search", "--size", "5", "--avoid", "3,4"});
    REQUIRE(some.exit_code == 0);
    BlockColoring found = grid_from_json(some.parsed()["grid"]);
    CHECK(!find_pattern(found, BlockPattern::get(3), false));
    CHECK(!find_pattern(found, BlockPattern::get(4), false));

    CmdResult none = run({"patterns", "search", "--size", "6", "--avoid", "2"});
    CHECK(none.exit_code == 1);
    CHECK(none.parsed()["status"] == "none (exhausted)");
    CHECK(run({"patterns", "search", "--size", "5", "--avoid", "seven"}).exit_code == 2);
}

TEST_CASE("matrix commands") {
    json pm{{"rows", 3}, {"cols", 3}, {"ones", {{0, 1}, {1, 0}, {2, 0}, {2, 2}}}};
    std::string pm_path = write_file("pm.json", pm);
    json ell{{"rows", 2}, {"cols", 2}, {"ones", {{0, 1}, {1, 0}, {1, 1}}}};
    std::string ell_path = write_file("ell.json", ell);

    CmdResult ex = run({"matrix", "ex", pm_path, "--m", "4", "--n", "5", "--no-cache"});
    REQUIRE(ex.exit_code == 0);
    CHECK(ex.parsed()["value"] == 2 * 4 + 2 * 5 - 4);

    CHECK(run({"matrix", "minimalist", pm_path}).exit_code == 0);
    json ones{{"rows", 2}, {"cols", 2}, {"ones", {{0, 0}, {0, 1}, {1, 0}, {1, 1}}}};
    std::string ones_path = write_file("ones.json", ones);
    CmdResult mini = run({"matrix", "minimalist", ones_path, "--window", "3", "3"});
    CHECK(mini.exit_code == 1);
    CHECK(mini.parsed()["counterexample"]["extremal"] == 6);
    CHECK(mini.parsed()["counterexample"]["formula"] == 5);

    CHECK(run({"matrix", "derive", ell_path}).exit_code == 0);
    CHECK(run({"matrix", "derive", pm_path}).exit_code == 1);
    CHECK(run({"matrix", "derive", pm_path, "--max-states", "1"}).exit_code == 3);
}

TEST_CASE("reproduction checks") {
    CmdResult r = run({"repro", "prop4"});
    REQUIRE(r.exit_code == 0);
    json j = r.parsed();
    CHECK(j["verdict"] == "PASS");
    for (const auto& c : j["checks"]) CHECK(c["pass"] == true);
    CHECK(run({"repro", "nonesuch"}).exit_code == 2);
}

TEST_CASE("usage errors") {
    CHECK(run({"frobnicate"}).exit_code == 2);
    CHECK(run({}).exit_code == 2);
    CHECK(run({"ramsey", "exact"}).exit_code == 2);
    CHECK(run({"matrix", "ex", "nope.json"}).exit_code == 2);
}

TEST_SUITE_END();
