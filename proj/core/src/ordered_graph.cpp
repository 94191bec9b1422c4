#include "ordered_ramsey/ordered_graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace ordered_ramsey {

namespace {

std::string edge_text(int u, int v) {
    return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

}  // namespace

bool OrderedGraph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

std::optional<error> validate(const OrderedGraph& g) {
    if (g.n < 1) return error(errc::invalid_argument, "graph needs n >= 1");
    for (size_t i = 0; i < g.edges.size(); ++i) {
        auto [u, v] = g.edges[i];
        if (u == v) return error(errc::self_loop, "loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= g.n || v >= g.n)
            return error(errc::vertex_out_of_range,
                         "edge " + edge_text(u, v) + " out of range for n = " +
                             std::to_string(g.n));
        if (u > v)
            return error(errc::edge_not_normalized,
                         "edge " + edge_text(u, v) + " must satisfy u < v");
        if (i > 0) {
            if (g.edges[i - 1] == g.edges[i])
                return error(errc::duplicate_edge, "duplicate edge " + edge_text(u, v));
            if (g.edges[i - 1] > g.edges[i])
                return error(errc::edge_not_normalized, "edges must be sorted");
        }
    }
    return std::nullopt;
}

void require_valid(const OrderedGraph& g) {
    if (auto problem = validate(g)) throw *problem;
}

OrderedGraph make_graph(int n, std::vector<std::pair<int, int>> edges) {
    std::sort(edges.begin(), edges.end());
    OrderedGraph g{n, std::move(edges)};
    require_valid(g);
    return g;
}

int IntervalColoring::part_of(int v) const {
    int p = num_parts() - 1;
    while (boundaries[p] > v) --p;
    return p;
}

IntervalColoring interval_coloring(const OrderedGraph& g) {
    require_valid(g);
    // Largest neighbour below each vertex, or -1.
    std::vector<int> below(g.n, -1);
    for (auto [u, v] : g.edges) below[v] = std::max(below[v], u);

    IntervalColoring c{g.n, {0}};
    int start = 0;
    for (int v = 1; v < g.n; ++v) {
        if (below[v] >= start) {
            c.boundaries.push_back(v);
            start = v;
        }
    }
    return c;
}

int interval_chromatic(const OrderedGraph& g) {
    return interval_coloring(g).num_parts();
}

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

bool is_stitched(const OrderedGraph& g) {
    IntervalColoring c = interval_coloring(g);
    Dsu dsu(g.n);
    for (auto [u, v] : g.edges) dsu.unite(u, v);
    int root = dsu.find(0);
    for (int p = 0; p < c.num_parts(); ++p) {
        if (dsu.find(c.part_begin(p)) != root) return false;
        if (dsu.find(c.part_end(p) - 1) != root) return false;
    }
    return true;
}

namespace {

bool split_is_valid(const OrderedGraph& g, int split) {
    if (split < 1 || split >= g.n) return false;
    for (auto [u, v] : g.edges)
        if ((v < split) || (u >= split)) return false;
    return true;
}

}  // namespace

std::pair<int, int> parts_2ichromatic(const OrderedGraph& g,
                                      std::optional<int> split) {
    require_valid(g);
    if (interval_chromatic(g) != 2)
        fail(errc::not_two_ichromatic, "graph is not 2-ichromatic");
    if (split) {
        if (!split_is_valid(g, *split))
            fail(errc::invalid_split,
                 "split " + std::to_string(*split) + " does not give independent parts");
        return {*split, g.n - *split};
    }
    if (!is_stitched(g))
        fail(errc::ambiguous_split,
             "graph is not stitched; parts require an explicit split");
    IntervalColoring c = interval_coloring(g);
    return {c.part_end(0), g.n - c.part_end(0)};
}

ZeroOneMatrix core_matrix(const OrderedGraph& g, std::optional<int> split) {
    auto [m, n] = parts_2ichromatic(g, split);
    ZeroOneMatrix core(m, n);
    for (auto [u, v] : g.edges) core.set(u, v - m);
    return core;
}

OrderedGraph from_core_matrix(const ZeroOneMatrix& core) {
    std::vector<std::pair<int, int>> edges;
    for (auto [i, j] : core.ones()) edges.emplace_back(i, core.rows + j);
    return make_graph(core.rows + core.cols, std::move(edges));
}

bool is_embedding(const OrderedGraph& host, const OrderedGraph& pattern,
                  const Embedding& e) {
    if (static_cast<int>(e.map.size()) != pattern.n) return false;
    for (int i = 0; i < pattern.n; ++i) {
        if (e.map[i] < 0 || e.map[i] >= host.n) return false;
        if (i > 0 && e.map[i] <= e.map[i - 1]) return false;
    }
    for (auto [u, v] : pattern.edges)
        if (!host.has_edge(e.map[u], e.map[v])) return false;
    return true;
}

std::vector<std::uint64_t> adjacency_rows(const OrderedGraph& g) {
    require_valid(g);
    if (g.n > 64)
        fail(errc::capacity_exceeded, "adjacency rows limited to n <= 64");
    std::vector<std::uint64_t> rows(g.n, 0);
    for (auto [u, v] : g.edges) {
        rows[u] |= std::uint64_t{1} << v;
        rows[v] |= std::uint64_t{1} << u;
    }
    return rows;
}

namespace {

struct EmbedSearch {
    const std::vector<std::uint64_t>& host_rows;
    int host_n;
    int k;
    const std::vector<std::uint64_t>& prev_nbrs;  // pattern neighbours below p
    std::vector<int> map;

    bool run(int p, int lo) {
        if (p == k) return true;
        for (int h = lo; h <= host_n - (k - p); ++h) {
            std::uint64_t need = prev_nbrs[p];
            bool ok = true;
            while (need) {
                int q = std::countr_zero(need);
                need &= need - 1;
                if (!((host_rows[map[q]] >> h) & 1u)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                map[p] = h;
                if (run(p + 1, h + 1)) return true;
            }
        }
        return false;
    }
};

}  // namespace

std::optional<Embedding> contains(const OrderedGraph& host,
                                  const OrderedGraph& pattern) {
    require_valid(host);
    require_valid(pattern);
    if (host.n > 64)
        fail(errc::capacity_exceeded, "containment search limited to host n <= 64");
    if (pattern.n > host.n) return std::nullopt;

    std::vector<std::uint64_t> prev(pattern.n, 0);
    for (auto [u, v] : pattern.edges) prev[v] |= std::uint64_t{1} << u;
    auto rows = adjacency_rows(host);
    EmbedSearch search{rows, host.n, pattern.n, prev,
                       std::vector<int>(pattern.n, 0)};
    if (search.run(0, 0)) return Embedding{std::move(search.map)};
    return std::nullopt;
}

OrderedGraph reverse(const OrderedGraph& g) {
    require_valid(g);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edges.size());
    for (auto [u, v] : g.edges) edges.emplace_back(g.n - 1 - v, g.n - 1 - u);
    return make_graph(g.n, std::move(edges));
}

namespace {

void check_positive(int value, const char* what) {
    if (value < 1)
        fail(errc::invalid_argument, std::string(what) + " must be >= 1");
}

}  // namespace

OrderedGraph monotone_path(int k) {
    check_positive(k, "path length");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
    return make_graph(k, std::move(edges));
}

OrderedGraph alternating_path(int k) {
    check_positive(k, "path length");
    std::vector<int> order;
    for (int i = 0; i < k; ++i)
        order.push_back(i % 2 == 0 ? i / 2 : k - 1 - i / 2);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < k; ++i) {
        int u = order[i], v = order[i + 1];
        edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    return make_graph(k, std::move(edges));
}

namespace {

OrderedGraph two_edge_family(int m, int n, std::vector<std::pair<int, int>> edges) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return make_graph(m + n, std::move(edges));
}

}  // namespace

OrderedGraph nested_pair(int m, int n) {
    check_positive(m, "m");
    check_positive(n, "n");
    return two_edge_family(m, n, {{0, m + n - 1}, {m - 1, m}});
}

OrderedGraph crossing_pair(int m, int n) {
    check_positive(m, "m");
    check_positive(n, "n");
    return two_edge_family(m, n, {{0, m}, {m - 1, m + n - 1}});
}

OrderedGraph crossing_pair_stitched(int m, int n) {
    check_positive(m, "m");
    check_positive(n, "n");
    return two_edge_family(m, n, {{0, m}, {m - 1, m + n - 1}, {m - 1, m}});
}

OrderedGraph nested_pair_stitched(int m, int n) {
    check_positive(m, "m");
    check_positive(n, "n");
    return two_edge_family(m, n, {{0, m + n - 1}, {m - 1, m}, {0, m}});
}

OrderedGraph complete(int k) {
    check_positive(k, "k");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) edges.emplace_back(u, v);
    return make_graph(k, std::move(edges));
}

OrderedGraph edgeless(int k) {
    check_positive(k, "k");
    return make_graph(k, {});
}

}  // namespace ordered_ramsey
