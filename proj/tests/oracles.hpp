#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "ordered_ramsey/block_coloring.hpp"
#include "ordered_ramsey/edge_coloring.hpp"
#include "ordered_ramsey/matrix_patterns.hpp"
#include "ordered_ramsey/ordered_graph.hpp"

// Literal-minded reference implementations of the core definitions.
// Everything recomputes from scratch with plain loops over plain vectors and
// shares no algorithmic shortcuts with the library, so agreement between the
// two is meaningful evidence.  Keep these slow and obvious.

namespace oracle {

using ordered_ramsey::BlockColoring;
using ordered_ramsey::EdgeColoring;
using ordered_ramsey::OrderedGraph;
using ordered_ramsey::PatternOccurrence;
using ordered_ramsey::ZeroOneMatrix;

using Grid = std::vector<std::vector<int>>;

inline Grid to_grid(const ZeroOneMatrix& m) {
    Grid g(m.rows, std::vector<int>(m.cols, 0));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            if (m.one(i, j)) g[i][j] = 1;
    return g;
}

inline bool interval_independent(const OrderedGraph& g, int begin, int end) {
    for (auto [u, v] : g.edges)
        if (u >= begin && v < end) return false;
    return true;
}

// Fewest consecutive independent intervals, over every possible split.
inline int interval_chromatic(const OrderedGraph& g) {
    std::vector<int> best(g.n + 1, 0);
    for (int v = g.n - 1; v >= 0; --v) {
        int b = g.n + 1;
        for (int end = v + 1; end <= g.n; ++end)
            if (interval_independent(g, v, end)) b = std::min(b, 1 + best[end]);
        best[v] = b;
    }
    return best[0];
}

// First order-preserving embedding in lexicographic order of the map; the
// edge condition is only checked once the map is complete.
inline std::optional<std::vector<int>> find_embedding(const OrderedGraph& host,
                                                      const OrderedGraph& pattern) {
    std::vector<int> map(pattern.n, -1);
    std::function<bool(int)> place = [&](int i) -> bool {
        if (i == pattern.n) {
            for (auto [u, v] : pattern.edges) {
                bool edge = false;
                for (auto [a, b] : host.edges)
                    if (a == map[u] && b == map[v]) edge = true;
                if (!edge) return false;
            }
            return true;
        }
        for (int h = (i == 0 ? 0 : map[i - 1] + 1); h < host.n; ++h) {
            map[i] = h;
            if (place(i + 1)) return true;
        }
        return false;
    };
    if (place(0)) return map;
    return std::nullopt;
}

inline void combinations(int n, int k,
                         const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> idx(k);
    std::function<void(int, int)> rec = [&](int pos, int next) {
        if (pos == k) {
            visit(idx);
            return;
        }
        for (int v = next; v < n; ++v) {
            idx[pos] = v;
            rec(pos + 1, v + 1);
        }
    };
    rec(0, 0);
}

inline bool grid_contains(const Grid& m, const Grid& a) {
    int mr = static_cast<int>(m.size()), mc = mr ? static_cast<int>(m[0].size()) : 0;
    int ar = static_cast<int>(a.size()), ac = ar ? static_cast<int>(a[0].size()) : 0;
    if (ar > mr || ac > mc) return false;
    bool hit = false;
    combinations(mr, ar, [&](const std::vector<int>& rows) {
        if (hit) return;
        combinations(mc, ac, [&](const std::vector<int>& cols) {
            if (hit) return;
            for (int i = 0; i < ar; ++i)
                for (int j = 0; j < ac; ++j)
                    if (a[i][j] == 1 && m[rows[i]][cols[j]] != 1) return;
            hit = true;
        });
    });
    return hit;
}

inline bool matrix_contains(const ZeroOneMatrix& m, const ZeroOneMatrix& a) {
    return grid_contains(to_grid(m), to_grid(a));
}

struct BruteExtremal {
    int value = 0;
    Grid witness;  // lexicographically greatest maximiser, row-major
};

// Full enumeration of every m x n 0/1 matrix; requires m * n <= 16.
inline BruteExtremal extremal(const ZeroOneMatrix& a, int m, int n) {
    Grid ag = to_grid(a);
    BruteExtremal best;
    best.value = -1;
    for (long mask = 0; mask < (1l << (m * n)); ++mask) {
        Grid g(m, std::vector<int>(n, 0));
        int ones = 0;
        for (int b = 0; b < m * n; ++b)
            if ((mask >> b) & 1) {
                g[b / n][b % n] = 1;
                ++ones;
            }
        if (grid_contains(g, ag)) continue;
        auto flat = [](const Grid& x) {
            std::vector<int> f;
            for (const auto& row : x) f.insert(f.end(), row.begin(), row.end());
            return f;
        };
        if (ones > best.value || (ones == best.value && flat(g) > flat(best.witness))) {
            best.value = ones;
            best.witness = g;
        }
    }
    return best;
}

// First monochromatic occurrence with rows i0 < i1 and columns j0 < j1, in
// scan order (i0, i1, j0, j1); every mapped cell must lie on or above the
// diagonal.
inline std::optional<PatternOccurrence> find_pattern(const BlockColoring& b,
                                                     int pattern_id, bool exempt) {
    auto pat = ordered_ramsey::BlockPattern::get(pattern_id);
    for (int i0 = 0; i0 < b.k; ++i0)
        for (int i1 = i0 + 1; i1 < b.k; ++i1)
            for (int j0 = 0; j0 < b.k; ++j0)
                for (int j1 = j0 + 1; j1 < b.k; ++j1) {
                    int color = 0;
                    bool ok = true;
                    for (auto [pr, pc] : pat.cells) {
                        int i = pr == 0 ? i0 : i1;
                        int j = pc == 0 ? j0 : j1;
                        if (i > j) {
                            ok = false;
                            break;
                        }
                        int c = b.color(i, j);
                        if (color == 0) color = c;
                        if (c != color) {
                            ok = false;
                            break;
                        }
                    }
                    if (!ok) continue;
                    if (exempt && pattern_id == 1 && (i0 == j0 || i1 == j1)) continue;
                    return PatternOccurrence{pattern_id, i0, i1, j0, j1, color};
                }
    return std::nullopt;
}

inline bool is_free(const EdgeColoring& c, const OrderedGraph& g) {
    // color lookup straight from the flat array definition
    auto color_of = [&](int u, int v) { return c.colors[v * (v - 1) / 2 + u]; };
    for (int color = 1; color <= c.t; ++color) {
        std::vector<int> map(g.n, -1);
        std::function<bool(int)> place = [&](int i) -> bool {
            if (i == g.n) {
                for (auto [u, v] : g.edges)
                    if (color_of(map[u], map[v]) != color) return false;
                return true;
            }
            for (int h = (i == 0 ? 0 : map[i - 1] + 1); h < c.n; ++h) {
                map[i] = h;
                if (place(i + 1)) return true;
            }
            return false;
        };
        if (g.n <= c.n && place(0)) return false;
    }
    return true;
}

// Lexicographically least free coloring by odometer enumeration of all t^E
// colorings; the last edge index moves fastest.
inline std::optional<EdgeColoring> least_free(int n, int t, const OrderedGraph& g) {
    int e = n * (n - 1) / 2;
    std::vector<int> digits(e, 1);
    for (;;) {
        EdgeColoring c{n, t, digits};
        if (is_free(c, g)) return c;
        int i = e - 1;
        while (i >= 0 && digits[i] == t) {
            digits[i] = 1;
            --i;
        }
        if (i < 0) return std::nullopt;
        ++digits[i];
    }
}

}  // namespace oracle
