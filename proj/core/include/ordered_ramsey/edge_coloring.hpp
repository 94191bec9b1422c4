#pragma once

#include <vector>

#include "ordered_ramsey/errors.hpp"

namespace ordered_ramsey {

/// Total coloring of the edges of K_n with colors 1..t.  Edges are indexed
/// in (v, u) order: (0,1), (0,2), (1,2), (0,3), ... so that growing n by one
/// appends the new vertex's edges to the flat array.
struct EdgeColoring {
    int n = 0;
    int t = 1;
    std::vector<int> colors;

    static int edge_count(int n) { return n * (n - 1) / 2; }

    /// Requires u < v.
    static int edge_index(int u, int v) { return v * (v - 1) / 2 + u; }

    static EdgeColoring uniform(int n, int t, int color) {
        return EdgeColoring{n, t, std::vector<int>(edge_count(n), color)};
    }

    int color(int u, int v) const { return colors[edge_index(u, v)]; }
    void set_color(int u, int v, int c) { colors[edge_index(u, v)] = c; }

    bool operator==(const EdgeColoring&) const = default;
};

inline void require_valid(const EdgeColoring& c) {
    if (c.n < 0) fail(errc::invalid_argument, "coloring needs n >= 0");
    if (c.t < 1) fail(errc::invalid_argument, "coloring needs t >= 1");
    if (static_cast<int>(c.colors.size()) != EdgeColoring::edge_count(c.n))
        fail(errc::invalid_argument, "coloring must assign every edge of K_n");
    for (int x : c.colors)
        if (x < 1 || x > c.t)
            fail(errc::invalid_argument, "edge color outside palette 1..t");
}

}  // namespace ordered_ramsey
