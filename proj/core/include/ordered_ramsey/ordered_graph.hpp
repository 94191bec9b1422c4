#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ordered_ramsey/errors.hpp"
#include "ordered_ramsey/matrix_patterns.hpp"

namespace ordered_ramsey {

/// Graph on vertices 0..n-1 whose linear order is part of the structure.
/// Edges are (u, v) pairs with u < v, stored sorted lexicographically with
/// no duplicates.
struct OrderedGraph {
    int n = 1;
    std::vector<std::pair<int, int>> edges;

    bool has_edge(int u, int v) const;
    bool operator==(const OrderedGraph&) const = default;
};

/// Returns the first invariant violation (n >= 1, endpoints in range, u < v,
/// sorted, no loops, no duplicates), or nothing if the graph is well formed.
std::optional<error> validate(const OrderedGraph& g);

/// Throws the violation reported by validate, if any.
void require_valid(const OrderedGraph& g);

/// Normalizes an edge list (sorts it) and validates the result.
OrderedGraph make_graph(int n, std::vector<std::pair<int, int>> edges);

/// Partition of 0..n-1 into consecutive intervals, each an independent set.
/// boundaries[p] is the first vertex of part p; boundaries[0] == 0.
struct IntervalColoring {
    int n = 1;
    std::vector<int> boundaries;

    int num_parts() const { return static_cast<int>(boundaries.size()); }
    int part_begin(int p) const { return boundaries[p]; }
    int part_end(int p) const {
        return p + 1 < num_parts() ? boundaries[p + 1] : n;
    }
    int part_of(int v) const;
};

/// Minimum interval coloring, computed greedily left to right: a new part
/// starts exactly when a vertex has a neighbour inside the current part.
IntervalColoring interval_coloring(const OrderedGraph& g);

/// Number of parts of the minimum interval coloring.
int interval_chromatic(const OrderedGraph& g);

/// True iff the first and last vertices of every part of the minimum
/// interval coloring lie in a single connected component of g.
bool is_stitched(const OrderedGraph& g);

/// Part sizes (m, n) of an interval 2-coloring of g.  Stitched graphs have a
/// unique one; otherwise `split` (the first vertex of the second part) must
/// be supplied and is validated.
std::pair<int, int> parts_2ichromatic(const OrderedGraph& g,
                                      std::optional<int> split = std::nullopt);

/// m x n matrix of the cross edges of a 2-ichromatic graph: entry (i, j) is
/// 1 iff (i, m + j) is an edge.  Parts are resolved as in parts_2ichromatic.
ZeroOneMatrix core_matrix(const OrderedGraph& g,
                          std::optional<int> split = std::nullopt);

/// Graph on rows + cols vertices whose cross edges reproduce `core`.
OrderedGraph from_core_matrix(const ZeroOneMatrix& core);

/// Order-preserving embedding: map[i] is the host vertex for pattern vertex
/// i; the map is strictly increasing and carries edges to edges.
struct Embedding {
    std::vector<int> map;
    bool operator==(const Embedding&) const = default;
};

bool is_embedding(const OrderedGraph& host, const OrderedGraph& pattern,
                  const Embedding& e);

/// Lexicographically least embedding of `pattern` into `host`, if one
/// exists.  Requires host.n <= 64.
std::optional<Embedding> contains(const OrderedGraph& host,
                                  const OrderedGraph& pattern);

/// Mirror image: vertex v becomes n-1-v.
OrderedGraph reverse(const OrderedGraph& g);

/// Symmetric adjacency bitmask per vertex.  Requires g.n <= 64.
std::vector<std::uint64_t> adjacency_rows(const OrderedGraph& g);

// Generator families.  All arguments must be >= 1.

/// Path v_1 v_2 ... v_k in vertex order.
OrderedGraph monotone_path(int k);

/// Path visiting v_1, v_k, v_2, v_{k-1}, ...; 2-ichromatic with parts
/// (ceil(k/2), floor(k/2)) and stitched for k >= 2.
OrderedGraph alternating_path(int k);

/// Two nested edges on m + n vertices: v_1 v_{m+n} and v_m v_{m+1}.
OrderedGraph nested_pair(int m, int n);

/// Two crossing edges on m + n vertices: v_1 v_{m+1} and v_m v_{m+n}.
OrderedGraph crossing_pair(int m, int n);

/// crossing_pair plus the consecutive edge v_m v_{m+1}, making it stitched.
OrderedGraph crossing_pair_stitched(int m, int n);

/// nested_pair plus the edge v_1 v_{m+1}, making it stitched.
OrderedGraph nested_pair_stitched(int m, int n);

OrderedGraph complete(int k);
OrderedGraph edgeless(int k);

}  // namespace ordered_ramsey
