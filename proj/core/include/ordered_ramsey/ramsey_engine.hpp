#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordered_ramsey/edge_coloring.hpp"
#include "ordered_ramsey/errors.hpp"
#include "ordered_ramsey/ordered_graph.hpp"

namespace ordered_ramsey {

/// Lexicographically least embedding of g into the color-`color` subgraph of
/// the colored K_n, or nothing.
std::optional<Embedding> mono_copy(const EdgeColoring& c, const OrderedGraph& g,
                                   int color);

/// True iff no color class of c contains a copy of g.
bool is_free(const EdgeColoring& c, const OrderedGraph& g);

/// 2-coloring of K_{2m+2n-3} with no monochromatic nested_pair(m, n): an
/// edge is red (1) iff an endpoint is among the first m-1 or last n-1
/// vertices, else cyan (2).
EdgeColoring threshold_nested(int m, int n);

/// 2-coloring of K_{2m+n-2} with no monochromatic crossing_pair(m, n),
/// m >= n: an edge is red (1) iff an endpoint is among the first m-1
/// vertices, else cyan (2).
EdgeColoring threshold_crossing(int m, int n);

/// 2-coloring of K_{(k-1)^2} with no monochromatic monotone_path(k).
/// Vertices are the pairs (a, b) in [k-1]^2 in lexicographic order; an edge
/// is colored 1 iff its endpoints share the first coordinate.
EdgeColoring es_coloring(int k);

struct SearchOptions {
    long long budget = 1'000'000'000;  // node = one attempted edge-color assignment
    int workers = 0;                   // 0 = available hardware parallelism
};

struct SearchStats {
    long long nodes = 0;
    long long wall_ms = 0;
    int workers = 1;
};

enum class SearchOutcome { found, exhausted, budget_exceeded };

struct FreeSearchResult {
    SearchOutcome outcome = SearchOutcome::exhausted;
    std::optional<EdgeColoring> coloring;
    SearchStats stats;
};

/// Exhaustive search for a t-coloring of K_N with no monochromatic copy of
/// g.  Edges are assigned in (v, u) order; a branch dies as soon as the edge
/// just colored completes a monochromatic copy; colors are introduced in
/// canonical first-use order, which loses no colorings up to relabeling.
/// Returns the lexicographically least free coloring, an exhausted verdict,
/// or budget_exceeded (never a silent wrong answer).  Deterministic for any
/// worker count.  Requires N <= 64 and t <= 4.
FreeSearchResult exists_free_coloring(int n_vertices, int t,
                                      const OrderedGraph& g,
                                      const SearchOptions& options = {});

struct RamseyResult {
    OrderedGraph graph;
    int t = 2;

    enum class Kind { exact, bounded, lower_only };
    Kind kind = Kind::exact;
    int lo = 0;  // exact value when kind == exact
    int hi = 0;  // meaningful for exact and bounded

    /// Free coloring on lo - 1 vertices certifying the lower bound.
    std::optional<EdgeColoring> witness;
    SearchStats stats;
    bool budget_hit = false;
};

/// Least N such that every t-coloring of K_N contains a monochromatic copy
/// of g, searched by increasing N from |V(g)| up to n_max.  If n_max or the
/// budget is reached first, the result degrades to bounded (when a formula
/// upper bound applies) or lower_only.
RamseyResult ramsey_exact(const OrderedGraph& g, int t, int n_max = 64,
                          const SearchOptions& options = {});

struct BoundEntry {
    std::string source;
    enum class Kind { lower, upper } kind = Kind::lower;
    long long value = 0;
    std::string note;
};

struct BoundReport {
    OrderedGraph graph;
    int t = 2;
    std::vector<BoundEntry> entries;
    std::vector<std::pair<std::string, std::string>> skipped;  // (source, reason)
};

/// Every formula bound whose hypotheses g verifiably satisfies, each entry
/// recording how the hypothesis was checked.  Sources: thm1, cor1, cor2
/// (t = 2), cor3-1/2/3 (t >= 3), prop3, prop4 (exact families), prop5
/// (minimalist upper bound), es-monotone, balko-alt.
BoundReport bound_report(const OrderedGraph& g, int t);

/// Real-valued upper-bound expression for t-colorings and a graph with part
/// sizes (m, n): t(n+m-2) + sqrt(t^2(n+m-2)^2 + 2t(3(n+m)-4-2mn)), used for
/// closed-form comparisons.  The report entry instead rounds the root of
/// the underlying inequality (discriminant one larger), which stays valid
/// even at degenerate part sizes like (1, 1).
double minimalist_upper_expression(int t, int m, int n);

/// Real-valued 2-color upper bound for the alternating path on n vertices:
/// 2n - 4 + sqrt(2n^2 - 8n + 11).  Bounds the Ramsey number directly.
double alternating_path_upper_expression(int n);

}  // namespace ordered_ramsey
