#pragma once

#include <array>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "ordered_ramsey/edge_coloring.hpp"
#include "ordered_ramsey/errors.hpp"

namespace ordered_ramsey {

// Block-grid colors used throughout: 1 = red, 2 = cyan, 3 = violet,
// 4 = yellow.

/// Coloring of the cells (i, j), 0 <= i <= j < k, of an upper-triangular
/// k x k grid with colors 1..palette.  Cells are stored row-major, each row
/// starting at its diagonal cell.
struct BlockColoring {
    int k = 1;
    int palette = 2;
    std::vector<int> cells;

    BlockColoring() : cells(1, 1) {}
    BlockColoring(int k, int palette, int fill = 1);

    static int cell_count(int k) { return k * (k + 1) / 2; }

    /// Requires i <= j.
    int cell_index(int i, int j) const { return i * k - i * (i - 1) / 2 + (j - i); }
    int color(int i, int j) const { return cells[cell_index(i, j)]; }
    void set_color(int i, int j, int c) { cells[cell_index(i, j)] = c; }

    /// Row i as stored, from the diagonal cell rightward.
    std::vector<int> row(int i) const;

    bool operator==(const BlockColoring&) const = default;
};

void require_valid(const BlockColoring& b);

/// One of the four 3-cell patterns inside a 2 x 2 frame whose monochromatic
/// occurrences obstruct the block construction:
///   1: {(0,0), (0,1), (1,1)}    2: {(0,0), (1,0), (1,1)}
///   3: {(0,0), (0,1), (1,0)}    4: {(0,1), (1,0), (1,1)}
struct BlockPattern {
    int id = 1;
    std::array<std::pair<int, int>, 3> cells;

    static BlockPattern get(int id);
};

struct PatternOccurrence {
    int pattern_id = 0;
    int row0 = 0, row1 = 0;  // i < i'
    int col0 = 0, col1 = 0;  // j < j'
    int color = 0;

    bool operator==(const PatternOccurrence&) const = default;
};

/// First monochromatic occurrence of `p` in scan order (i, i', j, j'), where
/// rows {0,1} of the pattern map to i < i' and columns to j < j' (not
/// necessarily contiguous) and all three mapped cells lie on or above the
/// diagonal.  With exempt_diagonal_p1, occurrences of pattern 1 whose
/// upper-left or lower-right cell sits on the main diagonal are skipped.
std::optional<PatternOccurrence> find_pattern(const BlockColoring& b,
                                              const BlockPattern& p,
                                              bool exempt_diagonal_p1 = false);

/// Ids of the patterns with no occurrence in b (under the same exemption
/// rule as find_pattern).
std::set<int> pattern_report(const BlockColoring& b,
                             bool exempt_diagonal_p1 = false);

// Built-in 2-color grids.  figure3 (4 x 4) avoids all four patterns once
// diagonal pattern-1 occurrences are exempted; figure4a (5 x 5) avoids
// patterns 3 and 4; figure4b (5 x 5) avoids pattern 2.
BlockColoring figure3();
BlockColoring figure4a();
BlockColoring figure4b();

/// The three recursive t-color grid families.  G1 (size 2t) extends the
/// avoidance guarantee of figure3, G2 (size 2t+1) that of figure4a, and G3
/// (size 2t+1) that of figure4b, one new color per level.
enum class TColorVariant { G1 = 1, G2 = 2, G3 = 3 };

BlockColoring tcolor_grid(TColorVariant variant, int t);

/// Lexicographically first 2-coloring (in cell storage order) of the k-grid
/// with no occurrence of any forbidden pattern, or nothing if none exists.
/// The color of cell (0,0) is fixed to 1, which loses no generality.
/// Requires k(k+1)/2 <= 28.
std::optional<BlockColoring> exhaustive_triangular_search(
    int k, const std::set<int>& forbidden, bool exempt_diagonal_p1 = false,
    int palette = 2);

/// Blows each block up to r vertices: K_{k*r} with edge (u, v) colored by
/// cell (u / r, v / r).
EdgeColoring expand(const BlockColoring& b, int r);

}  // namespace ordered_ramsey
