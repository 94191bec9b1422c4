#include "ordered_ramsey/block_coloring.hpp"

#include <algorithm>
#include <string>

namespace ordered_ramsey {

BlockColoring::BlockColoring(int k_, int palette_, int fill) : k(k_), palette(palette_) {
    if (k < 1) fail(errc::invalid_argument, "grid needs k >= 1");
    if (palette < 1) fail(errc::invalid_argument, "grid needs palette >= 1");
    if (fill < 1 || fill > palette)
        fail(errc::invalid_argument, "fill color outside palette");
    cells.assign(cell_count(k), fill);
}

std::vector<int> BlockColoring::row(int i) const {
    std::vector<int> out;
    for (int j = i; j < k; ++j) out.push_back(color(i, j));
    return out;
}

void require_valid(const BlockColoring& b) {
    if (b.k < 1) fail(errc::invalid_argument, "grid needs k >= 1");
    if (b.palette < 1) fail(errc::invalid_argument, "grid needs palette >= 1");
    if (static_cast<int>(b.cells.size()) != BlockColoring::cell_count(b.k))
        fail(errc::invalid_argument, "grid must color every upper-triangular cell");
    for (int c : b.cells)
        if (c < 1 || c > b.palette)
            fail(errc::invalid_argument, "cell color outside palette 1..palette");
}

BlockPattern BlockPattern::get(int id) {
    switch (id) {
        case 1: return BlockPattern{1, {{{0, 0}, {0, 1}, {1, 1}}}};
        case 2: return BlockPattern{2, {{{0, 0}, {1, 0}, {1, 1}}}};
        case 3: return BlockPattern{3, {{{0, 0}, {0, 1}, {1, 0}}}};
        case 4: return BlockPattern{4, {{{0, 1}, {1, 0}, {1, 1}}}};
    }
    fail(errc::invalid_argument, "pattern id must be 1..4");
}

namespace {

// Mapped cell of the 2 x 2 frame under rows {0 -> i, 1 -> i'}, cols
// {0 -> j, 1 -> j'}.
std::pair<int, int> map_cell(std::pair<int, int> cell, int i0, int i1, int j0,
                             int j1) {
    return {cell.first == 0 ? i0 : i1, cell.second == 0 ? j0 : j1};
}

bool occurrence_exempt(const BlockPattern& p, int i0, int i1, int j0, int j1,
                       bool exempt_diagonal_p1) {
    // The exemption only concerns pattern 1, whose frame corners (0,0) and
    // (1,1) map to (i, j) and (i', j').
    return exempt_diagonal_p1 && p.id == 1 && (i0 == j0 || i1 == j1);
}

}  // namespace

std::optional<PatternOccurrence> find_pattern(const BlockColoring& b,
                                              const BlockPattern& p,
                                              bool exempt_diagonal_p1) {
    require_valid(b);
    for (int i0 = 0; i0 < b.k; ++i0)
        for (int i1 = i0 + 1; i1 < b.k; ++i1)
            for (int j0 = 0; j0 < b.k; ++j0)
                for (int j1 = j0 + 1; j1 < b.k; ++j1) {
                    int color = 0;
                    bool ok = true;
                    for (auto cell : p.cells) {
                        auto [r, c] = map_cell(cell, i0, i1, j0, j1);
                        if (r > c) {
                            ok = false;
                            break;
                        }
                        int x = b.color(r, c);
                        if (color == 0) color = x;
                        if (x != color) {
                            ok = false;
                            break;
                        }
                    }
                    if (!ok) continue;
                    if (occurrence_exempt(p, i0, i1, j0, j1, exempt_diagonal_p1))
                        continue;
                    return PatternOccurrence{p.id, i0, i1, j0, j1, color};
                }
    return std::nullopt;
}

std::set<int> pattern_report(const BlockColoring& b, bool exempt_diagonal_p1) {
    std::set<int> avoided;
    for (int id = 1; id <= 4; ++id)
        if (!find_pattern(b, BlockPattern::get(id), exempt_diagonal_p1))
            avoided.insert(id);
    return avoided;
}

namespace {

BlockColoring grid_from_rows(int palette, const std::vector<std::vector<int>>& rows) {
    BlockColoring b(static_cast<int>(rows.size()), palette);
    for (int i = 0; i < b.k; ++i)
        for (int j = i; j < b.k; ++j) b.set_color(i, j, rows[i][j - i]);
    return b;
}

}  // namespace

BlockColoring figure3() {
    return grid_from_rows(2, {{2, 2, 2, 1}, {1, 1, 2}, {1, 2}, {2}});
}

BlockColoring figure4a() {
    return grid_from_rows(2, {{2, 2, 2, 2, 1}, {1, 1, 2, 2}, {1, 1, 2}, {1, 2}, {2}});
}

BlockColoring figure4b() {
    return grid_from_rows(2, {{2, 2, 2, 2, 2}, {1, 2, 1, 1}, {1, 2, 1}, {2, 1}, {2}});
}

namespace {

#ifndef NDEBUG
void certify_construction(const BlockColoring& b, TColorVariant variant) {
    std::set<int> report = pattern_report(b, variant == TColorVariant::G1);
    std::set<int> expected = variant == TColorVariant::G1 ? std::set<int>{1, 2, 3, 4}
                             : variant == TColorVariant::G2 ? std::set<int>{3, 4}
                                                            : std::set<int>{2};
    for (int id : expected)
        if (!report.contains(id))
            fail(errc::invalid_argument,
                 "constructed grid fails its avoidance guarantee for pattern " +
                     std::to_string(id));
}
#endif

}  // namespace

BlockColoring tcolor_grid(TColorVariant variant, int t) {
    if (t < 2) fail(errc::invalid_argument, "tcolor_grid needs t >= 2");
    BlockColoring grid = [&] {
        if (t == 2) {
            switch (variant) {
                case TColorVariant::G1: return figure3();
                case TColorVariant::G2: return figure4a();
                case TColorVariant::G3: return figure4b();
            }
            fail(errc::invalid_argument, "unknown grid variant");
        }
        BlockColoring inner = tcolor_grid(variant, t - 1);
        int k = inner.k + 2;
        BlockColoring b(k, t, t);
        if (variant == TColorVariant::G1 || variant == TColorVariant::G2) {
            // Previous grid at offset (1, 1); new top row and rightmost
            // column take the new color.
            for (int i = 0; i < inner.k; ++i)
                for (int j = i; j < inner.k; ++j)
                    b.set_color(i + 1, j + 1, inner.color(i, j));
            if (variant == TColorVariant::G1) b.set_color(0, k - 1, 1);
        } else {
            // Previous grid at offset (1, 2); the new color takes the top
            // row and the whole main diagonal, pushing earlier diagonals
            // onto superdiagonal stripes.
            for (int i = 0; i < inner.k; ++i)
                for (int j = i; j < inner.k; ++j)
                    b.set_color(i + 1, j + 2, inner.color(i, j));
        }
        return b;
    }();
    grid.palette = t;
#ifndef NDEBUG
    certify_construction(grid, variant);
#endif
    return grid;
}

std::optional<BlockColoring> exhaustive_triangular_search(int k,
                                                          const std::set<int>& forbidden,
                                                          bool exempt_diagonal_p1,
                                                          int palette) {
    if (k < 1) fail(errc::invalid_argument, "grid needs k >= 1");
    if (palette < 1) fail(errc::invalid_argument, "palette must be >= 1");
    for (int id : forbidden)
        if (id < 1 || id > 4) fail(errc::invalid_argument, "pattern id must be 1..4");
    int cells = BlockColoring::cell_count(k);
    if (cells > 28)
        fail(errc::capacity_exceeded, "triangular search limited to k(k+1)/2 <= 28");

    BlockColoring scratch(k, palette);
    // For every forbidden occurrence, register it on its last cell in
    // assignment order so one check per assignment covers everything.
    struct Candidate {
        int a, b;
    };
    std::vector<std::vector<Candidate>> by_last(cells);
    for (int id : forbidden) {
        BlockPattern p = BlockPattern::get(id);
        for (int i0 = 0; i0 < k; ++i0)
            for (int i1 = i0 + 1; i1 < k; ++i1)
                for (int j0 = 0; j0 < k; ++j0)
                    for (int j1 = j0 + 1; j1 < k; ++j1) {
                        bool ok = true;
                        int idx[3];
                        for (int c = 0; c < 3; ++c) {
                            auto [r, col] = map_cell(p.cells[c], i0, i1, j0, j1);
                            if (r > col) {
                                ok = false;
                                break;
                            }
                            idx[c] = scratch.cell_index(r, col);
                        }
                        if (!ok) continue;
                        if (occurrence_exempt(p, i0, i1, j0, j1, exempt_diagonal_p1))
                            continue;
                        std::sort(idx, idx + 3);
                        by_last[idx[2]].push_back({idx[0], idx[1]});
                    }
    }

    std::vector<int> assignment(cells, 0);
    auto violation = [&](int cell) {
        for (auto [a, b] : by_last[cell])
            if (assignment[a] == assignment[cell] && assignment[b] == assignment[cell])
                return true;
        return false;
    };
    // Color permutations preserve occurrences, so every avoiding coloring
    // can be relabeled to start with color 1; trying colors in ascending
    // order then yields the lexicographically least avoiding coloring.
    auto search = [&](auto&& self, int cell) -> bool {
        if (cell == cells) return true;
        int limit = cell == 0 ? 1 : palette;
        for (int c = 1; c <= limit; ++c) {
            assignment[cell] = c;
            if (!violation(cell) && self(self, cell + 1)) return true;
        }
        assignment[cell] = 0;
        return false;
    };
    if (!search(search, 0)) return std::nullopt;
    scratch.cells = assignment;
    return scratch;
}

EdgeColoring expand(const BlockColoring& b, int r) {
    require_valid(b);
    if (r < 1) fail(errc::invalid_argument, "expansion factor must be >= 1");
    int n = b.k * r;
    if (n > 64) fail(errc::capacity_exceeded, "expanded coloring limited to n <= 64");
    EdgeColoring c{n, b.palette, std::vector<int>(EdgeColoring::edge_count(n), 0)};
    for (int v = 0; v < n; ++v)
        for (int u = 0; u < v; ++u) c.set_color(u, v, b.color(u / r, v / r));
    return c;
}

}  // namespace ordered_ramsey
