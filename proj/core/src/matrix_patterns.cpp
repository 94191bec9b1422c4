#include "ordered_ramsey/matrix_patterns.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <string>

namespace ordered_ramsey {

namespace {

void check_dims(int r, int s) {
    if (r < 1 || s < 1) fail(errc::invalid_argument, "matrix needs rows, cols >= 1");
    if (s > 64) fail(errc::capacity_exceeded, "matrix limited to 64 columns");
}

}  // namespace

ZeroOneMatrix::ZeroOneMatrix(int r, int s) : rows(r), cols(s) {
    check_dims(r, s);
    row_bits.assign(r, 0);
}

ZeroOneMatrix ZeroOneMatrix::from_rows(const std::vector<std::vector<int>>& entries) {
    if (entries.empty() || entries[0].empty())
        fail(errc::invalid_argument, "matrix needs rows, cols >= 1");
    ZeroOneMatrix m(static_cast<int>(entries.size()),
                    static_cast<int>(entries[0].size()));
    for (int i = 0; i < m.rows; ++i) {
        if (static_cast<int>(entries[i].size()) != m.cols)
            fail(errc::invalid_argument, "ragged matrix rows");
        for (int j = 0; j < m.cols; ++j) {
            if (entries[i][j] != 0 && entries[i][j] != 1)
                fail(errc::invalid_argument, "matrix entries must be 0 or 1");
            if (entries[i][j]) m.set(i, j);
        }
    }
    return m;
}

int ZeroOneMatrix::count_ones() const {
    int total = 0;
    for (auto bits : row_bits) total += std::popcount(bits);
    return total;
}

bool ZeroOneMatrix::is_zero() const {
    for (auto bits : row_bits)
        if (bits) return false;
    return true;
}

std::vector<std::pair<int, int>> ZeroOneMatrix::ones() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (one(i, j)) out.emplace_back(i, j);
    return out;
}

namespace {

// Column masks a must cover in each chosen host column, indexed by pattern
// column, expressed over the chosen rows (bit p = pattern row p).
std::vector<std::uint64_t> pattern_column_masks(const ZeroOneMatrix& a) {
    std::vector<std::uint64_t> masks(a.cols, 0);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j)
            if (a.one(i, j)) masks[j] |= std::uint64_t{1} << i;
    return masks;
}

// Greedy increasing column match over [col_lo, col_hi) for pattern columns
// [j_lo, j_hi): feasibility is per-column, so leftmost-first is exact.
bool match_columns(const ZeroOneMatrix& m, const std::vector<int>& row_map,
                   const std::vector<std::uint64_t>& col_masks, int j_lo,
                   int j_hi, int col_lo, int col_hi) {
    int c = col_lo;
    for (int j = j_lo; j < j_hi; ++j) {
        for (;; ++c) {
            if (c >= col_hi - (j_hi - 1 - j)) return false;
            bool covers = true;
            std::uint64_t need = col_masks[j];
            while (need) {
                int p = std::countr_zero(need);
                need &= need - 1;
                if (!m.one(row_map[p], c)) {
                    covers = false;
                    break;
                }
            }
            if (covers) break;
        }
        ++c;
    }
    return true;
}

bool match_columns_pinned(const ZeroOneMatrix& m, const std::vector<int>& row_map,
                          const std::vector<std::uint64_t>& col_masks, int a_cols,
                          int pin_j, int pin_c) {
    std::uint64_t need = col_masks[pin_j];
    while (need) {
        int p = std::countr_zero(need);
        need &= need - 1;
        if (!m.one(row_map[p], pin_c)) return false;
    }
    return match_columns(m, row_map, col_masks, 0, pin_j, 0, pin_c) &&
           match_columns(m, row_map, col_masks, pin_j + 1, a_cols, pin_c + 1, m.cols);
}

bool choose_rows(const ZeroOneMatrix& m, const ZeroOneMatrix& a,
                 const std::vector<std::uint64_t>& col_masks,
                 std::vector<int>& row_map, int next, int lo) {
    if (next == a.rows)
        return match_columns(m, row_map, col_masks, 0, a.cols, 0, m.cols);
    for (int i = lo; i <= m.rows - (a.rows - next); ++i) {
        row_map[next] = i;
        if (choose_rows(m, a, col_masks, row_map, next + 1, i + 1)) return true;
    }
    return false;
}

// Rows with position pin_p fixed to pin_row; used by the extremal search to
// test only embeddings through a freshly placed 1.
bool choose_rows_pinned(const ZeroOneMatrix& m, const ZeroOneMatrix& a,
                        const std::vector<std::uint64_t>& col_masks,
                        std::vector<int>& row_map, int next, int lo, int pin_p,
                        int pin_row, int pin_j, int pin_c) {
    if (next == a.rows)
        return match_columns_pinned(m, row_map, col_masks, a.cols, pin_j, pin_c);
    int hi;
    if (next < pin_p)
        hi = pin_row - (pin_p - next);
    else
        hi = m.rows - (a.rows - next);
    if (next == pin_p) {
        if (pin_row < lo) return false;
        row_map[next] = pin_row;
        return choose_rows_pinned(m, a, col_masks, row_map, next + 1, pin_row + 1,
                                  pin_p, pin_row, pin_j, pin_c);
    }
    for (int i = lo; i <= hi; ++i) {
        row_map[next] = i;
        if (choose_rows_pinned(m, a, col_masks, row_map, next + 1, i + 1, pin_p,
                               pin_row, pin_j, pin_c))
            return true;
    }
    return false;
}

}  // namespace

bool matrix_contains(const ZeroOneMatrix& m, const ZeroOneMatrix& a) {
    if (a.rows > m.rows || a.cols > m.cols) return false;
    auto col_masks = pattern_column_masks(a);
    std::vector<int> row_map(a.rows);
    return choose_rows(m, a, col_masks, row_map, 0, 0);
}

bool tightly_contains(const ZeroOneMatrix& m, const ZeroOneMatrix& a) {
    if (m.rows != a.rows || m.cols != a.cols) return false;
    for (int i = 0; i < m.rows; ++i)
        if (a.row_bits[i] & ~m.row_bits[i]) return false;
    return true;
}

namespace {

// True iff m contains a by an embedding mapping some 1 of a onto cell
// (r0, c0) of m.  Caller guarantees m without that cell does not contain a.
bool contains_through(const ZeroOneMatrix& m, const ZeroOneMatrix& a,
                      const std::vector<std::uint64_t>& col_masks, int r0,
                      int c0) {
    std::vector<int> row_map(a.rows);
    for (auto [ai, aj] : a.ones()) {
        if (ai > r0 || a.rows - 1 - ai > m.rows - 1 - r0) continue;
        if (aj > c0 || a.cols - 1 - aj > m.cols - 1 - c0) continue;
        if (choose_rows_pinned(m, a, col_masks, row_map, 0, 0, ai, r0, aj, c0))
            return true;
    }
    return false;
}

struct ExtremalSearch {
    const ZeroOneMatrix& a;
    std::vector<std::uint64_t> col_masks;
    int m, n;
    ZeroOneMatrix current;
    int best_value = -1;
    ZeroOneMatrix best;

    void run(int idx, int ones_count) {
        int total = m * n;
        if (ones_count + (total - idx) <= best_value) return;
        if (idx == total) {
            best_value = ones_count;
            best = current;
            return;
        }
        int i = idx / n, j = idx % n;
        current.set(i, j);
        if (!contains_through(current, a, col_masks, i, j)) run(idx + 1, ones_count + 1);
        current.clear(i, j);
        run(idx + 1, ones_count);
    }
};

}  // namespace

ExtremalResult extremal_number(const ZeroOneMatrix& a, int m, int n) {
    if (a.is_zero()) fail(errc::invalid_argument, "pattern must contain a 1");
    if (m < 1 || n < 1) fail(errc::invalid_argument, "extremal_number needs m, n >= 1");
    if (m * n > 36)
        fail(errc::capacity_exceeded, "extremal_number limited to m*n <= 36");

    ExtremalSearch search{a, pattern_column_masks(a), m, n, ZeroOneMatrix(m, n)};
    // Trying 1 before 0 visits complete matrices in decreasing lexicographic
    // order, so the first witness of the final value is the greatest one.
    search.run(0, 0);
    return ExtremalResult{a, m, n, search.best_value, search.best, true};
}

long long minimalist_value(int r, int s, int m, int n) {
    return static_cast<long long>(s - 1) * m + static_cast<long long>(r - 1) * n -
           static_cast<long long>(r - 1) * (s - 1);
}

MinimalistWindow is_minimalist_window(const ZeroOneMatrix& a, int m_max, int n_max) {
    if (m_max < a.rows || n_max < a.cols)
        fail(errc::invalid_argument, "window must include the pattern dimensions");
    for (int m = a.rows; m <= m_max; ++m)
        for (int n = a.cols; n <= n_max; ++n) {
            long long ex = extremal_number(a, m, n).value;
            long long formula = minimalist_value(a.rows, a.cols, m, n);
            if (ex != formula)
                return MinimalistWindow{
                    false, MinimalistWindow::Counterexample{m, n, ex, formula}};
        }
    return MinimalistWindow{true, std::nullopt};
}

std::vector<ElementaryOp> elementary_op_candidates(const ZeroOneMatrix& m) {
    std::vector<ElementaryOp> ops;
    for (int j = 0; j < m.cols; ++j)
        if (m.one(0, j)) ops.push_back({ElementarySide::first_row, j});
    for (int j = 0; j < m.cols; ++j)
        if (m.one(m.rows - 1, j)) ops.push_back({ElementarySide::last_row, j});
    for (int i = 0; i < m.rows; ++i)
        if (m.one(i, 0)) ops.push_back({ElementarySide::first_col, i});
    for (int i = 0; i < m.rows; ++i)
        if (m.one(i, m.cols - 1)) ops.push_back({ElementarySide::last_col, i});
    return ops;
}

ZeroOneMatrix apply_elementary(const ZeroOneMatrix& m, const ElementaryOp& op) {
    switch (op.side) {
        case ElementarySide::first_row: {
            if (op.index < 0 || op.index >= m.cols || !m.one(0, op.index))
                fail(errc::invalid_argument, "new 1 must sit next to an existing 1");
            ZeroOneMatrix out(m.rows + 1, m.cols);
            out.set(0, op.index);
            for (int i = 0; i < m.rows; ++i) out.row_bits[i + 1] = m.row_bits[i];
            return out;
        }
        case ElementarySide::last_row: {
            if (op.index < 0 || op.index >= m.cols || !m.one(m.rows - 1, op.index))
                fail(errc::invalid_argument, "new 1 must sit next to an existing 1");
            ZeroOneMatrix out(m.rows + 1, m.cols);
            for (int i = 0; i < m.rows; ++i) out.row_bits[i] = m.row_bits[i];
            out.set(m.rows, op.index);
            return out;
        }
        case ElementarySide::first_col: {
            if (op.index < 0 || op.index >= m.rows || !m.one(op.index, 0))
                fail(errc::invalid_argument, "new 1 must sit next to an existing 1");
            ZeroOneMatrix out(m.rows, m.cols + 1);
            for (int i = 0; i < m.rows; ++i) out.row_bits[i] = m.row_bits[i] << 1;
            out.set(op.index, 0);
            return out;
        }
        case ElementarySide::last_col: {
            if (op.index < 0 || op.index >= m.rows || !m.one(op.index, m.cols - 1))
                fail(errc::invalid_argument, "new 1 must sit next to an existing 1");
            ZeroOneMatrix out(m.rows, m.cols + 1);
            for (int i = 0; i < m.rows; ++i) out.row_bits[i] = m.row_bits[i];
            out.set(op.index, m.cols);
            return out;
        }
    }
    fail(errc::invalid_argument, "unknown elementary operation");
}

std::vector<ZeroOneMatrix> elementary_operations(const ZeroOneMatrix& m) {
    std::vector<ZeroOneMatrix> out;
    for (const auto& op : elementary_op_candidates(m)) {
        ZeroOneMatrix next = apply_elementary(m, op);
        if (std::find(out.begin(), out.end(), next) == out.end())
            out.push_back(std::move(next));
    }
    return out;
}

DeriveResult derive_minimalist(const ZeroOneMatrix& a, long long max_states) {
    if (a.is_zero()) fail(errc::invalid_argument, "pattern must contain a 1");

    struct State {
        ZeroOneMatrix matrix;
        std::vector<ElementaryOp> steps;
    };

    auto key = [](const ZeroOneMatrix& m) {
        std::vector<std::uint64_t> k{static_cast<std::uint64_t>(m.rows),
                                     static_cast<std::uint64_t>(m.cols)};
        k.insert(k.end(), m.row_bits.begin(), m.row_bits.end());
        return k;
    };

    ZeroOneMatrix seed(1, 1);
    seed.set(0, 0);
    std::deque<State> queue{{seed, {}}};
    std::map<std::vector<std::uint64_t>, bool> visited{{key(seed), true}};
    long long expanded = 0;

    while (!queue.empty()) {
        State state = std::move(queue.front());
        queue.pop_front();
        if (tightly_contains(state.matrix, a))
            return DeriveResult{DeriveStatus::found,
                                Derivation{state.steps, state.matrix}, expanded};
        if (++expanded > max_states)
            return DeriveResult{DeriveStatus::budget_exceeded, std::nullopt, expanded};
        for (const auto& op : elementary_op_candidates(state.matrix)) {
            ZeroOneMatrix next = apply_elementary(state.matrix, op);
            if (next.rows > a.rows || next.cols > a.cols) continue;
            auto k = key(next);
            if (visited.contains(k)) continue;
            visited.emplace(std::move(k), true);
            auto steps = state.steps;
            steps.push_back(op);
            queue.push_back({std::move(next), std::move(steps)});
        }
    }
    return DeriveResult{DeriveStatus::not_found, std::nullopt, expanded};
}

}  // namespace ordered_ramsey
