#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ordered_ramsey/errors.hpp"

namespace ordered_ramsey {

/// Rectangular 0/1 matrix with at most 64 columns, stored as one bitmask per
/// row (bit j of row_bits[i] is entry (i, j)).
struct ZeroOneMatrix {
    int rows = 1;
    int cols = 1;
    std::vector<std::uint64_t> row_bits;

    ZeroOneMatrix() : row_bits(1, 0) {}
    ZeroOneMatrix(int r, int s);

    /// Builds from explicit 0/1 row vectors, e.g. {{0, 1}, {1, 1}}.
    static ZeroOneMatrix from_rows(const std::vector<std::vector<int>>& entries);

    bool one(int i, int j) const { return (row_bits[i] >> j) & 1u; }
    void set(int i, int j) { row_bits[i] |= std::uint64_t{1} << j; }
    void clear(int i, int j) { row_bits[i] &= ~(std::uint64_t{1} << j); }
    int count_ones() const;
    bool is_zero() const;

    /// Positions of the 1-entries in row-major order.
    std::vector<std::pair<int, int>> ones() const;

    bool operator==(const ZeroOneMatrix&) const = default;
};

/// True iff M contains A: some strictly increasing choice of rows and columns
/// of M has a 1 wherever A does.
bool matrix_contains(const ZeroOneMatrix& m, const ZeroOneMatrix& a);

/// Containment restricted to equal dimensions (entrywise domination).
bool tightly_contains(const ZeroOneMatrix& m, const ZeroOneMatrix& a);

struct ExtremalResult {
    ZeroOneMatrix pattern;
    int m = 0;
    int n = 0;
    int value = 0;
    ZeroOneMatrix witness;
    bool exhaustive = true;
};

/// Maximum number of 1s in an m x n matrix not containing `a`, computed by
/// exhaustive branch and bound.  Requires m * n <= 36 and a nonzero `a`.
/// The witness is the lexicographically greatest maximiser in row-major
/// bit order.
ExtremalResult extremal_number(const ZeroOneMatrix& a, int m, int n);

/// (s-1)m + (r-1)n - (r-1)(s-1): the extremal value attained by minimalist
/// r x s patterns.
long long minimalist_value(int r, int s, int m, int n);

struct MinimalistWindow {
    bool minimalist = true;
    struct Counterexample {
        int m = 0;
        int n = 0;
        long long extremal = 0;
        long long formula = 0;
    };
    std::optional<Counterexample> counterexample;
};

/// Checks extremal_number(a, m, n) == minimalist_value on the whole window
/// rows(a) <= m <= m_max, cols(a) <= n <= n_max; reports the first mismatch.
MinimalistWindow is_minimalist_window(const ZeroOneMatrix& a, int m_max, int n_max);

enum class ElementarySide { first_row, last_row, first_col, last_col };

constexpr const char* elementary_side_name(ElementarySide s) {
    switch (s) {
        case ElementarySide::first_row: return "first_row";
        case ElementarySide::last_row: return "last_row";
        case ElementarySide::first_col: return "first_col";
        case ElementarySide::last_col: return "last_col";
    }
    return "unknown";
}

/// One growth step: a new outermost row (or column) holding a single 1 that
/// is orthogonally adjacent to an existing 1.  `index` is the column of the
/// new 1 for row operations and its row for column operations.
struct ElementaryOp {
    ElementarySide side = ElementarySide::first_row;
    int index = 0;
    bool operator==(const ElementaryOp&) const = default;
};

/// Ops applicable to `m`, in a fixed order (first_row, last_row, first_col,
/// last_col; ascending index within each side).
std::vector<ElementaryOp> elementary_op_candidates(const ZeroOneMatrix& m);

ZeroOneMatrix apply_elementary(const ZeroOneMatrix& m, const ElementaryOp& op);

/// All matrices reachable from `m` in one step, deduplicated by value.
std::vector<ZeroOneMatrix> elementary_operations(const ZeroOneMatrix& m);

struct Derivation {
    std::vector<ElementaryOp> steps;
    ZeroOneMatrix result;
};

enum class DeriveStatus { found, not_found, budget_exceeded };

struct DeriveResult {
    DeriveStatus status = DeriveStatus::not_found;
    std::optional<Derivation> derivation;
    long long states_explored = 0;
};

/// Breadth-first search from [[1]] through elementary operations, restricted
/// to matrices fitting inside a's dimensions, looking for one that tightly
/// contains `a`.  A `found` derivation certifies that `a` is minimalist;
/// `not_found` exhausts the reachable space without being a disproof.
/// `max_states` bounds the number of expanded states.
DeriveResult derive_minimalist(const ZeroOneMatrix& a, long long max_states = 1'000'000);

}  // namespace ordered_ramsey
