#pragma once

#include <stdexcept>
#include <string>

namespace ordered_ramsey {

enum class errc {
    invalid_argument,
    self_loop,
    duplicate_edge,
    vertex_out_of_range,
    edge_not_normalized,
    not_two_ichromatic,
    ambiguous_split,
    invalid_split,
    capacity_exceeded,
    budget_exceeded,
    parse_error,
    cache_corrupt,
};

constexpr const char* errc_name(errc code) {
    switch (code) {
        case errc::invalid_argument: return "invalid-argument";
        case errc::self_loop: return "self-loop";
        case errc::duplicate_edge: return "duplicate-edge";
        case errc::vertex_out_of_range: return "vertex-out-of-range";
        case errc::edge_not_normalized: return "edge-not-normalized";
        case errc::not_two_ichromatic: return "not-2-ichromatic";
        case errc::ambiguous_split: return "ambiguous-split";
        case errc::invalid_split: return "invalid-split";
        case errc::capacity_exceeded: return "capacity-exceeded";
        case errc::budget_exceeded: return "budget-exceeded";
        case errc::parse_error: return "parse-error";
        case errc::cache_corrupt: return "cache-corrupt";
    }
    return "unknown";
}

/// Thrown when an operation's precondition, capacity limit, or input format
/// is violated.  The code distinguishes usage errors from resource limits.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
    throw error(code, message);
}

}  // namespace ordered_ramsey
