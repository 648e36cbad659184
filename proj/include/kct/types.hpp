#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace kct {

// Dense 0-based vertex identifier, stable for the lifetime of a graph.
using VertexId = std::int32_t;

// Travel times and shortest-path distances in tenths of a minute.
// Integer storage keeps every comparison and tie-break exact.
using dist_t = std::int64_t;

inline constexpr dist_t kUnreachable = std::numeric_limits<dist_t>::max();

// Bad user input: malformed files, unknown ids, out-of-range parameters.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Metric operation on a graph that is not connected.
struct MetricError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Degenerate geometry (plane fit on collinear or too few points).
struct GeometryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Enumeration refused because the candidate count exceeds the budget.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline double to_minutes(dist_t tenths) { return static_cast<double>(tenths) / 10.0; }

// Nearest tenth of a minute, half away from zero.
dist_t tenths_from_minutes(double minutes);

// "12.3" (always one fractional digit).
std::string minutes_str(dist_t tenths);

// Parses a nonnegative decimal minute value whose fraction is a multiple
// of 0.1 ("7", "6.5", "10.50"). Throws InputError otherwise.
dist_t parse_minutes_exact(const std::string& text);

}  // namespace kct
