#pragma once

#include <functional>

#include "bcp/graph.hpp"
#include "bcp/minmax_approx.hpp"
#include "bcp/partition.hpp"

namespace bcp {

/// MinMax rounds w/lambda up with theta = max weight; MaxMin rounds down with
/// theta = min weight.
enum class ScaleDirection { MinMax, MaxMin };

struct ScaledInstance {
    ScaleDirection direction = ScaleDirection::MinMax;
    Weight theta = 0;
    Rational epsilon;
    Rational lambda;  // epsilon * theta / n, exact
    WeightedGraph scaled;
};

/// Exact floor and ceiling of a / r for positive rational r.
Weight floor_div(Weight a, const Rational& r);
Weight ceil_div(Weight a, const Rational& r);

/// Rescales the weights of `g`. Rejects epsilon <= 0 and (MaxMin) any scaling
/// that rounds a weight down to zero.
ScaledInstance scale(const WeightedGraph& g, const Rational& epsilon, ScaleDirection direction);

/// A routine producing a connected k-partition of (G, w) whose quality
/// guarantee degrades with the size of the weights.
using PartitionRoutine = std::function<Partition(const WeightedGraph&, std::size_t)>;

struct ScaledRun {
    ScaledInstance instance;
    Partition partition;  // weights under the original instance
};

/// Runs `routine` on the scaled instance and re-evaluates its answer under
/// the original weights. An alpha-approximation routine becomes an
/// alpha(1 + epsilon)-approximation for min-max.
ScaledRun scaled_minmax(const WeightedGraph& g, std::size_t k, const Rational& epsilon, const PartitionRoutine& routine);

/// Max-min counterpart (theta = min weight, floor rounding).
ScaledRun scaled_maxmin(const WeightedGraph& g, std::size_t k, const Rational& epsilon, const PartitionRoutine& routine);

struct EpsBcpkResult {
    BcpkResult scaled_result;  // the run on scaled weights
    ScaledInstance instance;
    Partition partition;       // scaled_result.partition under the original weights, sorted
    Rational ratio_bound;      // k/2 + epsilon'
};

/// (k/2 + eps')-approximation: minmax_bcpk on weights scaled with
/// epsilon = eps' / (k/2).
EpsBcpkResult eps_minmax_bcpk(const WeightedGraph& g, std::size_t k, const Rational& eps_prime);

}  // namespace bcp
