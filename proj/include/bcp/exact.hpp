#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>

#include "bcp/graph.hpp"
#include "bcp/minmax_approx.hpp"
#include "bcp/partition.hpp"

namespace bcp {

/// Limits for exhaustive searches. Exceeding any of them throws
/// BudgetExceeded; results are never silently truncated.
struct EnumerationBudget {
    std::size_t max_vertices = 14;
    std::uint64_t max_partitions = 0;  // 0: unlimited
    std::optional<std::chrono::duration<double>> time_limit;

    /// Defaults, with the time limit taken from BCP_BUDGET_SECONDS when set.
    static EnumerationBudget from_environment();
};

/// Visits every connected k-partition of g exactly once (classes unordered).
/// Vertices are assigned in id order as a restricted-growth string, so vertex
/// 0 is always in class 0; a class that no unassigned vertex can reach any
/// more is checked for connectivity on the spot and pruned if disconnected.
/// Returns the number of partitions visited.
std::uint64_t enumerate_connected_kpartitions(const WeightedGraph& g, std::size_t k,
                                              const std::function<void(const Partition&)>& visit,
                                              const EnumerationBudget& budget = {});

struct ExactResult {
    Weight value = 0;
    Partition witness;  // sorted by (weight, lowest id)
    std::uint64_t partitions_visited = 0;
};

/// Minimum w+ over all connected k-partitions. Among optimal partitions the
/// witness has the lexicographically smallest class-assignment string.
ExactResult exact_minmax(const WeightedGraph& g, std::size_t k, const EnumerationBudget& budget = {});

/// Maximum w- over all connected k-partitions, same tie-break.
ExactResult exact_maxmin(const WeightedGraph& g, std::size_t k, const EnumerationBudget& budget = {});

/// Exhaustive search for a pull-admissible subset of V3 (|V3| <= 20).
std::optional<VertexSet> oracle_pull_admissible(const WeightedGraph& g, const OrderedPartition3& p, PullTarget target);

}  // namespace bcp
