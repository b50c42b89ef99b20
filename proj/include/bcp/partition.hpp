#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "bcp/graph.hpp"

namespace bcp {

using Rational = boost::rational<std::int64_t>;

/// A connected k-partition: nonempty, pairwise disjoint classes covering V,
/// each inducing a connected subgraph. Construction does not validate; use
/// validate() or is_valid_partition() where the origin is untrusted.
struct Partition {
    std::vector<VertexSet> classes;

    std::size_t size() const { return classes.size(); }
    Weight heaviest() const;  // w+
    Weight lightest() const;  // w-
    std::vector<Weight> class_weights() const;
};

/// Sorts classes by (weight, lowest member id) ascending.
Partition sorted_by_weight(Partition p);

/// Same classes with weights re-derived from `g`.
Partition reweigh(const WeightedGraph& g, const Partition& p);

enum class PartitionIssueKind { WrongClassCount, EmptyClass, VertexOutOfRange, Overlap, Uncovered, Disconnected };

struct PartitionIssue {
    PartitionIssueKind kind;
    std::size_t class_index = 0;  // meaningful for class-level issues
    Vertex vertex = -1;           // meaningful for vertex-level issues
    std::string message;
};

using ValidationReport = std::vector<PartitionIssue>;

/// Every violated condition of the connected k-partition definition.
ValidationReport validate(const WeightedGraph& g, const std::vector<std::vector<Vertex>>& classes, std::size_t k);
ValidationReport validate(const WeightedGraph& g, const Partition& p, std::size_t k);

inline bool is_valid_partition(const WeightedGraph& g, const Partition& p, std::size_t k) {
    return validate(g, p, k).empty();
}

const char* to_string(PartitionIssueKind kind);

/// Connected 3-partition with w(V1) <= w(V2) <= w(V3), ties by lowest member id.
class OrderedPartition3 {
public:
    const VertexSet& v1() const { return classes_[0]; }
    const VertexSet& v2() const { return classes_[1]; }
    const VertexSet& v3() const { return classes_[2]; }
    /// 1-based class access, matching V1..V3.
    const VertexSet& at(int i) const { return classes_.at(static_cast<std::size_t>(i - 1)); }
    Partition as_partition() const { return Partition{{classes_[0], classes_[1], classes_[2]}}; }

    friend OrderedPartition3 order3(const WeightedGraph& g, const Partition& p);

private:
    std::array<VertexSet, 3> classes_;
};

/// Orders a valid connected 3-partition; contract violation otherwise.
OrderedPartition3 order3(const WeightedGraph& g, const Partition& p);

/// Trivial lower bound W/k on the min-max optimum.
Rational fact1_bound(const WeightedGraph& g, std::size_t k);

/// Cut vertex u with the components of G - u sorted by (weight, lowest id).
struct StarCenterCertificate {
    Vertex center = -1;
    std::vector<VertexSet> comps;

    std::size_t ell() const { return comps.size(); }
};

/// Components of G - u in certificate order.
std::vector<VertexSet> sorted_components_without(const WeightedGraph& g, Vertex u);

/// w(u) plus the ell-k+1 lightest component weights of G - u, a lower bound on
/// every connected k-partition's heaviest class. Requires ell >= k-1 (and >= 2).
Weight lemma2_bound(const WeightedGraph& g, std::size_t k, Vertex u);

}  // namespace bcp
