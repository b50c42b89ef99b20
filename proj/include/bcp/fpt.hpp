#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bcp/graph.hpp"
#include "bcp/partition.hpp"

namespace bcp {

/// Stable-set vertices sharing the neighborhood S (a subset of the cover).
struct NeighborhoodClass {
    VertexSet neighborhood;
    std::vector<Vertex> members;  // ascending

    std::int64_t count() const { return static_cast<std::int64_t>(members.size()); }
};

/// Vertex cover X, stable set I = V - X, and I grouped by neighborhood.
/// Only neighborhoods with at least one stable vertex are materialized.
struct VertexCoverDecomposition {
    VertexSet cover;
    VertexSet stable;
    std::vector<Vertex> cover_vertices;        // X ascending
    std::vector<NeighborhoodClass> classes;    // ordered by neighborhood member list
    std::vector<int> cover_index;              // vertex -> position in cover_vertices, -1 if stable
    std::vector<int> class_of;                 // vertex -> neighborhood class index, -1 if in X

    std::size_t cover_size() const { return cover_vertices.size(); }
};

/// Maximal-matching cover: both endpoints of a greedily built matching,
/// scanning edges in canonical order.
VertexSet greedy_vertex_cover(const WeightedGraph& g);

bool is_vertex_cover(const WeightedGraph& g, const VertexSet& x);

/// Builds the decomposition for `cover`, or for the greedy cover when absent.
/// A supplied set that misses an edge is rejected with InvalidInput.
VertexCoverDecomposition decompose(const WeightedGraph& g, const std::optional<VertexSet>& cover = std::nullopt);

/// Hypergraph on the components of G[X - Z]. hyperedges[s] lists, for
/// neighborhood class s, the node indices its neighborhood touches (possibly
/// none when the neighborhood lies inside Z).
struct CutHypergraph {
    VertexSet removed;                               // Z
    std::vector<VertexSet> nodes;                    // components of G[X - Z]
    std::vector<std::vector<std::size_t>> hyperedges;

    /// Node index holding cover vertex v, or -1.
    int node_of(Vertex v) const;
};

CutHypergraph build_hypergraph(const WeightedGraph& g, const VertexCoverDecomposition& dec, const VertexSet& removed);

/// x and y values of the counting model. Class indices are 0-based here.
class FptSolution {
public:
    FptSolution() = default;
    FptSolution(std::size_t k, std::size_t cover_size, std::size_t class_count);

    std::size_t k() const { return k_; }
    std::size_t cover_size() const { return cover_size_; }
    std::size_t class_count() const { return class_count_; }

    /// x(i, j): cover vertex cover_vertices[j] sits in class i.
    std::uint8_t& x(std::size_t i, std::size_t j) { return x_[i * cover_size_ + j]; }
    std::uint8_t x(std::size_t i, std::size_t j) const { return x_[i * cover_size_ + j]; }
    /// y(i, s): number of neighborhood-class-s vertices in class i.
    std::int64_t& y(std::size_t i, std::size_t s) { return y_[i * class_count_ + s]; }
    std::int64_t y(std::size_t i, std::size_t s) const { return y_[i * class_count_ + s]; }

    std::int64_t class_size(std::size_t i) const;

private:
    std::size_t k_ = 0;
    std::size_t cover_size_ = 0;
    std::size_t class_count_ = 0;
    std::vector<std::uint8_t> x_;
    std::vector<std::int64_t> y_;
};

/// Connectivity inequality for one class:
///   x[u,i] + x[v,i] - sum_{z in Z} x[z,i] - sum_{S in F} y[S,i] <= 1
/// where u, v are non-adjacent cover vertices, Z separates them in G[X], and
/// F (neighborhood class indices) separates their components in H_Z.
struct CutConstraint {
    Vertex u = -1;
    Vertex v = -1;
    std::vector<Vertex> separator;      // Z, ascending
    std::vector<std::size_t> hyperedges;  // F
    std::size_t class_index = 0;        // the class it was separated for

    /// Left-hand side evaluated for class i.
    std::int64_t lhs(const VertexCoverDecomposition& dec, const FptSolution& s, std::size_t i) const;
    bool satisfied_by(const VertexCoverDecomposition& dec, const FptSolution& s, std::size_t i) const {
        return lhs(dec, s, i) <= 1;
    }
    /// The inequality holds for every class of `s`.
    bool satisfied_by_all_classes(const VertexCoverDecomposition& dec, const FptSolution& s) const;
};

/// The model for one (G, X, k): base constraint groups plus the lazily grown
/// pool of connectivity cuts.
struct FptModel {
    VertexCoverDecomposition dec;
    std::size_t k = 0;
    std::vector<CutConstraint> cuts;

    /// Names of violated base groups: "class-order", "cover-assignment",
    /// "neighbor-in-class", "stable-count", "binary", "nonnegative".
    std::vector<std::string> base_violations(const FptSolution& s) const;
    std::int64_t objective(const FptSolution& s) const { return s.class_size(0); }
};

/// Vector of a partition: classes sorted by (size, lowest id) ascending.
FptSolution encode(const VertexCoverDecomposition& dec, const Partition& p);

/// Cuts violated by an integral candidate, one per class whose decoded vertex
/// set is disconnected. Empty iff every decoded class is connected.
std::vector<CutConstraint> separate(const WeightedGraph& g, const VertexCoverDecomposition& dec, std::size_t k,
                                    const FptSolution& candidate);

/// Decodes a feasible solution: class i gets the y[S,i] lowest-id unused
/// members of each I(S), classes taken in index order.
Partition reconstruct(const WeightedGraph& g, const VertexCoverDecomposition& dec, std::size_t k,
                      const FptSolution& solution);

/// For a fixed cover assignment (group_of_cover[j] is the class of cover
/// vertex j), a count distribution maximizing the smallest class size subject
/// to the cover-assignment, neighbor-in-class and stable-count groups only.
/// Classes keep their group order. Absent when some I(S) has no admissible class.
std::optional<FptSolution> best_distribution(const VertexCoverDecomposition& dec, std::size_t k,
                                             const std::vector<int>& group_of_cover);

enum class FptRoute { StarGraph, MoreClassesThanCover, BranchAndBound };

const char* to_string(FptRoute route);

struct FptOptions {
    std::optional<VertexSet> cover;
    std::optional<std::chrono::duration<double>> time_limit;
};

struct FptStats {
    std::uint64_t x_nodes = 0;     // partial cover assignments explored
    std::uint64_t y_nodes = 0;     // count-distribution subproblems solved
    std::uint64_t candidates = 0;  // integral candidates handed to separation
    std::uint64_t cuts_added = 0;
};

struct FptResult {
    std::int64_t value = 0;
    Partition partition;   // classes sorted by size, lowest id breaking ties
    FptRoute route = FptRoute::BranchAndBound;
    FptModel model;
    std::optional<FptSolution> solution;  // set on the branch-and-bound route
    FptStats stats;
};

/// Exact max-min connected k-partition of an unweighted graph (uniform
/// weights are read as 1), parameterized by a vertex cover. 2 <= k <= n.
FptResult solve_fpt_maxmin(const WeightedGraph& g, std::size_t k, const FptOptions& options = {});

/// Human-readable dump of the model and its cut pool.
void write_model(std::ostream& out, const FptModel& model);

}  // namespace bcp
