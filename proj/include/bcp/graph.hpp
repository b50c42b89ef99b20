#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace bcp {

using Vertex = std::int32_t;
using Weight = std::int64_t;

/// Subset of the vertex universe 0..n-1 with its total weight cached.
///
/// Membership is a packed bitset. Every mutating call takes the weight of the
/// vertex being added or removed so that weight() never needs the graph.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe);

    std::size_t universe() const { return universe_; }
    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }
    Weight weight() const { return weight_; }

    bool contains(Vertex v) const;
    void insert(Vertex v, Weight w);
    void erase(Vertex v, Weight w);

    /// Lowest member id, or -1 when empty.
    Vertex min() const;
    std::vector<Vertex> members() const;

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t word = 0; word < bits_.size(); ++word) {
            std::uint64_t b = bits_[word];
            while (b != 0) {
                const int bit = __builtin_ctzll(b);
                f(static_cast<Vertex>(word * 64 + bit));
                b &= b - 1;
            }
        }
    }

    bool intersects(const VertexSet& other) const;
    bool is_subset_of(const VertexSet& other) const;

    /// Adds a disjoint set. Overlap is a contract violation.
    VertexSet& absorb(const VertexSet& other);
    /// Removes a subset. Non-subsets are a contract violation.
    VertexSet& remove_all(const VertexSet& other);

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.universe_ == b.universe_ && a.bits_ == b.bits_;
    }

private:
    std::size_t universe_ = 0;
    std::size_t size_ = 0;
    Weight weight_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Undirected, simple, connected graph with positive integer vertex weights.
///
/// The constructor validates every invariant and throws InvalidInput on
/// loops, parallel edges, out-of-range ids, nonpositive weights or a
/// disconnected edge set. Adjacency lists are sorted ascending.
class WeightedGraph {
public:
    WeightedGraph(std::vector<Weight> weights, std::span<const std::pair<Vertex, Vertex>> edges);

    std::size_t order() const { return weights_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    Weight weight(Vertex v) const { return weights_[static_cast<std::size_t>(v)]; }
    Weight total_weight() const { return total_; }
    const std::vector<Weight>& weights() const { return weights_; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    bool adjacent(Vertex u, Vertex v) const;
    /// Canonical edge list: each edge once as (u, v) with u < v, sorted.
    const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }

    bool uniform_weights() const;

    /// Same topology under a different weight function.
    WeightedGraph with_weights(std::vector<Weight> weights) const;

    VertexSet empty_set() const { return VertexSet(order()); }
    VertexSet all_vertices() const;
    VertexSet make_set(std::span<const Vertex> vertices) const;
    VertexSet singleton(Vertex v) const;
    /// Re-derives the cached weight of `s` under this graph's weights.
    VertexSet reweigh(const VertexSet& s) const;

private:
    WeightedGraph() = default;

    std::vector<Weight> weights_;
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<std::pair<Vertex, Vertex>> edges_;
    Weight total_ = 0;
};

/// Depth-first spanning tree of G[s] rooted at min(s); neighbors are visited
/// in ascending id order. Covers only the component of the root.
struct DfsTree {
    Vertex root = -1;
    std::vector<Vertex> preorder;
    std::vector<Vertex> parent;  // indexed by vertex; -1 for the root and for non-members
};

DfsTree dfs_tree(const WeightedGraph& g, const VertexSet& s);

/// Connected components of G[s], ordered by lowest member id.
std::vector<VertexSet> components(const WeightedGraph& g, const VertexSet& s);

bool is_connected(const WeightedGraph& g, const VertexSet& s);

/// A vertex whose removal keeps G[s] connected: the lowest-id non-root leaf of
/// the DFS tree of G[s] rooted at min(s), neighbors visited in ascending order.
Vertex non_cut_vertex(const WeightedGraph& g, const VertexSet& s);

/// Connected 2-partition of G[s] obtained by deleting one edge of its DFS tree.
/// The edge minimizing |w(A) - w(B)| is chosen, ties to the lexicographically
/// smallest (u, v). `first` holds the root side.
std::pair<VertexSet, VertexSet> split_two(const WeightedGraph& g, const VertexSet& s);

/// Ascending ids of vertices in `inside` that have a neighbor in `from`.
std::vector<Vertex> boundary_neighbors(const WeightedGraph& g, const VertexSet& from, const VertexSet& inside);

bool sets_adjacent(const WeightedGraph& g, const VertexSet& a, const VertexSet& b);

}  // namespace bcp
