#include "bcp/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "bcp/errors.hpp"

namespace bcp {

VertexSet::VertexSet(std::size_t universe) : universe_(universe), bits_((universe + 63) / 64, 0) {}

bool VertexSet::contains(Vertex v) const {
    if (v < 0 || static_cast<std::size_t>(v) >= universe_) return false;
    return (bits_[static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1u;
}

void VertexSet::insert(Vertex v, Weight w) {
    require(v >= 0 && static_cast<std::size_t>(v) < universe_, "VertexSet::insert: vertex out of range");
    if (contains(v)) return;
    bits_[static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (v % 64);
    ++size_;
    weight_ += w;
}

void VertexSet::erase(Vertex v, Weight w) {
    if (!contains(v)) return;
    bits_[static_cast<std::size_t>(v) / 64] &= ~(std::uint64_t{1} << (v % 64));
    --size_;
    weight_ -= w;
}

Vertex VertexSet::min() const {
    for (std::size_t word = 0; word < bits_.size(); ++word) {
        if (bits_[word] != 0) return static_cast<Vertex>(word * 64 + __builtin_ctzll(bits_[word]));
    }
    return -1;
}

std::vector<Vertex> VertexSet::members() const {
    std::vector<Vertex> out;
    out.reserve(size_);
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
}

bool VertexSet::intersects(const VertexSet& other) const {
    const std::size_t words = std::min(bits_.size(), other.bits_.size());
    for (std::size_t i = 0; i < words; ++i) {
        if ((bits_[i] & other.bits_[i]) != 0) return true;
    }
    return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        const std::uint64_t theirs = i < other.bits_.size() ? other.bits_[i] : 0;
        if ((bits_[i] & ~theirs) != 0) return false;
    }
    return true;
}

VertexSet& VertexSet::absorb(const VertexSet& other) {
    require(universe_ == other.universe_, "VertexSet::absorb: universe mismatch");
    require(!intersects(other), "VertexSet::absorb: sets overlap");
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= other.bits_[i];
    size_ += other.size_;
    weight_ += other.weight_;
    return *this;
}

VertexSet& VertexSet::remove_all(const VertexSet& other) {
    require(universe_ == other.universe_, "VertexSet::remove_all: universe mismatch");
    require(other.is_subset_of(*this), "VertexSet::remove_all: not a subset");
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= ~other.bits_[i];
    size_ -= other.size_;
    weight_ -= other.weight_;
    return *this;
}

WeightedGraph::WeightedGraph(std::vector<Weight> weights, std::span<const std::pair<Vertex, Vertex>> edges)
    : weights_(std::move(weights)) {
    const auto n = weights_.size();
    if (n == 0) throw InvalidInput("graph must have at least one vertex");
    for (std::size_t v = 0; v < n; ++v) {
        if (weights_[v] < 1) {
            throw InvalidInput("vertex " + std::to_string(v) + " has nonpositive weight " + std::to_string(weights_[v]));
        }
        total_ += weights_[v];
    }
    adjacency_.assign(n, {});
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n) {
            throw InvalidInput("edge " + std::to_string(u) + "-" + std::to_string(v) + " has an out-of-range endpoint");
        }
        if (u == v) throw InvalidInput("loop at vertex " + std::to_string(u));
        edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges_.begin(), edges_.end());
    if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
        throw InvalidInput("duplicate edge " + std::to_string(dup->first) + "-" + std::to_string(dup->second));
    }
    for (auto [u, v] : edges_) {
        adjacency_[static_cast<std::size_t>(u)].push_back(v);
        adjacency_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());
    if (!is_connected(*this, all_vertices())) throw InvalidInput("graph is not connected");
}

bool WeightedGraph::adjacent(Vertex u, Vertex v) const {
    const auto& list = neighbors(u);
    return std::binary_search(list.begin(), list.end(), v);
}

bool WeightedGraph::uniform_weights() const {
    return std::all_of(weights_.begin(), weights_.end(), [&](Weight w) { return w == weights_.front(); });
}

WeightedGraph WeightedGraph::with_weights(std::vector<Weight> weights) const {
    if (weights.size() != order()) throw InvalidInput("weight vector size does not match vertex count");
    WeightedGraph g;
    g.weights_ = std::move(weights);
    for (std::size_t v = 0; v < g.weights_.size(); ++v) {
        if (g.weights_[v] < 1) {
            throw InvalidInput("vertex " + std::to_string(v) + " has nonpositive weight " + std::to_string(g.weights_[v]));
        }
        g.total_ += g.weights_[v];
    }
    g.adjacency_ = adjacency_;
    g.edges_ = edges_;
    return g;
}

VertexSet WeightedGraph::all_vertices() const {
    VertexSet s(order());
    for (std::size_t v = 0; v < order(); ++v) s.insert(static_cast<Vertex>(v), weights_[v]);
    return s;
}

VertexSet WeightedGraph::make_set(std::span<const Vertex> vertices) const {
    VertexSet s(order());
    for (Vertex v : vertices) {
        require(v >= 0 && static_cast<std::size_t>(v) < order(), "make_set: vertex out of range");
        s.insert(v, weight(v));
    }
    return s;
}

VertexSet WeightedGraph::singleton(Vertex v) const {
    VertexSet s(order());
    s.insert(v, weight(v));
    return s;
}

VertexSet WeightedGraph::reweigh(const VertexSet& s) const {
    require(s.universe() == order(), "reweigh: universe mismatch");
    VertexSet out(order());
    s.for_each([&](Vertex v) { out.insert(v, weight(v)); });
    return out;
}

DfsTree dfs_tree(const WeightedGraph& g, const VertexSet& s) {
    DfsTree tree;
    tree.parent.assign(g.order(), -1);
    if (s.empty()) return tree;
    tree.root = s.min();
    std::vector<char> seen(g.order(), 0);
    // (vertex, index of next neighbor to try)
    std::vector<std::pair<Vertex, std::size_t>> stack;
    stack.emplace_back(tree.root, 0);
    seen[static_cast<std::size_t>(tree.root)] = 1;
    tree.preorder.push_back(tree.root);
    while (!stack.empty()) {
        auto& [v, next] = stack.back();
        const auto& nbrs = g.neighbors(v);
        while (next < nbrs.size() && (seen[static_cast<std::size_t>(nbrs[next])] || !s.contains(nbrs[next]))) ++next;
        if (next == nbrs.size()) {
            stack.pop_back();
            continue;
        }
        const Vertex child = nbrs[next++];
        seen[static_cast<std::size_t>(child)] = 1;
        tree.parent[static_cast<std::size_t>(child)] = v;
        tree.preorder.push_back(child);
        stack.emplace_back(child, 0);
    }
    return tree;
}

std::vector<VertexSet> components(const WeightedGraph& g, const VertexSet& s) {
    require(!s.empty(), "components: empty vertex set");
    std::vector<VertexSet> out;
    std::vector<char> seen(g.order(), 0);
    std::vector<Vertex> stack;
    s.for_each([&](Vertex start) {
        if (seen[static_cast<std::size_t>(start)]) return;
        VertexSet comp(g.order());
        seen[static_cast<std::size_t>(start)] = 1;
        stack.push_back(start);
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            comp.insert(v, g.weight(v));
            for (Vertex u : g.neighbors(v)) {
                if (!seen[static_cast<std::size_t>(u)] && s.contains(u)) {
                    seen[static_cast<std::size_t>(u)] = 1;
                    stack.push_back(u);
                }
            }
        }
        out.push_back(std::move(comp));
    });
    return out;
}

bool is_connected(const WeightedGraph& g, const VertexSet& s) {
    if (s.empty()) return false;
    return dfs_tree(g, s).preorder.size() == s.size();
}

Vertex non_cut_vertex(const WeightedGraph& g, const VertexSet& s) {
    require(s.size() >= 2, "non_cut_vertex: set needs at least two vertices");
    const DfsTree tree = dfs_tree(g, s);
    require(tree.preorder.size() == s.size(), "non_cut_vertex: set is not connected");
    std::vector<char> has_child(g.order(), 0);
    for (Vertex v : tree.preorder) {
        if (v != tree.root) has_child[static_cast<std::size_t>(tree.parent[static_cast<std::size_t>(v)])] = 1;
    }
    Vertex best = -1;
    for (Vertex v : tree.preorder) {
        if (v != tree.root && !has_child[static_cast<std::size_t>(v)] && (best < 0 || v < best)) best = v;
    }
    return best;
}

std::pair<VertexSet, VertexSet> split_two(const WeightedGraph& g, const VertexSet& s) {
    require(s.size() >= 2, "split_two: set needs at least two vertices");
    const DfsTree tree = dfs_tree(g, s);
    require(tree.preorder.size() == s.size(), "split_two: set is not connected");

    std::vector<Weight> subtree(g.order(), 0);
    for (auto it = tree.preorder.rbegin(); it != tree.preorder.rend(); ++it) {
        const auto v = static_cast<std::size_t>(*it);
        subtree[v] += g.weight(*it);
        if (*it != tree.root) subtree[static_cast<std::size_t>(tree.parent[v])] += subtree[v];
    }

    const Weight total = s.weight();
    Vertex cut_child = -1;
    Weight best_gap = 0;
    std::pair<Vertex, Vertex> best_edge;
    for (Vertex v : tree.preorder) {
        if (v == tree.root) continue;
        const Vertex p = tree.parent[static_cast<std::size_t>(v)];
        const Weight gap = std::abs(total - 2 * subtree[static_cast<std::size_t>(v)]);
        const std::pair<Vertex, Vertex> edge{std::min(p, v), std::max(p, v)};
        if (cut_child < 0 || gap < best_gap || (gap == best_gap && edge < best_edge)) {
            cut_child = v;
            best_gap = gap;
            best_edge = edge;
        }
    }

    // The subtree below cut_child is exactly the vertices whose root path passes through it.
    VertexSet below(g.order());
    std::vector<char> in_below(g.order(), 0);
    for (Vertex v : tree.preorder) {
        const bool inside = v == cut_child ||
                            (v != tree.root && in_below[static_cast<std::size_t>(tree.parent[static_cast<std::size_t>(v)])]);
        if (inside) {
            in_below[static_cast<std::size_t>(v)] = 1;
            below.insert(v, g.weight(v));
        }
    }
    VertexSet rest = s;
    rest.remove_all(below);
    return {std::move(rest), std::move(below)};
}

std::vector<Vertex> boundary_neighbors(const WeightedGraph& g, const VertexSet& from, const VertexSet& inside) {
    std::vector<Vertex> out;
    inside.for_each([&](Vertex v) {
        const auto& nbrs = g.neighbors(v);
        if (std::any_of(nbrs.begin(), nbrs.end(), [&](Vertex u) { return from.contains(u); })) out.push_back(v);
    });
    return out;
}

bool sets_adjacent(const WeightedGraph& g, const VertexSet& a, const VertexSet& b) {
    bool found = false;
    a.for_each([&](Vertex v) {
        if (found) return;
        for (Vertex u : g.neighbors(v)) {
            if (b.contains(u)) {
                found = true;
                return;
            }
        }
    });
    return found;
}

}  // namespace bcp
