#include "bcp/partition.hpp"

#include <algorithm>
#include <tuple>

#include "bcp/errors.hpp"

namespace bcp {

Weight Partition::heaviest() const {
    require(!classes.empty(), "heaviest: empty partition");
    Weight best = classes.front().weight();
    for (const auto& c : classes) best = std::max(best, c.weight());
    return best;
}

Weight Partition::lightest() const {
    require(!classes.empty(), "lightest: empty partition");
    Weight best = classes.front().weight();
    for (const auto& c : classes) best = std::min(best, c.weight());
    return best;
}

std::vector<Weight> Partition::class_weights() const {
    std::vector<Weight> out;
    out.reserve(classes.size());
    for (const auto& c : classes) out.push_back(c.weight());
    return out;
}

Partition sorted_by_weight(Partition p) {
    std::stable_sort(p.classes.begin(), p.classes.end(), [](const VertexSet& a, const VertexSet& b) {
        return std::make_tuple(a.weight(), a.min()) < std::make_tuple(b.weight(), b.min());
    });
    return p;
}

Partition reweigh(const WeightedGraph& g, const Partition& p) {
    Partition out;
    out.classes.reserve(p.size());
    for (const auto& c : p.classes) out.classes.push_back(g.reweigh(c));
    return out;
}

const char* to_string(PartitionIssueKind kind) {
    switch (kind) {
        case PartitionIssueKind::WrongClassCount: return "wrong-class-count";
        case PartitionIssueKind::EmptyClass: return "empty-class";
        case PartitionIssueKind::VertexOutOfRange: return "vertex-out-of-range";
        case PartitionIssueKind::Overlap: return "overlap";
        case PartitionIssueKind::Uncovered: return "uncovered";
        case PartitionIssueKind::Disconnected: return "disconnected";
    }
    return "unknown";
}

ValidationReport validate(const WeightedGraph& g, const std::vector<std::vector<Vertex>>& classes, std::size_t k) {
    ValidationReport report;
    const auto n = g.order();
    if (classes.size() != k) {
        report.push_back({PartitionIssueKind::WrongClassCount, 0, -1,
                          "expected " + std::to_string(k) + " classes, found " + std::to_string(classes.size())});
    }
    std::vector<int> owner(n, -1);
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (classes[i].empty()) {
            report.push_back({PartitionIssueKind::EmptyClass, i, -1, "class " + std::to_string(i) + " is empty"});
            continue;
        }
        VertexSet members(n);
        for (Vertex v : classes[i]) {
            if (v < 0 || static_cast<std::size_t>(v) >= n) {
                report.push_back({PartitionIssueKind::VertexOutOfRange, i, v,
                                  "class " + std::to_string(i) + " names unknown vertex " + std::to_string(v)});
                continue;
            }
            auto& slot = owner[static_cast<std::size_t>(v)];
            if (slot >= 0) {
                report.push_back({PartitionIssueKind::Overlap, i, v,
                                  "vertex " + std::to_string(v) + " appears in class " + std::to_string(slot) +
                                      " and class " + std::to_string(i)});
            } else {
                slot = static_cast<int>(i);
            }
            members.insert(v, g.weight(v));
        }
        if (!members.empty() && !is_connected(g, members)) {
            report.push_back({PartitionIssueKind::Disconnected, i, -1,
                              "class " + std::to_string(i) + " does not induce a connected subgraph"});
        }
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (owner[v] < 0) {
            report.push_back({PartitionIssueKind::Uncovered, 0, static_cast<Vertex>(v),
                              "vertex " + std::to_string(v) + " is not covered"});
        }
    }
    return report;
}

ValidationReport validate(const WeightedGraph& g, const Partition& p, std::size_t k) {
    std::vector<std::vector<Vertex>> raw;
    raw.reserve(p.size());
    for (const auto& c : p.classes) {
        require(c.universe() == g.order(), "validate: class universe does not match graph");
        raw.push_back(c.members());
    }
    return validate(g, raw, k);
}

OrderedPartition3 order3(const WeightedGraph& g, const Partition& p) {
    require(is_valid_partition(g, p, 3), "order3: not a connected 3-partition");
    const Partition sorted = sorted_by_weight(p);
    OrderedPartition3 out;
    for (std::size_t i = 0; i < 3; ++i) out.classes_[i] = sorted.classes[i];
    return out;
}

Rational fact1_bound(const WeightedGraph& g, std::size_t k) {
    require(k >= 1 && k <= g.order(), "fact1_bound: k outside [1, n]");
    return Rational(g.total_weight(), static_cast<std::int64_t>(k));
}

std::vector<VertexSet> sorted_components_without(const WeightedGraph& g, Vertex u) {
    VertexSet rest = g.all_vertices();
    rest.erase(u, g.weight(u));
    if (rest.empty()) return {};
    auto comps = components(g, rest);
    std::stable_sort(comps.begin(), comps.end(), [](const VertexSet& a, const VertexSet& b) {
        return std::make_tuple(a.weight(), a.min()) < std::make_tuple(b.weight(), b.min());
    });
    return comps;
}

Weight lemma2_bound(const WeightedGraph& g, std::size_t k, Vertex u) {
    require(u >= 0 && static_cast<std::size_t>(u) < g.order(), "lemma2_bound: vertex out of range");
    require(k >= 1, "lemma2_bound: k must be positive");
    const auto comps = sorted_components_without(g, u);
    const std::size_t ell = comps.size();
    require(ell >= 2, "lemma2_bound: vertex is not a cut vertex");
    require(ell + 1 >= k, "lemma2_bound: G - u has fewer than k-1 components");
    Weight bound = g.weight(u);
    for (std::size_t i = 0; i + k <= ell; ++i) bound += comps[i].weight();  // i < ell-k+1
    return bound;
}

}  // namespace bcp
