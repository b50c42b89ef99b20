#include "bcp/exact.hpp"

#include <array>
#include <cstdlib>
#include <limits>
#include <string>

#include "bcp/errors.hpp"

namespace bcp {
namespace {

using Mask = std::uint64_t;
constexpr std::size_t kMaxMaskVertices = 64;

Mask bit(Vertex v) { return Mask{1} << v; }

std::vector<Mask> neighbor_masks(const WeightedGraph& g) {
    std::vector<Mask> out(g.order(), 0);
    for (auto [u, v] : g.edges()) {
        out[static_cast<std::size_t>(u)] |= bit(v);
        out[static_cast<std::size_t>(v)] |= bit(u);
    }
    return out;
}

bool mask_connected(Mask s, const std::vector<Mask>& nbr) {
    if (s == 0) return false;
    Mask reach = s & (~s + 1);
    Mask frontier = reach;
    while (frontier != 0) {
        Mask next = 0;
        for (Mask f = frontier; f != 0; f &= f - 1) next |= nbr[static_cast<std::size_t>(__builtin_ctzll(f))];
        next &= s & ~reach;
        reach |= next;
        frontier = next;
    }
    return reach == s;
}

Weight mask_weight(Mask s, const WeightedGraph& g) {
    Weight total = 0;
    for (; s != 0; s &= s - 1) total += g.weight(static_cast<Vertex>(__builtin_ctzll(s)));
    return total;
}

Partition to_partition(const WeightedGraph& g, const Mask* masks, std::size_t k) {
    Partition p;
    p.classes.reserve(k);
    for (std::size_t c = 0; c < k; ++c) {
        VertexSet s(g.order());
        for (Mask m = masks[c]; m != 0; m &= m - 1) {
            const auto v = static_cast<Vertex>(__builtin_ctzll(m));
            s.insert(v, g.weight(v));
        }
        p.classes.push_back(std::move(s));
    }
    return p;
}

/// Restricted-growth enumeration of connected k-partitions over bitmasks.
/// `Prune(weights, closed, used)` may cut a branch after each assignment;
/// `Leaf(masks, weights)` sees every complete partition.
class MaskEnumerator {
public:
    static constexpr std::size_t kMaxClasses = kMaxMaskVertices;

    MaskEnumerator(const WeightedGraph& g, std::size_t k, const EnumerationBudget& budget)
        : g_(g), k_(k), n_(g.order()), nbr_(neighbor_masks(g)), budget_(budget) {
        if (k < 1 || k > n_) throw ContractViolation("enumeration: k must lie in [1, n]");
        if (n_ > budget.max_vertices || n_ > kMaxMaskVertices) {
            throw BudgetExceeded("enumeration: " + std::to_string(n_) + " vertices exceeds the budget of " +
                                 std::to_string(std::min(budget.max_vertices, kMaxMaskVertices)));
        }
        all_ = n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1;
        start_ = std::chrono::steady_clock::now();
    }

    template <class Leaf, class Prune>
    std::uint64_t run(Leaf&& leaf, Prune&& prune) {
        std::array<Mask, kMaxClasses> masks{};
        std::array<Mask, kMaxClasses> reach{};
        std::array<Weight, kMaxClasses> weights{};
        std::array<bool, kMaxClasses> closed{};
        descend(0, 0, masks, reach, weights, closed, leaf, prune);
        return visited_;
    }

private:
    template <class Leaf, class Prune>
    void descend(std::size_t v, std::size_t used, std::array<Mask, kMaxClasses>& masks,
                 std::array<Mask, kMaxClasses>& reach, std::array<Weight, kMaxClasses>& weights,
                 std::array<bool, kMaxClasses>& closed, Leaf& leaf, Prune& prune) {
        if ((++nodes_ & 0xFFF) == 0) check_time();
        if (v == n_) {
            if (used != k_) return;
            ++visited_;
            if (budget_.max_partitions != 0 && visited_ > budget_.max_partitions) {
                throw BudgetExceeded("enumeration: more than " + std::to_string(budget_.max_partitions) +
                                     " partitions");
            }
            leaf(masks.data(), weights.data());
            return;
        }
        // Classes still needed must fit in the vertices from v on.
        if (k_ - used > n_ - v) return;
        const Mask future = v + 1 >= n_ ? 0 : all_ & ~((Mask{1} << (v + 1)) - 1);
        const auto vv = static_cast<Vertex>(v);
        const std::size_t options = used < k_ ? used + 1 : used;
        for (std::size_t c = 0; c < options; ++c) {
            if (c < used && closed[c]) continue;
            const Mask saved_mask = masks[c];
            const Mask saved_reach = reach[c];
            const Weight saved_weight = weights[c];
            const auto saved_closed = closed;

            masks[c] |= bit(vv);
            reach[c] |= nbr_[v];
            weights[c] += g_.weight(vv);
            const std::size_t now_used = c == used ? used + 1 : used;
            bool dead = false;
            for (std::size_t d = 0; d < now_used && !dead; ++d) {
                if (closed[d] || (reach[d] & future) != 0) continue;
                closed[d] = true;
                if (!mask_connected(masks[d], nbr_)) dead = true;
            }
            if (!dead && !prune(weights.data(), closed.data(), now_used)) {
                descend(v + 1, now_used, masks, reach, weights, closed, leaf, prune);
            }
            masks[c] = saved_mask;
            reach[c] = saved_reach;
            weights[c] = saved_weight;
            closed = saved_closed;
        }
    }

    void check_time() const {
        if (!budget_.time_limit) return;
        const std::chrono::duration<double> spent = std::chrono::steady_clock::now() - start_;
        if (spent > *budget_.time_limit) throw BudgetExceeded("enumeration: time budget exhausted");
    }

    const WeightedGraph& g_;
    std::size_t k_;
    std::size_t n_;
    std::vector<Mask> nbr_;
    Mask all_ = 0;
    EnumerationBudget budget_;
    std::chrono::steady_clock::time_point start_;
    std::uint64_t visited_ = 0;
    std::uint64_t nodes_ = 0;
};

}  // namespace

EnumerationBudget EnumerationBudget::from_environment() {
    EnumerationBudget budget;
    if (const char* raw = std::getenv("BCP_BUDGET_SECONDS"); raw != nullptr && *raw != '\0') {
        char* end = nullptr;
        const double seconds = std::strtod(raw, &end);
        if (end != raw && seconds > 0) budget.time_limit = std::chrono::duration<double>(seconds);
    }
    return budget;
}

std::uint64_t enumerate_connected_kpartitions(const WeightedGraph& g, std::size_t k,
                                              const std::function<void(const Partition&)>& visit,
                                              const EnumerationBudget& budget) {
    MaskEnumerator e(g, k, budget);
    return e.run([&](const Mask* masks, const Weight*) { visit(to_partition(g, masks, k)); },
                 [](const Weight*, const bool*, std::size_t) { return false; });
}

ExactResult exact_minmax(const WeightedGraph& g, std::size_t k, const EnumerationBudget& budget) {
    MaskEnumerator e(g, k, budget);
    Weight best = std::numeric_limits<Weight>::max();
    std::vector<Mask> witness;
    const auto visited = e.run(
        [&](const Mask* masks, const Weight* weights) {
            Weight top = 0;
            for (std::size_t c = 0; c < k; ++c) top = std::max(top, weights[c]);
            if (top < best) {
                best = top;
                witness.assign(masks, masks + k);
            }
        },
        // Class weights only grow, so a class already at `best` cannot lead to
        // a strict improvement.
        [&](const Weight* weights, const bool*, std::size_t used) {
            for (std::size_t c = 0; c < used; ++c) {
                if (weights[c] >= best) return true;
            }
            return false;
        });
    if (witness.empty()) throw ContractViolation("exact_minmax: no connected k-partition exists");
    return ExactResult{best, sorted_by_weight(to_partition(g, witness.data(), k)), visited};
}

ExactResult exact_maxmin(const WeightedGraph& g, std::size_t k, const EnumerationBudget& budget) {
    MaskEnumerator e(g, k, budget);
    Weight best = 0;
    std::vector<Mask> witness;
    const auto visited = e.run(
        [&](const Mask* masks, const Weight* weights) {
            Weight low = std::numeric_limits<Weight>::max();
            for (std::size_t c = 0; c < k; ++c) low = std::min(low, weights[c]);
            if (low > best) {
                best = low;
                witness.assign(masks, masks + k);
            }
        },
        // A closed class keeps its weight, which caps w- for the whole branch.
        [&](const Weight* weights, const bool* closed, std::size_t used) {
            for (std::size_t c = 0; c < used; ++c) {
                if (closed[c] && weights[c] <= best) return true;
            }
            return false;
        });
    if (witness.empty()) throw ContractViolation("exact_maxmin: no connected k-partition exists");
    return ExactResult{best, sorted_by_weight(to_partition(g, witness.data(), k)), visited};
}

std::optional<VertexSet> oracle_pull_admissible(const WeightedGraph& g, const OrderedPartition3& p, PullTarget target) {
    if (g.order() > kMaxMaskVertices) throw BudgetExceeded("oracle_pull_admissible: graph too large");
    const auto members = p.v3().members();
    if (members.size() > 20) throw BudgetExceeded("oracle_pull_admissible: |V3| exceeds 20");
    const auto nbr = neighbor_masks(g);
    auto to_mask = [](const VertexSet& s) {
        Mask m = 0;
        s.for_each([&](Vertex v) { m |= bit(v); });
        return m;
    };
    const Mask vi = to_mask(target == PullTarget::First ? p.v1() : p.v2());
    const Mask v3 = to_mask(p.v3());
    const Weight wi = (target == PullTarget::First ? p.v1() : p.v2()).weight();
    const Weight w3 = p.v3().weight();

    const std::uint32_t full = (std::uint32_t{1} << members.size()) - 1;
    for (std::uint32_t pick = 1; pick < full; ++pick) {
        Mask u = 0;
        for (std::size_t j = 0; j < members.size(); ++j) {
            if ((pick >> j) & 1u) u |= bit(members[j]);
        }
        if (wi + mask_weight(u, g) >= w3) continue;
        if (!mask_connected(vi | u, nbr) || !mask_connected(v3 & ~u, nbr)) continue;
        VertexSet out(g.order());
        for (Mask m = u; m != 0; m &= m - 1) {
            const auto v = static_cast<Vertex>(__builtin_ctzll(m));
            out.insert(v, g.weight(v));
        }
        return out;
    }
    return std::nullopt;
}

}  // namespace bcp
