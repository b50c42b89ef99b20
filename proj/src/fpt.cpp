#include "bcp/fpt.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <ostream>
#include <queue>

#include "bcp/errors.hpp"
#include "bcp/minmax_approx.hpp"

namespace bcp {
namespace {

/// Edmonds-Karp max flow on a small dense network.
class FlowNetwork {
public:
    explicit FlowNetwork(std::size_t nodes) : adj_(nodes) {}

    std::size_t add_edge(std::size_t from, std::size_t to, std::int64_t cap) {
        adj_[from].push_back(edges_.size());
        edges_.push_back({to, cap, 0});
        adj_[to].push_back(edges_.size());
        edges_.push_back({from, 0, 0});
        return edges_.size() - 2;
    }

    std::int64_t flow_on(std::size_t edge) const { return edges_[edge].flow; }

    std::int64_t max_flow(std::size_t source, std::size_t sink) {
        std::int64_t total = 0;
        std::vector<std::size_t> via(adj_.size());
        while (true) {
            std::vector<char> seen(adj_.size(), 0);
            std::queue<std::size_t> queue;
            queue.push(source);
            seen[source] = 1;
            while (!queue.empty() && !seen[sink]) {
                const auto at = queue.front();
                queue.pop();
                for (auto e : adj_[at]) {
                    const auto& edge = edges_[e];
                    if (!seen[edge.to] && edge.cap - edge.flow > 0) {
                        seen[edge.to] = 1;
                        via[edge.to] = e;
                        queue.push(edge.to);
                    }
                }
            }
            if (!seen[sink]) return total;
            std::int64_t push = std::numeric_limits<std::int64_t>::max();
            for (auto at = sink; at != source; at = edges_[via[at] ^ 1].to) {
                push = std::min(push, edges_[via[at]].cap - edges_[via[at]].flow);
            }
            for (auto at = sink; at != source; at = edges_[via[at] ^ 1].to) {
                edges_[via[at]].flow += push;
                edges_[via[at] ^ 1].flow -= push;
            }
            total += push;
        }
    }

private:
    struct Edge {
        std::size_t to;
        std::int64_t cap;
        std::int64_t flow;
    };
    std::vector<std::vector<std::size_t>> adj_;
    std::vector<Edge> edges_;
};

/// Union-find over hypergraph nodes.
class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
    std::size_t find(std::size_t a) {
        while (parent_[a] != a) a = parent_[a] = parent_[parent_[a]];
        return a;
    }
    void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

private:
    std::vector<std::size_t> parent_;
};

std::vector<std::vector<std::size_t>> neighborhood_cover_indices(const VertexCoverDecomposition& dec) {
    std::vector<std::vector<std::size_t>> out;
    out.reserve(dec.classes.size());
    for (const auto& c : dec.classes) {
        std::vector<std::size_t> idx;
        c.neighborhood.for_each([&](Vertex v) { idx.push_back(static_cast<std::size_t>(dec.cover_index[static_cast<std::size_t>(v)])); });
        out.push_back(std::move(idx));
    }
    return out;
}

bool touches_group(const VertexCoverDecomposition& dec, const std::vector<int>& assign, std::size_t s,
                   std::size_t group) {
    bool hit = false;
    dec.classes[s].neighborhood.for_each([&](Vertex v) {
        hit = hit || assign[static_cast<std::size_t>(dec.cover_index[static_cast<std::size_t>(v)])] == static_cast<int>(group);
    });
    return hit;
}

struct Relaxed {
    std::int64_t value;
    std::vector<std::vector<std::int64_t>> y;  // [group][class]
};

/// Best count distribution for a fixed cover assignment under forced (lower)
/// and forbidden (group, class) pairs, ignoring the connectivity cuts: the
/// largest level T every class can reach, by max flow and binary search.
std::optional<Relaxed> relax(const VertexCoverDecomposition& dec, std::size_t k, const std::vector<int>& assign,
                             const std::vector<std::vector<char>>& lower,
                             const std::vector<std::vector<char>>& forbid) {
    const std::size_t m = dec.cover_size();
    const std::size_t c = dec.classes.size();
    const std::int64_t ceiling = static_cast<std::int64_t>(m + dec.stable.size()) / static_cast<std::int64_t>(k);
    std::vector<std::int64_t> base(k, 0);
    for (std::size_t j = 0; j < m; ++j) ++base[static_cast<std::size_t>(assign[j])];
    std::vector<std::int64_t> rest(c);
    std::vector<std::vector<char>> allowed(k, std::vector<char>(c, 0));
    for (std::size_t s = 0; s < c; ++s) {
        rest[s] = dec.classes[s].count();
        bool any = false;
        for (std::size_t grp = 0; grp < k; ++grp) {
            allowed[grp][s] = !forbid[grp][s] && touches_group(dec, assign, s, grp);
            if (lower[grp][s]) {
                if (!allowed[grp][s]) return std::nullopt;
                --rest[s];
                ++base[grp];
            }
            any = any || allowed[grp][s];
        }
        if (rest[s] < 0 || (rest[s] > 0 && !any)) return std::nullopt;
    }

    const std::size_t source = c + k;
    const std::size_t sink = source + 1;
    auto feasible = [&](std::int64_t level, std::vector<std::vector<std::int64_t>>* flows) {
        FlowNetwork net(c + k + 2);
        std::int64_t demand = 0;
        std::vector<std::vector<std::size_t>> arc(k, std::vector<std::size_t>(c, 0));
        for (std::size_t s = 0; s < c; ++s) net.add_edge(source, s, rest[s]);
        for (std::size_t grp = 0; grp < k; ++grp) {
            for (std::size_t s = 0; s < c; ++s) {
                if (allowed[grp][s]) arc[grp][s] = net.add_edge(s, c + grp, rest[s]);
            }
            const std::int64_t need = std::max<std::int64_t>(0, level - base[grp]);
            demand += need;
            net.add_edge(c + grp, sink, need);
        }
        if (net.max_flow(source, sink) != demand) return false;
        if (flows != nullptr) {
            flows->assign(k, std::vector<std::int64_t>(c, 0));
            for (std::size_t grp = 0; grp < k; ++grp) {
                for (std::size_t s = 0; s < c; ++s) {
                    if (allowed[grp][s]) (*flows)[grp][s] = net.flow_on(arc[grp][s]);
                }
            }
        }
        return true;
    };

    std::int64_t lo = *std::min_element(base.begin(), base.end());
    std::int64_t hi = ceiling;
    if (lo > hi) lo = hi;
    while (lo < hi) {
        const std::int64_t mid = lo + (hi - lo + 1) / 2;
        if (feasible(mid, nullptr)) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }

    Relaxed out{lo, {}};
    feasible(lo, &out.y);
    std::vector<std::int64_t> size = base;
    for (std::size_t grp = 0; grp < k; ++grp) {
        for (std::size_t s = 0; s < c; ++s) {
            size[grp] += out.y[grp][s];
            rest[s] -= out.y[grp][s];
            out.y[grp][s] += lower[grp][s];
        }
    }
    // Whatever the level does not need goes to the smallest allowed class.
    for (std::size_t s = 0; s < c; ++s) {
        for (; rest[s] > 0; --rest[s]) {
            std::size_t pick = k;
            for (std::size_t grp = 0; grp < k; ++grp) {
                if (allowed[grp][s] && (pick == k || size[grp] < size[pick])) pick = grp;
            }
            ++out.y[pick][s];
            ++size[pick];
        }
    }
    out.value = *std::min_element(size.begin(), size.end());
    return out;
}


/// Branch-and-bound over cover assignments, then over count distributions,
/// with connectivity cuts separated lazily from integral candidates.
class FptSearch {
public:
    FptSearch(const WeightedGraph& g, const VertexCoverDecomposition& dec, std::size_t k,
              std::optional<std::chrono::duration<double>> time_limit, FptModel& model, FptStats& stats)
        : g_(g),
          dec_(dec),
          k_(k),
          m_(dec.cover_size()),
          c_(dec.classes.size()),
          n_(static_cast<std::int64_t>(g.order())),
          ceiling_(n_ / static_cast<std::int64_t>(k)),
          touches_(neighborhood_cover_indices(dec)),
          assign_(m_, -1),
          model_(model),
          stats_(stats),
          time_limit_(time_limit),
          start_(std::chrono::steady_clock::now()) {}

    std::optional<FptSolution> run() {
        assign_cover(0, 0);
        return best_;
    }

    std::int64_t best_value() const { return best_value_; }

private:
    bool done() const { return best_value_ >= ceiling_; }

    void check_time() const {
        if (!time_limit_) return;
        const std::chrono::duration<double> spent = std::chrono::steady_clock::now() - start_;
        if (spent > *time_limit_) throw BudgetExceeded("fpt-maxmin: time budget exhausted");
    }

    bool class_touches(std::size_t s, std::size_t group) const { return touches_group(dec_, assign_, s, group); }

    // Upper bound for a partial cover assignment: no opened class can grow
    // beyond its cover vertices, every unassigned cover vertex and every
    // stable vertex whose neighborhood it can still reach.
    std::int64_t partial_bound(std::size_t next, std::size_t used) const {
        std::int64_t bound = ceiling_;
        const auto unassigned = static_cast<std::int64_t>(m_ - next);
        for (std::size_t grp = 0; grp < used; ++grp) {
            std::int64_t cap = unassigned;
            for (std::size_t j = 0; j < next; ++j) cap += assign_[j] == static_cast<int>(grp) ? 1 : 0;
            for (std::size_t s = 0; s < c_; ++s) {
                const bool reachable = std::any_of(touches_[s].begin(), touches_[s].end(), [&](std::size_t j) {
                    return j >= next || assign_[j] == static_cast<int>(grp);
                });
                if (reachable) cap += dec_.classes[s].count();
            }
            bound = std::min(bound, cap);
        }
        return bound;
    }

    void assign_cover(std::size_t next, std::size_t used) {
        if (done()) return;
        ++stats_.x_nodes;
        if ((stats_.x_nodes & 0x3FF) == 0) check_time();
        if (k_ - used > m_ - next) return;
        if (partial_bound(next, used) <= best_value_) return;
        if (next == m_) {
            std::vector<std::vector<char>> lower(k_, std::vector<char>(c_, 0));
            std::vector<std::vector<char>> forbid(k_, std::vector<char>(c_, 0));
            distribute(lower, forbid);
            return;
        }
        const std::size_t options = used < k_ ? used + 1 : used;
        for (std::size_t grp = 0; grp < options && !done(); ++grp) {
            assign_[next] = static_cast<int>(grp);
            assign_cover(next + 1, grp == used ? used + 1 : used);
        }
        assign_[next] = -1;
    }

    void distribute(std::vector<std::vector<char>>& lower, std::vector<std::vector<char>>& forbid) {
        if (done()) return;
        ++stats_.y_nodes;
        if ((stats_.y_nodes & 0xFF) == 0) check_time();
        const auto relaxed = relax(dec_, k_, assign_, lower, forbid);
        if (!relaxed || relaxed->value <= best_value_) return;

        // Candidate with classes ordered by size; order[pos] is the group.
        std::vector<std::size_t> order(k_);
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::vector<std::int64_t> size(k_, 0);
        for (std::size_t j = 0; j < m_; ++j) ++size[static_cast<std::size_t>(assign_[j])];
        for (std::size_t grp = 0; grp < k_; ++grp) {
            for (std::size_t s = 0; s < c_; ++s) size[grp] += relaxed->y[grp][s];
        }
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return size[a] < size[b]; });
        FptSolution candidate(k_, m_, c_);
        for (std::size_t pos = 0; pos < k_; ++pos) {
            for (std::size_t j = 0; j < m_; ++j) candidate.x(pos, j) = assign_[j] == static_cast<int>(order[pos]) ? 1 : 0;
            for (std::size_t s = 0; s < c_; ++s) candidate.y(pos, s) = relaxed->y[order[pos]][s];
        }
        ++stats_.candidates;

        std::optional<CutConstraint> violated;
        std::size_t violated_pos = 0;
        for (const auto& cut : model_.cuts) {
            for (std::size_t pos = 0; pos < k_ && !violated; ++pos) {
                if (!cut.satisfied_by(dec_, candidate, pos)) {
                    violated = cut;
                    violated_pos = pos;
                }
            }
            if (violated) break;
        }
        if (!violated) {
            auto fresh = separate(g_, dec_, k_, candidate);
            if (fresh.empty()) {
                best_value_ = relaxed->value;
                best_ = std::move(candidate);
                return;
            }
            violated = fresh.front();
            violated_pos = violated->class_index;
            stats_.cuts_added += fresh.size();
            for (auto& cut : fresh) model_.cuts.push_back(std::move(cut));
        }

        // Any connected completion gives the class at least one vertex from
        // some hyperedge of the cut: branch on the first such hyperedge.
        const std::size_t grp = order[violated_pos];
        std::vector<std::size_t> choices;
        for (std::size_t s : violated->hyperedges) {
            if (!forbid[grp][s] && class_touches(s, grp)) choices.push_back(s);
        }
        std::vector<std::size_t> forbidden_here;
        for (std::size_t s : choices) {
            if (done()) break;
            lower[grp][s] = 1;
            distribute(lower, forbid);
            lower[grp][s] = 0;
            forbid[grp][s] = 1;
            forbidden_here.push_back(s);
        }
        for (std::size_t s : forbidden_here) forbid[grp][s] = 0;
    }

    const WeightedGraph& g_;
    const VertexCoverDecomposition& dec_;
    std::size_t k_;
    std::size_t m_;
    std::size_t c_;
    std::int64_t n_;
    std::int64_t ceiling_;
    std::vector<std::vector<std::size_t>> touches_;
    std::vector<int> assign_;
    FptModel& model_;
    FptStats& stats_;
    std::optional<std::chrono::duration<double>> time_limit_;
    std::chrono::steady_clock::time_point start_;
    std::int64_t best_value_ = 0;
    std::optional<FptSolution> best_;
};

}  // namespace

VertexSet greedy_vertex_cover(const WeightedGraph& g) {
    VertexSet cover = g.empty_set();
    for (auto [u, v] : g.edges()) {
        if (!cover.contains(u) && !cover.contains(v)) {
            cover.insert(u, g.weight(u));
            cover.insert(v, g.weight(v));
        }
    }
    return cover;
}

bool is_vertex_cover(const WeightedGraph& g, const VertexSet& x) {
    return std::all_of(g.edges().begin(), g.edges().end(),
                       [&](const auto& e) { return x.contains(e.first) || x.contains(e.second); });
}

VertexCoverDecomposition decompose(const WeightedGraph& g, const std::optional<VertexSet>& cover) {
    VertexCoverDecomposition dec;
    if (cover) {
        if (cover->universe() != g.order()) throw InvalidInput("cover universe does not match the graph");
        if (!is_vertex_cover(g, *cover)) throw InvalidInput("supplied set is not a vertex cover");
        dec.cover = g.reweigh(*cover);
    } else {
        dec.cover = greedy_vertex_cover(g);
    }
    dec.stable = g.all_vertices();
    dec.stable.remove_all(dec.cover);
    dec.cover_vertices = dec.cover.members();
    dec.cover_index.assign(g.order(), -1);
    for (std::size_t j = 0; j < dec.cover_vertices.size(); ++j) {
        dec.cover_index[static_cast<std::size_t>(dec.cover_vertices[j])] = static_cast<int>(j);
    }

    std::map<std::vector<Vertex>, std::vector<Vertex>> grouped;
    dec.stable.for_each([&](Vertex v) { grouped[g.neighbors(v)].push_back(v); });
    dec.class_of.assign(g.order(), -1);
    for (auto& [nbrs, members] : grouped) {
        for (Vertex v : members) dec.class_of[static_cast<std::size_t>(v)] = static_cast<int>(dec.classes.size());
        dec.classes.push_back(NeighborhoodClass{g.make_set(nbrs), std::move(members)});
    }
    return dec;
}

int CutHypergraph::node_of(Vertex v) const {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i].contains(v)) return static_cast<int>(i);
    }
    return -1;
}

CutHypergraph build_hypergraph(const WeightedGraph& g, const VertexCoverDecomposition& dec, const VertexSet& removed) {
    require(removed.is_subset_of(dec.cover), "build_hypergraph: Z must be a subset of the cover");
    require(removed.size() < dec.cover.size(), "build_hypergraph: Z must differ from the cover");
    CutHypergraph h;
    h.removed = g.reweigh(removed);
    VertexSet kept = dec.cover;
    kept.remove_all(h.removed);
    h.nodes = components(g, kept);
    h.hyperedges.reserve(dec.classes.size());
    for (const auto& c : dec.classes) {
        std::vector<std::size_t> touched;
        for (std::size_t i = 0; i < h.nodes.size(); ++i) {
            if (h.nodes[i].intersects(c.neighborhood)) touched.push_back(i);
        }
        h.hyperedges.push_back(std::move(touched));
    }
    return h;
}

FptSolution::FptSolution(std::size_t k, std::size_t cover_size, std::size_t class_count)
    : k_(k), cover_size_(cover_size), class_count_(class_count), x_(k * cover_size, 0), y_(k * class_count, 0) {}

std::int64_t FptSolution::class_size(std::size_t i) const {
    std::int64_t total = 0;
    for (std::size_t j = 0; j < cover_size_; ++j) total += x(i, j);
    for (std::size_t s = 0; s < class_count_; ++s) total += y(i, s);
    return total;
}

std::int64_t CutConstraint::lhs(const VertexCoverDecomposition& dec, const FptSolution& s, std::size_t i) const {
    auto xv = [&](Vertex v) -> std::int64_t { return s.x(i, static_cast<std::size_t>(dec.cover_index[static_cast<std::size_t>(v)])); };
    std::int64_t total = xv(u) + xv(v);
    for (Vertex z : separator) total -= xv(z);
    for (std::size_t h : hyperedges) total -= s.y(i, h);
    return total;
}

bool CutConstraint::satisfied_by_all_classes(const VertexCoverDecomposition& dec, const FptSolution& s) const {
    for (std::size_t i = 0; i < s.k(); ++i) {
        if (!satisfied_by(dec, s, i)) return false;
    }
    return true;
}

std::vector<std::string> FptModel::base_violations(const FptSolution& s) const {
    std::vector<std::string> out;
    auto flag = [&](const char* name) {
        if (std::find(out.begin(), out.end(), name) == out.end()) out.emplace_back(name);
    };
    if (s.k() != k || s.cover_size() != dec.cover_size() || s.class_count() != dec.classes.size()) {
        out.emplace_back("dimensions");
        return out;
    }
    for (std::size_t i = 0; i + 1 < k; ++i) {
        if (s.class_size(i) > s.class_size(i + 1)) flag("class-order");
    }
    for (std::size_t j = 0; j < dec.cover_size(); ++j) {
        std::int64_t placed = 0;
        for (std::size_t i = 0; i < k; ++i) {
            placed += s.x(i, j);
            if (s.x(i, j) > 1) flag("binary");
        }
        if (placed != 1) flag("cover-assignment");
    }
    for (std::size_t c = 0; c < dec.classes.size(); ++c) {
        std::int64_t placed = 0;
        for (std::size_t i = 0; i < k; ++i) {
            const std::int64_t y = s.y(i, c);
            if (y < 0) flag("nonnegative");
            placed += y;
            std::int64_t present = 0;
            dec.classes[c].neighborhood.for_each(
                [&](Vertex v) { present += s.x(i, static_cast<std::size_t>(dec.cover_index[static_cast<std::size_t>(v)])); });
            if (y > dec.classes[c].count() * present) flag("neighbor-in-class");
        }
        if (placed != dec.classes[c].count()) flag("stable-count");
    }
    return out;
}

FptSolution encode(const VertexCoverDecomposition& dec, const Partition& p) {
    std::vector<const VertexSet*> order;
    for (const auto& c : p.classes) order.push_back(&c);
    std::stable_sort(order.begin(), order.end(), [](const VertexSet* a, const VertexSet* b) {
        return a->size() != b->size() ? a->size() < b->size() : a->min() < b->min();
    });
    FptSolution s(p.size(), dec.cover_size(), dec.classes.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        order[i]->for_each([&](Vertex v) {
            const auto idx = static_cast<std::size_t>(v);
            if (dec.cover_index[idx] >= 0) {
                s.x(i, static_cast<std::size_t>(dec.cover_index[idx])) = 1;
            } else {
                ++s.y(i, static_cast<std::size_t>(dec.class_of[idx]));
            }
        });
    }
    return s;
}

std::vector<CutConstraint> separate(const WeightedGraph& g, const VertexCoverDecomposition& dec, std::size_t k,
                                    const FptSolution& candidate) {
    require(candidate.k() == k && candidate.cover_size() == dec.cover_size() &&
                candidate.class_count() == dec.classes.size(),
            "separate: candidate dimensions do not match the model");
    std::vector<CutConstraint> cuts;
    for (std::size_t i = 0; i < k; ++i) {
        VertexSet in_class = g.empty_set();
        for (std::size_t j = 0; j < dec.cover_size(); ++j) {
            if (candidate.x(i, j) == 1) in_class.insert(dec.cover_vertices[j], g.weight(dec.cover_vertices[j]));
        }
        if (in_class.empty()) continue;
        VertexSet removed = dec.cover;
        removed.remove_all(in_class);
        const CutHypergraph h = build_hypergraph(g, dec, removed);
        if (h.nodes.size() < 2) continue;

        DisjointSets joined(h.nodes.size());
        for (std::size_t s = 0; s < dec.classes.size(); ++s) {
            if (candidate.y(i, s) < 1) continue;
            const auto& touched = h.hyperedges[s];
            for (std::size_t t = 1; t < touched.size(); ++t) joined.unite(touched[0], touched[t]);
        }
        // Component of the node holding the lowest cover vertex of the class.
        const std::size_t anchor = joined.find(0);
        std::vector<char> inside(h.nodes.size(), 0);
        bool split = false;
        for (std::size_t a = 0; a < h.nodes.size(); ++a) {
            inside[a] = joined.find(a) == anchor;
            split = split || !inside[a];
        }
        if (!split) continue;

        CutConstraint cut;
        cut.class_index = i;
        for (std::size_t a = 0; a < h.nodes.size(); ++a) {
            const Vertex low = h.nodes[a].min();
            if (inside[a] && (cut.u < 0 || low < cut.u)) cut.u = low;
            if (!inside[a] && (cut.v < 0 || low < cut.v)) cut.v = low;
        }
        cut.separator = removed.members();
        for (std::size_t s = 0; s < dec.classes.size(); ++s) {
            const auto& touched = h.hyperedges[s];
            const bool in = std::any_of(touched.begin(), touched.end(), [&](std::size_t a) { return inside[a] != 0; });
            const bool out = std::any_of(touched.begin(), touched.end(), [&](std::size_t a) { return inside[a] == 0; });
            if (in && out) cut.hyperedges.push_back(s);
        }
        cuts.push_back(std::move(cut));
    }
    return cuts;
}

Partition reconstruct(const WeightedGraph& g, const VertexCoverDecomposition& dec, std::size_t k,
                      const FptSolution& solution) {
    require(solution.k() == k && solution.cover_size() == dec.cover_size() &&
                solution.class_count() == dec.classes.size(),
            "reconstruct: solution dimensions do not match the model");
    Partition p;
    p.classes.assign(k, g.empty_set());
    for (std::size_t j = 0; j < dec.cover_size(); ++j) {
        int owner = -1;
        for (std::size_t i = 0; i < k; ++i) {
            if (solution.x(i, j) == 0) continue;
            require(owner < 0 && solution.x(i, j) == 1, "reconstruct: cover vertex not assigned exactly once");
            owner = static_cast<int>(i);
        }
        require(owner >= 0, "reconstruct: cover vertex not assigned");
        const Vertex v = dec.cover_vertices[j];
        p.classes[static_cast<std::size_t>(owner)].insert(v, g.weight(v));
    }
    for (std::size_t s = 0; s < dec.classes.size(); ++s) {
        const auto& members = dec.classes[s].members;
        std::size_t next = 0;
        for (std::size_t i = 0; i < k; ++i) {
            const std::int64_t take = solution.y(i, s);
            require(take >= 0 && next + static_cast<std::size_t>(take) <= members.size(),
                    "reconstruct: counts exceed the neighborhood class");
            for (std::int64_t t = 0; t < take; ++t, ++next) p.classes[i].insert(members[next], g.weight(members[next]));
        }
        require(next == members.size(), "reconstruct: neighborhood class not fully assigned");
    }
    for (std::size_t i = 0; i < k; ++i) {
        require(is_connected(g, p.classes[i]), "reconstruct: class " + std::to_string(i) + " is disconnected");
    }
    return p;
}

std::optional<FptSolution> best_distribution(const VertexCoverDecomposition& dec, std::size_t k,
                                             const std::vector<int>& group_of_cover) {
    require(group_of_cover.size() == dec.cover_size(), "best_distribution: one group per cover vertex");
    for (int grp : group_of_cover) require(grp >= 0 && static_cast<std::size_t>(grp) < k, "best_distribution: group out of range");
    const std::vector<std::vector<char>> none(k, std::vector<char>(dec.classes.size(), 0));
    const auto relaxed = relax(dec, k, group_of_cover, none, none);
    if (!relaxed) return std::nullopt;
    FptSolution out(k, dec.cover_size(), dec.classes.size());
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < dec.cover_size(); ++j) out.x(i, j) = group_of_cover[j] == static_cast<int>(i) ? 1 : 0;
        for (std::size_t s = 0; s < dec.classes.size(); ++s) out.y(i, s) = relaxed->y[i][s];
    }
    return out;
}

const char* to_string(FptRoute route) {
    switch (route) {
        case FptRoute::StarGraph: return "star";
        case FptRoute::MoreClassesThanCover: return "k-exceeds-cover";
        case FptRoute::BranchAndBound: return "branch-and-bound";
    }
    return "unknown";
}

FptResult solve_fpt_maxmin(const WeightedGraph& g, std::size_t k, const FptOptions& options) {
    if (k < 2 || k > g.order()) throw InvalidInput("fpt-maxmin: k must lie in [2, n]");
    if (!g.uniform_weights()) throw InvalidInput("fpt-maxmin: instance has non-uniform vertex weights");

    FptResult result;
    result.model.dec = decompose(g, options.cover);
    result.model.k = k;
    const auto& dec = result.model.dec;

    if (dec.cover_size() == 1) {
        // A star: k-1 leaves on their own, the center keeps the rest.
        result.route = FptRoute::StarGraph;
        const Vertex center = dec.cover_vertices.front();
        VertexSet rest = g.all_vertices();
        Partition p;
        for (Vertex v = 0; p.size() + 1 < k; ++v) {
            if (v == center) continue;
            p.classes.push_back(g.singleton(v));
            rest.erase(v, g.weight(v));
        }
        p.classes.push_back(std::move(rest));
        result.partition = sorted_by_weight(std::move(p));
        result.value = 1;
        return result;
    }
    if (k > dec.cover_size()) {
        // Some class lies inside the stable set, so it is a single vertex.
        result.route = FptRoute::MoreClassesThanCover;
        result.partition = sorted_by_weight(get_singletons(g, Partition{{g.all_vertices()}}, k - 1));
        result.value = 1;
        return result;
    }

    result.route = FptRoute::BranchAndBound;
    FptSearch search(g, dec, k, options.time_limit, result.model, result.stats);
    auto best = search.run();
    if (!best) throw std::logic_error("fpt-maxmin: search found no connected partition (internal error)");
    result.value = search.best_value();
    result.partition = sorted_by_weight(reconstruct(g, dec, k, *best));
    result.solution = std::move(best);
    return result;
}

void write_model(std::ostream& out, const FptModel& model) {
    const auto& dec = model.dec;
    auto set_text = [](const VertexSet& s) {
        std::string text = "{";
        bool first = true;
        s.for_each([&](Vertex v) {
            text += (first ? "" : ",") + std::to_string(v);
            first = false;
        });
        return text + "}";
    };
    out << "model max-min-bcp k=" << model.k << "\n";
    out << "cover";
    for (Vertex v : dec.cover_vertices) out << ' ' << v;
    out << "\n";
    for (std::size_t s = 0; s < dec.classes.size(); ++s) {
        out << "nclass " << s << " S=" << set_text(dec.classes[s].neighborhood) << " count=" << dec.classes[s].count()
            << " members=";
        for (std::size_t t = 0; t < dec.classes[s].members.size(); ++t) out << (t ? "," : "") << dec.classes[s].members[t];
        out << "\n";
    }
    out << "variables x " << dec.cover_size() * model.k << " binary, y " << dec.classes.size() * model.k
        << " integer\n";
    out << "objective maximize size(class 1)\n";
    out << "constraint class-order: size(i) <= size(i+1), i=1.." << (model.k - 1) << "\n";
    out << "constraint cover-assignment: sum_i x[v,i] = 1 for each v in X\n";
    out << "constraint neighbor-in-class: y[S,i] <= |I(S)| * sum_{v in S} x[v,i]\n";
    out << "constraint stable-count: sum_i y[S,i] = |I(S)|\n";
    out << "cuts " << model.cuts.size() << "\n";
    for (std::size_t c = 0; c < model.cuts.size(); ++c) {
        const auto& cut = model.cuts[c];
        const auto i = cut.class_index + 1;
        out << "cut " << c << " class " << i << ": x[" << cut.u << "," << i << "] + x[" << cut.v << "," << i << "]";
        for (Vertex z : cut.separator) out << " - x[" << z << "," << i << "]";
        for (std::size_t s : cut.hyperedges) out << " - y[" << set_text(dec.classes[s].neighborhood) << "," << i << "]";
        out << " <= 1\n";
    }
}

}  // namespace bcp
