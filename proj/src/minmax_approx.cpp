#include "bcp/minmax_approx.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "bcp/errors.hpp"

namespace bcp {
namespace {

bool heavy_top(const WeightedGraph& g, const OrderedPartition3& p) {
    return 2 * p.v3().weight() > g.total_weight();
}

const VertexSet& target_class(const OrderedPartition3& p, PullTarget target) {
    return target == PullTarget::First ? p.v1() : p.v2();
}

const VertexSet& other_class(const OrderedPartition3& p, PullTarget target) {
    return target == PullTarget::First ? p.v2() : p.v1();
}

}  // namespace

bool is_pull_admissible(const WeightedGraph& g, const OrderedPartition3& p, PullTarget target, const VertexSet& u) {
    const VertexSet& v3 = p.v3();
    if (u.empty() || !u.is_subset_of(v3) || u.size() == v3.size()) return false;
    VertexSet grown = target_class(p, target);
    grown.absorb(u);
    if (grown.weight() >= v3.weight()) return false;
    VertexSet shrunk = v3;
    shrunk.remove_all(u);
    return is_connected(g, grown) && is_connected(g, shrunk);
}

OrderedPartition3 merge(const WeightedGraph& g, const OrderedPartition3& p) {
    require(heavy_top(g, p), "merge: requires w(V3) > W/2");
    require(p.v3().size() >= 2, "merge: requires |V3| >= 2");
    require(sets_adjacent(g, p.v1(), p.v2()), "merge: V1 and V2 are not adjacent");
    VertexSet joined = p.v1();
    joined.absorb(p.v2());
    auto [a, b] = split_two(g, p.v3());
    OrderedPartition3 out = order3(g, Partition{{std::move(joined), std::move(a), std::move(b)}});
    require(out.v3().weight() < p.v3().weight(), "merge: heaviest class did not shrink");
    return out;
}

std::optional<VertexSet> pull_check(const WeightedGraph& g, const OrderedPartition3& p, PullTarget target) {
    require(heavy_top(g, p), "pull_check: requires w(V3) > W/2");
    const VertexSet& v3 = p.v3();
    if (v3.size() < 2) return std::nullopt;
    const VertexSet& vi = target_class(p, target);
    for (Vertex v : boundary_neighbors(g, vi, v3)) {
        VertexSet rest = v3;
        rest.erase(v, g.weight(v));
        auto comps = components(g, rest);
        std::stable_sort(comps.begin(), comps.end(), [](const VertexSet& a, const VertexSet& b) {
            return a.weight() != b.weight() ? a.weight() < b.weight() : a.min() < b.min();
        });
        // U takes v and every component except the heaviest one.
        VertexSet u = g.singleton(v);
        for (std::size_t j = 0; j + 1 < comps.size(); ++j) u.absorb(comps[j]);
        if (vi.weight() + u.weight() < v3.weight()) return u;
    }
    return std::nullopt;
}

OrderedPartition3 pull(const WeightedGraph& g, const OrderedPartition3& p, const PullMove& move) {
    require(heavy_top(g, p), "pull: requires w(V3) > W/2");
    require(is_pull_admissible(g, p, move.target, move.moved), "pull: set is not pull-admissible");
    VertexSet grown = target_class(p, move.target);
    grown.absorb(move.moved);
    VertexSet shrunk = p.v3();
    shrunk.remove_all(move.moved);
    return order3(g, Partition{{other_class(p, move.target), std::move(grown), std::move(shrunk)}});
}

OrderedPartition3 initial_partition3(const WeightedGraph& g) {
    require(g.order() >= 3, "initial_partition3: needs at least three vertices");
    const DfsTree tree = dfs_tree(g, g.all_vertices());
    std::vector<int> children(g.order(), 0);
    for (Vertex v : tree.preorder) {
        if (v != tree.root) ++children[static_cast<std::size_t>(tree.parent[static_cast<std::size_t>(v)])];
    }
    auto last_leaf = [&](Vertex skip) {
        for (auto it = tree.preorder.rbegin(); it != tree.preorder.rend(); ++it) {
            if (*it != tree.root && *it != skip && children[static_cast<std::size_t>(*it)] == 0) return *it;
        }
        throw ContractViolation("initial_partition3: spanning tree has no leaf");
    };
    const Vertex first = last_leaf(-1);
    --children[static_cast<std::size_t>(tree.parent[static_cast<std::size_t>(first)])];
    const Vertex second = last_leaf(first);

    VertexSet rest = g.all_vertices();
    rest.erase(first, g.weight(first));
    rest.erase(second, g.weight(second));
    return order3(g, Partition{{g.singleton(first), g.singleton(second), std::move(rest)}});
}

Bcp3Result minmax_bcp3(const WeightedGraph& g) {
    require(g.order() >= 3, "minmax_bcp3: needs at least three vertices");
    Bcp3Result result{initial_partition3(g), 0, {}, {}};
    result.heaviest_trace.push_back(result.partition.v3().weight());
    const auto limit = static_cast<std::size_t>(g.total_weight()) + 1;

    while (heavy_top(g, result.partition)) {
        const OrderedPartition3& p = result.partition;
        if (p.v3().size() >= 2 && sets_adjacent(g, p.v1(), p.v2())) {
            result.partition = merge(g, p);
            result.steps.push_back(Bcp3Step::Merge);
        } else if (auto u = pull_check(g, p, PullTarget::First)) {
            result.partition = pull(g, p, PullMove{std::move(*u), PullTarget::First});
            result.steps.push_back(Bcp3Step::Pull);
        } else if (auto u2 = pull_check(g, p, PullTarget::Second)) {
            result.partition = pull(g, p, PullMove{std::move(*u2), PullTarget::Second});
            result.steps.push_back(Bcp3Step::Pull);
        } else {
            break;
        }
        ++result.iterations;
        const Weight now = result.partition.v3().weight();
        if (now >= result.heaviest_trace.back() || result.iterations > limit) {
            throw std::logic_error("minmax_bcp3: heaviest class failed to decrease (internal error)");
        }
        result.heaviest_trace.push_back(now);
    }
    return result;
}

std::vector<std::string> check_star_certificate(const WeightedGraph& g, const OrderedPartition3& p,
                                                const StarCenterCertificate& cert) {
    std::vector<std::string> failed;
    const Weight total = g.total_weight();
    if (sets_adjacent(g, p.v1(), p.v2())) failed.emplace_back("v1-v2-nonadjacent");
    if (!(4 * p.v1().weight() < total)) failed.emplace_back("v1-below-quarter");

    const bool center_ok = cert.center >= 0 && p.v3().contains(cert.center);
    const auto actual = center_ok ? sorted_components_without(g, cert.center) : std::vector<VertexSet>{};
    const auto has = [&](const VertexSet& s) { return std::find(actual.begin(), actual.end(), s) != actual.end(); };
    if (!center_ok || actual.size() < 2 || actual != cert.comps || !has(p.v1()) || !has(p.v2())) {
        failed.emplace_back("cut-vertex-with-v1-v2");
    }

    bool others_ok = true;
    for (const auto& c : cert.comps) {
        if (c == p.v1() || c == p.v2()) continue;
        if (c.weight() > p.v1().weight()) others_ok = false;
    }
    if (!others_ok) failed.emplace_back("others-at-most-v1");

    if (cert.ell() == 3 && !(center_ok && 4 * g.weight(cert.center) > total)) {
        failed.emplace_back("three-components-heavy-center");
    }
    return failed;
}

StarCenterCertificate star_center(const WeightedGraph& g, const OrderedPartition3& p) {
    require(heavy_top(g, p), "star_center: requires w(V3) > W/2");
    require(p.v3().size() >= 2, "star_center: requires |V3| >= 2");
    const auto touching = boundary_neighbors(g, p.v1(), p.v3());
    require(touching.size() == 1, "star_center: V1 does not meet V3 in exactly one vertex");
    StarCenterCertificate cert{touching.front(), sorted_components_without(g, touching.front())};
    const auto failed = check_star_certificate(g, p, cert);
    if (!failed.empty()) throw ContractViolation("star_center: structural check failed: " + failed.front());
    return cert;
}

Partition get_singletons(const WeightedGraph& g, Partition p, std::size_t q) {
    require(p.size() + q <= g.order(), "get_singletons: |P| + q exceeds n");
    for (; q > 0; --q) {
        std::size_t pick = p.size();
        for (std::size_t i = 0; i < p.size(); ++i) {
            const auto& c = p.classes[i];
            if (c.size() < 2) continue;
            if (pick == p.size() || c.weight() > p.classes[pick].weight() ||
                (c.weight() == p.classes[pick].weight() && c.min() < p.classes[pick].min())) {
                pick = i;
            }
        }
        require(pick < p.size(), "get_singletons: every class is a singleton");
        const Vertex u = non_cut_vertex(g, p.classes[pick]);
        p.classes[pick].erase(u, g.weight(u));
        p.classes.push_back(g.singleton(u));
    }
    return p;
}

const char* to_string(CertificateKind kind) {
    switch (kind) {
        case CertificateKind::RatioHalfW: return "RatioHalfW";
        case CertificateKind::SingletonTop: return "SingletonTop";
        case CertificateKind::StarOptimal: return "StarOptimal";
    }
    return "unknown";
}

BcpkResult minmax_bcpk(const WeightedGraph& g, std::size_t k) {
    require(k >= 3 && k <= g.order(), "minmax_bcpk: k must lie in [3, n]");
    BcpkResult result;
    result.bcp3 = minmax_bcp3(g);
    const OrderedPartition3& p = result.bcp3.partition;

    if (p.v3().size() == 1 || !heavy_top(g, p)) {
        result.certificate = p.v3().size() == 1 ? CertificateKind::SingletonTop : CertificateKind::RatioHalfW;
        result.proven_optimal = p.v3().size() == 1;
        result.partition = sorted_by_weight(get_singletons(g, p.as_partition(), k - 3));
        return result;
    }

    result.certificate = CertificateKind::StarOptimal;
    StarCenterCertificate cert = star_center(g, p);
    const std::size_t ell = cert.ell();
    Partition out;
    if (ell + 1 >= k) {
        const std::size_t t = ell + 1 - k;
        VertexSet center = g.singleton(cert.center);
        for (std::size_t i = 0; i < t; ++i) center.absorb(cert.comps[i]);
        result.center_class_weight = center.weight();
        out.classes.push_back(std::move(center));
        for (std::size_t i = t; i < ell; ++i) out.classes.push_back(cert.comps[i]);
        result.proven_optimal = *result.center_class_weight == out.heaviest();
    } else {
        out.classes.push_back(g.singleton(cert.center));
        for (const auto& c : cert.comps) out.classes.push_back(c);
        out = get_singletons(g, std::move(out), k - 1 - ell);
    }
    result.partition = sorted_by_weight(std::move(out));
    result.star = std::move(cert);
    return result;
}

}  // namespace bcp
