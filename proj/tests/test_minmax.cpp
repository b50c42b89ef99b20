#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bcp/errors.hpp"
#include "bcp/exact.hpp"
#include "bcp/minmax_approx.hpp"
#include "oracles.hpp"

using namespace bcp;

namespace {

using Edges = std::vector<std::pair<Vertex, Vertex>>;

WeightedGraph path(std::size_t n) {
    Edges e;
    for (std::size_t v = 1; v < n; ++v) e.emplace_back(static_cast<Vertex>(v - 1), static_cast<Vertex>(v));
    return WeightedGraph(std::vector<Weight>(n, 1), e);
}

WeightedGraph star(std::size_t leaves) {
    Edges e;
    for (std::size_t v = 1; v <= leaves; ++v) e.emplace_back(0, static_cast<Vertex>(v));
    return WeightedGraph(std::vector<Weight>(leaves + 1, 1), e);
}

WeightedGraph triangle() { return WeightedGraph({1, 1, 1}, Edges{{0, 1}, {1, 2}, {0, 2}}); }

Partition make(const WeightedGraph& g, std::vector<std::vector<Vertex>> classes) {
    Partition p;
    for (auto& c : classes) p.classes.push_back(g.make_set(c));
    return p;
}

std::vector<Weight> weights_of(const OrderedPartition3& p) { return {p.v1().weight(), p.v2().weight(), p.v3().weight()}; }

std::vector<std::size_t> sizes_of(const Partition& p) {
    std::vector<std::size_t> out;
    for (const auto& c : p.classes) out.push_back(c.size());
    std::sort(out.begin(), out.end());
    return out;
}

bool pull_move_ok(const WeightedGraph& g, const OrderedPartition3& p, PullTarget t, const VertexSet& u) {
    const VertexSet& vi = t == PullTarget::First ? p.v1() : p.v2();
    if (u.empty() || !u.is_subset_of(p.v3()) || u.size() == p.v3().size()) return false;
    VertexSet joined = vi;
    joined.absorb(u);
    VertexSet rest = p.v3();
    rest.remove_all(u);
    return is_connected(g, joined) && is_connected(g, rest) && joined.weight() < p.v3().weight();
}

}  // namespace

TEST_CASE("merge") {
    const auto p5 = path(5);
    const auto p = order3(p5, make(p5, {{0}, {1}, {2, 3, 4}}));
    const auto m = merge(p5, p);
    CHECK(m.v1().members() == std::vector<Vertex>{2});
    CHECK(m.v2().members() == std::vector<Vertex>{0, 1});
    CHECK(m.v3().members() == std::vector<Vertex>{3, 4});
    CHECK(weights_of(m) == std::vector<Weight>{1, 2, 2});

    const auto apart = order3(p5, make(p5, {{0}, {4}, {1, 2, 3}}));
    CHECK_THROWS_AS(merge(p5, apart), ContractViolation);
    const auto tri = triangle();
    CHECK_THROWS_AS(merge(tri, order3(tri, make(tri, {{0}, {1}, {2}}))), ContractViolation);
}

TEST_CASE("pull_check and pull") {
    const auto p5 = path(5);
    const auto p = order3(p5, make(p5, {{0}, {4}, {1, 2, 3}}));
    const auto first = pull_check(p5, p, PullTarget::First);
    REQUIRE(first);
    CHECK(first->members() == std::vector<Vertex>{1});
    const auto second = pull_check(p5, p, PullTarget::Second);
    REQUIRE(second);
    CHECK(second->members() == std::vector<Vertex>{3});

    const auto moved = pull(p5, p, PullMove{*first, PullTarget::First});
    CHECK(weights_of(moved) == std::vector<Weight>{1, 2, 2});
    CHECK(moved.v1().members() == std::vector<Vertex>{4});
    CHECK(moved.v2().members() == std::vector<Vertex>{0, 1});
    CHECK(moved.v3().members() == std::vector<Vertex>{2, 3});

    CHECK_THROWS_AS(pull(p5, p, PullMove{p.v3(), PullTarget::First}), ContractViolation);
    CHECK_THROWS_AS(pull(p5, p, PullMove{p5.singleton(2), PullTarget::First}), ContractViolation);

    // A terminal star partition has nothing admissible for either class.
    const auto k14 = star(4);
    const auto result = minmax_bcp3(k14);
    CHECK_FALSE(pull_check(k14, result.partition, PullTarget::First));
    CHECK_FALSE(pull_check(k14, result.partition, PullTarget::Second));
    CHECK_FALSE(oracle_pull_admissible(k14, result.partition, PullTarget::First));
    CHECK_FALSE(oracle_pull_admissible(k14, result.partition, PullTarget::Second));
}

TEST_CASE("minmax_bcp3 worked examples") {
    CHECK(minmax_bcp3(path(5)).partition.v3().weight() == 2);
    CHECK(exact_minmax(path(5), 3).value == 2);
    const auto k14 = minmax_bcp3(star(4));
    CHECK(k14.partition.v3().weight() == 3);
    const auto tri = minmax_bcp3(triangle());
    CHECK(tri.partition.v3().weight() == 1);
    CHECK(tri.iterations == 0);
    CHECK_THROWS_AS(minmax_bcp3(path(2)), ContractViolation);
}

TEST_CASE("star_center") {
    const auto k14 = star(4);
    const auto terminal = minmax_bcp3(k14).partition;
    const auto cert = star_center(k14, terminal);
    CHECK(cert.center == 0);
    CHECK(cert.ell() == 4);
    CHECK(check_star_certificate(k14, terminal, cert).empty());

    // Center of weight 10 with three legs of two unit vertices each.
    const WeightedGraph spider({10, 1, 1, 1, 1, 1, 1}, Edges{{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
    const auto sp = minmax_bcp3(spider).partition;
    CHECK(sp.v3().weight() == 12);
    const auto sc = star_center(spider, sp);
    CHECK(sc.center == 0);
    CHECK(check_star_certificate(spider, sp, sc).empty());

    const auto p5 = path(5);
    CHECK_THROWS_AS(star_center(p5, minmax_bcp3(p5).partition), ContractViolation);
}

TEST_CASE("get_singletons") {
    const auto p3 = path(3);
    const Partition whole = make(p3, {{0, 1, 2}});
    CHECK(get_singletons(p3, whole, 0).classes == whole.classes);
    CHECK(sizes_of(get_singletons(p3, whole, 2)) == std::vector<std::size_t>{1, 1, 1});
    const auto p5 = path(5);
    const auto split = get_singletons(p5, make(p5, {{0, 1}, {2, 3, 4}}), 1);
    CHECK(sizes_of(split) == std::vector<std::size_t>{1, 2, 2});
    CHECK(is_valid_partition(p5, split, 3));
    CHECK_THROWS_AS(get_singletons(p3, whole, 3), ContractViolation);
}

TEST_CASE("minmax_bcpk worked examples") {
    const auto k14 = star(4);
    const auto r = minmax_bcpk(k14, 3);
    CHECK(r.certificate == CertificateKind::StarOptimal);
    CHECK(r.partition.class_weights() == std::vector<Weight>{1, 1, 3});
    CHECK(r.partition.heaviest() == lemma2_bound(k14, 3, 0));
    CHECK(r.partition.heaviest() == exact_minmax(k14, 3).value);
    CHECK(r.proven_optimal);

    const auto p6 = path(6);
    const auto r3 = minmax_bcpk(p6, 3);
    CHECK(r3.certificate == CertificateKind::RatioHalfW);
    CHECK(sizes_of(r3.partition) == std::vector<std::size_t>{2, 2, 2});
    CHECK(exact_minmax(p6, 3).value == 2);
    const auto r4 = minmax_bcpk(p6, 4);
    CHECK(r4.certificate == CertificateKind::RatioHalfW);
    CHECK(sizes_of(r4.partition) == std::vector<std::size_t>{1, 1, 2, 2});
    CHECK(r4.partition.heaviest() == 2);
    CHECK(exact_minmax(p6, 4).value == 2);

    const WeightedGraph single_top({1, 9, 1}, Edges{{0, 1}, {1, 2}});
    const auto st = minmax_bcpk(single_top, 3);
    CHECK(st.certificate == CertificateKind::SingletonTop);
    CHECK(st.partition.heaviest() == 9);

    CHECK_THROWS_AS(minmax_bcpk(p6, 2), ContractViolation);
    CHECK_THROWS_AS(minmax_bcpk(p6, 7), ContractViolation);
}

TEST_CASE("pull_check is complete against exhaustive search") {
    std::mt19937_64 rng(3);
    std::size_t triples = 0;
    while (triples < 600) {
        const std::size_t n = 4 + rng() % 5;
        const WeightedGraph g(oracle::random_weights(n, 1, 6, rng), oracle::random_connected_edges(n, 0.25, rng));
        const auto all = oracle::all_partitions(g, 3);
        const auto& label = all[rng() % all.size()];
        const auto p = order3(g, oracle::to_partition(g, label, 3));
        if (2 * p.v3().weight() <= g.total_weight()) continue;
        for (auto t : {PullTarget::First, PullTarget::Second}) {
            const auto fast = pull_check(g, p, t);
            const auto slow = oracle_pull_admissible(g, p, t);
            CHECK(fast.has_value() == slow.has_value());
            if (fast) CHECK(pull_move_ok(g, p, t, *fast));
            if (slow) CHECK(pull_move_ok(g, p, t, *slow));
            ++triples;
        }
    }
}

TEST_CASE("desk-scale ratio, optimality and progress") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 3 + rng() % 7;
        const WeightedGraph g(oracle::random_weights(n, 1, 8, rng), oracle::random_connected_edges(n, 0.2, rng));
        const auto r3 = minmax_bcp3(g);
        CHECK(is_valid_partition(g, r3.partition.as_partition(), 3));
        for (std::size_t s = 1; s < r3.heaviest_trace.size(); ++s) CHECK(r3.heaviest_trace[s] < r3.heaviest_trace[s - 1]);
        CHECK(r3.iterations <= static_cast<std::size_t>(g.total_weight()));
        const Weight opt3 = exact_minmax(g, 3).value;
        CHECK(2 * r3.partition.v3().weight() <= 3 * opt3);
        if (2 * r3.partition.v3().weight() > g.total_weight()) CHECK(r3.partition.v3().weight() == opt3);

        for (std::size_t k = 3; k <= std::min<std::size_t>(n, 5); ++k) {
            const auto r = minmax_bcpk(g, k);
            CHECK(is_valid_partition(g, r.partition, k));
            const Weight opt = exact_minmax(g, k).value;
            CHECK(Rational(r.partition.heaviest()) <= Rational(static_cast<std::int64_t>(k), 2) * Rational(opt));
            if (r.certificate == CertificateKind::RatioHalfW) CHECK(2 * r.partition.heaviest() <= g.total_weight());
            if (r.proven_optimal) CHECK(r.partition.heaviest() == opt);
            if (r.star) CHECK(check_star_certificate(g, r.bcp3.partition, *r.star).empty());
        }
    }
}
