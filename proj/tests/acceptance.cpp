#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include <unistd.h>

#include "bcp/exact.hpp"
#include "bcp/fpt.hpp"
#include "bcp/minmax_approx.hpp"
#include "bcp/scaling.hpp"
#include "oracles.hpp"

#ifndef BCP_TOOL_PATH
#error "BCP_TOOL_PATH must name the bcp executable"
#endif

using namespace bcp;

namespace {

using Clock = std::chrono::steady_clock;
using Edges = std::vector<std::pair<Vertex, Vertex>>;

/// Pinned limits.
constexpr std::size_t kRandomRatioGraphs = 10000;
constexpr std::size_t kPullTriples = 1000;
constexpr std::size_t kMinFptInstances = 300;
constexpr double kRatioSuiteSeconds = 300;
constexpr double kFptSuiteSeconds = 600;
constexpr std::size_t kMaxReported = 3;

/// Counts checks and keeps the first few failure descriptions.
struct Tally {
    std::uint64_t checks = 0;
    std::uint64_t violations = 0;
    std::vector<std::string> examples;

    void check(bool ok, const std::function<std::string()>& describe) {
        ++checks;
        if (ok) return;
        ++violations;
        if (examples.size() < kMaxReported) examples.push_back(describe());
    }
};

std::string describe(const WeightedGraph& g) {
    std::ostringstream out;
    out << "n=" << g.order() << " w=[";
    for (std::size_t v = 0; v < g.order(); ++v) out << (v ? "," : "") << g.weights()[v];
    out << "] e=[";
    for (const auto& [u, v] : g.edges()) out << u << "-" << v << " ";
    out << "]";
    return out.str();
}

double seconds_since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

bool report(int id, const std::string& name, const Tally& t, const std::string& extra = {}, bool extra_ok = true) {
    const bool ok = t.violations == 0 && extra_ok;
    std::cout << "criterion " << id << " " << (ok ? "PASS" : "FAIL") << " " << name << ": " << t.checks << " checks, "
              << t.violations << " violations";
    if (!extra.empty()) std::cout << ", " << extra;
    std::cout << "\n";
    for (const auto& e : t.examples) std::cout << "    " << e << "\n";
    return ok;
}

WeightedGraph unit(std::size_t n, const Edges& e) { return WeightedGraph(std::vector<Weight>(n, 1), e); }

/// Ratio-suite instances: every connected graph on 3..6 vertices up to
/// isomorphism (unit weights plus four random weightings) and random
/// connected graphs on 7 and 8 vertices, all weights in [1, 8].
std::vector<WeightedGraph> ratio_instances(std::mt19937_64& rng) {
    std::vector<WeightedGraph> out;
    for (std::size_t n = 3; n <= 6; ++n) {
        for (const auto& edges : oracle::connected_graphs_up_to_isomorphism(n)) {
            out.push_back(unit(n, edges));
            for (int r = 0; r < 4; ++r) out.emplace_back(oracle::random_weights(n, 1, 8, rng), edges);
        }
    }
    constexpr std::array<double, 3> densities{0.15, 0.3, 0.5};
    for (std::size_t i = 0; i < kRandomRatioGraphs; ++i) {
        const std::size_t n = 7 + i % 2;
        const auto edges = oracle::random_connected_edges(n, densities[i % densities.size()], rng);
        out.emplace_back(oracle::random_weights(n, 1, 8, rng), edges);
    }
    return out;
}

void check_progress(Tally& t, const WeightedGraph& g, const Bcp3Result& r) {
    bool strict = true;
    for (std::size_t s = 1; s < r.heaviest_trace.size(); ++s) strict = strict && r.heaviest_trace[s] < r.heaviest_trace[s - 1];
    const bool bounded = r.iterations <= static_cast<std::size_t>(g.total_weight()) && r.heaviest_trace.size() == r.iterations + 1;
    t.check(strict && bounded, [&] { return "trace not strictly decreasing or too long on " + describe(g); });
}

void check_star(Tally& t, const WeightedGraph& g, const OrderedPartition3& p, const StarCenterCertificate& cert) {
    const auto failed = check_star_certificate(g, p, cert);
    t.check(failed.empty(), [&] { return "certificate assertion '" + failed.front() + "' failed on " + describe(g); });
}

/// Star checks on a terminal 3-partition whenever a star-center must exist.
void check_terminal_star(Tally& t, const WeightedGraph& g, const Bcp3Result& r) {
    if (2 * r.partition.v3().weight() <= g.total_weight() || r.partition.v3().size() < 2) return;
    check_star(t, g, r.partition, star_center(g, r.partition));
}

bool pull_move_ok(const WeightedGraph& g, const OrderedPartition3& p, PullTarget t, const VertexSet& u) {
    const VertexSet& vi = t == PullTarget::First ? p.v1() : p.v2();
    if (u.empty() || !u.is_subset_of(p.v3()) || u.size() == p.v3().size()) return false;
    VertexSet joined = vi;
    joined.absorb(u);
    VertexSet rest = p.v3();
    rest.remove_all(u);
    return oracle::connected(g, joined.members()) && oracle::connected(g, rest.members()) && joined.weight() < p.v3().weight();
}

struct FptInstance {
    std::string family;
    WeightedGraph g;
};

/// Unweighted graphs on at most 12 vertices with a vertex cover of size <= 6.
std::vector<FptInstance> fpt_instances(std::mt19937_64& rng) {
    std::vector<FptInstance> out;
    for (std::size_t n = 3; n <= 12; ++n) {
        Edges path;
        Edges star;
        for (std::size_t v = 1; v < n; ++v) {
            path.emplace_back(static_cast<Vertex>(v - 1), static_cast<Vertex>(v));
            star.emplace_back(0, static_cast<Vertex>(v));
        }
        Edges cycle = path;
        cycle.emplace_back(static_cast<Vertex>(n - 1), 0);
        out.push_back({"path", unit(n, path)});
        out.push_back({"cycle", unit(n, cycle)});
        out.push_back({"star", unit(n, star)});
    }
    for (std::size_t m = 2; m <= 6; ++m) {
        Edges grid;
        for (std::size_t c = 0; c < m; ++c) {
            grid.emplace_back(static_cast<Vertex>(c), static_cast<Vertex>(m + c));
            if (c + 1 < m) {
                grid.emplace_back(static_cast<Vertex>(c), static_cast<Vertex>(c + 1));
                grid.emplace_back(static_cast<Vertex>(m + c), static_cast<Vertex>(m + c + 1));
            }
        }
        out.push_back({"grid", unit(2 * m, grid)});
    }
    constexpr std::array<double, 3> densities{0.1, 0.2, 0.3};
    std::size_t attempt = 0;
    while (out.size() < kMinFptInstances + 20) {
        const std::size_t n = 4 + attempt % 9;
        const auto g = unit(n, oracle::random_connected_edges(n, densities[attempt % densities.size()], rng));
        ++attempt;
        if (oracle::min_vertex_cover(g).size() <= 6) out.push_back({"random", g});
    }
    return out;
}

/// Runs the bcp tool and returns its standard output, or nullopt on a
/// nonzero exit.
std::optional<std::string> run_tool(const std::string& args) {
    const std::string command = std::string("\"") + BCP_TOOL_PATH + "\" " + args + " 2>&1";
    FILE* pipe = ::popen(command.c_str(), "r");
    if (!pipe) return std::nullopt;
    std::string out;
    std::array<char, 4096> buffer{};
    while (const std::size_t got = std::fread(buffer.data(), 1, buffer.size(), pipe)) out.append(buffer.data(), got);
    if (::pclose(pipe) != 0) return std::nullopt;
    return out;
}

}  // namespace

int main() {
    std::mt19937_64 rng(20240601);
    bool all_ok = true;

    Tally ratio, optimal, star_bound, pull_complete, scaling, fpt, cuts, progress, stars, cli;
    std::uint64_t optimal_cases = 0;
    std::uint64_t star_bound_cases = 0;
    std::uint64_t scaled_runs = 0;

    // Suites 1, 2, 3 and 5 share one instance set.
    const auto ratio_start = Clock::now();
    const auto instances = ratio_instances(rng);
    for (const auto& g : instances) {
        const std::size_t n = g.order();
        const auto r3 = minmax_bcp3(g);
        check_progress(progress, g, r3);
        check_terminal_star(stars, g, r3);
        if (2 * r3.partition.v3().weight() > g.total_weight()) {
            ++optimal_cases;
            const Weight opt3 = exact_minmax(g, 3).value;
            optimal.check(r3.partition.v3().weight() == opt3, [&] {
                return "w+=" + std::to_string(r3.partition.v3().weight()) + " opt=" + std::to_string(opt3) + " on " + describe(g);
            });
        }
        for (std::size_t k = 3; k <= std::min<std::size_t>(n, 5); ++k) {
            const auto r = minmax_bcpk(g, k);
            const Weight opt = exact_minmax(g, k).value;
            const Weight heavy = r.partition.heaviest();
            ratio.check(is_valid_partition(g, r.partition, k) &&
                            Rational(heavy) <= Rational(static_cast<std::int64_t>(k), 2) * Rational(opt),
                        [&] { return "k=" + std::to_string(k) + " w+=" + std::to_string(heavy) + " opt=" + std::to_string(opt) + " on " + describe(g); });
            if (r.star) check_star(stars, g, r.bcp3.partition, *r.star);
            if (r.certificate == CertificateKind::StarOptimal && r.star && r.star->ell() + 1 >= k && r.center_class_weight &&
                heavy == *r.center_class_weight) {
                ++star_bound_cases;
                const Weight bound = lemma2_bound(g, k, r.star->center);
                star_bound.check(heavy == bound && bound == opt, [&] {
                    return "k=" + std::to_string(k) + " w+=" + std::to_string(heavy) + " star bound=" + std::to_string(bound) +
                           " opt=" + std::to_string(opt) + " on " + describe(g);
                });
            }
        }
    }
    const double ratio_seconds = seconds_since(ratio_start);

    const auto scaling_start = Clock::now();
    for (const auto& base : instances) {
        const std::size_t n = base.order();
        const auto g = base.with_weights(oracle::random_weights(n, 1, 1'000'000'000, rng));
        for (std::size_t k = 3; k <= std::min<std::size_t>(n, 5); ++k) {
            const Weight opt = exact_minmax(g, k).value;
            for (const Rational eps_prime : {Rational(1, 10), Rational(1, 2)}) {
                ++scaled_runs;
                const auto r = eps_minmax_bcpk(g, k, eps_prime);
                const Rational bound = Rational(static_cast<std::int64_t>(k), 2) + eps_prime;
                const Weight heavy = r.partition.heaviest();
                scaling.check(r.ratio_bound == bound && is_valid_partition(g, r.partition, k) && Rational(heavy) <= bound * Rational(opt), [&] {
                    return "k=" + std::to_string(k) + " eps'=" + std::to_string(eps_prime.numerator()) + "/" + std::to_string(eps_prime.denominator()) +
                           " w+=" + std::to_string(heavy) + " opt=" + std::to_string(opt) + " on " + describe(g);
                });
                const Rational nn(static_cast<std::int64_t>(n));
                const auto& scaled = r.instance.scaled;
                scaling.check(Rational(scaled.total_weight()) <= nn * nn / r.instance.epsilon + nn,
                              [&] { return "scaled total " + std::to_string(scaled.total_weight()) + " too large on " + describe(g); });
                check_progress(progress, scaled, r.scaled_result.bcp3);
                if (r.scaled_result.star) check_star(stars, scaled, r.scaled_result.bcp3.partition, *r.scaled_result.star);
            }
        }
    }
    const double scaling_seconds = seconds_since(scaling_start);

    // Suite 4: random ordered 3-partitions with a heavy third class.
    std::uint64_t triples = 0;
    while (triples < kPullTriples) {
        const auto& g = instances[rng() % instances.size()];
        const auto all = oracle::all_partitions(g, 3);
        if (all.empty()) continue;
        const auto p = order3(g, oracle::to_partition(g, all[rng() % all.size()], 3));
        if (2 * p.v3().weight() <= g.total_weight()) continue;
        for (const auto target : {PullTarget::First, PullTarget::Second}) {
            ++triples;
            const auto fast = pull_check(g, p, target);
            const auto slow = oracle_pull_admissible(g, p, target);
            pull_complete.check(fast.has_value() == slow.has_value() && (!fast || pull_move_ok(g, p, target, *fast)) &&
                             (!slow || pull_move_ok(g, p, target, *slow)),
                         [&] { return "pull_check disagrees with exhaustive search on " + describe(g); });
        }
    }

    // Suites 6 and 7.
    const auto fpt_start = Clock::now();
    const auto fpt_cases = fpt_instances(rng);
    EnumerationBudget wide;
    wide.max_vertices = 12;
    std::uint64_t fpt_runs = 0;
    std::uint64_t cuts_seen = 0;
    std::uint64_t partitions_checked = 0;
    for (const auto& [family, g] : fpt_cases) {
        const std::size_t n = g.order();
        const auto cover = g.make_set(oracle::min_vertex_cover(g));
        const auto r3 = minmax_bcp3(g);
        check_progress(progress, g, r3);
        check_terminal_star(stars, g, r3);
        for (std::size_t k = 2; k <= std::min(n, cover.size() + 2); ++k) {
            ++fpt_runs;
            const auto r = solve_fpt_maxmin(g, k, FptOptions{cover, std::nullopt});
            const Weight opt = exact_maxmin(g, k, wide).value;
            std::vector<std::vector<Vertex>> classes;
            for (const auto& c : r.partition.classes) classes.push_back(c.members());
            bool meets_cover = true;
            if (k <= cover.size()) {
                for (const auto& c : r.partition.classes) meets_cover = meets_cover && c.intersects(cover);
            }
            fpt.check(r.value == opt && validate(g, classes, k).empty() && r.partition.lightest() == r.value && meets_cover, [&] {
                return family + " k=" + std::to_string(k) + " fpt=" + std::to_string(r.value) + " exact=" + std::to_string(opt) +
                       (meets_cover ? "" : " (class misses X)") + " on " + describe(g);
            });
            if (r.model.cuts.empty()) continue;
            cuts_seen += r.model.cuts.size();
            enumerate_connected_kpartitions(
                g, k,
                [&](const Partition& p) {
                    ++partitions_checked;
                    const auto enc = encode(r.model.dec, p);
                    for (const auto& cut : r.model.cuts) {
                        cuts.check(cut.satisfied_by_all_classes(r.model.dec, enc),
                                   [&] { return family + " k=" + std::to_string(k) + " cut u=" + std::to_string(cut.u) + " v=" + std::to_string(cut.v) + " cuts a valid partition of " + describe(g); });
                    }
                },
                wide);
        }
    }
    const double fpt_seconds = seconds_since(fpt_start);

    // Suite 10: fixed points through the command-line tool.
    const auto dir = std::filesystem::temp_directory_path() / ("bcp_acceptance_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    struct FixedPoint {
        std::string name;
        std::size_t n;
        Edges edges;
        std::string args;
        Weight expected;
        bool maxmin;
        std::size_t k;
    };
    const Edges k14{{0, 1}, {0, 2}, {0, 3}, {0, 4}};
    const Edges p5{{0, 1}, {1, 2}, {2, 3}, {3, 4}};
    const Edges p4{{0, 1}, {1, 2}, {2, 3}};
    const std::vector<FixedPoint> fixed{
        {"k14", 5, k14, "solve {} --k 3", 3, false, 3},
        {"p5", 5, p5, "solve {} --k 3", 2, false, 3},
        {"p4", 4, p4, "exact {} --objective maxmin --k 2", 2, true, 2},
        {"p4", 4, p4, "fpt-maxmin {} --k 2", 2, true, 2},
    };
    for (const auto& f : fixed) {
        const auto path = (dir / (f.name + ".txt")).string();
        {
            std::ofstream file(path);
            file << "p bcp " << f.n << " " << f.edges.size() << "\n";
            for (const auto& [u, v] : f.edges) file << "e " << u << " " << v << "\n";
        }
        std::string args = f.args;
        args.replace(args.find("{}"), 2, "\"" + path + "\"");
        const auto out = run_tool(args);
        const std::string expected_line = "value " + std::to_string(f.expected) + "\n";
        cli.check(out && out->rfind(expected_line, 0) == 0,
                  [&] { return "bcp " + f.args + " on " + f.name + " printed: " + (out ? out->substr(0, out->find('\n')) : std::string("<failed>")); });
        const auto g = unit(f.n, f.edges);
        const Weight oracle_value = f.maxmin ? oracle::opt_maxmin(g, f.k) : oracle::opt_minmax(g, f.k);
        cli.check(oracle_value == f.expected, [&] { return f.name + " oracle value " + std::to_string(oracle_value); });
    }
    std::filesystem::remove_all(dir);

    std::ostringstream timing;
    timing.precision(1);
    timing << std::fixed;

    all_ok &= report(1, "k/2 ratio", ratio, std::to_string(instances.size()) + " instances, " + [&] {
        timing.str("");
        timing << ratio_seconds << "s (limit " << kRatioSuiteSeconds << "s)";
        return timing.str();
    }(), ratio_seconds < kRatioSuiteSeconds);
    all_ok &= report(2, "heavy terminal partitions are optimal", optimal, std::to_string(optimal_cases) + " cases");
    all_ok &= report(3, "star lower bound certifies optimality", star_bound, std::to_string(star_bound_cases) + " cases");
    all_ok &= report(4, "pull_check completeness", pull_complete, std::to_string(triples) + " triples", triples >= 500);
    all_ok &= report(5, "scaled k/2 + eps' ratio and scaled size", scaling, std::to_string(scaled_runs) + " runs, " + [&] {
        timing.str("");
        timing << scaling_seconds << "s";
        return timing.str();
    }());
    all_ok &= report(6, "vertex-cover solver exactness", fpt, std::to_string(fpt_cases.size()) + " instances, " + std::to_string(fpt_runs) + " runs, " + [&] {
        timing.str("");
        timing << fpt_seconds << "s (limit " << kFptSuiteSeconds << "s)";
        return timing.str();
    }(), fpt_cases.size() >= kMinFptInstances && fpt_seconds < kFptSuiteSeconds);
    all_ok &= report(7, "cut validity", cuts, std::to_string(cuts_seen) + " cuts against " + std::to_string(partitions_checked) + " partitions", cuts_seen > 0);
    all_ok &= report(8, "monotone progress", progress);
    all_ok &= report(9, "star-center certificates", stars);
    all_ok &= report(10, "command-line fixed points", cli);
    return all_ok ? 0 : 1;
}
