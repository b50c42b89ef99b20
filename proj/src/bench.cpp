#include "bcp/bench.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <functional>
#include <sstream>
#include <thread>

#include "bcp/errors.hpp"
#include "bcp/exact.hpp"
#include "bcp/fpt.hpp"
#include "bcp/io.hpp"
#include "bcp/minmax_approx.hpp"
#include "bcp/scaling.hpp"

namespace bcp {
namespace {

constexpr std::string_view kPinnedSuite = R"(# id family shape weights seed k algorithms
id=path7 family=random-tree n=7 wmin=1 wmax=1 seed=11 k=3,4 algorithms=bcpk,exact-minmax,fpt-maxmin,exact-maxmin
id=tree9 family=random-tree n=9 wmin=1 wmax=8 seed=1 k=3,4,5 algorithms=bcpk,eps-bcpk,exact-minmax
id=tpe9 family=tree-plus-edges n=9 extra=4 wmin=1 wmax=8 seed=2 k=3,4 algorithms=bcpk,eps-bcpk,exact-minmax
id=spider10 family=spider n=10 legs=3 wmin=1 wmax=5 seed=3 k=3,4 algorithms=bcpk,exact-minmax
id=star6 family=star n=6 wmin=1 wmax=1 seed=4 k=3,4 algorithms=bcpk,fpt-maxmin,exact-maxmin
id=grid2x5 family=grid rows=2 cols=5 wmin=1 wmax=1 seed=5 k=2,3,4 algorithms=fpt-maxmin,exact-maxmin
id=grid3x4 family=grid rows=3 cols=4 wmin=1 wmax=9 seed=6 k=3,5 algorithms=bcpk,eps-bcpk
id=tree40 family=random-tree n=40 wmin=1 wmax=1000000 seed=7 k=3,6 algorithms=bcpk,eps-bcpk epsilon=1/10
)";

std::vector<std::string> split_commas(std::string_view text) {
    std::vector<std::string> out;
    std::size_t at = 0;
    while (at <= text.size()) {
        const auto end = std::min(text.find(',', at), text.size());
        if (end > at) out.emplace_back(text.substr(at, end - at));
        at = end + 1;
    }
    return out;
}

std::uint64_t to_unsigned(std::string_view text, const std::string& key) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
        throw InvalidInput("suite: invalid value '" + std::string(text) + "' for " + key);
    }
    return value;
}

bool is_minmax(const std::string& algorithm) {
    return algorithm == "bcpk" || algorithm == "eps-bcpk" || algorithm == "exact-minmax";
}

bool is_known(const std::string& algorithm) {
    return is_minmax(algorithm) || algorithm == "exact-maxmin" || algorithm == "fpt-maxmin";
}

/// Exact optima computed at most once per case.
class Oracle {
public:
    Oracle(const WeightedGraph& g, std::size_t k, const BenchOptions& options, const EnumerationBudget& budget)
        : g_(g), k_(k), enabled_(g.order() <= options.oracle_max_vertices), budget_(budget) {}

    std::optional<Weight> minmax() { return get(minmax_, true); }
    std::optional<Weight> maxmin() { return get(maxmin_, false); }

private:
    std::optional<Weight> get(std::optional<std::optional<Weight>>& slot, bool min_max) {
        if (!enabled_) return std::nullopt;
        if (!slot) {
            try {
                slot = min_max ? exact_minmax(g_, k_, budget_).value : exact_maxmin(g_, k_, budget_).value;
            } catch (const BudgetExceeded&) {
                slot = std::optional<Weight>{};
            }
        }
        return *slot;
    }

    const WeightedGraph& g_;
    std::size_t k_;
    bool enabled_;
    EnumerationBudget budget_;
    std::optional<std::optional<Weight>> minmax_;
    std::optional<std::optional<Weight>> maxmin_;
};

}  // namespace

std::vector<BenchCase> parse_suite(std::string_view text) {
    std::vector<BenchCase> cases;
    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string field;
        BenchCase base;
        std::vector<std::size_t> ks;
        bool any = false;
        try {
            while (fields >> field) {
                any = true;
                const auto eq = field.find('=');
                if (eq == std::string::npos) throw InvalidInput("expected key=value, got '" + field + "'");
                const std::string key = field.substr(0, eq);
                const std::string value = field.substr(eq + 1);
                if (key == "id") base.id = value;
                else if (key == "family") base.params.family = parse_family(value);
                else if (key == "n") base.params.n = to_unsigned(value, key);
                else if (key == "rows") base.params.rows = to_unsigned(value, key);
                else if (key == "cols") base.params.cols = to_unsigned(value, key);
                else if (key == "legs") base.params.legs = to_unsigned(value, key);
                else if (key == "extra") base.params.extra_edges = to_unsigned(value, key);
                else if (key == "wmin") base.params.wmin = static_cast<Weight>(to_unsigned(value, key));
                else if (key == "wmax") base.params.wmax = static_cast<Weight>(to_unsigned(value, key));
                else if (key == "seed") base.params.seed = to_unsigned(value, key);
                else if (key == "epsilon") base.epsilon = parse_rational(value);
                else if (key == "k") {
                    for (const auto& kv : split_commas(value)) ks.push_back(to_unsigned(kv, key));
                } else if (key == "algorithms") {
                    base.algorithms = split_commas(value);
                    for (const auto& a : base.algorithms) {
                        if (!is_known(a)) throw InvalidInput("unknown algorithm '" + a + "'");
                    }
                } else {
                    throw InvalidInput("unknown key '" + key + "'");
                }
            }
            if (!any) continue;
            if (base.id.empty()) throw InvalidInput("missing id");
            if (ks.empty()) throw InvalidInput("missing k");
            if (base.algorithms.empty()) throw InvalidInput("missing algorithms");
        } catch (const InvalidInput& e) {
            throw InvalidInput("suite line " + std::to_string(line_no) + ": " + e.what());
        }
        for (std::size_t k : ks) {
            BenchCase c = base;
            c.k = k;
            if (ks.size() > 1) c.id += "-k" + std::to_string(k);
            cases.push_back(std::move(c));
        }
    }
    return cases;
}

std::string_view pinned_suite() { return kPinnedSuite; }

std::vector<BenchCase> load_suite(const std::string& spec) {
    if (spec == "pinned") return parse_suite(pinned_suite());
    return parse_suite(read_text_file(spec));
}

std::string_view bench_csv_header() {
    return "instance_id,n,m,k,algorithm,objective_value,certified_bound,bound_kind,ratio,iterations,cuts_added,"
           "wall_time_ms";
}

std::string to_csv_row(const BenchRecord& r) {
    auto opt = [](const std::optional<Rational>& v) { return v ? format_rational(*v) : std::string(); };
    std::ostringstream out;
    out << r.instance_id << ',' << r.n << ',' << r.m << ',' << r.k << ',' << r.algorithm << ','
        << opt(r.objective_value) << ',' << opt(r.certified_bound) << ',' << r.bound_kind << ','
        << (r.ratio ? format_decimal(*r.ratio) : std::string()) << ',' << r.iterations << ',' << r.cuts_added << ','
        << format_decimal(Rational(static_cast<std::int64_t>(r.wall_time_ms * 1000), 1000), 3);
    return out.str();
}

std::vector<BenchRecord> run_case(const BenchCase& c, const BenchOptions& options) {
    const WeightedGraph g = generate(c.params);
    const EnumerationBudget budget = EnumerationBudget::from_environment();
    Oracle oracle(g, c.k, options, budget);
    std::vector<BenchRecord> records;

    for (const auto& algorithm : c.algorithms) {
        BenchRecord r;
        r.instance_id = c.id;
        r.n = g.order();
        r.m = g.edge_count();
        r.k = c.k;
        r.algorithm = algorithm;
        const auto start = std::chrono::steady_clock::now();
        std::optional<Weight> lemma2;
        try {
            if (algorithm == "bcpk" || algorithm == "eps-bcpk") {
                std::optional<BcpkResult> result;
                if (algorithm == "bcpk") {
                    result = minmax_bcpk(g, c.k);
                    r.objective_value = Rational(result->partition.heaviest());
                } else {
                    auto eps = eps_minmax_bcpk(g, c.k, c.epsilon);
                    r.objective_value = Rational(eps.partition.heaviest());
                    result = std::move(eps.scaled_result);
                }
                r.iterations = result->bcp3.iterations;
                if (algorithm == "bcpk" && result->star && result->star->ell() + 1 >= c.k) {
                    lemma2 = lemma2_bound(g, c.k, result->star->center);
                }
            } else if (algorithm == "exact-minmax") {
                const auto result = exact_minmax(g, c.k, budget);
                r.objective_value = Rational(result.value);
                r.iterations = result.partitions_visited;
            } else if (algorithm == "exact-maxmin") {
                const auto result = exact_maxmin(g, c.k, budget);
                r.objective_value = Rational(result.value);
                r.iterations = result.partitions_visited;
            } else if (algorithm == "fpt-maxmin") {
                const auto result = solve_fpt_maxmin(g, c.k, FptOptions{std::nullopt, budget.time_limit});
                r.objective_value = Rational(result.value);
                r.iterations = result.stats.y_nodes;
                r.cuts_added = result.stats.cuts_added;
            }
        } catch (const BudgetExceeded&) {
            r.bound_kind = "budget-exceeded";
        } catch (const InvalidInput&) {
            r.bound_kind = "rejected";
        }
        r.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

        if (r.objective_value) {
            if (is_minmax(algorithm)) {
                const Rational fact1 = fact1_bound(g, c.k);
                if (const auto opt = oracle.minmax()) {
                    r.certified_bound = Rational(*opt);
                    r.bound_kind = "oracle";
                } else if (lemma2 && Rational(*lemma2) > fact1) {
                    r.certified_bound = Rational(*lemma2);
                    r.bound_kind = "lemma2";
                } else {
                    r.certified_bound = fact1;
                    r.bound_kind = "fact1";
                }
                r.ratio = *r.objective_value / *r.certified_bound;
            } else if (const auto opt = oracle.maxmin()) {
                r.certified_bound = Rational(*opt);
                r.bound_kind = "oracle";
                r.ratio = *r.certified_bound / *r.objective_value;
            } else {
                // w- never exceeds W / k.
                r.certified_bound = fact1_bound(g, c.k);
                r.bound_kind = "fact1";
                r.ratio = *r.certified_bound / *r.objective_value;
            }
        }
        records.push_back(std::move(r));
    }
    return records;
}

void run_suite(const std::vector<BenchCase>& cases, const BenchOptions& options, std::ostream& out) {
    std::vector<std::vector<BenchRecord>> results(cases.size());
    std::vector<std::exception_ptr> errors(cases.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < cases.size(); i = next++) {
            try {
                results[i] = run_case(cases[i], options);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, cases.size()));
    std::vector<std::thread> pool;
    for (std::size_t j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    out << bench_csv_header() << '\n';
    for (std::size_t i = 0; i < cases.size(); ++i) {
        if (errors[i]) std::rethrow_exception(errors[i]);
        for (const auto& r : results[i]) out << to_csv_row(r) << '\n';
    }
}

}  // namespace bcp
