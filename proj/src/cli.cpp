#include "bcp/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

#include "bcp/bench.hpp"
#include "bcp/errors.hpp"
#include "bcp/exact.hpp"
#include "bcp/fpt.hpp"
#include "bcp/generate.hpp"
#include "bcp/io.hpp"
#include "bcp/minmax_approx.hpp"
#include "bcp/scaling.hpp"

namespace bcp {
namespace {

void check_k(const WeightedGraph& g, std::size_t k, std::size_t low) {
    if (k < low || k > g.order()) {
        throw InvalidInput("k must lie in [" + std::to_string(low) + ", " + std::to_string(g.order()) + "], got " +
                           std::to_string(k));
    }
}

void print_partition(std::ostream& out, const Partition& p) {
    out << "weights";
    for (Weight w : p.class_weights()) out << ' ' << w;
    out << "\nclasses\n" << write_partition(p);
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw InvalidInput("cannot write '" + path + "'");
    file << text;
}

VertexSet parse_cover(const WeightedGraph& g, const std::string& text) {
    VertexSet cover = g.empty_set();
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        const Rational r = parse_rational(item);
        if (r.denominator() != 1 || r < 0 || r.numerator() >= static_cast<std::int64_t>(g.order())) {
            throw InvalidInput("--cover: '" + item + "' is not a vertex id");
        }
        const auto v = static_cast<Vertex>(r.numerator());
        if (!cover.contains(v)) cover.insert(v, g.weight(v));
    }
    return cover;
}

struct SolveArgs {
    std::string instance;
    std::size_t k = 0;
    std::string epsilon;
    std::string out;
};

void run_solve(const SolveArgs& a, std::ostream& out) {
    const WeightedGraph g = read_instance_file(a.instance);
    if (a.k == 2) throw InvalidInput("k = 2 is not supported by the approximation pipeline; use `exact` instead");
    check_k(g, a.k, 3);

    BcpkResult result;
    Partition partition;
    std::optional<Rational> guarantee;
    std::optional<ScaledInstance> scaled;
    if (a.epsilon.empty()) {
        result = minmax_bcpk(g, a.k);
        partition = result.partition;
    } else {
        auto eps = eps_minmax_bcpk(g, a.k, parse_rational(a.epsilon));
        result = std::move(eps.scaled_result);
        partition = std::move(eps.partition);
        guarantee = eps.ratio_bound;
        scaled = std::move(eps.instance);
    }
    out << "value " << partition.heaviest() << "\n";
    if (scaled) {
        out << "epsilon_scaled " << format_rational(scaled->epsilon) << "\n";
        out << "lambda " << format_rational(scaled->lambda) << "\n";
    }
    out << "certificate " << to_string(result.certificate) << "\n";
    out << "proven_optimal " << (result.proven_optimal && !guarantee ? "yes" : "no") << "\n";

    Rational bound = fact1_bound(g, a.k);
    std::string kind = "fact1";
    if (result.star && result.star->ell() + 1 >= a.k) {
        const Weight l2 = lemma2_bound(g, a.k, result.star->center);
        if (Rational(l2) > bound) {
            bound = Rational(l2);
            kind = "lemma2";
        }
    }
    out << "lower_bound " << format_rational(bound) << " " << kind << "\n";
    const Rational ratio = Rational(partition.heaviest()) / bound;
    out << "ratio " << format_rational(ratio) << " " << format_decimal(ratio) << "\n";
    out << "guarantee " << format_rational(guarantee.value_or(Rational(static_cast<std::int64_t>(a.k), 2))) << "\n";
    out << "iterations " << result.bcp3.iterations << "\n";
    print_partition(out, partition);
    if (!a.out.empty()) write_file(a.out, write_partition(partition));
}

struct ExactArgs {
    std::string instance;
    std::size_t k = 0;
    std::string objective = "minmax";
    std::size_t max_vertices = 14;
};

void run_exact(const ExactArgs& a, std::ostream& out) {
    const WeightedGraph g = read_instance_file(a.instance);
    check_k(g, a.k, 1);
    EnumerationBudget budget = EnumerationBudget::from_environment();
    budget.max_vertices = a.max_vertices;
    const ExactResult result = a.objective == "maxmin" ? exact_maxmin(g, a.k, budget) : exact_minmax(g, a.k, budget);
    out << "value " << result.value << "\n";
    out << "partitions_visited " << result.partitions_visited << "\n";
    print_partition(out, result.witness);
}

struct FptArgs {
    std::string instance;
    std::size_t k = 0;
    std::string cover;
    std::string dump_model;
};

void run_fpt(const FptArgs& a, std::ostream& out) {
    const WeightedGraph g = read_instance_file(a.instance);
    check_k(g, a.k, 2);
    FptOptions options;
    options.time_limit = EnumerationBudget::from_environment().time_limit;
    if (!a.cover.empty()) options.cover = parse_cover(g, a.cover);
    const FptResult result = solve_fpt_maxmin(g, a.k, options);
    out << "value " << result.value << "\n";
    out << "route " << to_string(result.route) << "\n";
    out << "cover";
    for (Vertex v : result.model.dec.cover_vertices) out << ' ' << v;
    out << "\n";
    out << "cuts_added " << result.stats.cuts_added << "\n";
    print_partition(out, result.partition);
    if (!a.dump_model.empty()) {
        std::ostringstream dump;
        write_model(dump, result.model);
        write_file(a.dump_model, dump.str());
    }
}

struct GenArgs {
    std::string family = "random-tree";
    GeneratorParams params;
    std::string out;
};

void run_gen(GenArgs a, std::ostream& out) {
    a.params.family = parse_family(a.family);
    const std::string text = write_instance(generate(a.params));
    if (a.out.empty()) {
        out << text;
    } else {
        write_file(a.out, text);
    }
}

struct BenchArgs {
    std::string suite = "pinned";
    std::string out = "-";
    BenchOptions options;
};

void run_bench(const BenchArgs& a, std::ostream& out) {
    const auto cases = load_suite(a.suite);
    if (a.out == "-") {
        run_suite(cases, a.options, out);
        return;
    }
    std::ostringstream csv;
    run_suite(cases, a.options, csv);
    write_file(a.out, csv.str());
    out << "wrote " << cases.size() << " cases to " << a.out << "\n";
}

struct ValidateArgs {
    std::string instance;
    std::string partition;
    std::size_t k = 0;
};

int run_validate(const ValidateArgs& a, std::ostream& out) {
    const WeightedGraph g = read_instance_file(a.instance);
    const auto classes = parse_partition(read_text_file(a.partition));
    const std::size_t k = a.k == 0 ? classes.size() : a.k;
    const ValidationReport report = validate(g, classes, k);
    if (report.empty()) {
        out << "valid\n";
        return kExitOk;
    }
    out << "invalid\n";
    for (const auto& issue : report) out << to_string(issue.kind) << ": " << issue.message << "\n";
    return kExitInvalidPartition;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Balanced connected k-partition solver"};
    app.require_subcommand(1);

    SolveArgs solve;
    auto* solve_cmd = app.add_subcommand("solve", "min-max k-partition (k >= 3), optionally epsilon-scaled");
    solve_cmd->add_option("instance", solve.instance, "instance file")->required();
    solve_cmd->add_option("--k", solve.k, "number of classes")->required();
    solve_cmd->add_option("--epsilon", solve.epsilon, "run on scaled weights; p/q or decimal");
    solve_cmd->add_option("--out", solve.out, "write the partition to this file");

    ExactArgs exact;
    auto* exact_cmd = app.add_subcommand("exact", "exhaustive optimum (small instances)");
    exact_cmd->add_option("instance", exact.instance, "instance file")->required();
    exact_cmd->add_option("--k", exact.k, "number of classes")->required();
    exact_cmd->add_option("--objective", exact.objective, "minmax or maxmin")
        ->check(CLI::IsMember({"minmax", "maxmin"}));
    exact_cmd->add_option("--max-vertices", exact.max_vertices, "refuse larger instances");

    FptArgs fpt;
    auto* fpt_cmd = app.add_subcommand("fpt-maxmin", "exact max-min for unweighted graphs via a vertex cover");
    fpt_cmd->add_option("instance", fpt.instance, "instance file")->required();
    fpt_cmd->add_option("--k", fpt.k, "number of classes")->required();
    fpt_cmd->add_option("--cover", fpt.cover, "vertex cover as comma-separated ids");
    fpt_cmd->add_option("--dump-model", fpt.dump_model, "write the model and cut pool to this file");

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "generate an instance");
    gen_cmd->add_option("--family", gen.family, "random-tree, tree-plus-edges, spider, grid, star");
    gen_cmd->add_option("--n", gen.params.n, "vertex count (not for grid)");
    gen_cmd->add_option("--rows", gen.params.rows, "grid rows");
    gen_cmd->add_option("--cols", gen.params.cols, "grid columns");
    gen_cmd->add_option("--legs", gen.params.legs, "spider legs");
    gen_cmd->add_option("--extra-edges", gen.params.extra_edges, "edges added to the tree");
    gen_cmd->add_option("--wmin", gen.params.wmin, "smallest weight");
    gen_cmd->add_option("--wmax", gen.params.wmax, "largest weight");
    gen_cmd->add_option("--seed", gen.params.seed, "random seed");
    gen_cmd->add_option("--out", gen.out, "output file (default stdout)");

    BenchArgs bench;
    auto* bench_cmd = app.add_subcommand("bench", "run a benchmark suite and write CSV");
    bench_cmd->add_option("--suite", bench.suite, "'pinned' or a suite file");
    bench_cmd->add_option("--out", bench.out, "CSV file, '-' for stdout");
    bench_cmd->add_option("--jobs", bench.options.jobs, "worker threads")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--oracle-max-vertices", bench.options.oracle_max_vertices,
                          "compute exact bounds up to this order");

    ValidateArgs val;
    auto* validate_cmd = app.add_subcommand("validate", "check a partition file against an instance");
    validate_cmd->add_option("instance", val.instance, "instance file")->required();
    validate_cmd->add_option("partition", val.partition, "partition file")->required();
    validate_cmd->add_option("--k", val.k, "expected class count (default: as many as listed)");

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (*solve_cmd) run_solve(solve, out);
        if (*exact_cmd) run_exact(exact, out);
        if (*fpt_cmd) run_fpt(fpt, out);
        if (*gen_cmd) run_gen(gen, out);
        if (*bench_cmd) run_bench(bench, out);
        if (*validate_cmd) return run_validate(val, out);
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return kExitBudgetExceeded;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitOk;
}

}  // namespace bcp
