#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "bcp/generate.hpp"
#include "bcp/partition.hpp"

namespace bcp {

/// One generated instance solved with each listed algorithm:
/// bcpk, eps-bcpk, exact-minmax, exact-maxmin, fpt-maxmin.
struct BenchCase {
    std::string id;
    GeneratorParams params;
    std::size_t k = 3;
    std::vector<std::string> algorithms;
    Rational epsilon{1, 2};
};

/// Suite text: one case per line as blank-separated key=value pairs
/// (id, family, n, rows, cols, legs, extra, wmin, wmax, seed, k, algorithms,
/// epsilon). `k` and `algorithms` take comma lists; a k list expands into one
/// case per value with "-k<K>" appended to the id. '#' starts a comment.
std::vector<BenchCase> parse_suite(std::string_view text);

/// Built-in deterministic suite used by `bench --suite pinned`.
std::string_view pinned_suite();

/// "pinned" or a path to a suite file.
std::vector<BenchCase> load_suite(const std::string& spec);

/// One CSV row. Ratios compare against the bound: objective / bound for the
/// min-max algorithms, bound / objective for the max-min ones, and are only
/// present when both sides are known.
struct BenchRecord {
    std::string instance_id;
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t k = 0;
    std::string algorithm;
    std::optional<Rational> objective_value;
    std::optional<Rational> certified_bound;
    std::string bound_kind;  // fact1, lemma2, oracle, none, budget-exceeded, rejected
    std::optional<Rational> ratio;
    std::uint64_t iterations = 0;
    std::uint64_t cuts_added = 0;
    double wall_time_ms = 0;
};

std::string_view bench_csv_header();
std::string to_csv_row(const BenchRecord& r);

struct BenchOptions {
    std::size_t jobs = 1;
    std::size_t oracle_max_vertices = 10;  // exact bounds only up to this order
};

std::vector<BenchRecord> run_case(const BenchCase& c, const BenchOptions& options);

/// Runs every case (in parallel when jobs > 1) and writes the header and the
/// rows to `out` in suite order.
void run_suite(const std::vector<BenchCase>& cases, const BenchOptions& options, std::ostream& out);

}  // namespace bcp
