#include "bcp/scaling.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "bcp/errors.hpp"

namespace bcp {
namespace {

Weight narrow(__int128 value) {
    if (value > std::numeric_limits<Weight>::max()) throw InvalidInput("scaled weight overflows 64 bits");
    return static_cast<Weight>(value);
}

}  // namespace

Weight floor_div(Weight a, const Rational& r) {
    require(r > 0, "floor_div: divisor must be positive");
    const __int128 num = static_cast<__int128>(a) * r.denominator();
    const __int128 den = r.numerator();
    __int128 q = num / den;
    if (num % den != 0 && num < 0) --q;
    return narrow(q);
}

Weight ceil_div(Weight a, const Rational& r) {
    require(r > 0, "ceil_div: divisor must be positive");
    const __int128 num = static_cast<__int128>(a) * r.denominator();
    const __int128 den = r.numerator();
    __int128 q = num / den;
    if (num % den != 0 && num > 0) ++q;
    return narrow(q);
}

ScaledInstance scale(const WeightedGraph& g, const Rational& epsilon, ScaleDirection direction) {
    if (epsilon <= 0) throw InvalidInput("epsilon must be positive");
    const auto& w = g.weights();
    const Weight theta = direction == ScaleDirection::MinMax ? *std::max_element(w.begin(), w.end())
                                                             : *std::min_element(w.begin(), w.end());
    const Rational lambda = epsilon * Rational(theta) / Rational(static_cast<std::int64_t>(g.order()));

    std::vector<Weight> scaled(w.size());
    for (std::size_t v = 0; v < w.size(); ++v) {
        scaled[v] = direction == ScaleDirection::MinMax ? ceil_div(w[v], lambda) : floor_div(w[v], lambda);
        if (scaled[v] < 1) {
            throw InvalidInput("epsilon " + std::to_string(epsilon.numerator()) + "/" +
                               std::to_string(epsilon.denominator()) + " rounds the weight of vertex " +
                               std::to_string(v) + " down to zero; max-min scaling needs epsilon <= n");
        }
    }
    return ScaledInstance{direction, theta, epsilon, lambda, g.with_weights(std::move(scaled))};
}

ScaledRun scaled_minmax(const WeightedGraph& g, std::size_t k, const Rational& epsilon, const PartitionRoutine& routine) {
    ScaledInstance instance = scale(g, epsilon, ScaleDirection::MinMax);
    Partition found = routine(instance.scaled, k);
    return ScaledRun{std::move(instance), sorted_by_weight(reweigh(g, found))};
}

ScaledRun scaled_maxmin(const WeightedGraph& g, std::size_t k, const Rational& epsilon, const PartitionRoutine& routine) {
    ScaledInstance instance = scale(g, epsilon, ScaleDirection::MaxMin);
    Partition found = routine(instance.scaled, k);
    return ScaledRun{std::move(instance), sorted_by_weight(reweigh(g, found))};
}

EpsBcpkResult eps_minmax_bcpk(const WeightedGraph& g, std::size_t k, const Rational& eps_prime) {
    require(k >= 3 && k <= g.order(), "eps_minmax_bcpk: k must lie in [3, n]");
    if (eps_prime <= 0) throw InvalidInput("epsilon must be positive");
    const Rational half_k(static_cast<std::int64_t>(k), 2);
    const Rational epsilon = eps_prime / half_k;

    BcpkResult inner;
    ScaledRun run = scaled_minmax(g, k, epsilon, [&](const WeightedGraph& scaled, std::size_t kk) {
        inner = minmax_bcpk(scaled, kk);
        return inner.partition;
    });
    return EpsBcpkResult{std::move(inner), std::move(run.instance), std::move(run.partition), half_k + eps_prime};
}

}  // namespace bcp
