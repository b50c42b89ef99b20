#include "bcp/generate.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "bcp/errors.hpp"

namespace bcp {
namespace {

using Edge = std::pair<Vertex, Vertex>;

std::vector<Edge> random_tree(std::size_t n, std::mt19937_64& rng) {
    std::vector<Edge> edges;
    for (std::size_t v = 1; v < n; ++v) {
        std::uniform_int_distribution<std::size_t> pick(0, v - 1);
        edges.emplace_back(static_cast<Vertex>(pick(rng)), static_cast<Vertex>(v));
    }
    return edges;
}

}  // namespace

const char* to_string(Family family) {
    switch (family) {
        case Family::RandomTree: return "random-tree";
        case Family::TreePlusEdges: return "tree-plus-edges";
        case Family::Spider: return "spider";
        case Family::Grid: return "grid";
        case Family::Star: return "star";
    }
    return "unknown";
}

Family parse_family(const std::string& name) {
    for (auto f : {Family::RandomTree, Family::TreePlusEdges, Family::Spider, Family::Grid, Family::Star}) {
        if (name == to_string(f)) return f;
    }
    throw InvalidInput("unknown family '" + name + "' (random-tree, tree-plus-edges, spider, grid, star)");
}

WeightedGraph generate(const GeneratorParams& params) {
    if (params.wmin < 1 || params.wmax < params.wmin) throw InvalidInput("weight range must satisfy 1 <= wmin <= wmax");
    const std::size_t n = params.family == Family::Grid ? params.rows * params.cols : params.n;
    if (n < 3) throw InvalidInput("generated instances need at least 3 vertices");
    if (params.family == Family::Spider && params.legs < 1) throw InvalidInput("a spider needs at least one leg");

    std::mt19937_64 rng(params.seed);
    std::vector<Edge> edges;
    switch (params.family) {
        case Family::RandomTree:
            edges = random_tree(n, rng);
            break;
        case Family::TreePlusEdges: {
            edges = random_tree(n, rng);
            std::set<Edge> present;
            for (auto [u, v] : edges) present.insert(std::minmax(u, v));
            std::vector<Edge> missing;
            for (Vertex u = 0; u < static_cast<Vertex>(n); ++u) {
                for (Vertex v = u + 1; v < static_cast<Vertex>(n); ++v) {
                    if (!present.contains({u, v})) missing.emplace_back(u, v);
                }
            }
            std::shuffle(missing.begin(), missing.end(), rng);
            missing.resize(std::min(missing.size(), params.extra_edges));
            edges.insert(edges.end(), missing.begin(), missing.end());
            break;
        }
        case Family::Spider: {
            std::vector<Vertex> tip(params.legs, 0);
            for (std::size_t v = 1; v < n; ++v) {
                auto& end = tip[(v - 1) % params.legs];
                edges.emplace_back(end, static_cast<Vertex>(v));
                end = static_cast<Vertex>(v);
            }
            break;
        }
        case Family::Grid:
            for (std::size_t r = 0; r < params.rows; ++r) {
                for (std::size_t c = 0; c < params.cols; ++c) {
                    const auto id = static_cast<Vertex>(r * params.cols + c);
                    if (c + 1 < params.cols) edges.emplace_back(id, id + 1);
                    if (r + 1 < params.rows) edges.emplace_back(id, static_cast<Vertex>(id + params.cols));
                }
            }
            break;
        case Family::Star:
            for (std::size_t v = 1; v < n; ++v) edges.emplace_back(0, static_cast<Vertex>(v));
            break;
    }

    std::uniform_int_distribution<Weight> weight(params.wmin, params.wmax);
    std::vector<Weight> weights(n);
    for (auto& w : weights) w = weight(rng);
    return WeightedGraph(std::move(weights), edges);
}

}  // namespace bcp
