#pragma once

#include <cstdint>
#include <string>

#include "bcp/graph.hpp"

namespace bcp {

enum class Family { RandomTree, TreePlusEdges, Spider, Grid, Star };

const char* to_string(Family family);
/// Inverse of to_string; InvalidInput for unknown names.
Family parse_family(const std::string& name);

struct GeneratorParams {
    Family family = Family::RandomTree;
    std::size_t n = 8;            // ignored by Grid, which has rows * cols vertices
    std::size_t rows = 2;
    std::size_t cols = 3;
    std::size_t legs = 3;         // Spider
    std::size_t extra_edges = 2;  // TreePlusEdges, capped by the non-edges left
    Weight wmin = 1;
    Weight wmax = 1;
    std::uint64_t seed = 1;
};

/// Connected instance of the requested family. Identical parameters give an
/// identical graph. Random trees attach vertex v to a uniform earlier vertex;
/// spiders hang vertices 1..n-1 round-robin on `legs` paths from vertex 0;
/// grid vertex (r, c) has id r * cols + c; the star's center is vertex 0.
WeightedGraph generate(const GeneratorParams& params);

}  // namespace bcp
