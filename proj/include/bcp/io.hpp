#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bcp/graph.hpp"
#include "bcp/partition.hpp"

namespace bcp {

/// Parses "p/q", an integer, or a finite decimal ("1.25") into an exact
/// rational. Throws InvalidInput on anything else.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string format_rational(const Rational& r);

/// Fixed six-decimal rendering, rounded half away from zero.
std::string format_decimal(const Rational& r, int digits = 6);

/// Line-oriented instance text:
///   c <comment>
///   p bcp <n> <m>
///   v <id> <weight>      weight is an integer or p/q; omitted vertices weigh 1
///   e <u> <v>
/// Rational weights are multiplied by the LCM of their denominators.
/// Errors are InvalidInput and name the offending line.
WeightedGraph parse_instance(std::string_view text);

/// Canonical text: header, every vertex weight in id order, edges (u < v)
/// in lexicographic order.
std::string write_instance(const WeightedGraph& g);

WeightedGraph read_instance_file(const std::string& path);

/// One class per line, vertex ids separated by blanks; blank lines and lines
/// starting with 'c' or '#' are skipped.
std::vector<std::vector<Vertex>> parse_partition(std::string_view text);

/// Classes in their stored order, members ascending.
std::string write_partition(const Partition& p);

std::string read_text_file(const std::string& path);

}  // namespace bcp
