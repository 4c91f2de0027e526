#pragma once

#include <cstddef>
#include <vector>

#include "eir/graph.hpp"

namespace eir {

/// One representative per isomorphism class of graphs on exactly n vertices
/// (n <= 6), labelled a, b, c, ... Ordered by edge count, then by canonical
/// code. Counts: 1, 2, 4, 11, 34, 156.
const std::vector<Graph>& graphs_on(std::size_t n);

/// graphs_on(1) ... graphs_on(max_n) concatenated.
std::vector<Graph> graphs_up_to(std::size_t max_n);

/// Canonical isomorphism code (minimum upper-triangle bit code over all
/// vertex permutations). Graphs up to 8 vertices.
std::uint64_t canonical_code(const Graph& g);

}  // namespace eir
