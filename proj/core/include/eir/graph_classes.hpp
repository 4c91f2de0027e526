#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eir/graph.hpp"

namespace eir {

enum class GraphClass { GapFree, NClawFree, CricketFree, ComplementChordal };

/// Outcome of a class detector. When the class fails, `witness` lists the
/// vertices of the forbidden configuration that was found:
///   GapFree            u, v, x, y for the edges uv and xy
///   NClawFree          root, then the n leaves in increasing order
///   CricketFree        w1 .. w5, edges w1w3 w2w3 w3w4 w3w5 w4w5
///   ComplementChordal  an induced cycle (length >= 4) of the complement
struct ClassReport {
  GraphClass graph_class = GraphClass::GapFree;
  unsigned n = 0;  // claw size, NClawFree only
  bool holds = true;
  std::vector<std::size_t> witness;

  std::string name() const;
};

/// Edge-pair scan in lexicographic order of edges().
ClassReport is_gap_free(const Graph& g);
/// Same predicate decided through induced 4-cycles of the complement.
ClassReport is_gap_free_via_complement(const Graph& g);
/// No induced K_{1,n}; throws InputError for n < 2.
ClassReport is_n_claw_free(const Graph& g, unsigned n);
/// Scans 5-subsets in lexicographic order.
ClassReport is_cricket_free(const Graph& g);
ClassReport complement_chordal(const Graph& g);

/// True iff the report's witness really induces its configuration in g.
bool witness_is_valid(const Graph& g, const ClassReport& report);

struct MaxDegreeDistanceReport {
  /// False when g has a gap; `gap` then holds the witness and nothing else
  /// was checked.
  bool precondition_met = true;
  std::vector<std::size_t> gap;
  bool holds = true;
  /// Every vertex of maximum degree (each one is checked).
  std::vector<std::size_t> centers;
  /// First (x, y) with x a centre and d(x, y) > 2.
  std::optional<std::pair<std::size_t, std::size_t>> violation;
};

/// For every maximum-degree vertex x and every non-isolated vertex y,
/// d(x, y) <= 2. Isolated vertices are outside the edge ideal's graph.
MaxDegreeDistanceReport check_max_degree_distance(const Graph& g);

}  // namespace eir
