#include "eir/graph_classes.hpp"

#include <algorithm>

#include "eir/error.hpp"

namespace eir {

std::string ClassReport::name() const {
  switch (graph_class) {
    case GraphClass::GapFree: return "gap_free";
    case GraphClass::NClawFree: return std::to_string(n) + "_claw_free";
    case GraphClass::CricketFree: return "cricket_free";
    case GraphClass::ComplementChordal: return "complement_chordal";
  }
  return "unknown";
}

namespace {

bool forms_gap(const Graph& g, const Edge& a, const Edge& b) {
  const VertexSet first = bit(a.first) | bit(a.second);
  const VertexSet second = bit(b.first) | bit(b.second);
  if (first & second) return false;
  return (g.neighbors(a.first) & second) == 0 && (g.neighbors(a.second) & second) == 0;
}

/// Lexicographically first independent `need`-subset of `pool`, extending
/// `chosen`.
bool independent_subset(const Graph& g, VertexSet pool, std::size_t need, std::vector<std::size_t>& chosen) {
  if (need == 0) return true;
  if (static_cast<std::size_t>(popcount(pool)) < need) return false;
  while (pool) {
    const auto v = static_cast<std::size_t>(std::countr_zero(pool));
    pool &= pool - 1;
    chosen.push_back(v);
    if (independent_subset(g, pool & ~g.neighbors(v), need - 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

/// Cricket labelling of a 5-vertex set, if one exists.
std::optional<std::vector<std::size_t>> cricket_in(const Graph& g, VertexSet s) {
  std::size_t edges = 0;
  for_each_member(s, [&](std::size_t v) { edges += static_cast<std::size_t>(popcount(g.neighbors(v) & s)); });
  if (edges != 10) return std::nullopt;  // 5 edges, each counted twice
  std::optional<std::vector<std::size_t>> out;
  for_each_member(s, [&](std::size_t c) {
    if (out || popcount(g.neighbors(c) & s) != 4) return;
    const VertexSet rest = s & ~bit(c);
    // The other four vertices carry exactly one edge, w4w5.
    for_each_member(rest, [&](std::size_t a) {
      if (out) return;
      const VertexSet partner = g.neighbors(a) & rest;
      if (popcount(partner) != 1) return;
      const auto b = static_cast<std::size_t>(std::countr_zero(partner));
      const auto leaves = members(rest & ~bit(a) & ~bit(b));
      out = std::vector<std::size_t>{leaves[0], leaves[1], c, std::min(a, b), std::max(a, b)};
    });
  });
  return out;
}

}  // namespace

ClassReport is_gap_free(const Graph& g) {
  ClassReport r{GraphClass::GapFree, 0, true, {}};
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (forms_gap(g, edges[i], edges[j])) {
        r.holds = false;
        r.witness = {edges[i].first, edges[i].second, edges[j].first, edges[j].second};
        return r;
      }
    }
  }
  return r;
}

ClassReport is_gap_free_via_complement(const Graph& g) {
  ClassReport r{GraphClass::GapFree, 0, true, {}};
  const Graph c = g.complement();
  for_each_induced_cycle(c, 4, [&](const CycleWitness& w) {
    if (w.vertices.size() != 4) return true;
    // Cycle p0 p1 p2 p3 in the complement: p0p2 and p1p3 are the gap's edges.
    const auto& p = w.vertices;
    r.holds = false;
    r.witness = {std::min(p[0], p[2]), std::max(p[0], p[2]), std::min(p[1], p[3]), std::max(p[1], p[3])};
    return false;
  });
  return r;
}

ClassReport is_n_claw_free(const Graph& g, unsigned n) {
  if (n < 2) throw InputError("n-claw needs n >= 2, got " + std::to_string(n));
  ClassReport r{GraphClass::NClawFree, n, true, {}};
  for (std::size_t root = 0; root < g.size(); ++root) {
    std::vector<std::size_t> leaves;
    if (independent_subset(g, g.neighbors(root), n, leaves)) {
      r.holds = false;
      r.witness.push_back(root);
      r.witness.insert(r.witness.end(), leaves.begin(), leaves.end());
      return r;
    }
  }
  return r;
}

ClassReport is_cricket_free(const Graph& g) {
  ClassReport r{GraphClass::CricketFree, 0, true, {}};
  const std::size_t n = g.size();
  if (n < 5) return r;
  std::vector<std::size_t> idx{0, 1, 2, 3, 4};
  while (true) {
    VertexSet s = 0;
    for (auto v : idx) s |= bit(v);
    if (auto w = cricket_in(g, s)) {
      r.holds = false;
      r.witness = *w;
      return r;
    }
    int pos = 4;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - 5 + static_cast<std::size_t>(pos)) --pos;
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
    for (auto q = static_cast<std::size_t>(pos) + 1; q < 5; ++q) idx[q] = idx[q - 1] + 1;
  }
  return r;
}

ClassReport complement_chordal(const Graph& g) {
  ClassReport r{GraphClass::ComplementChordal, 0, true, {}};
  if (auto c = find_induced_cycle_at_least(g.complement(), 4)) {
    r.holds = false;
    r.witness = c->vertices;
  }
  return r;
}

bool witness_is_valid(const Graph& g, const ClassReport& report) {
  const auto& w = report.witness;
  if (report.holds) return w.empty();
  for (auto v : w) {
    if (v >= g.size()) return false;
  }
  VertexSet s = 0;
  for (auto v : w) s |= bit(v);
  if (static_cast<std::size_t>(popcount(s)) != w.size()) return false;
  switch (report.graph_class) {
    case GraphClass::GapFree:
      return w.size() == 4 && g.adjacent(w[0], w[1]) && g.adjacent(w[2], w[3]) &&
             forms_gap(g, {w[0], w[1]}, {w[2], w[3]});
    case GraphClass::NClawFree: {
      if (w.size() != report.n + 1) return false;
      const VertexSet leaves = s & ~bit(w[0]);
      if ((g.neighbors(w[0]) & leaves) != leaves) return false;
      bool independent = true;
      for_each_member(leaves, [&](std::size_t v) { independent = independent && (g.neighbors(v) & leaves) == 0; });
      return independent;
    }
    case GraphClass::CricketFree: {
      if (w.size() != 5) return false;
      const std::vector<std::pair<int, int>> want{{0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}};
      for (std::size_t a = 0; a < 5; ++a) {
        for (std::size_t b = a + 1; b < 5; ++b) {
          const bool wanted = std::find(want.begin(), want.end(), std::pair<int, int>(static_cast<int>(a),
                                                                                      static_cast<int>(b))) != want.end();
          if (g.adjacent(w[a], w[b]) != wanted) return false;
        }
      }
      return true;
    }
    case GraphClass::ComplementChordal:
      return w.size() >= 4 && is_induced_cycle(g.complement(), w);
  }
  return false;
}

MaxDegreeDistanceReport check_max_degree_distance(const Graph& g) {
  MaxDegreeDistanceReport r;
  const auto gap = is_gap_free(g);
  if (!gap.holds) {
    r.precondition_met = false;
    r.holds = false;
    r.gap = gap.witness;
    return r;
  }
  const int top = g.max_degree();
  for (std::size_t x = 0; x < g.size(); ++x) {
    if (g.degree(x) == top) r.centers.push_back(x);
  }
  for (auto x : r.centers) {
    for (std::size_t y = 0; y < g.size(); ++y) {
      if (g.degree(y) == 0) continue;
      const auto d = g.distance(x, y);
      if (!d || *d > 2) {
        r.holds = false;
        r.violation = {x, y};
        return r;
      }
    }
  }
  return r;
}

}  // namespace eir
