#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace eir {

inline constexpr std::size_t kMaxVertices = 64;

/// Bit i set <=> vertex i is in the set.
using VertexSet = std::uint64_t;

inline constexpr VertexSet bit(std::size_t i) { return VertexSet{1} << i; }
inline constexpr bool has(VertexSet s, std::size_t i) { return (s >> i) & 1U; }
/// The set {0, ..., n-1}.
inline constexpr VertexSet prefix_mask(std::size_t n) { return n >= 64 ? ~VertexSet{0} : bit(n) - 1; }
inline int popcount(VertexSet s) { return std::popcount(s); }

/// Calls f(i) for every member of s in increasing order.
template <class F>
void for_each_member(VertexSet s, F&& f) {
  while (s != 0) {
    const auto i = static_cast<std::size_t>(std::countr_zero(s));
    f(i);
    s &= s - 1;
  }
}

std::vector<std::size_t> members(VertexSet s);

using Edge = std::pair<std::size_t, std::size_t>;
using LabelEdge = std::pair<std::string, std::string>;

/// Finite simple graph over labelled vertices. Vertex i is the i-th label;
/// adjacency rows are bit-sets, so graphs hold at most kMaxVertices vertices.
/// Immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on the given labels.
  explicit Graph(std::vector<std::string> labels);

  /// Graph on `labels` with the listed index edges. Duplicate edges are
  /// idempotent; self-loops and out-of-range indices throw InputError.
  Graph(std::vector<std::string> labels, std::span<const Edge> edges);

  /// Vertices appear in first-appearance order: edge endpoints in edge order,
  /// then any extra isolated labels.
  static Graph from_edges(std::span<const LabelEdge> edges,
                          std::span<const std::string> isolated = {});

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t v) const { return labels_.at(v); }

  std::optional<std::size_t> find(std::string_view label) const;
  /// Like find() but throws InputError for an unknown label.
  std::size_t index_of(std::string_view label) const;
  VertexSet vertex_set(std::span<const std::string> labels) const;

  VertexSet all() const;
  VertexSet neighbors(std::size_t v) const { return adj_.at(v); }
  bool adjacent(std::size_t u, std::size_t v) const { return has(adj_[u], v); }
  int degree(std::size_t v) const { return popcount(adj_[v]); }
  int max_degree() const;

  /// Edges (u, v) with u < v in lexicographic index order.
  std::vector<Edge> edges() const;
  std::size_t edge_count() const;
  /// Edges sorted lexicographically by their (smaller label, larger label).
  std::vector<Edge> edges_by_label() const;

  Graph complement() const;
  /// Subgraph induced on `keep`, preserving relative vertex order.
  Graph induced(VertexSet keep) const;
  Graph induced(std::span<const std::string> labels) const;
  Graph without(VertexSet removed) const { return induced(all() & ~removed); }

  /// {v} together with its neighbours.
  VertexSet star(std::size_t v) const { return adj_.at(v) | bit(v); }

  /// Shortest-path length; nullopt when u and v lie in different components.
  std::optional<std::size_t> distance(std::size_t u, std::size_t v) const;

  std::string edge_label(const Edge& e) const;
  std::string describe() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(std::size_t v) const;

  std::vector<std::string> labels_;
  std::vector<VertexSet> adj_;
};

/// Vertices of an induced cycle, in cyclic order.
struct CycleWitness {
  std::vector<std::size_t> vertices;
};

/// An induced cycle of length >= k (k >= 4), found by extending induced paths
/// from each start vertex taken as the cycle's smallest index.
std::optional<CycleWitness> find_induced_cycle_at_least(const Graph& g, std::size_t k);

/// Visits every induced cycle of length >= k exactly once (rooted at its
/// smallest vertex, second vertex smaller than last). Return false from the
/// callback to stop early.
void for_each_induced_cycle(const Graph& g, std::size_t k,
                            const std::function<bool(const CycleWitness&)>& visit);

bool is_chordal(const Graph& g);

/// True iff the listed vertices form an induced cycle of g.
bool is_induced_cycle(const Graph& g, std::span<const std::size_t> cycle);

}  // namespace eir
