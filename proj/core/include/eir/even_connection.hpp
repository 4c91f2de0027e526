#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eir/graph.hpp"
#include "eir/monomial.hpp"

namespace eir {

/// A fixed presentation e_1 ... e_s of an s-fold product of edges (repeats
/// allowed).
class EdgeProduct {
 public:
  /// Throws InputError when a factor is not an edge of g or s = 0.
  EdgeProduct(const Graph& g, std::vector<Edge> factors);
  /// Comma-separated edge tokens, e.g. "xy,wz" or "x-y,w-z".
  static EdgeProduct parse(const Graph& g, std::string_view list);

  std::size_t size() const { return factors_.size(); }
  const std::vector<Edge>& factors() const { return factors_; }
  const Monomial& product() const { return product_; }
  /// Distinct edges with their multiplicities, in first-appearance order.
  const std::vector<std::pair<Edge, unsigned>>& distinct() const { return distinct_; }
  std::string to_string(const Graph& g) const;

 private:
  std::vector<Edge> factors_;
  std::vector<std::pair<Edge, unsigned>> distinct_;
  Monomial product_;
};

/// A walk u = p_0, ..., p_{2k+1} = v; the l-th odd step p_{2l+1} p_{2l+2}
/// is the factor e_{factors[l]} (0-based presentation indices, all
/// distinct).
struct EvenConnectionWitness {
  std::vector<std::size_t> walk;
  std::vector<std::size_t> factors;

  std::size_t k() const { return factors.size(); }
  /// "u v: p0 p1 ... p(2k+1) [i1 i2 ...]" with 1-based factor indices.
  std::string serialize(const Graph& g) const;
};

/// Checks the four defining conditions directly (walk form).
bool is_valid_witness(const Graph& g, const EdgeProduct& ee, std::size_t u, std::size_t v,
                      const EvenConnectionWitness& w);

/// Exhaustive search over (vertex, remaining factor budget) states.
class EvenConnectionSearch {
 public:
  EvenConnectionSearch(const Graph& g, const EdgeProduct& ee);

  /// A witness using as few factors as possible.
  std::optional<EvenConnectionWitness> shortest(std::size_t u, std::size_t v) const;
  /// A witness using as many factors as possible.
  std::optional<EvenConnectionWitness> longest(std::size_t u, std::size_t v) const;
  /// Largest k over all witnesses between u and v.
  std::optional<std::size_t> max_k(std::size_t u, std::size_t v) const;
  /// Vertices even-connected to u.
  VertexSet partners(std::size_t u) const;
  /// Entry v: largest k of a witness from u to v, or -1 when there is none.
  std::vector<int> max_k_row(std::size_t u) const;

 private:
  struct Reach;
  Reach explore(std::size_t u) const;
  std::optional<EvenConnectionWitness> rebuild(const Reach& r, std::size_t u, std::size_t v, bool longest) const;

  Graph g_;
  EdgeProduct ee_;
  std::vector<std::size_t> radix_;     // multiplicity + 1 per distinct factor
  std::vector<std::size_t> place_;     // mixed-radix place values
  std::size_t budgets_ = 1;
  std::vector<std::vector<std::size_t>> factor_at_;  // distinct factors per vertex
};

std::optional<EvenConnectionWitness> find_even_connection(const Graph& g, const EdgeProduct& ee, std::size_t u,
                                                          std::size_t v);

/// Unordered pairs {u, v}, u <= v, that are even-connected (edges of g
/// included when they are, self-pairs included). Sorted.
std::vector<Edge> even_connected_pairs(const Graph& g, const EdgeProduct& ee);

/// Same relation restricted to walks without repeated vertices, except that
/// p_0 = p_{2k+1} is allowed when u = v. Exhaustive DFS; small graphs only.
std::vector<Edge> even_connected_pairs_simple_paths(const Graph& g, const EdgeProduct& ee);

/// G plus an edge for every even-connected pair u != v, plus a whisker u-u'
/// for every self-connected u. Whisker vertices follow the vertices of G in
/// increasing base order and carry the polarization labels.
struct ColonGraph {
  Graph base;                                     // G with the new edges
  Graph full;                                     // base plus whiskers
  std::vector<std::pair<std::size_t, std::size_t>> whiskers;  // (u, u') in full
  std::size_t original_vertices = 0;
};

ColonGraph colon_graph(const Graph& g, const EdgeProduct& ee);

/// The colon ideal (I(G)^{s+1} : e_1 ... e_s).
MonomialIdeal colon_ideal(const Graph& g, const EdgeProduct& ee);

struct ColonCharacterization {
  bool degree_two = true;
  /// Colon generators not explained by an edge or an even-connected pair.
  std::vector<Monomial> unexplained;
  /// Edges or even-connected pairs whose monomial is not a minimal generator.
  std::vector<Monomial> spurious;
  bool matches() const { return degree_two && unexplained.empty() && spurious.empty(); }
};

ColonCharacterization verify_colon_characterization(const Graph& g, const EdgeProduct& ee);

struct RepresentationReport {
  std::vector<EdgeProduct> factorizations;
  std::vector<std::vector<Edge>> pairs;  // per factorization
  bool identical = true;
};

/// Enumerates every presentation of m as a product of edges and compares the
/// even-connected pairs. InputError when m is not a product of edges of g.
RepresentationReport verify_representation_independence(const Graph& g, const Monomial& m);

}  // namespace eir
