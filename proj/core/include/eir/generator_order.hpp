#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "eir/graph.hpp"
#include "eir/monomial.hpp"

namespace eir {

/// Ordered list L_1 > L_2 > ... > L_k of the edges of a graph.
class EdgeOrder {
 public:
  /// Lexicographic on (smaller label, larger label).
  explicit EdgeOrder(const Graph& g);
  /// Must list every edge exactly once (either orientation); InputError
  /// otherwise.
  EdgeOrder(const Graph& g, std::vector<Edge> order);
  /// Tokens like "ab,bc" or "a-b,b-c" (see parse_edge_token).
  static EdgeOrder parse(const Graph& g, std::string_view list);

  std::size_t size() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Monomial& monomial(std::size_t i) const { return monomials_.at(i); }
  std::optional<std::size_t> index_of(const Monomial& m) const;
  std::string to_string(const Graph& g) const;

 private:
  std::vector<Edge> edges_;
  std::vector<Monomial> monomials_;
};

/// "x-w" or, when both labels are one character, "xw".
LabelEdge parse_edge_token(std::string_view token);
std::vector<LabelEdge> parse_edge_tokens(std::string_view list);

/// Greedy factorisation m = L_{i_1} ... L_{i_n}: each i_l is the least index
/// whose edge divides the remaining quotient as an edge.
struct MaximalExpression {
  std::vector<std::size_t> factors;  // n base-order indices, nondecreasing
  std::vector<unsigned> exponents;   // (a_1, ..., a_k), one per base edge
};

struct OrderedGenerators {
  unsigned n = 0;
  std::vector<Monomial> list;  // L^(n)_1 > L^(n)_2 > ...
  std::vector<MaximalExpression> expressions;

  /// "a^2*b^2 > a*b^2*c > ...".
  std::string summary(const VariableContext& ctx) const;
  /// Same list as "a²b² > ab²c > ...".
  std::string pretty_summary(const VariableContext& ctx) const;
};

/// Monomial with superscript exponents and juxtaposed variables ("ab²c").
std::string format_monomial_pretty(const Monomial& m, const VariableContext& ctx);

struct OrderingCheck {
  unsigned j = 0, k = 0;  // 1-based; the pair compares L_j with L_{k+1}
  enum class Outcome { Subset, Principal, Counterexample } outcome = Outcome::Subset;
  std::size_t certificate = 0;  // 1-based i for Principal
};

struct OrderingReport {
  unsigned n = 0;
  std::size_t generators = 0;
  std::size_t subset = 0, principal = 0, counterexamples = 0;
  std::vector<OrderingCheck> checks;  // filled when requested

  bool passed() const { return counterexamples == 0; }
  /// One "j k -> subset|principal:i|counterexample" line per check.
  std::string render() const;
};

/// The order on mingen(I(G)^n) induced by an edge order, with cached powers
/// of the edge ideal. Thread-safe.
class GeneratorOrder {
 public:
  GeneratorOrder(const Graph& g, EdgeOrder order);

  const Graph& graph() const { return graph_; }
  const EdgeOrder& edge_order() const { return order_; }
  const MonomialIdeal& ideal() const { return ideal_; }
  /// I^n; n = 0 gives the unit ideal.
  const MonomialIdeal& power(unsigned n) const;
  bool is_generator(const Monomial& m, unsigned n) const;

  /// m2 / m1 is a minimal generator of I^{n-k}. InputError unless
  /// m1 in mingen(I^k), m2 in mingen(I^n) and n > k.
  bool edge_divides(const Monomial& m1, const Monomial& m2, unsigned k, unsigned n) const;
  /// InputError unless m in mingen(I^n).
  MaximalExpression maximal_expression(const Monomial& m, unsigned n) const;
  /// Index of the first factor of the maximal expression (0-based).
  std::size_t belongs_to(const Monomial& m, unsigned n) const;
  /// greater: a comes before b in L^(n).
  std::strong_ordering compare(const Monomial& a, const Monomial& b, unsigned n) const;
  OrderedGenerators ordered_generators(unsigned n) const;

  /// Every factorisation of m into n edges, as exponent vectors.
  std::vector<std::vector<unsigned>> all_expressions(const Monomial& m, unsigned n) const;
  /// Order defined by quantifying over all expressions: a > b iff some
  /// expression of a beats every expression of b lexicographically.
  std::strong_ordering compare_by_all_expressions(const Monomial& a, const Monomial& b, unsigned n) const;

  /// For every k and j <= k: (L_j : L_{k+1}) inside (I^{n+1} : L_{k+1}), or
  /// some i <= k has (L_i : L_{k+1}) = (x) containing (L_j : L_{k+1}).
  OrderingReport verify_ordering_property(unsigned n, bool keep_checks = false) const;

 private:
  struct PowerCache {
    MonomialIdeal ideal;
    std::unordered_set<Monomial, MonomialHash> members;
  };
  const PowerCache& cache(unsigned n) const;
  void require_generator(const Monomial& m, unsigned n, const char* what) const;

  Graph graph_;
  EdgeOrder order_;
  MonomialIdeal ideal_;
  mutable std::mutex mutex_;
  mutable std::map<unsigned, std::unique_ptr<PowerCache>> powers_;
};

}  // namespace eir
