#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "eir/even_connection.hpp"
#include "eir/generator_order.hpp"
#include "eir/graph.hpp"
#include "eir/monomial.hpp"
#include "eir/resolution.hpp"

namespace eir {

/// One violated assertion. `instance` replays the graph: graph6, then the
/// labelled edge list.
struct Failure {
  std::string instance;
  std::string parameters;
  std::string observed;
  std::string expected;
};

struct VerificationReport {
  std::string check;
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::vector<Failure> failures;
  double elapsed_ms = 0;
  FieldChoice field;

  /// No failures and at least one checked instance.
  bool passed() const { return failures.empty() && checked > 0; }
  void merge(const VerificationReport& other);
  void fail(const Graph& g, std::string parameters, std::string observed, std::string expected);
};

/// "graph6 | a-b,b-c" (isolated vertices listed after the edges).
std::string serialize_instance(const Graph& g);

struct HarnessOptions {
  OracleOptions oracle;
  /// Deletion sets sampled per instance in the longest-connection check.
  std::size_t deletion_samples = 8;
  std::uint64_t seed = 1;
};

/// reg I(G), or nullopt when G has no edges.
std::optional<int> edge_regularity(const Graph& g, const OracleOptions& opts = {});
/// reg I(G)^s; InputError when G has no edges.
int power_regularity(const Graph& g, unsigned s, const OracleOptions& opts = {});

/// Gap-free and cricket-free gives reg <= 3; gap-free and n-claw-free gives
/// reg <= n.
VerificationReport verify_gap_free_bounds(const Graph& g, const HarnessOptions& opts = {});
/// reg(I^{s+1}) <= max{ reg(I^{s+1} : m) + 2s over m in mingen(I^s), reg(I^s) }.
VerificationReport verify_power_colon_bound(const Graph& g, unsigned s, const HarnessOptions& opts = {});
/// Complement chordal: reg(I^s) = 2s for 2 <= s <= s_max.
VerificationReport verify_linear_powers(const Graph& g, unsigned s_max, const HarnessOptions& opts = {});
/// Gap-free and cricket-free: reg(I^s) = 2s for 2 <= s <= s_max.
VerificationReport verify_gap_cricket_powers(const Graph& g, unsigned s_max, const HarnessOptions& opts = {});
/// Gap-free with r = reg I: reg(I^s) <= 2s + r - 1 for 2 <= s <= s_max.
VerificationReport verify_gap_free_power_bound(const Graph& g, unsigned s_max, const HarnessOptions& opts = {});
/// For gap-free G and the colon graph G' of ee: G' is gap-free; induced
/// anticycles of length >= 5 in G' avoid whiskers and are anticycles of G;
/// deleting a sampled set Y and the star of an endpoint of a longest
/// connection outside Y leaves only edges of G (plus isolated whiskers).
VerificationReport verify_structure_lemmas(const Graph& g, const EdgeProduct& ee, const HarnessOptions& opts = {});
/// If reg(I^{t+1} : m) <= 2 for every m in mingen(I^t) and every t <= s,
/// and reg I <= 4, then reg(I^{s+1}) = 2s + 2. Checked for s < s_max.
VerificationReport verify_colon_chain(const Graph& g, unsigned s_max, const HarnessOptions& opts = {});

/// Colon ideals of every edge multiset of size s match E(G) plus the
/// even-connected pairs.
VerificationReport verify_colon_characterizations(const Graph& g, unsigned s);
/// The ordering property of L^(n) for the given edge order.
VerificationReport verify_ordering(const Graph& g, const EdgeOrder& order, unsigned n);

/// Deleting a vertex (or adding a variable) never raises the regularity.
VerificationReport verify_deletion_monotonicity(const Graph& g, const HarnessOptions& opts = {});
/// reg I <= max{reg(I : m) + deg m, reg(I, m)} for every variable and every
/// degree-two monomial outside I; equality with one term for variables of I.
VerificationReport verify_colon_sum_bound(const Graph& g, const HarnessOptions& opts = {});
/// (I : x) = (I(G - st x), N(x)), (I, x) = (I(G - x), x), and reg(G) is at
/// most, and equal to one of, reg(I : x) + 1 and reg(I, x).
VerificationReport verify_vertex_split(const Graph& g, const HarnessOptions& opts = {});
/// Gap-free: every maximum-degree vertex is within distance 2 of every
/// non-isolated vertex.
VerificationReport verify_max_degree_distance(const Graph& g);
/// Claw-free implies cricket-free.
VerificationReport verify_claw_cricket(const Graph& g);
/// Belongs-to ordering, quotient compatibility and factor replacement on
/// L^(n).
VerificationReport verify_order_observations(const Graph& g, const EdgeOrder& order, unsigned n);

/// hochster_betti of the polarization and taylor_betti agree on the whole
/// table (polarization keeps total degrees).
VerificationReport verify_oracle_agreement(const MonomialIdeal& ideal, const HarnessOptions& opts = {});

struct ClassFilter {
  bool gap_free = false;
  bool cricket_free = false;
  bool complement_chordal = false;
  std::optional<unsigned> claw_free;  // n-claw-free
  bool require_edges = true;

  bool accepts(const Graph& g) const;
};

struct SampleResult {
  std::optional<Graph> graph;
  std::size_t attempts = 0;
};

/// Rejection sampling of G(n, p) until the filter accepts; deterministic per
/// seed. `graph` is empty when the attempt budget runs out.
SampleResult random_graph_in_class(std::size_t n, const ClassFilter& filter, std::uint64_t seed, double p = 0.5,
                                   std::size_t budget = 100000);

/// Random monomial ideal: up to max_generators monomials over `variables`
/// variables with exponents <= max_exponent and degree >= 1.
MonomialIdeal random_monomial_ideal(std::mt19937_64& rng, std::size_t variables, std::size_t max_generators,
                                    unsigned max_exponent);

/// Every edge multiset of size s, as index edges in lexicographic order.
std::vector<EdgeProduct> edge_multisets(const Graph& g, unsigned s);
/// A uniformly shuffled edge order.
EdgeOrder random_edge_order(const Graph& g, std::mt19937_64& rng);

struct HuntHit {
  Graph graph;
  unsigned s = 0;
  int regularity = 0;
};

struct HuntResult {
  std::size_t examined = 0;   // gap-free graphs with reg <= 3
  std::vector<HuntHit> hits;  // reg(I^s) != 2s
};

/// Searches gap-free graphs with reg I <= 3 for a power that is not linear.
HuntResult hunt(const std::vector<Graph>& graphs, unsigned s_max, const OracleOptions& opts = {});

}  // namespace eir
