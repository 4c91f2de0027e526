#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eir/homology.hpp"
#include "eir/monomial.hpp"

namespace eir {

/// Graded Betti numbers beta_{i,j} of an ideal (beta_{0,j} counts minimal
/// generators of degree j). Only nonzero entries are stored.
class BettiTable {
 public:
  BettiTable() = default;
  explicit BettiTable(FieldChoice field) : field_(field) {}

  FieldChoice field() const { return field_; }
  const std::map<std::pair<unsigned, unsigned>, std::uint64_t>& entries() const { return entries_; }

  std::uint64_t at(unsigned i, unsigned j) const;
  void add(unsigned i, unsigned j, std::uint64_t count);

  /// max{ j - i : beta_{i,j} != 0 }. Throws on an empty table.
  int regularity() const;
  unsigned projective_dimension() const;

  /// Rows i, columns j, aligned; zeros shown as '.'.
  std::string render() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  FieldChoice field_;
  std::map<std::pair<unsigned, unsigned>, std::uint64_t> entries_;
};

/// Stanley-Reisner complex of a squarefree ideal: the subsets of the ground
/// set containing no generator support.
class SimplicialComplex {
 public:
  /// Throws InputError for non-squarefree, zero or unit ideals.
  explicit SimplicialComplex(const MonomialIdeal& ideal);

  std::size_t ground_size() const { return ground_; }
  const std::vector<std::uint64_t>& minimal_nonfaces() const { return nonfaces_; }

  bool is_face(std::uint64_t s) const;
  /// Faces of the restriction to `subset`, including the empty face.
  std::vector<std::uint64_t> faces_within(std::uint64_t subset) const;
  std::vector<std::uint64_t> faces() const;
  /// Inclusion-maximal faces, in increasing bitmask order.
  std::vector<std::uint64_t> facets() const;

 private:
  std::size_t ground_ = 0;
  std::vector<std::uint64_t> nonfaces_;
  std::vector<std::vector<std::uint64_t>> nonfaces_with_;  // per vertex
};

SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal);

struct OracleOptions {
  FieldChoice field;
  /// Worker threads for subset scans; 0 means hardware concurrency.
  unsigned jobs = 1;
  /// Hochster: skip subsets W that are not a union of generator supports
  /// inside W (such restrictions are cones). Off scans every subset.
  bool skip_cones = true;
};

/// Hochster's formula over all subsets W of the ground set:
/// beta_{i,|W|}(I) = dim H~_{|W|-i-2}(Delta_W). Squarefree input only.
BettiTable hochster_betti(const MonomialIdeal& ideal, const OracleOptions& opts = {});

inline constexpr std::size_t kTaylorMaxGenerators = 22;

/// Homology of the Taylor complex tensored with the field, split by lcm
/// multidegree. Any monomial ideal with at most kTaylorMaxGenerators
/// generators.
BettiTable taylor_betti(const MonomialIdeal& ideal, const OracleOptions& opts = {});

/// Multigraded route through upper Koszul simplicial complexes:
/// beta_{i,b}(I) = dim H~_{i-1}(K^b(I)) with K^b = { squarefree t <= b :
/// x^{b-t} in I }, scanning every b below the lcm of the generators. Works
/// on non-squarefree ideals directly.
BettiTable koszul_betti(const MonomialIdeal& ideal, const OracleOptions& opts = {});

enum class BettiRoute { Auto, Hochster, Taylor, Koszul };

std::string to_string(BettiRoute route);
BettiRoute parse_route(const std::string& name);

struct RegularityResult {
  int regularity = 0;
  BettiTable table;
  BettiRoute route = BettiRoute::Auto;
  /// Present when the Taylor oracle also ran (few enough generators).
  std::optional<int> taylor_regularity;
};

/// Polarized variable count up to which Auto uses Hochster's formula.
inline constexpr std::size_t kHochsterAutoMaxVariables = 14;

/// Betti table of the ideal. Auto polarizes non-squarefree input and applies
/// Hochster's formula while the polarized ring has at most
/// kHochsterAutoMaxVariables variables, and switches to koszul_betti above.
BettiTable betti_table(const MonomialIdeal& ideal, BettiRoute route = BettiRoute::Auto,
                       const OracleOptions& opts = {});
BettiRoute resolve_route(const MonomialIdeal& ideal, BettiRoute route);

/// Regularity of a nonzero proper ideal; zero and unit ideals throw
/// InputError. With cross_check, taylor_betti also runs when the generator
/// count allows, and a disagreement throws std::logic_error.
RegularityResult regularity_report(const MonomialIdeal& ideal, BettiRoute route = BettiRoute::Auto,
                                   const OracleOptions& opts = {}, bool cross_check = false);
int regularity(const MonomialIdeal& ideal, const OracleOptions& opts = {});

/// beta_{i,j} = 0 for 1 <= i <= k and j != i + 2s. The table must come from
/// an ideal generated in degree 2s (InputError otherwise).
bool is_k_steps_linear(const BettiTable& table, unsigned s, unsigned k);
/// Linear at every homological degree present in the table.
bool is_linear(const BettiTable& table, unsigned s);

}  // namespace eir
