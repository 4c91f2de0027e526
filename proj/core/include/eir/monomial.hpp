#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eir/graph.hpp"

namespace eir {

inline constexpr std::size_t kMaxVariables = 64;

/// Exponent vector over at most kMaxVariables variables. The variable names
/// live in a VariableContext; a Monomial on its own is just the exponents.
class Monomial {
 public:
  Monomial() = default;  // the monomial 1

  static Monomial variable(std::size_t var, unsigned exponent = 1);
  static Monomial from_exponents(std::span<const unsigned> exponents);
  /// Squarefree monomial prod_{i in s} x_i.
  static Monomial from_support(VertexSet s);
  /// x_u * x_v (x_u^2 when u == v).
  static Monomial edge(std::size_t u, std::size_t v);

  unsigned operator[](std::size_t var) const { return exp_[var]; }
  unsigned degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }
  VertexSet support() const;
  bool is_squarefree() const;
  unsigned max_exponent() const;
  /// One past the largest variable index with a nonzero exponent.
  std::size_t width() const;

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; requires other.divides(*this).
  Monomial operator/(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  /// Generator of the principal colon ((this) : (other)) = this / gcd.
  Monomial colon(const Monomial& other) const { return *this / gcd(other); }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp_ == b.exp_; }
  /// Canonical storage order: degree ascending, then exponent vectors
  /// lexicographically descending (a^2 < ab < b^2).
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

  std::size_t hash() const;

 private:
  std::array<std::uint8_t, kMaxVariables> exp_{};
  std::uint16_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Names of the ring variables. Polarization copies record their base
/// variable and copy number (x has copy 0, x' copy 1, x'' copy 2).
class VariableContext {
 public:
  struct Variable {
    std::string name;
    std::size_t base;
    unsigned copy;
  };

  VariableContext() = default;
  explicit VariableContext(std::vector<std::string> names);

  static std::shared_ptr<const VariableContext> of_graph(const Graph& g);
  static std::shared_ptr<const VariableContext> make(std::vector<std::string> names);

  std::size_t size() const { return vars_.size(); }
  const Variable& at(std::size_t i) const { return vars_.at(i); }
  const std::string& name(std::size_t i) const { return vars_.at(i).name; }
  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index_of(std::string_view name) const;

  /// Appends a variable, returning its index.
  std::size_t add(std::string name, std::size_t base, unsigned copy);

  bool same_names(const VariableContext& other) const;

 private:
  std::vector<Variable> vars_;
};

using ContextPtr = std::shared_ptr<const VariableContext>;

/// Multiplicative notation: "a^2*b*d"; "1" for the unit monomial.
std::string format_monomial(const Monomial& m, const VariableContext& ctx);
Monomial parse_monomial(std::string_view text, const VariableContext& ctx);

/// Monomial ideal stored by its minimal generators: a divisibility antichain
/// kept in canonical order. No generators is the zero ideal; the generator 1
/// is the unit ideal.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  /// Minimalizes `gens`.
  MonomialIdeal(ContextPtr ctx, std::vector<Monomial> gens);

  const ContextPtr& context() const { return ctx_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }
  bool is_squarefree() const;
  /// Common degree of all generators, or nullopt for mixed degrees / zero ideal.
  std::optional<unsigned> generating_degree() const;
  /// True when the ideal is nonzero and proper.
  bool is_regular_input() const { return !is_zero() && !is_unit(); }

  /// m lies in the ideal.
  bool contains(const Monomial& m) const;
  /// Every generator of `other` lies in this ideal.
  bool contains(const MonomialIdeal& other) const;

  /// Lcm of all generators.
  Monomial lcm() const;

  std::string to_string() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b);

 private:
  ContextPtr ctx_;
  std::vector<Monomial> gens_;
};

/// Divisibility antichain generating the same ideal, in canonical order.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

/// One generator x_u x_v per edge. Isolated vertices stay in the context but
/// contribute nothing; an edgeless graph gives the zero ideal.
MonomialIdeal edge_ideal(const Graph& g);

/// I^n, minimalized. n == 0 yields the unit ideal.
MonomialIdeal power(const MonomialIdeal& ideal, unsigned n);

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
/// (I, m).
MonomialIdeal add_generator(const MonomialIdeal& ideal, const Monomial& m);

/// (I : m) = (g / gcd(g, m) : g in mingen(I)).
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m);

/// Throws InputError when the two ideals live over different variable names.
void require_same_context(const MonomialIdeal& a, const MonomialIdeal& b);

struct Polarization {
  MonomialIdeal ideal;
  /// copies[v] lists the polarized variables standing for x_v^1, x_v^2, ...
  /// (copies[v][0] == v).
  std::vector<std::vector<std::size_t>> copies;
};

/// Label for the `copy`-th polarization copy of `base` (base', base'', ...),
/// with a numeric suffix when that name is already taken.
std::string copy_label(const std::string& base, unsigned copy,
                       const std::function<bool(const std::string&)>& taken);

/// Exponent unfolding x_i^a -> x_i x_i' ... x_i^{(a-1)}. New variables are
/// appended after the originals, ordered by (base variable, copy).
Polarization polarize(const MonomialIdeal& ideal);

/// Parses one generator per line ("a^2*b*d"); blank and '#' lines skipped.
/// Variables are created in first-appearance order.
MonomialIdeal parse_ideal(std::string_view text);
MonomialIdeal parse_ideal(std::string_view text, ContextPtr ctx);

}  // namespace eir
