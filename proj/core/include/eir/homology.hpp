#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace eir {

/// Coefficient field: characteristic 0 (rationals) or a prime p.
struct FieldChoice {
  unsigned characteristic = 2;

  /// Throws InputError unless the characteristic is 0 or prime.
  void validate() const;
  friend bool operator==(const FieldChoice&, const FieldChoice&) = default;
};

bool is_prime(unsigned p);

/// Sparse column of a boundary matrix: (row, integer coefficient) pairs.
using BoundaryColumn = std::vector<std::pair<std::uint32_t, int>>;

/// A finite chain complex C_0 <- C_1 <- ... <- C_top given by cell counts per
/// degree and a callback filling the boundary column of cell `index` in
/// degree k >= 1 (rows index cells of degree k - 1).
struct ChainComplex {
  std::vector<std::size_t> cells;
  std::function<void(std::size_t k, std::size_t index, BoundaryColumn& out)> boundary;
};

/// dim H_k for every degree k of the complex, over the chosen field. Column
/// reduction runs from the top degree down, skipping columns whose cell is
/// already the pivot of a reduced column one degree up.
std::vector<std::uint64_t> homology_dimensions(const ChainComplex& complex, FieldChoice field);

/// Rank of a sparse matrix given column by column.
std::size_t matrix_rank(std::size_t rows, std::span<const BoundaryColumn> columns, FieldChoice field);

/// Reduced homology of a simplicial complex given as a downward-closed list
/// of faces (bitmasks; the empty face must be present unless the complex is
/// void). Entry d + 1 holds dim H~_d for d >= -1. The void complex yields an
/// empty vector; the complex {{}} yields {1}.
std::vector<std::uint64_t> reduced_homology(std::span<const std::uint64_t> faces, FieldChoice field);

}  // namespace eir
