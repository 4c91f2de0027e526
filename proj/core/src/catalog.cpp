#include "eir/catalog.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <numeric>

#include "eir/error.hpp"
#include "eir/graph_io.hpp"

namespace eir {

namespace {

constexpr std::size_t kCatalogMax = 6;

// Bit index of pair (i, j), i < j, in the upper-triangle code.
constexpr std::size_t pair_bit(std::size_t i, std::size_t j) { return j * (j - 1) / 2 + i; }

std::uint64_t code_under(const std::array<std::uint8_t, 8>& adj, std::size_t n,
                         const std::array<std::size_t, 8>& perm) {
  std::uint64_t code = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if ((adj[perm[i]] >> perm[j]) & 1U) code |= std::uint64_t{1} << pair_bit(i, j);
    }
  }
  return code;
}

std::array<std::uint8_t, 8> rows_of(std::uint64_t code, std::size_t n) {
  std::array<std::uint8_t, 8> adj{};
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if ((code >> pair_bit(i, j)) & 1U) {
        adj[i] |= static_cast<std::uint8_t>(1U << j);
        adj[j] |= static_cast<std::uint8_t>(1U << i);
      }
    }
  }
  return adj;
}

// True iff no permutation yields a smaller code.
bool is_canonical(std::uint64_t code, std::size_t n) {
  const auto adj = rows_of(code, n);
  std::array<std::size_t, 8> perm{};
  std::iota(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(n), 0);
  while (std::next_permutation(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(n))) {
    if (code_under(adj, n, perm) < code) return false;
  }
  return true;
}

Graph graph_from_code(std::uint64_t code, std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(default_label(i));
  std::vector<Edge> edges;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if ((code >> pair_bit(i, j)) & 1U) edges.emplace_back(i, j);
    }
  }
  return Graph(std::move(labels), edges);
}

std::vector<Graph> build(std::size_t n) {
  const std::size_t pairs = n * (n - (n ? 1 : 0)) / 2;
  std::vector<std::uint64_t> codes;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
    if (is_canonical(code, n)) codes.push_back(code);
  }
  std::stable_sort(codes.begin(), codes.end(), [](std::uint64_t a, std::uint64_t b) {
    const int pa = std::popcount(a);
    const int pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  std::vector<Graph> out;
  out.reserve(codes.size());
  for (auto c : codes) out.push_back(graph_from_code(c, n));
  return out;
}

}  // namespace

const std::vector<Graph>& graphs_on(std::size_t n) {
  if (n > kCatalogMax) {
    throw ResourceLimit("graph catalog supports at most " + std::to_string(kCatalogMax) + " vertices");
  }
  static std::array<std::vector<Graph>, kCatalogMax + 1> cache;
  static std::array<std::once_flag, kCatalogMax + 1> once;
  std::call_once(once[n], [n] { cache[n] = build(n); });
  return cache[n];
}

std::vector<Graph> graphs_up_to(std::size_t max_n) {
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    const auto& part = graphs_on(n);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::uint64_t canonical_code(const Graph& g) {
  const std::size_t n = g.size();
  if (n > 8) throw ResourceLimit("canonical_code supports at most 8 vertices");
  std::array<std::uint8_t, 8> adj{};
  for (std::size_t v = 0; v < n; ++v) adj[v] = static_cast<std::uint8_t>(g.neighbors(v));
  std::array<std::size_t, 8> perm{};
  std::iota(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(n), 0);
  std::uint64_t best = code_under(adj, n, perm);
  while (std::next_permutation(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(n))) {
    best = std::min(best, code_under(adj, n, perm));
  }
  return best;
}

}  // namespace eir
