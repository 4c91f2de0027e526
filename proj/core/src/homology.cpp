#include "eir/homology.hpp"

#include <algorithm>
#include <bit>
#include <boost/multiprecision/cpp_int.hpp>
#include <unordered_map>

#include "eir/error.hpp"

namespace eir {

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

void FieldChoice::validate() const {
  if (characteristic != 0 && !is_prime(characteristic)) {
    throw InputError("field characteristic must be 0 or prime, got " + std::to_string(characteristic));
  }
}

namespace {

// Incremental column reduction over GF(2). Columns are sorted row lists; the
// pivot is the largest row index.
class Gf2Reducer {
 public:
  explicit Gf2Reducer(std::size_t rows) : pivot_col_(rows, kNone) {}

  // Returns the pivot row of the reduced column, or kNone when it vanishes.
  std::uint32_t reduce(const BoundaryColumn& input) {
    col_.clear();
    for (const auto& [r, c] : input) {
      if (c % 2 != 0) col_.push_back(r);
    }
    std::sort(col_.begin(), col_.end());
    // Entries may repeat only with even total weight; cancel pairs.
    cancel_pairs(col_);
    while (!col_.empty()) {
      const std::uint32_t low = col_.back();
      const std::uint32_t other = pivot_col_[low];
      if (other == kNone) {
        pivot_col_[low] = static_cast<std::uint32_t>(stored_.size());
        stored_.push_back(col_);
        return low;
      }
      tmp_.clear();
      std::set_symmetric_difference(col_.begin(), col_.end(), stored_[other].begin(),
                                    stored_[other].end(), std::back_inserter(tmp_));
      col_.swap(tmp_);
    }
    return kNone;
  }

  static constexpr std::uint32_t kNone = ~std::uint32_t{0};

 private:
  static void cancel_pairs(std::vector<std::uint32_t>& v) {
    std::vector<std::uint32_t> out;
    out.reserve(v.size());
    for (auto x : v) {
      if (!out.empty() && out.back() == x) {
        out.pop_back();
      } else {
        out.push_back(x);
      }
    }
    v.swap(out);
  }

  std::vector<std::uint32_t> pivot_col_;
  std::vector<std::vector<std::uint32_t>> stored_;
  std::vector<std::uint32_t> col_, tmp_;
};

struct PrimeField {
  using Value = std::uint64_t;
  std::uint64_t p;
  Value from_int(int c) const {
    const long long m = static_cast<long long>(p);
    return static_cast<Value>(((c % m) + m) % m);
  }
  bool is_zero(const Value& v) const { return v == 0; }
  Value sub(const Value& a, const Value& b) const { return (a + p - b) % p; }
  Value mul(const Value& a, const Value& b) const { return (a * b) % p; }
  Value inv(const Value& a) const {
    // Fermat: a^(p-2).
    Value result = 1, base = a, e = p - 2;
    while (e) {
      if (e & 1U) result = mul(result, base);
      base = mul(base, base);
      e >>= 1U;
    }
    return result;
  }
};

struct Rationals {
  using Value = boost::multiprecision::cpp_rational;
  Value from_int(int c) const { return Value(c); }
  bool is_zero(const Value& v) const { return v == 0; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value inv(const Value& a) const { return Value(1) / a; }
};

template <class Field>
class FieldReducer {
 public:
  using Value = typename Field::Value;
  using Column = std::vector<std::pair<std::uint32_t, Value>>;
  static constexpr std::uint32_t kNone = ~std::uint32_t{0};

  FieldReducer(std::size_t rows, Field field) : field_(std::move(field)), pivot_col_(rows, kNone) {}

  std::uint32_t reduce(const BoundaryColumn& input) {
    std::vector<std::pair<std::uint32_t, int>> sorted(input.begin(), input.end());
    std::sort(sorted.begin(), sorted.end());
    Column col;
    for (const auto& [r, c] : sorted) {
      Value v = field_.from_int(c);
      if (!col.empty() && col.back().first == r) {
        col.back().second = field_.sub(col.back().second, field_.sub(Value(0), v));
        if (field_.is_zero(col.back().second)) col.pop_back();
      } else if (!field_.is_zero(v)) {
        col.emplace_back(r, v);
      }
    }
    while (!col.empty()) {
      const std::uint32_t low = col.back().first;
      const std::uint32_t other = pivot_col_[low];
      if (other == kNone) {
        pivot_col_[low] = static_cast<std::uint32_t>(stored_.size());
        stored_.push_back(std::move(col));
        return low;
      }
      const Column& piv = stored_[other];
      const Value factor = field_.mul(col.back().second, field_.inv(piv.back().second));
      Column next;
      next.reserve(col.size() + piv.size());
      std::size_t i = 0, j = 0;
      while (i < col.size() || j < piv.size()) {
        if (j == piv.size() || (i < col.size() && col[i].first < piv[j].first)) {
          next.push_back(col[i++]);
        } else if (i == col.size() || piv[j].first < col[i].first) {
          next.emplace_back(piv[j].first, field_.sub(Value(0), field_.mul(factor, piv[j].second)));
          ++j;
        } else {
          Value v = field_.sub(col[i].second, field_.mul(factor, piv[j].second));
          if (!field_.is_zero(v)) next.emplace_back(col[i].first, std::move(v));
          ++i;
          ++j;
        }
      }
      col.swap(next);
    }
    return kNone;
  }

 private:
  Field field_;
  std::vector<std::uint32_t> pivot_col_;
  std::vector<Column> stored_;
};

template <class Reducer>
std::vector<std::uint64_t> homology_with(const ChainComplex& cx, const std::function<Reducer(std::size_t)>& make) {
  const std::size_t top = cx.cells.size();
  std::vector<std::uint64_t> rank(top + 1, 0);  // rank[k]: rank of d_k : C_k -> C_{k-1}
  std::vector<std::vector<bool>> cleared(top);
  for (std::size_t k = 0; k < top; ++k) cleared[k].assign(cx.cells[k], false);
  BoundaryColumn col;
  for (std::size_t k = top; k-- > 1;) {
    Reducer reducer = make(cx.cells[k - 1]);
    for (std::size_t c = 0; c < cx.cells[k]; ++c) {
      if (cleared[k][c]) continue;
      col.clear();
      cx.boundary(k, c, col);
      const auto low = reducer.reduce(col);
      if (low != Reducer::kNone) {
        ++rank[k];
        cleared[k - 1][low] = true;
      }
    }
  }
  std::vector<std::uint64_t> h(top, 0);
  for (std::size_t k = 0; k < top; ++k) h[k] = cx.cells[k] - rank[k] - rank[k + 1];
  return h;
}

}  // namespace

std::vector<std::uint64_t> homology_dimensions(const ChainComplex& complex, FieldChoice field) {
  field.validate();
  if (field.characteristic == 2) {
    return homology_with<Gf2Reducer>(complex, [](std::size_t rows) { return Gf2Reducer(rows); });
  }
  if (field.characteristic == 0) {
    return homology_with<FieldReducer<Rationals>>(
        complex, [](std::size_t rows) { return FieldReducer<Rationals>(rows, Rationals{}); });
  }
  const PrimeField fp{field.characteristic};
  return homology_with<FieldReducer<PrimeField>>(
      complex, [&](std::size_t rows) { return FieldReducer<PrimeField>(rows, fp); });
}

std::size_t matrix_rank(std::size_t rows, std::span<const BoundaryColumn> columns, FieldChoice field) {
  ChainComplex cx;
  cx.cells = {rows, columns.size()};
  cx.boundary = [&](std::size_t, std::size_t c, BoundaryColumn& out) { out = columns[c]; };
  const auto h = homology_dimensions(cx, field);
  // h[1] = columns - rank.
  return columns.size() - h[1];
}

std::vector<std::uint64_t> reduced_homology(std::span<const std::uint64_t> faces, FieldChoice field) {
  if (faces.empty()) return {};
  // Degree k holds faces with k vertices (so the empty face sits in degree 0).
  std::size_t top = 0;
  for (auto f : faces) top = std::max<std::size_t>(top, static_cast<std::size_t>(std::popcount(f)));
  std::vector<std::vector<std::uint64_t>> by_size(top + 1);
  for (auto f : faces) by_size[static_cast<std::size_t>(std::popcount(f))].push_back(f);
  for (auto& v : by_size) std::sort(v.begin(), v.end());
  if (by_size[0].size() != 1) throw InputError("simplicial complex must contain the empty face");

  ChainComplex cx;
  for (const auto& v : by_size) cx.cells.push_back(v.size());
  cx.boundary = [&](std::size_t k, std::size_t c, BoundaryColumn& out) {
    const std::uint64_t face = by_size[k][c];
    const auto& lower = by_size[k - 1];
    std::uint64_t rest = face;
    int sign = 1;
    while (rest) {
      const std::uint64_t low = rest & (~rest + 1);
      const auto it = std::lower_bound(lower.begin(), lower.end(), face & ~low);
      if (it == lower.end() || *it != (face & ~low)) {
        throw InputError("face list is not closed under taking subsets");
      }
      out.emplace_back(static_cast<std::uint32_t>(it - lower.begin()), sign);
      sign = -sign;
      rest &= rest - 1;
    }
  };
  return homology_dimensions(cx, field);
}

}  // namespace eir
