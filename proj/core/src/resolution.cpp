#include "eir/resolution.hpp"

#include <algorithm>
#include <bit>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "eir/error.hpp"
#include "eir/parallel.hpp"

namespace eir {

std::uint64_t BettiTable::at(unsigned i, unsigned j) const {
  const auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

void BettiTable::add(unsigned i, unsigned j, std::uint64_t count) {
  if (count != 0) entries_[{i, j}] += count;
}

int BettiTable::regularity() const {
  if (entries_.empty()) throw InputError("regularity of an empty Betti table");
  int best = std::numeric_limits<int>::min();
  for (const auto& [key, value] : entries_) {
    best = std::max(best, static_cast<int>(key.second) - static_cast<int>(key.first));
  }
  return best;
}

unsigned BettiTable::projective_dimension() const {
  unsigned pd = 0;
  for (const auto& [key, value] : entries_) pd = std::max(pd, key.first);
  return pd;
}

std::string BettiTable::render() const {
  if (entries_.empty()) return "(empty)\n";
  unsigned max_i = 0, min_j = ~0U, max_j = 0;
  for (const auto& [key, value] : entries_) {
    max_i = std::max(max_i, key.first);
    min_j = std::min(min_j, key.second);
    max_j = std::max(max_j, key.second);
  }
  std::size_t width = 2;
  for (const auto& [key, value] : entries_) width = std::max(width, std::to_string(value).size());
  width = std::max(width, std::to_string(max_j).size());
  std::ostringstream os;
  os << std::setw(4) << "i\\j";
  for (unsigned j = min_j; j <= max_j; ++j) os << ' ' << std::setw(static_cast<int>(width)) << j;
  os << '\n';
  for (unsigned i = 0; i <= max_i; ++i) {
    os << std::setw(4) << i;
    for (unsigned j = min_j; j <= max_j; ++j) {
      const auto v = at(i, j);
      os << ' ' << std::setw(static_cast<int>(width)) << (v ? std::to_string(v) : ".");
    }
    os << '\n';
  }
  return os.str();
}

namespace {

void require_regular_input(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw InputError("Betti numbers of the zero ideal are not defined here");
  if (ideal.is_unit()) throw InputError("Betti numbers of the unit ideal are not defined here");
}

void merge(BettiTable& into, const BettiTable& from) {
  for (const auto& [key, value] : from.entries()) into.add(key.first, key.second, value);
}

}  // namespace

SimplicialComplex::SimplicialComplex(const MonomialIdeal& ideal) {
  require_regular_input(ideal);
  if (!ideal.is_squarefree()) {
    throw InputError("Stanley-Reisner complex needs a squarefree ideal; polarize first");
  }
  ground_ = ideal.context()->size();
  nonfaces_with_.assign(ground_, {});
  for (const auto& g : ideal.generators()) {
    const auto s = g.support();
    nonfaces_.push_back(s);
    for_each_member(s, [&](std::size_t v) { nonfaces_with_[v].push_back(s); });
  }
}

bool SimplicialComplex::is_face(std::uint64_t s) const {
  return std::none_of(nonfaces_.begin(), nonfaces_.end(), [&](std::uint64_t n) { return (n & ~s) == 0; });
}

std::vector<std::uint64_t> SimplicialComplex::faces_within(std::uint64_t subset) const {
  subset &= prefix_mask(ground_);
  std::vector<std::uint64_t> out{0};
  // Faces in increasing order of their largest vertex: extend each known face
  // by the next vertex when no nonface through that vertex appears.
  for_each_member(subset, [&](std::size_t v) {
    const std::size_t known = out.size();
    for (std::size_t f = 0; f < known; ++f) {
      const std::uint64_t cand = out[f] | bit(v);
      bool ok = true;
      for (auto n : nonfaces_with_[v]) {
        if ((n & ~cand) == 0) {
          ok = false;
          break;
        }
      }
      if (ok) out.push_back(cand);
    }
  });
  return out;
}

std::vector<std::uint64_t> SimplicialComplex::faces() const { return faces_within(prefix_mask(ground_)); }

std::vector<std::uint64_t> SimplicialComplex::facets() const {
  auto all = faces();
  std::vector<std::uint64_t> out;
  for (auto f : all) {
    bool maximal = true;
    for (std::size_t v = 0; v < ground_ && maximal; ++v) {
      if (!has(f, v) && is_face(f | bit(v))) maximal = false;
    }
    if (maximal) out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  return out;
}

SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal) { return SimplicialComplex(ideal); }

BettiTable hochster_betti(const MonomialIdeal& ideal, const OracleOptions& opts) {
  opts.field.validate();
  const SimplicialComplex delta(ideal);
  // Variables outside every support are cone points of each restriction
  // containing them; they never contribute.
  const std::uint64_t used = ideal.lcm().support();
  const auto ground = members(used);
  if (ground.size() > 26) {
    throw ResourceLimit("Hochster scan over " + std::to_string(ground.size()) + " variables exceeds the 26-variable cap");
  }
  const std::size_t subsets = std::size_t{1} << ground.size();
  const unsigned jobs = resolve_jobs(opts.jobs);
  std::vector<BettiTable> partial(jobs, BettiTable(opts.field));

  const auto& nonfaces = delta.minimal_nonfaces();
  parallel_for(subsets, jobs, [&](unsigned worker, std::size_t code) {
    std::uint64_t w = 0;
    for (std::size_t b = 0; b < ground.size(); ++b) {
      if ((code >> b) & 1U) w |= bit(ground[b]);
    }
    if (w == 0) return;  // contributes only beta_0 of the quotient
    std::uint64_t covered = 0;
    for (auto n : nonfaces) {
      if ((n & ~w) == 0) covered |= n;
    }
    if (covered == 0) return;  // full simplex
    if (opts.skip_cones && covered != w) return;
    const auto faces = delta.faces_within(w);
    const auto h = reduced_homology(faces, opts.field);
    const unsigned size = static_cast<unsigned>(std::popcount(w));
    for (std::size_t k = 0; k < h.size(); ++k) {
      // k = dim + 1, and dim = |W| - i - 2.
      if (h[k] == 0 || k + 1 > size) continue;
      partial[worker].add(size - 1 - static_cast<unsigned>(k), size, h[k]);
    }
  });
  BettiTable out(opts.field);
  for (const auto& p : partial) merge(out, p);
  return out;
}

BettiTable taylor_betti(const MonomialIdeal& ideal, const OracleOptions& opts) {
  opts.field.validate();
  require_regular_input(ideal);
  const auto& gens = ideal.generators();
  const std::size_t m = gens.size();
  if (m > kTaylorMaxGenerators) {
    throw ResourceLimit("Taylor complex needs 2^" + std::to_string(m) + " cells; at most " +
                        std::to_string(kTaylorMaxGenerators) + " generators supported");
  }
  const std::size_t cells = std::size_t{1} << m;
  // Group every subset by the lcm of its generators.
  std::vector<std::uint32_t> group_of(cells);
  std::vector<Monomial> group_lcm;
  std::unordered_map<Monomial, std::uint32_t, MonomialHash> index;
  auto group_for = [&](const Monomial& l) {
    auto [it, fresh] = index.emplace(l, static_cast<std::uint32_t>(group_lcm.size()));
    if (fresh) group_lcm.push_back(l);
    return it->second;
  };
  group_of[0] = group_for(Monomial{});
  for (std::size_t s = 1; s < cells; ++s) {
    const std::size_t low = static_cast<std::size_t>(std::countr_zero(s));
    group_of[s] = group_for(group_lcm[group_of[s & (s - 1)]].lcm(gens[low]));
  }
  std::vector<std::vector<std::uint32_t>> members_of(group_lcm.size());
  for (std::size_t s = 0; s < cells; ++s) members_of[group_of[s]].push_back(static_cast<std::uint32_t>(s));

  const unsigned jobs = resolve_jobs(opts.jobs);
  std::vector<BettiTable> partial(jobs, BettiTable(opts.field));
  parallel_for(members_of.size(), jobs, [&](unsigned worker, std::size_t g) {
    const auto& subs = members_of[g];
    std::size_t top = 0;
    for (auto s : subs) top = std::max<std::size_t>(top, static_cast<std::size_t>(std::popcount(s)));
    std::vector<std::vector<std::uint32_t>> by_size(top + 1);
    for (auto s : subs) by_size[static_cast<std::size_t>(std::popcount(s))].push_back(s);
    // subs is increasing, so each by_size list is sorted.
    ChainComplex cx;
    for (const auto& v : by_size) cx.cells.push_back(v.size());
    cx.boundary = [&](std::size_t k, std::size_t c, BoundaryColumn& out) {
      const std::uint32_t s = by_size[k][c];
      const auto& lower = by_size[k - 1];
      std::uint32_t rest = s;
      int sign = 1;
      while (rest) {
        const std::uint32_t low = rest & (~rest + 1);
        const std::uint32_t face = s & ~low;
        if (group_of[face] == g) {
          const auto it = std::lower_bound(lower.begin(), lower.end(), face);
          out.emplace_back(static_cast<std::uint32_t>(it - lower.begin()), sign);
        }
        sign = -sign;
        rest &= rest - 1;
      }
    };
    const auto h = homology_dimensions(cx, opts.field);
    const unsigned degree = group_lcm[g].degree();
    // H_k of the quotient's complex is beta_{k-1} of the ideal.
    for (std::size_t k = 1; k < h.size(); ++k) partial[worker].add(static_cast<unsigned>(k - 1), degree, h[k]);
  });
  BettiTable out(opts.field);
  for (const auto& p : partial) merge(out, p);
  return out;
}

BettiTable koszul_betti(const MonomialIdeal& ideal, const OracleOptions& opts) {
  opts.field.validate();
  require_regular_input(ideal);
  const auto& gens = ideal.generators();
  const Monomial top = ideal.lcm();
  const auto vars = members(top.support());
  std::size_t boxes = 1;
  for (auto v : vars) {
    boxes *= top[v] + 1;
    if (boxes > (std::size_t{1} << 26)) throw ResourceLimit("multidegree box too large for koszul_betti");
  }
  const unsigned jobs = resolve_jobs(opts.jobs);
  std::vector<BettiTable> partial(jobs, BettiTable(opts.field));
  parallel_for(boxes, jobs, [&](unsigned worker, std::size_t code) {
    std::vector<unsigned> expo(kMaxVariables, 0);
    for (auto v : vars) {
      expo[v] = static_cast<unsigned>(code % (top[v] + 1));
      code /= top[v] + 1;
    }
    const Monomial b = Monomial::from_exponents(expo);
    std::vector<const Monomial*> below;
    Monomial span;
    for (const auto& g : gens) {
      if (g.divides(b)) {
        below.push_back(&g);
        span = span.lcm(g);
      }
    }
    // Only lcms of generators carry Betti numbers.
    if (below.empty() || span != b) return;
    const auto supp = members(b.support());
    const std::size_t n = supp.size();
    std::vector<std::uint64_t> faces;
    for (std::uint64_t t = 0; t < (std::uint64_t{1} << n); ++t) {
      Monomial rest = b;
      for (std::size_t i = 0; i < n; ++i) {
        if ((t >> i) & 1U) rest = rest / Monomial::variable(supp[i]);
      }
      if (std::any_of(below.begin(), below.end(), [&](const Monomial* g) { return g->divides(rest); })) {
        faces.push_back(t);
      }
    }
    const auto h = reduced_homology(faces, opts.field);
    for (std::size_t k = 0; k < h.size(); ++k) partial[worker].add(static_cast<unsigned>(k), b.degree(), h[k]);
  });
  BettiTable out(opts.field);
  for (const auto& p : partial) merge(out, p);
  return out;
}

std::string to_string(BettiRoute route) {
  switch (route) {
    case BettiRoute::Auto: return "auto";
    case BettiRoute::Hochster: return "hochster";
    case BettiRoute::Taylor: return "taylor";
    case BettiRoute::Koszul: return "koszul";
  }
  return "auto";
}

BettiRoute parse_route(const std::string& name) {
  if (name == "auto") return BettiRoute::Auto;
  if (name == "hochster") return BettiRoute::Hochster;
  if (name == "taylor") return BettiRoute::Taylor;
  if (name == "koszul") return BettiRoute::Koszul;
  throw InputError("unknown Betti route '" + name + "'");
}

namespace {

std::size_t polarized_variable_count(const MonomialIdeal& ideal) {
  const Monomial l = ideal.lcm();
  std::size_t count = 0;
  for (std::size_t v = 0; v < kMaxVariables; ++v) count += l[v];
  return count;
}

}  // namespace

BettiRoute resolve_route(const MonomialIdeal& ideal, BettiRoute route) {
  if (route != BettiRoute::Auto) return route;
  return polarized_variable_count(ideal) <= kHochsterAutoMaxVariables ? BettiRoute::Hochster : BettiRoute::Koszul;
}

BettiTable betti_table(const MonomialIdeal& ideal, BettiRoute route, const OracleOptions& opts) {
  require_regular_input(ideal);
  switch (resolve_route(ideal, route)) {
    case BettiRoute::Hochster:
      return ideal.is_squarefree() ? hochster_betti(ideal, opts) : hochster_betti(polarize(ideal).ideal, opts);
    case BettiRoute::Taylor:
      return taylor_betti(ideal, opts);
    case BettiRoute::Koszul:
    case BettiRoute::Auto:
      break;
  }
  return koszul_betti(ideal, opts);
}

RegularityResult regularity_report(const MonomialIdeal& ideal, BettiRoute route, const OracleOptions& opts,
                                   bool cross_check) {
  RegularityResult out;
  out.route = resolve_route(ideal, route);
  out.table = betti_table(ideal, out.route, opts);
  out.regularity = out.table.regularity();
  if (cross_check && out.route != BettiRoute::Taylor && ideal.size() <= 16) {
    const int other = taylor_betti(ideal, opts).regularity();
    out.taylor_regularity = other;
    if (other != out.regularity) {
      throw std::logic_error("Betti oracles disagree on " + ideal.to_string() + ": " + to_string(out.route) + " gives " +
                             std::to_string(out.regularity) + ", taylor gives " + std::to_string(other));
    }
  }
  return out;
}

int regularity(const MonomialIdeal& ideal, const OracleOptions& opts) {
  return regularity_report(ideal, BettiRoute::Auto, opts).regularity;
}

bool is_k_steps_linear(const BettiTable& table, unsigned s, unsigned k) {
  for (const auto& [key, value] : table.entries()) {
    if (key.first == 0 && key.second != 2 * s) {
      throw InputError("is_k_steps_linear: table is not of an ideal generated in degree " + std::to_string(2 * s));
    }
  }
  for (const auto& [key, value] : table.entries()) {
    const auto [i, j] = key;
    if (i >= 1 && i <= k && j != i + 2 * s) return false;
  }
  return true;
}

bool is_linear(const BettiTable& table, unsigned s) {
  return is_k_steps_linear(table, s, table.projective_dimension());
}

}  // namespace eir
