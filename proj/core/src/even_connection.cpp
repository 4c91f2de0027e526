#include "eir/even_connection.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <sstream>
#include <unordered_set>

#include "eir/error.hpp"
#include "eir/generator_order.hpp"

namespace eir {

EdgeProduct::EdgeProduct(const Graph& g, std::vector<Edge> factors) {
  if (factors.empty()) throw InputError("an edge product needs at least one factor");
  for (auto& [a, b] : factors) {
    if (a >= g.size() || b >= g.size() || !g.adjacent(a, b)) {
      throw InputError("edge product factor is not an edge of the graph");
    }
    if (a > b) std::swap(a, b);
    product_ = product_ * Monomial::edge(a, b);
    auto it = std::find_if(distinct_.begin(), distinct_.end(), [&](const auto& d) { return d.first == Edge{a, b}; });
    if (it == distinct_.end()) {
      distinct_.emplace_back(Edge{a, b}, 1U);
    } else {
      ++it->second;
    }
  }
  factors_ = std::move(factors);
}

EdgeProduct EdgeProduct::parse(const Graph& g, std::string_view list) {
  std::vector<Edge> factors;
  for (const auto& [a, b] : parse_edge_tokens(list)) factors.emplace_back(g.index_of(a), g.index_of(b));
  return EdgeProduct(g, std::move(factors));
}

std::string EdgeProduct::to_string(const Graph& g) const {
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += '*';
    const auto& a = g.label(factors_[i].first);
    const auto& b = g.label(factors_[i].second);
    out += (a.size() == 1 && b.size() == 1) ? a + b : a + "-" + b;
  }
  return out;
}

std::string EvenConnectionWitness::serialize(const Graph& g) const {
  std::ostringstream os;
  os << g.label(walk.front()) << ' ' << g.label(walk.back()) << ':';
  for (auto p : walk) os << ' ' << g.label(p);
  os << " [";
  for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? " " : "") << factors[i] + 1;
  os << ']';
  return os.str();
}

bool is_valid_witness(const Graph& g, const EdgeProduct& ee, std::size_t u, std::size_t v,
                      const EvenConnectionWitness& w) {
  const auto& p = w.walk;
  const std::size_t k = w.factors.size();
  if (k < 1 || p.size() != 2 * k + 2) return false;
  if (p.front() != u || p.back() != v) return false;
  for (auto x : p) {
    if (x >= g.size()) return false;
  }
  for (std::size_t r = 0; r + 1 < p.size(); ++r) {
    if (!g.adjacent(p[r], p[r + 1])) return false;
  }
  std::vector<bool> used(ee.size(), false);
  for (std::size_t l = 0; l < k; ++l) {
    const std::size_t f = w.factors[l];
    if (f >= ee.size() || used[f]) return false;
    used[f] = true;
    const Edge step{std::min(p[2 * l + 1], p[2 * l + 2]), std::max(p[2 * l + 1], p[2 * l + 2])};
    if (step != ee.factors()[f]) return false;
  }
  return true;
}

struct EvenConnectionSearch::Reach {
  static constexpr std::int64_t kUnseen = -2;
  static constexpr std::int64_t kStart = -1;
  std::vector<std::int64_t> parent;
  std::vector<std::uint32_t> via;  // distinct factor taken into a post state
  std::vector<std::uint32_t> dist;
};

EvenConnectionSearch::EvenConnectionSearch(const Graph& g, const EdgeProduct& ee)
    : g_(g), ee_(ee), factor_at_(g.size()) {
  for (std::size_t d = 0; d < ee_.distinct().size(); ++d) {
    const auto& [edge, mult] = ee_.distinct()[d];
    place_.push_back(budgets_);
    radix_.push_back(mult + 1);
    budgets_ *= mult + 1;
    factor_at_[edge.first].push_back(d);
    factor_at_[edge.second].push_back(d);
  }
  if (budgets_ * g_.size() * 2 > (std::size_t{1} << 28)) {
    throw ResourceLimit("even-connection state space too large");
  }
}

EvenConnectionSearch::Reach EvenConnectionSearch::explore(std::size_t u) const {
  const std::size_t full = budgets_ - 1;  // every digit at its maximum
  auto id = [&](std::size_t vertex, std::size_t code, int phase) {
    return (vertex * budgets_ + code) * 2 + static_cast<std::size_t>(phase);
  };
  Reach r;
  const std::size_t states = g_.size() * budgets_ * 2;
  r.parent.assign(states, Reach::kUnseen);
  r.via.assign(states, 0);
  r.dist.assign(states, 0);
  std::deque<std::size_t> queue;
  for_each_member(g_.neighbors(u), [&](std::size_t p1) {
    const auto s = id(p1, full, 0);
    r.parent[s] = Reach::kStart;
    queue.push_back(s);
  });
  while (!queue.empty()) {
    const std::size_t s = queue.front();
    queue.pop_front();
    const std::size_t phase = s % 2;
    const std::size_t code = (s / 2) % budgets_;
    const std::size_t x = s / 2 / budgets_;
    if (phase == 0) {
      for (auto d : factor_at_[x]) {
        if ((code / place_[d]) % radix_[d] == 0) continue;
        const auto& edge = ee_.distinct()[d].first;
        const std::size_t y = edge.first == x ? edge.second : edge.first;
        const auto t = id(y, code - place_[d], 1);
        if (r.parent[t] != Reach::kUnseen) continue;
        r.parent[t] = static_cast<std::int64_t>(s);
        r.via[t] = static_cast<std::uint32_t>(d);
        r.dist[t] = r.dist[s] + 1;
        queue.push_back(t);
      }
    } else {
      for_each_member(g_.neighbors(x), [&](std::size_t z) {
        const auto t = id(z, code, 0);
        if (r.parent[t] != Reach::kUnseen) return;
        r.parent[t] = static_cast<std::int64_t>(s);
        r.dist[t] = r.dist[s] + 1;
        queue.push_back(t);
      });
    }
  }
  return r;
}

std::optional<EvenConnectionWitness> EvenConnectionSearch::rebuild(const Reach& r, std::size_t u, std::size_t v,
                                                                   bool longest) const {
  std::optional<std::size_t> best;
  std::size_t best_used = 0;
  for (std::size_t y = 0; y < g_.size(); ++y) {
    if (!g_.adjacent(y, v)) continue;
    for (std::size_t code = 0; code < budgets_; ++code) {
      const std::size_t s = (y * budgets_ + code) * 2 + 1;
      if (r.parent[s] == Reach::kUnseen) continue;
      const std::size_t used = (r.dist[s] + 1) / 2;
      if (!best || (longest ? used > best_used : used < best_used)) {
        best = s;
        best_used = used;
      }
    }
  }
  if (!best) return std::nullopt;
  std::vector<std::size_t> states;
  for (std::int64_t s = static_cast<std::int64_t>(*best); s != Reach::kStart; s = r.parent[static_cast<std::size_t>(s)]) {
    states.push_back(static_cast<std::size_t>(s));
  }
  std::reverse(states.begin(), states.end());
  EvenConnectionWitness w;
  w.walk.push_back(u);
  std::vector<unsigned> taken(ee_.distinct().size(), 0);
  for (auto s : states) {
    w.walk.push_back(s / 2 / budgets_);
    if (s % 2 == 1) {
      const auto d = r.via[s];
      const Edge edge = ee_.distinct()[d].first;
      // The taken-th occurrence of this edge in the presentation.
      unsigned seen = 0;
      for (std::size_t i = 0; i < ee_.size(); ++i) {
        if (ee_.factors()[i] == edge && seen++ == taken[d]) {
          w.factors.push_back(i);
          break;
        }
      }
      ++taken[d];
    }
  }
  w.walk.push_back(v);
  return w;
}

std::optional<EvenConnectionWitness> EvenConnectionSearch::shortest(std::size_t u, std::size_t v) const {
  return rebuild(explore(u), u, v, false);
}

std::optional<EvenConnectionWitness> EvenConnectionSearch::longest(std::size_t u, std::size_t v) const {
  return rebuild(explore(u), u, v, true);
}

std::optional<std::size_t> EvenConnectionSearch::max_k(std::size_t u, std::size_t v) const {
  const auto w = longest(u, v);
  if (!w) return std::nullopt;
  return w->k();
}

VertexSet EvenConnectionSearch::partners(std::size_t u) const {
  const Reach r = explore(u);
  VertexSet out = 0;
  for (std::size_t y = 0; y < g_.size(); ++y) {
    for (std::size_t code = 0; code < budgets_; ++code) {
      if (r.parent[(y * budgets_ + code) * 2 + 1] != Reach::kUnseen) {
        out |= g_.neighbors(y);
        break;
      }
    }
  }
  return out;
}

std::vector<int> EvenConnectionSearch::max_k_row(std::size_t u) const {
  const Reach r = explore(u);
  std::vector<int> out(g_.size(), -1);
  for (std::size_t y = 0; y < g_.size(); ++y) {
    for (std::size_t code = 0; code < budgets_; ++code) {
      const std::size_t s = (y * budgets_ + code) * 2 + 1;
      if (r.parent[s] == Reach::kUnseen) continue;
      const int used = static_cast<int>((r.dist[s] + 1) / 2);
      for_each_member(g_.neighbors(y), [&](std::size_t v) { out[v] = std::max(out[v], used); });
    }
  }
  return out;
}

std::optional<EvenConnectionWitness> find_even_connection(const Graph& g, const EdgeProduct& ee, std::size_t u,
                                                          std::size_t v) {
  if (u >= g.size() || v >= g.size()) throw InputError("unknown vertex");
  return EvenConnectionSearch(g, ee).shortest(u, v);
}

std::vector<Edge> even_connected_pairs(const Graph& g, const EdgeProduct& ee) {
  const EvenConnectionSearch search(g, ee);
  std::vector<Edge> out;
  for (std::size_t u = 0; u < g.size(); ++u) {
    for_each_member(search.partners(u) & ~prefix_mask(u), [&](std::size_t v) { out.emplace_back(u, v); });
  }
  return out;
}

std::vector<Edge> even_connected_pairs_simple_paths(const Graph& g, const EdgeProduct& ee) {
  std::set<Edge> found;
  std::vector<unsigned> left;
  for (const auto& d : ee.distinct()) left.push_back(d.second);
  for (std::size_t u = 0; u < g.size(); ++u) {
    VertexSet visited = bit(u);
    // At x = p_{2l+1}: take a factor edge to y = p_{2l+2}, then either end at
    // a neighbour of y or step to a fresh p_{2l+3}.
    std::function<void(std::size_t)> odd = [&](std::size_t x) {
      for (std::size_t d = 0; d < ee.distinct().size(); ++d) {
        const Edge e = ee.distinct()[d].first;
        if (left[d] == 0 || (e.first != x && e.second != x)) continue;
        const std::size_t y = e.first == x ? e.second : e.first;
        if (has(visited, y)) continue;
        --left[d];
        visited |= bit(y);
        for_each_member(g.neighbors(y), [&](std::size_t w) {
          if (w == u) found.emplace(u, u);
          if (!has(visited, w)) found.emplace(std::min(u, w), std::max(u, w));
        });
        for_each_member(g.neighbors(y) & ~visited, [&](std::size_t z) {
          visited |= bit(z);
          odd(z);
          visited &= ~bit(z);
        });
        visited &= ~bit(y);
        ++left[d];
      }
    };
    for_each_member(g.neighbors(u), [&](std::size_t p1) {
      visited |= bit(p1);
      odd(p1);
      visited &= ~bit(p1);
    });
  }
  return {found.begin(), found.end()};
}

ColonGraph colon_graph(const Graph& g, const EdgeProduct& ee) {
  const auto pairs = even_connected_pairs(g, ee);
  std::vector<Edge> edges = g.edges();
  std::vector<std::size_t> selfs;
  for (const auto& [u, v] : pairs) {
    if (u == v) {
      selfs.push_back(u);
    } else if (!g.adjacent(u, v)) {
      edges.emplace_back(u, v);
    }
  }
  ColonGraph out;
  out.original_vertices = g.size();
  out.base = Graph(g.labels(), edges);
  std::vector<std::string> labels = g.labels();
  std::sort(selfs.begin(), selfs.end());
  for (auto u : selfs) {
    const auto label = copy_label(g.label(u), 1, [&](const std::string& s) {
      return std::find(labels.begin(), labels.end(), s) != labels.end();
    });
    labels.push_back(label);
    edges.emplace_back(u, labels.size() - 1);
    out.whiskers.emplace_back(u, labels.size() - 1);
  }
  out.full = Graph(std::move(labels), edges);
  return out;
}

MonomialIdeal colon_ideal(const Graph& g, const EdgeProduct& ee) {
  return colon(power(edge_ideal(g), static_cast<unsigned>(ee.size() + 1)), ee.product());
}

ColonCharacterization verify_colon_characterization(const Graph& g, const EdgeProduct& ee) {
  ColonCharacterization out;
  const MonomialIdeal q = colon_ideal(g, ee);
  std::unordered_set<Monomial, MonomialHash> expected;
  for (const auto& [u, v] : g.edges()) expected.insert(Monomial::edge(u, v));
  for (const auto& [u, v] : even_connected_pairs(g, ee)) expected.insert(Monomial::edge(u, v));
  std::unordered_set<Monomial, MonomialHash> actual(q.generators().begin(), q.generators().end());
  for (const auto& m : q.generators()) {
    if (m.degree() != 2) out.degree_two = false;
    if (!expected.count(m)) out.unexplained.push_back(m);
  }
  for (const auto& m : expected) {
    if (!actual.count(m)) out.spurious.push_back(m);
  }
  std::sort(out.spurious.begin(), out.spurious.end());
  return out;
}

RepresentationReport verify_representation_independence(const Graph& g, const Monomial& m) {
  if (m.is_one() || m.degree() % 2 != 0) throw InputError("monomial is not a product of edges");
  const auto edges = g.edges();
  const unsigned s = m.degree() / 2;
  RepresentationReport out;
  std::vector<Edge> current;
  auto recurse = [&](auto&& self, const Monomial& rest, std::size_t from) -> void {
    if (current.size() == s) {
      if (rest.is_one()) out.factorizations.emplace_back(g, current);
      return;
    }
    for (std::size_t i = from; i < edges.size(); ++i) {
      const Monomial e = Monomial::edge(edges[i].first, edges[i].second);
      if (!e.divides(rest)) continue;
      current.push_back(edges[i]);
      self(self, rest / e, i);
      current.pop_back();
    }
  };
  recurse(recurse, m, 0);
  if (out.factorizations.empty()) throw InputError("monomial is not a product of edges of the graph");
  for (const auto& f : out.factorizations) out.pairs.push_back(even_connected_pairs(g, f));
  out.identical = std::all_of(out.pairs.begin(), out.pairs.end(), [&](const auto& p) { return p == out.pairs.front(); });
  return out;
}

}  // namespace eir
