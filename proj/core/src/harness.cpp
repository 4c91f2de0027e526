#include "eir/harness.hpp"

#include <algorithm>
#include <chrono>
#include <unordered_map>

#include "eir/error.hpp"
#include "eir/graph_classes.hpp"
#include "eir/graph_io.hpp"

namespace eir {

namespace {

class Stopwatch {
 public:
  explicit Stopwatch(VerificationReport& report) : report_(report) {}
  ~Stopwatch() {
    report_.elapsed_ms +=
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  VerificationReport& report_;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

VerificationReport make_report(std::string check, FieldChoice field = {}) {
  VerificationReport r;
  r.check = std::move(check);
  r.field = field;
  return r;
}

int reg_of(const MonomialIdeal& ideal, const OracleOptions& opts) { return regularity(ideal, opts); }

std::string num(long long v) { return std::to_string(v); }

/// Edge ideal of the edges of g avoiding `removed`, plus the variables in
/// `extra`, in the context of I(G).
MonomialIdeal restricted_ideal(const Graph& g, const ContextPtr& ctx, VertexSet removed, VertexSet extra) {
  std::vector<Monomial> gens;
  for (const auto& [u, v] : g.edges()) {
    if (!has(removed, u) && !has(removed, v)) gens.push_back(Monomial::edge(u, v));
  }
  for_each_member(extra, [&](std::size_t x) { gens.push_back(Monomial::variable(x)); });
  return MonomialIdeal(ctx, std::move(gens));
}

}  // namespace

void VerificationReport::merge(const VerificationReport& other) {
  checked += other.checked;
  skipped += other.skipped;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  elapsed_ms += other.elapsed_ms;
}

void VerificationReport::fail(const Graph& g, std::string parameters, std::string observed, std::string expected) {
  failures.push_back(Failure{serialize_instance(g), std::move(parameters), std::move(observed), std::move(expected)});
}

std::string serialize_instance(const Graph& g) {
  std::string out = write_graph6(g) + " |";
  std::string sep = " ";
  VertexSet touched = 0;
  for (const auto& e : g.edges()) {
    out += sep + g.edge_label(e);
    sep = ",";
    touched |= bit(e.first) | bit(e.second);
  }
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (!has(touched, v)) {
      out += sep + g.label(v);
      sep = ",";
    }
  }
  return out;
}

std::optional<int> edge_regularity(const Graph& g, const OracleOptions& opts) {
  if (g.edge_count() == 0) return std::nullopt;
  return reg_of(edge_ideal(g), opts);
}

int power_regularity(const Graph& g, unsigned s, const OracleOptions& opts) {
  if (g.edge_count() == 0) throw InputError("power_regularity: graph has no edges");
  if (s == 0) throw InputError("power_regularity needs s >= 1");
  return reg_of(power(edge_ideal(g), s), opts);
}

VerificationReport verify_gap_free_bounds(const Graph& g, const HarnessOptions& opts) {
  auto r = make_report("gap-free-bounds", opts.oracle.field);
  Stopwatch watch(r);
  if (g.edge_count() == 0 || !is_gap_free(g).holds) {
    ++r.skipped;
    return r;
  }
  const int reg = *edge_regularity(g, opts.oracle);
  bool any = false;
  if (is_cricket_free(g).holds) {
    any = true;
    ++r.checked;
    if (reg > 3) r.fail(g, "cricket-free", "reg " + num(reg), "reg <= 3");
  }
  for (unsigned n = 2; n <= std::max<std::size_t>(g.size(), 2); ++n) {
    if (!is_n_claw_free(g, n).holds) continue;
    any = true;
    ++r.checked;
    if (reg > static_cast<int>(n)) r.fail(g, num(n) + "-claw-free", "reg " + num(reg), "reg <= " + num(n));
  }
  if (!any) ++r.skipped;
  return r;
}

VerificationReport verify_power_colon_bound(const Graph& g, unsigned s, const HarnessOptions& opts) {
  auto r = make_report("power-colon-bound", opts.oracle.field);
  Stopwatch watch(r);
  if (g.edge_count() == 0 || s == 0) {
    ++r.skipped;
    return r;
  }
  const MonomialIdeal i = edge_ideal(g);
  const MonomialIdeal is = power(i, s);
  const MonomialIdeal next = product(is, i);
  int bound = reg_of(is, opts.oracle);
  for (const auto& m : is.generators()) {
    bound = std::max(bound, reg_of(colon(next, m), opts.oracle) + 2 * static_cast<int>(s));
  }
  const int actual = reg_of(next, opts.oracle);
  ++r.checked;
  if (actual > bound) r.fail(g, "s=" + num(s), "reg(I^" + num(s + 1) + ") = " + num(actual), "<= " + num(bound));
  return r;
}

namespace {

VerificationReport verify_linear_when(const Graph& g, unsigned s_max, const HarnessOptions& opts, std::string name,
                                      bool applies) {
  auto r = make_report(std::move(name), opts.oracle.field);
  Stopwatch watch(r);
  if (g.edge_count() == 0 || !applies || s_max < 2) {
    ++r.skipped;
    return r;
  }
  for (unsigned s = 2; s <= s_max; ++s) {
    const int reg = power_regularity(g, s, opts.oracle);
    ++r.checked;
    if (reg != 2 * static_cast<int>(s)) r.fail(g, "s=" + num(s), "reg " + num(reg), "reg " + num(2 * s));
  }
  return r;
}

}  // namespace

VerificationReport verify_linear_powers(const Graph& g, unsigned s_max, const HarnessOptions& opts) {
  return verify_linear_when(g, s_max, opts, "linear-powers", complement_chordal(g).holds);
}

VerificationReport verify_gap_cricket_powers(const Graph& g, unsigned s_max, const HarnessOptions& opts) {
  return verify_linear_when(g, s_max, opts, "gap-cricket-powers", is_gap_free(g).holds && is_cricket_free(g).holds);
}

VerificationReport verify_gap_free_power_bound(const Graph& g, unsigned s_max, const HarnessOptions& opts) {
  auto r = make_report("gap-free-power-bound", opts.oracle.field);
  Stopwatch watch(r);
  if (g.edge_count() == 0 || !is_gap_free(g).holds || s_max < 2) {
    ++r.skipped;
    return r;
  }
  const int base = *edge_regularity(g, opts.oracle);
  for (unsigned s = 2; s <= s_max; ++s) {
    const int reg = power_regularity(g, s, opts.oracle);
    const int bound = 2 * static_cast<int>(s) + base - 1;
    ++r.checked;
    if (reg > bound) r.fail(g, "s=" + num(s) + " r=" + num(base), "reg " + num(reg), "<= " + num(bound));
  }
  return r;
}

VerificationReport verify_structure_lemmas(const Graph& g, const EdgeProduct& ee, const HarnessOptions& opts) {
  auto r = make_report("colon-graph-structure", opts.oracle.field);
  Stopwatch watch(r);
  if (!is_gap_free(g).holds) {
    ++r.skipped;
    return r;
  }
  const std::string params = "ee=" + ee.to_string(g);
  const ColonGraph cg = colon_graph(g, ee);
  const Graph& full = cg.full;
  const std::size_t n0 = cg.original_vertices;

  ++r.checked;
  const auto gap = is_gap_free(full);
  if (!gap.holds) r.fail(g, params, "colon graph has a gap", "gap-free colon graph");

  ++r.checked;
  const Graph gc = g.complement();
  for_each_induced_cycle(full.complement(), 5, [&](const CycleWitness& w) {
    const bool whisker = std::any_of(w.vertices.begin(), w.vertices.end(), [&](std::size_t v) { return v >= n0; });
    if (whisker || !is_induced_cycle(gc, w.vertices)) {
      std::string cyc;
      for (auto v : w.vertices) cyc += full.label(v) + " ";
      r.fail(g, params, "anticycle " + cyc + "of the colon graph", "an anticycle of G");
      return false;
    }
    return true;
  });

  const EvenConnectionSearch search(g, ee);
  std::vector<std::vector<int>> k(n0);
  for (std::size_t u = 0; u < n0; ++u) k[u] = search.max_k_row(u);
  std::mt19937_64 rng(opts.seed ^ std::hash<std::string>{}(serialize_instance(g) + params));
  std::vector<VertexSet> deletions{0};
  for (std::size_t i = 0; i < opts.deletion_samples; ++i) {
    VertexSet y = 0;
    for (std::size_t v = 0; v < n0; ++v) {
      if (rng() % 3 == 0) y |= bit(v);
    }
    deletions.push_back(y);
  }
  for (const VertexSet y : deletions) {
    int best = -1;
    for (std::size_t u = 0; u < n0; ++u) {
      for (std::size_t v = u; v < n0; ++v) {
        if (!has(y, u) && !has(y, v)) best = std::max(best, k[u][v]);
      }
    }
    if (best < 0) continue;
    for (std::size_t u = 0; u < n0; ++u) {
      for (std::size_t v = u; v < n0; ++v) {
        if (has(y, u) || has(y, v) || k[u][v] != best) continue;
        for (const std::size_t c : {u, v}) {
          ++r.checked;
          const VertexSet keep = full.all() & ~y & ~full.star(c);
          for (const auto& [a, b] : full.edges()) {
            if (!has(keep, a) || !has(keep, b)) continue;
            if (a >= n0 || b >= n0 || !g.adjacent(a, b)) {
              std::string ys;
              for_each_member(y, [&](std::size_t x) { ys += g.label(x) + " "; });
              r.fail(g, params + " Y={" + ys + "} centre=" + g.label(c),
                     "edge " + full.label(a) + "-" + full.label(b) + " survives", "only edges of G survive");
              break;
            }
          }
        }
      }
    }
  }
  return r;
}

VerificationReport verify_colon_chain(const Graph& g, unsigned s_max, const HarnessOptions& opts) {
  auto r = make_report("colon-chain", opts.oracle.field);
  Stopwatch watch(r);
  if (g.edge_count() == 0) {
    ++r.skipped;
    return r;
  }
  const MonomialIdeal i = edge_ideal(g);
  if (reg_of(i, opts.oracle) > 4) {
    ++r.skipped;
    return r;
  }
  MonomialIdeal is = i;
  for (unsigned s = 1; s < s_max; ++s) {
    const MonomialIdeal next = product(is, i);
    const bool premise = std::all_of(is.generators().begin(), is.generators().end(),
                                     [&](const Monomial& m) { return reg_of(colon(next, m), opts.oracle) <= 2; });
    if (!premise) {
      ++r.skipped;
      break;
    }
    const int reg = reg_of(next, opts.oracle);
    ++r.checked;
    if (reg != 2 * static_cast<int>(s) + 2) {
      r.fail(g, "s=" + num(s), "reg(I^" + num(s + 1) + ") = " + num(reg), num(2 * s + 2));
    }
    is = next;
  }
  return r;
}

VerificationReport verify_colon_characterizations(const Graph& g, unsigned s) {
  auto r = make_report("colon-characterization");
  Stopwatch watch(r);
  if (g.edge_count() == 0) {
    ++r.skipped;
    return r;
  }
  for (const auto& ee : edge_multisets(g, s)) {
    ++r.checked;
    const auto c = verify_colon_characterization(g, ee);
    if (!c.matches()) {
      const auto& ctx = *VariableContext::of_graph(g);
      std::string seen;
      for (const auto& m : c.unexplained) seen += " +" + format_monomial(m, ctx);
      for (const auto& m : c.spurious) seen += " -" + format_monomial(m, ctx);
      r.fail(g, "ee=" + ee.to_string(g), (c.degree_two ? "" : "non-quadratic generator;") + seen,
             "edges and even-connected pairs");
    }
  }
  return r;
}

VerificationReport verify_ordering(const Graph& g, const EdgeOrder& order, unsigned n) {
  auto r = make_report("ordering-property");
  Stopwatch watch(r);
  if (g.edge_count() == 0) {
    ++r.skipped;
    return r;
  }
  const GeneratorOrder go(g, order);
  const auto rep = go.verify_ordering_property(n);
  r.checked += rep.subset + rep.principal + rep.counterexamples;
  if (r.checked == 0) ++r.skipped;  // a single generator has no pairs
  for (const auto& c : rep.checks) {
    r.fail(g, "n=" + num(n) + " order=" + order.to_string(g) + " j=" + num(c.j) + " k=" + num(c.k), "counterexample",
           "subset or principal certificate");
  }
  return r;
}

VerificationReport verify_deletion_monotonicity(const Graph& g, const HarnessOptions& opts) {
  auto r = make_report("deletion-monotonicity", opts.oracle.field);
  Stopwatch watch(r);
  if (g.edge_count() == 0) {
    ++r.skipped;
    return r;
  }
  const MonomialIdeal i = edge_ideal(g);
  const int reg = reg_of(i, opts.oracle);
  for (std::size_t v = 0; v < g.size(); ++v) {
    const Graph h = g.without(bit(v));
    if (h.edge_count() > 0) {
      ++r.checked;
      const int rh = *edge_regularity(h, opts.oracle);
      if (rh > reg) r.fail(g, "delete " + g.label(v), "reg(G - v) = " + num(rh), "<= " + num(reg));
    }
    ++r.checked;
    const int rx = reg_of(add_generator(i, Monomial::variable(v)), opts.oracle);
    if (rx > reg) r.fail(g, "add variable " + g.label(v), "reg(I, x) = " + num(rx), "<= " + num(reg));
  }
  return r;
}

VerificationReport verify_colon_sum_bound(const Graph& g, const HarnessOptions& opts) {
  auto r = make_report("colon-sum-bound", opts.oracle.field);
  Stopwatch watch(r);
  if (g.edge_count() == 0) {
    ++r.skipped;
    return r;
  }
  const MonomialIdeal i = edge_ideal(g);
  const int reg = reg_of(i, opts.oracle);
  std::vector<Monomial> probes;
  for (std::size_t v = 0; v < g.size(); ++v) probes.push_back(Monomial::variable(v));
  for (std::size_t u = 0; u < g.size(); ++u) {
    for (std::size_t v = u; v < g.size(); ++v) {
      const Monomial m = Monomial::edge(u, v);
      if (!i.contains(m)) probes.push_back(m);
    }
  }
  const VertexSet used = i.lcm().support();
  const auto& ctx = *i.context();
  for (const auto& m : probes) {
    const int rc = reg_of(colon(i, m), opts.oracle) + static_cast<int>(m.degree());
    const int rs = reg_of(add_generator(i, m), opts.oracle);
    ++r.checked;
    if (reg > std::max(rc, rs)) {
      r.fail(g, "m=" + format_monomial(m, ctx), "reg " + num(reg), "<= max(" + num(rc) + ", " + num(rs) + ")");
    }
    if (m.degree() == 1 && (m.support() & used) && reg != rc && reg != rs) {
      r.fail(g, "m=" + format_monomial(m, ctx), "reg " + num(reg), "one of " + num(rc) + ", " + num(rs));
    }
  }
  return r;
}

VerificationReport verify_vertex_split(const Graph& g, const HarnessOptions& opts) {
  auto r = make_report("vertex-split", opts.oracle.field);
  Stopwatch watch(r);
  if (g.edge_count() == 0) {
    ++r.skipped;
    return r;
  }
  const MonomialIdeal i = edge_ideal(g);
  const auto& ctx = i.context();
  const int reg = reg_of(i, opts.oracle);
  for (std::size_t x = 0; x < g.size(); ++x) {
    const std::string where = "x=" + g.label(x);
    const MonomialIdeal c = colon(i, Monomial::variable(x));
    const MonomialIdeal s = add_generator(i, Monomial::variable(x));
    ++r.checked;
    if (!(c == restricted_ideal(g, ctx, g.star(x), g.neighbors(x)))) {
      r.fail(g, where, "(I : x) = " + c.to_string(), "(I(G - st x), N(x))");
    }
    ++r.checked;
    if (!(s == restricted_ideal(g, ctx, bit(x), bit(x)))) {
      r.fail(g, where, "(I, x) = " + s.to_string(), "(I(G - x), x)");
    }
    const int rc = reg_of(c, opts.oracle) + 1;
    const int rs = reg_of(s, opts.oracle);
    ++r.checked;
    if (reg > std::max(rc, rs) || (reg != rc && reg != rs)) {
      r.fail(g, where, "reg " + num(reg), "<= and equal to one of " + num(rc) + ", " + num(rs));
    }
  }
  return r;
}

VerificationReport verify_max_degree_distance(const Graph& g) {
  auto r = make_report("max-degree-distance");
  Stopwatch watch(r);
  const auto rep = check_max_degree_distance(g);
  if (!rep.precondition_met) {
    ++r.skipped;
    return r;
  }
  ++r.checked;
  if (!rep.holds) {
    r.fail(g, "centre " + g.label(rep.violation->first),
           "d(" + g.label(rep.violation->first) + ", " + g.label(rep.violation->second) + ") > 2", "<= 2");
  }
  return r;
}

VerificationReport verify_claw_cricket(const Graph& g) {
  auto r = make_report("claw-cricket");
  Stopwatch watch(r);
  if (!is_n_claw_free(g, 3).holds) {
    ++r.skipped;
    return r;
  }
  ++r.checked;
  const auto c = is_cricket_free(g);
  if (!c.holds) r.fail(g, "", "claw-free graph with a cricket", "cricket-free");
  return r;
}

VerificationReport verify_order_observations(const Graph& g, const EdgeOrder& order, unsigned n) {
  auto r = make_report("order-observations");
  Stopwatch watch(r);
  if (g.edge_count() == 0 || n < 2) {
    ++r.skipped;
    return r;
  }
  const GeneratorOrder go(g, order);
  const auto cur = go.ordered_generators(n);
  const auto prev = go.ordered_generators(n - 1);
  std::unordered_map<Monomial, std::size_t, MonomialHash> rank, rank_prev;
  for (std::size_t i = 0; i < cur.list.size(); ++i) rank[cur.list[i]] = i;
  for (std::size_t i = 0; i < prev.list.size(); ++i) rank_prev[prev.list[i]] = i;
  const auto& ctx = *go.ideal().context();
  const std::string params = "n=" + num(n) + " order=" + order.to_string(g);
  auto name = [&](const Monomial& m) { return format_monomial(m, ctx); };

  const std::size_t total = cur.list.size();
  for (std::size_t a = 0; a < total; ++a) {
    for (std::size_t b = a + 1; b < total; ++b) {
      // a precedes b in L^(n).
      const std::size_t ba = cur.expressions[a].factors.front();
      const std::size_t bb = cur.expressions[b].factors.front();
      ++r.checked;
      if (ba > bb) {
        r.fail(g, params, name(cur.list[a]) + " > " + name(cur.list[b]) + " but belongs later",
               "earlier edge first");
      }
      if (ba == bb) {
        const Monomial& e = order.monomial(ba);
        ++r.checked;
        if (rank_prev.at(cur.list[a] / e) > rank_prev.at(cur.list[b] / e)) {
          r.fail(g, params, "quotients of " + name(cur.list[a]) + ", " + name(cur.list[b]) + " reverse",
                 "same order after dividing by the shared edge");
        }
      }
    }
  }
  for (std::size_t a = 0; a < total; ++a) {
    const Monomial& m = cur.list[a];
    auto factors = cur.expressions[a].factors;
    factors.erase(std::unique(factors.begin(), factors.end()), factors.end());
    for (const auto f : factors) {
      const Monomial& e = order.monomial(f);
      const Monomial rest = m / e;
      const std::size_t limit = rank_prev.at(rest);
      for (std::size_t q = 0; q < limit; ++q) {
        ++r.checked;
        if (rank.at(e * prev.list[q]) >= a) {
          r.fail(g, params, name(e) + "*" + name(prev.list[q]) + " does not precede " + name(m),
                 "replacing the cofactor by a larger one moves earlier");
        }
      }
    }
  }
  return r;
}

VerificationReport verify_oracle_agreement(const MonomialIdeal& ideal, const HarnessOptions& opts) {
  auto r = make_report("oracle-agreement", opts.oracle.field);
  Stopwatch watch(r);
  if (!ideal.is_regular_input() || ideal.size() > kTaylorMaxGenerators) {
    ++r.skipped;
    return r;
  }
  const BettiTable h = hochster_betti(polarize(ideal).ideal, opts.oracle);
  const BettiTable t = taylor_betti(ideal, opts.oracle);
  ++r.checked;
  if (!(h == t)) {
    r.failures.push_back(Failure{ideal.to_string(), "", "hochster:\n" + h.render(), "taylor:\n" + t.render()});
  }
  return r;
}

bool ClassFilter::accepts(const Graph& g) const {
  if (require_edges && g.edge_count() == 0) return false;
  if (gap_free && !is_gap_free(g).holds) return false;
  if (cricket_free && !is_cricket_free(g).holds) return false;
  if (complement_chordal && !eir::complement_chordal(g).holds) return false;
  if (claw_free && !is_n_claw_free(g, *claw_free).holds) return false;
  return true;
}

SampleResult random_graph_in_class(std::size_t n, const ClassFilter& filter, std::uint64_t seed, double p,
                                   std::size_t budget) {
  if (n < 2) throw InputError("random_graph_in_class needs n >= 2");
  if (n > kMaxVertices) throw ResourceLimit("random_graph_in_class: too many vertices");
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  const auto threshold = static_cast<std::uint64_t>(p * static_cast<double>(std::uint64_t{1} << 53));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(default_label(i));
  SampleResult out;
  while (out.attempts < budget) {
    ++out.attempts;
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) {
        if ((rng() >> 11) < threshold) edges.emplace_back(u, v);
      }
    }
    Graph g(labels, edges);
    if (filter.accepts(g)) {
      out.graph = std::move(g);
      return out;
    }
  }
  return out;
}

MonomialIdeal random_monomial_ideal(std::mt19937_64& rng, std::size_t variables, std::size_t max_generators,
                                    unsigned max_exponent) {
  if (variables == 0 || variables > kMaxVariables || max_generators == 0 || max_exponent == 0) {
    throw InputError("random_monomial_ideal: bad parameters");
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < variables; ++i) names.push_back(default_label(i));
  auto ctx = VariableContext::make(std::move(names));
  std::uniform_int_distribution<std::size_t> count(1, max_generators);
  std::uniform_int_distribution<unsigned> expo(0, max_exponent);
  std::vector<Monomial> gens;
  const std::size_t m = count(rng);
  while (gens.size() < m) {
    std::vector<unsigned> e(variables);
    for (auto& x : e) x = expo(rng);
    Monomial g = Monomial::from_exponents(e);
    if (!g.is_one()) gens.push_back(g);
  }
  return MonomialIdeal(ctx, std::move(gens));
}

std::vector<EdgeProduct> edge_multisets(const Graph& g, unsigned s) {
  const auto edges = g.edges();
  std::vector<EdgeProduct> out;
  if (s == 0 || edges.empty()) return out;
  std::vector<std::size_t> idx(s, 0);
  while (true) {
    std::vector<Edge> f;
    for (auto i : idx) f.push_back(edges[i]);
    out.emplace_back(g, std::move(f));
    int pos = static_cast<int>(s) - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == edges.size() - 1) --pos;
    if (pos < 0) break;
    const std::size_t next = idx[static_cast<std::size_t>(pos)] + 1;
    for (auto q = static_cast<std::size_t>(pos); q < s; ++q) idx[q] = next;
  }
  return out;
}

EdgeOrder random_edge_order(const Graph& g, std::mt19937_64& rng) {
  auto edges = g.edges();
  std::shuffle(edges.begin(), edges.end(), rng);
  return EdgeOrder(g, std::move(edges));
}

HuntResult hunt(const std::vector<Graph>& graphs, unsigned s_max, const OracleOptions& opts) {
  HuntResult out;
  for (const auto& g : graphs) {
    if (g.edge_count() == 0 || !is_gap_free(g).holds) continue;
    if (*edge_regularity(g, opts) > 3) continue;
    ++out.examined;
    for (unsigned s = 2; s <= s_max; ++s) {
      const int reg = power_regularity(g, s, opts);
      if (reg != 2 * static_cast<int>(s)) out.hits.push_back(HuntHit{g, s, reg});
    }
  }
  return out;
}

}  // namespace eir
