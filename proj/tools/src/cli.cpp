#include "eir/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "eir/catalog.hpp"
#include "eir/error.hpp"
#include "eir/even_connection.hpp"
#include "eir/generator_order.hpp"
#include "eir/graph.hpp"
#include "eir/graph_classes.hpp"
#include "eir/graph_io.hpp"
#include "eir/harness.hpp"
#include "eir/monomial.hpp"
#include "eir/parallel.hpp"
#include "eir/resolution.hpp"
#include "json.hpp"

namespace eir {
namespace {

using Json = nlohmann::ordered_json;

struct RunConfig {
  unsigned field = 2;
  std::uint64_t seed = 1;
  bool json = false;
  std::size_t max_vertices = 32;
  unsigned jobs = 1;
};

struct GraphSource {
  std::string file;
  std::string graph6;
  std::string edges;  // inline "a-b,c-d" or "ab,cd"
  std::optional<std::size_t> catalog;
  std::size_t random = 0;
  std::size_t vertices = 6;
  double p = 0.5;
  std::vector<std::string> classes;
};

struct IdealSource {
  std::string file;
  std::string text;
  bool given() const { return !file.empty() || !text.empty(); }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string field_name(unsigned c) { return c == 0 ? "Q" : "GF(" + std::to_string(c) + ")"; }

ClassFilter parse_filter(const std::vector<std::string>& names) {
  ClassFilter f;
  for (const auto& name : names) {
    if (name == "gap_free") {
      f.gap_free = true;
    } else if (name == "cricket_free") {
      f.cricket_free = true;
    } else if (name == "complement_chordal") {
      f.complement_chordal = true;
    } else if (name.size() > 10 && name.ends_with("_claw_free")) {
      const auto digits = name.substr(0, name.size() - 10);
      if (!std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw InputError("unknown graph class '" + name + "'");
      }
      f.claw_free = static_cast<unsigned>(std::stoul(digits));
    } else {
      throw InputError("unknown graph class '" + name + "'");
    }
  }
  return f;
}

std::vector<Graph> load_graphs(const GraphSource& src, const RunConfig& cfg, bool default_catalog) {
  const int sources =
      !src.file.empty() + !src.graph6.empty() + !src.edges.empty() + src.catalog.has_value() + (src.random > 0);
  if (sources > 1) throw InputError("give at most one graph source");
  std::vector<Graph> graphs;
  if (!src.file.empty()) {
    graphs.push_back(read_edge_list(src.file));
  } else if (!src.graph6.empty()) {
    graphs.push_back(read_graph6(src.graph6));
  } else if (!src.edges.empty()) {
    const auto edges = parse_edge_tokens(src.edges);
    graphs.push_back(Graph::from_edges(edges));
  } else if (src.random > 0) {
    const ClassFilter filter = parse_filter(src.classes);
    for (std::size_t i = 0; i < src.random; ++i) {
      auto sample = random_graph_in_class(src.vertices, filter, cfg.seed + i, src.p);
      if (!sample.graph) throw ResourceLimit("sampling budget exhausted for graph " + std::to_string(i));
      graphs.push_back(std::move(*sample.graph));
    }
  } else if (src.catalog || default_catalog) {
    const std::size_t n = src.catalog.value_or(6);
    if (n > 6) throw ResourceLimit("the catalog covers graphs on at most 6 vertices");
    graphs = graphs_up_to(n);
  } else {
    throw InputError("no graph given");
  }
  for (const auto& g : graphs) {
    if (g.size() > cfg.max_vertices) {
      throw ResourceLimit("graph has " + std::to_string(g.size()) + " vertices, cap is " +
                          std::to_string(cfg.max_vertices));
    }
  }
  return graphs;
}

Graph load_one_graph(const GraphSource& src, const RunConfig& cfg) {
  auto graphs = load_graphs(src, cfg, false);
  if (graphs.size() != 1) throw InputError("this command takes a single graph");
  return std::move(graphs.front());
}

MonomialIdeal load_ideal(const IdealSource& src) {
  if (!src.file.empty() && !src.text.empty()) throw InputError("give --ideal or --ideal-text, not both");
  if (!src.file.empty()) return parse_ideal(read_file(src.file));
  std::string text = src.text;
  std::replace(text.begin(), text.end(), ',', '\n');
  return parse_ideal(text);
}

MonomialIdeal input_ideal(const IdealSource& isrc, const GraphSource& gsrc, const RunConfig& cfg) {
  if (isrc.given()) return load_ideal(isrc);
  return edge_ideal(load_one_graph(gsrc, cfg));
}

OracleOptions oracle_options(const RunConfig& cfg) {
  OracleOptions o;
  o.field = FieldChoice{cfg.field};
  o.jobs = cfg.jobs;
  return o;
}

Json label_list(const Graph& g, const std::vector<std::size_t>& vs) {
  Json a = Json::array();
  for (auto v : vs) a.push_back(g.label(v));
  return a;
}

Json edge_pairs(const Graph& g) {
  Json a = Json::array();
  for (const auto& [u, v] : g.edges()) a.push_back(Json::array({g.label(u), g.label(v)}));
  return a;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

Json table_json(const BettiTable& t) {
  Json entries = Json::array();
  for (const auto& [ij, count] : t.entries()) entries.push_back(Json::array({ij.first, ij.second, count}));
  return entries;
}

// classify

struct ClassifyArgs {
  unsigned claw = 3;
};

int cmd_classify(const GraphSource& src, const ClassifyArgs& a, const RunConfig& cfg, std::ostream& out) {
  const auto graphs = load_graphs(src, cfg, false);
  Json all = Json::array();
  for (const auto& g : graphs) {
    const std::vector<ClassReport> reports = {is_gap_free(g), is_n_claw_free(g, a.claw), is_cricket_free(g),
                                              complement_chordal(g)};
    if (cfg.json) {
      Json classes = Json::array();
      for (const auto& r : reports) {
        classes.push_back({{"name", r.name()}, {"holds", r.holds}, {"witness", label_list(g, r.witness)}});
      }
      all.push_back({{"instance", serialize_instance(g)}, {"classes", classes}});
      continue;
    }
    if (graphs.size() > 1) out << serialize_instance(g) << '\n';
    for (const auto& r : reports) {
      out << r.name() << ": " << (r.holds ? "yes" : "no");
      if (!r.holds) {
        out << " (";
        for (std::size_t i = 0; i < r.witness.size(); ++i) out << (i ? " " : "") << g.label(r.witness[i]);
        out << ')';
      }
      out << '\n';
    }
  }
  if (cfg.json) emit(out, Json{{"graphs", all}});
  return kExitPass;
}

// reg, power-reg

struct RegArgs {
  std::string route = "auto";
  bool cross_check = false;
  unsigned s = 1;
};

int report_regularity(const MonomialIdeal& ideal, const RegArgs& a, const RunConfig& cfg, std::ostream& out,
                      std::optional<unsigned> power) {
  const auto rep = regularity_report(ideal, parse_route(a.route), oracle_options(cfg), a.cross_check);
  if (cfg.json) {
    Json j;
    j["field"] = cfg.field;
    if (power) j["s"] = *power;
    j["route"] = to_string(rep.route);
    j["reg"] = rep.regularity;
    j["pd"] = rep.table.projective_dimension();
    j["entries"] = table_json(rep.table);
    if (rep.taylor_regularity) j["taylor_reg"] = *rep.taylor_regularity;
    emit(out, j);
    return kExitPass;
  }
  out << "field: " << field_name(cfg.field) << '\n';
  if (power) out << "s: " << *power << '\n';
  out << "route: " << to_string(rep.route) << '\n';
  out << "reg: " << rep.regularity << '\n';
  out << "pd: " << rep.table.projective_dimension() << '\n';
  if (rep.taylor_regularity) out << "taylor reg: " << *rep.taylor_regularity << '\n';
  out << rep.table.render();
  return kExitPass;
}

// colon-graph

int cmd_colon_graph(const GraphSource& src, const std::string& product, const RunConfig& cfg, std::ostream& out) {
  if (product.empty()) throw InputError("colon-graph needs --edges e1,e2,...");
  const Graph g = load_one_graph(src, cfg);
  const EdgeProduct ee = EdgeProduct::parse(g, product);
  const ColonGraph cg = colon_graph(g, ee);
  const EvenConnectionSearch search(g, ee);
  std::vector<std::pair<Edge, EvenConnectionWitness>> witnesses;
  for (const auto& [u, v] : even_connected_pairs(g, ee)) {
    if (u != v && g.adjacent(u, v)) continue;
    witnesses.emplace_back(Edge{u, v}, *search.shortest(u, v));
  }
  const Graph& full = cg.full;
  if (cfg.json) {
    Json whiskers = Json::array();
    for (const auto& [u, w] : cg.whiskers) whiskers.push_back(Json::array({full.label(u), full.label(w)}));
    Json wit = Json::array();
    for (const auto& [e, w] : witnesses) {
      Json factors = Json::array();
      for (auto f : w.factors) factors.push_back(f + 1);
      wit.push_back(
          {{"u", g.label(e.first)}, {"v", g.label(e.second)}, {"walk", label_list(g, w.walk)}, {"factors", factors}});
    }
    emit(out, Json{{"product", ee.to_string(g)},
                   {"vertices", full.labels()},
                   {"edges", edge_pairs(full)},
                   {"whiskers", whiskers},
                   {"witnesses", wit}});
    return kExitPass;
  }
  out << "# colon graph for " << ee.to_string(g) << '\n';
  out << write_edge_list(full);
  for (const auto& [u, w] : cg.whiskers) out << "# whisker " << full.label(u) << ' ' << full.label(w) << '\n';
  for (const auto& [e, w] : witnesses) out << "# witness " << w.serialize(g) << '\n';
  return kExitPass;
}

// order

struct OrderArgs {
  unsigned n = 2;
  std::string base;
  bool pretty = false;
  bool expressions = false;
  bool check = false;
};

int cmd_order(const GraphSource& src, const OrderArgs& a, const RunConfig& cfg, std::ostream& out) {
  if (a.n == 0) throw InputError("--n must be at least 1");
  const Graph g = load_one_graph(src, cfg);
  if (g.edge_count() == 0) throw InputError("order needs a graph with edges");
  const EdgeOrder order = a.base.empty() ? EdgeOrder(g) : EdgeOrder::parse(g, a.base);
  const GeneratorOrder go(g, order);
  const auto listed = go.ordered_generators(a.n);
  const auto& ctx = *go.ideal().context();
  std::optional<OrderingReport> check;
  if (a.check) check = go.verify_ordering_property(a.n, true);

  const auto expression_text = [&](const MaximalExpression& e) {
    std::string s;
    for (std::size_t i = 0; i < e.exponents.size(); ++i) {
      if (e.exponents[i] == 0) continue;
      if (!s.empty()) s += " * ";
      s += "(" + format_monomial(order.monomial(i), ctx) + ")";
      if (e.exponents[i] > 1) s += "^" + std::to_string(e.exponents[i]);
    }
    return s;
  };

  if (cfg.json) {
    Json gens = Json::array();
    for (std::size_t i = 0; i < listed.list.size(); ++i) {
      const auto& e = listed.expressions[i];
      Json expr = Json::array();
      for (std::size_t k = 0; k < e.exponents.size(); ++k) {
        if (e.exponents[k] == 0) continue;
        expr.push_back({{"edge", format_monomial(order.monomial(k), ctx)}, {"exponent", e.exponents[k]}});
      }
      gens.push_back({{"monomial", format_monomial(listed.list[i], ctx)}, {"expression", expr}});
    }
    Json j{{"n", a.n}, {"order", order.to_string(g)}, {"summary", listed.summary(ctx)}, {"generators", gens}};
    if (check) {
      j["check"] = {
          {"subset", check->subset}, {"principal", check->principal}, {"counterexamples", check->counterexamples}};
    }
    emit(out, j);
  } else {
    out << (a.pretty ? listed.pretty_summary(ctx) : listed.summary(ctx)) << '\n';
    if (a.expressions) {
      for (std::size_t i = 0; i < listed.list.size(); ++i) {
        out << i + 1 << ": " << format_monomial(listed.list[i], ctx) << " = " << expression_text(listed.expressions[i])
            << '\n';
      }
    }
    if (check) {
      out << check->render();
      out << "subset " << check->subset << ", principal " << check->principal << ", counterexamples "
          << check->counterexamples << '\n';
    }
  }
  return check && !check->passed() ? kExitFailure : kExitPass;
}

// verify

struct VerifyArgs {
  std::string check;
  std::optional<unsigned> s;
  std::optional<unsigned> n;
  std::string base;  // fixed edge order for the order checks
  std::size_t orders = 5;
  std::size_t count = 200;
  std::size_t variables = 5;
  std::size_t max_generators = 12;
  unsigned max_exponent = 3;
  std::size_t samples = 8;
};

using GraphCheck = std::function<VerificationReport(const Graph&, std::mt19937_64&, const HarnessOptions&)>;

std::map<std::string, GraphCheck> graph_checks(const VerifyArgs& a) {
  const auto per_s = [](auto f) {
    return [f](unsigned s_max) {
      return GraphCheck([f, s_max](const Graph& g, std::mt19937_64& rng, const HarnessOptions& o) {
        VerificationReport total;
        for (unsigned s = 1; s <= s_max; ++s) {
          auto r = f(g, s, rng, o);
          total.check = r.check;
          total.merge(r);
        }
        return total;
      });
    };
  };
  const unsigned s_given = a.s.value_or(0);
  const auto s_or = [&](unsigned d) { return s_given ? s_given : d; };
  const unsigned n_max = a.n.value_or(3);
  const std::string base = a.base;
  const std::size_t orders = a.orders;

  const auto order_check = [base, orders, n_max](auto f) {
    return GraphCheck([=](const Graph& g, std::mt19937_64& rng, const HarnessOptions&) {
      VerificationReport total;
      std::vector<EdgeOrder> list;
      if (g.edge_count() != 0) {
        if (!base.empty()) {
          list.push_back(EdgeOrder::parse(g, base));
        } else {
          for (std::size_t i = 0; i < orders; ++i) list.push_back(random_edge_order(g, rng));
        }
      }
      for (const auto& order : list) {
        for (unsigned n = 1; n <= n_max; ++n) {
          auto r = f(g, order, n);
          total.check = r.check;
          total.merge(r);
        }
      }
      if (list.empty()) ++total.skipped;
      return total;
    });
  };

  std::map<std::string, GraphCheck> m;
  const auto plain = [](auto f) {
    return GraphCheck([f](const Graph& g, std::mt19937_64&, const HarnessOptions& o) { return f(g, o); });
  };
  const auto bare = [](auto f) {
    return GraphCheck([f](const Graph& g, std::mt19937_64&, const HarnessOptions&) { return f(g); });
  };
  const auto with_s = [](auto f, unsigned s) {
    return GraphCheck([f, s](const Graph& g, std::mt19937_64&, const HarnessOptions& o) { return f(g, s, o); });
  };

  m["gap-free-bounds"] = plain([](const Graph& g, const HarnessOptions& o) { return verify_gap_free_bounds(g, o); });
  m["power-colon-bound"] = per_s([](const Graph& g, unsigned s, std::mt19937_64&, const HarnessOptions& o) {
    return verify_power_colon_bound(g, s, o);
  })(s_or(2));
  m["linear-powers"] = with_s(
      [](const Graph& g, unsigned s, const HarnessOptions& o) { return verify_linear_powers(g, s, o); }, s_or(3));
  m["gap-cricket-powers"] = with_s(
      [](const Graph& g, unsigned s, const HarnessOptions& o) { return verify_gap_cricket_powers(g, s, o); }, s_or(3));
  m["gap-free-power-bound"] =
      with_s([](const Graph& g, unsigned s, const HarnessOptions& o) { return verify_gap_free_power_bound(g, s, o); },
             s_or(2));
  m["colon-graph-structure"] = per_s([](const Graph& g, unsigned s, std::mt19937_64&, const HarnessOptions& o) {
    VerificationReport total;
    total.check = "colon-graph-structure";
    if (g.edge_count() == 0) {
      ++total.skipped;
      return total;
    }
    for (const auto& ee : edge_multisets(g, s)) total.merge(verify_structure_lemmas(g, ee, o));
    return total;
  })(s_or(2));
  m["colon-chain"] =
      with_s([](const Graph& g, unsigned s, const HarnessOptions& o) { return verify_colon_chain(g, s, o); }, s_or(3));
  m["colon-characterization"] = per_s([](const Graph& g, unsigned s, std::mt19937_64&, const HarnessOptions&) {
    return verify_colon_characterizations(g, s);
  })(s_or(2));
  m["ordering-property"] =
      order_check([](const Graph& g, const EdgeOrder& o, unsigned n) { return verify_ordering(g, o, n); });
  m["order-observations"] =
      order_check([](const Graph& g, const EdgeOrder& o, unsigned n) { return verify_order_observations(g, o, n); });
  m["deletion-monotonicity"] =
      plain([](const Graph& g, const HarnessOptions& o) { return verify_deletion_monotonicity(g, o); });
  m["colon-sum-bound"] = plain([](const Graph& g, const HarnessOptions& o) { return verify_colon_sum_bound(g, o); });
  m["vertex-split"] = plain([](const Graph& g, const HarnessOptions& o) { return verify_vertex_split(g, o); });
  m["max-degree-distance"] = bare([](const Graph& g) { return verify_max_degree_distance(g); });
  m["claw-cricket"] = bare([](const Graph& g) { return verify_claw_cricket(g); });
  return m;
}

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids = {
      "gap-free-bounds",      "power-colon-bound",     "linear-powers",         "gap-cricket-powers",
      "gap-free-power-bound", "colon-graph-structure", "colon-chain",           "colon-characterization",
      "ordering-property",    "order-observations",    "deletion-monotonicity", "colon-sum-bound",
      "vertex-split",         "max-degree-distance",   "claw-cricket",          "oracle-agreement"};
  return ids;
}

Json failure_json(const Failure& f) {
  return {{"instance", f.instance}, {"parameters", f.parameters}, {"observed", f.observed}, {"expected", f.expected}};
}

int cmd_verify(const GraphSource& src, const VerifyArgs& a, const RunConfig& cfg, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  HarnessOptions opts;
  opts.oracle = oracle_options(cfg);
  opts.oracle.jobs = 1;  // parallelism goes over instances
  opts.deletion_samples = a.samples;
  opts.seed = cfg.seed;

  VerificationReport report;
  report.check = a.check;
  report.field = FieldChoice{cfg.field};

  std::vector<VerificationReport> parts;
  if (a.check == "oracle-agreement") {
    if (a.variables == 0 || a.max_generators == 0) throw InputError("oracle-agreement needs variables and generators");
    std::mt19937_64 rng(cfg.seed);
    std::vector<MonomialIdeal> ideals;
    for (std::size_t i = 0; i < a.count; ++i) {
      ideals.push_back(random_monomial_ideal(rng, a.variables, a.max_generators, a.max_exponent));
    }
    parts.resize(ideals.size());
    parallel_for(ideals.size(), cfg.jobs, [&](unsigned, std::size_t i) {
      auto o = opts;
      o.seed = cfg.seed + i;
      parts[i] = verify_oracle_agreement(ideals[i], o);
    });
  } else {
    const auto checks = graph_checks(a);
    const auto it = checks.find(a.check);
    if (it == checks.end()) throw InputError("unknown check '" + a.check + "'");
    const auto graphs = load_graphs(src, cfg, true);
    parts.resize(graphs.size());
    parallel_for(graphs.size(), cfg.jobs, [&](unsigned, std::size_t i) {
      std::seed_seq seq{cfg.seed, static_cast<std::uint64_t>(i)};
      std::mt19937_64 rng(seq);
      auto o = opts;
      o.seed = cfg.seed + i;
      parts[i] = it->second(graphs[i], rng, o);
    });
  }
  for (const auto& p : parts) report.merge(p);
  report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (cfg.json) {
    Json failures = Json::array();
    for (const auto& f : report.failures) failures.push_back(failure_json(f));
    emit(out, Json{{"theorem", report.check},
                   {"checked", report.checked},
                   {"skipped", report.skipped},
                   {"failures", failures},
                   {"seed", cfg.seed},
                   {"field", cfg.field},
                   {"elapsed_ms", report.elapsed_ms}});
  } else {
    out << "check: " << report.check << '\n'
        << "field: " << field_name(cfg.field) << '\n'
        << "seed: " << cfg.seed << '\n'
        << "checked: " << report.checked << '\n'
        << "skipped: " << report.skipped << '\n'
        << "failures: " << report.failures.size() << '\n';
    for (const auto& f : report.failures) {
      out << "  " << f.instance << " [" << f.parameters << "] observed " << f.observed << ", expected " << f.expected
          << '\n';
    }
    out << "elapsed_ms: " << static_cast<long long>(report.elapsed_ms) << '\n';
    out << (report.passed() ? "PASS" : "FAIL") << '\n';
  }
  return report.passed() ? kExitPass : kExitFailure;
}

// hunt

int cmd_hunt(const GraphSource& src, unsigned s_max, const RunConfig& cfg, std::ostream& out) {
  const auto graphs = load_graphs(src, cfg, true);
  const auto result = hunt(graphs, s_max, oracle_options(cfg));
  if (cfg.json) {
    Json hits = Json::array();
    for (const auto& h : result.hits) {
      hits.push_back({{"instance", serialize_instance(h.graph)}, {"s", h.s}, {"reg", h.regularity}});
    }
    emit(out, Json{{"examined", result.examined}, {"s_max", s_max}, {"field", cfg.field}, {"hits", hits}});
  } else {
    out << "examined: " << result.examined << '\n' << "hits: " << result.hits.size() << '\n';
    for (const auto& h : result.hits) {
      out << "  " << serialize_instance(h.graph) << " s=" << h.s << " reg=" << h.regularity << '\n';
    }
  }
  return kExitPass;
}

void add_graph_source(CLI::App* sub, GraphSource& src, bool with_edges) {
  sub->add_option("file", src.file, "Edge-list file");
  sub->add_option("--graph6", src.graph6, "Graph in graph6 encoding");
  sub->add_option(with_edges ? "--graph" : "--graph,--edges", src.edges, "Inline edges, e.g. ab,bc or a-b,b-c");
  sub->add_option("--catalog", src.catalog, "All graphs on at most N vertices (N <= 6)");
  sub->add_option("--random", src.random, "Number of random graphs");
  sub->add_option("--vertices", src.vertices, "Vertices per random graph")->capture_default_str();
  sub->add_option("--p", src.p, "Edge probability for random graphs")->capture_default_str();
  sub->add_option("--class", src.classes,
                  "Class filter for random graphs (gap_free, cricket_free, "
                  "complement_chordal, <n>_claw_free)")
      ->delimiter(',');
}

void add_ideal_source(CLI::App* sub, IdealSource& src) {
  sub->add_option("--ideal", src.file, "Monomial ideal file, one generator per line");
  sub->add_option("--ideal-text", src.text, "Generators separated by commas, e.g. a^2*b,b*c");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Regularity of edge ideal powers: experiments and checks", "eir"};
  app.fallthrough();
  app.require_subcommand(1);

  RunConfig cfg;
  app.add_option("--field", cfg.field, "Field characteristic (0 or a prime)")
      ->envname("EIR_FIELD")
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "Random seed")->envname("EIR_SEED")->capture_default_str();
  app.add_flag("--json", cfg.json, "JSON output")->envname("EIR_JSON");
  app.add_option("--max-vertices", cfg.max_vertices, "Vertex cap for input graphs")
      ->envname("EIR_MAX_VERTICES")
      ->capture_default_str();
  app.add_option("--jobs", cfg.jobs, "Worker threads (0 = all cores)")->envname("EIR_JOBS")->capture_default_str();

  GraphSource gsrc;
  IdealSource isrc;

  auto* classify = app.add_subcommand("classify", "Class membership with witnesses");
  ClassifyArgs classify_args;
  add_graph_source(classify, gsrc, false);
  classify->add_option("--claw", classify_args.claw, "Claw size n for n-claw-free")->capture_default_str();

  RegArgs reg_args;
  auto* reg = app.add_subcommand("reg", "Regularity and Betti table");
  add_graph_source(reg, gsrc, false);
  add_ideal_source(reg, isrc);
  reg->add_option("--route", reg_args.route, "auto, hochster, taylor or koszul")->capture_default_str();
  reg->add_flag("--cross-check", reg_args.cross_check, "Also run the Taylor oracle and compare");

  auto* power_reg = app.add_subcommand("power-reg", "Regularity of the s-th power");
  add_graph_source(power_reg, gsrc, false);
  add_ideal_source(power_reg, isrc);
  power_reg->add_option("--s", reg_args.s, "Power")->required();
  power_reg->add_option("--route", reg_args.route, "auto, hochster, taylor or koszul")->capture_default_str();
  power_reg->add_flag("--cross-check", reg_args.cross_check, "Also run the Taylor oracle and compare");

  std::string product;
  auto* colon = app.add_subcommand("colon-graph", "Colon graph of (I^{s+1} : e1...es)");
  add_graph_source(colon, gsrc, true);
  colon->add_option("--edges", product, "The s-fold product, e.g. xw or xy,wz")->required();

  OrderArgs order_args;
  auto* order = app.add_subcommand("order", "Ordered minimal generators of I^n");
  add_graph_source(order, gsrc, true);
  order->add_option("--n", order_args.n, "Power")->capture_default_str();
  order->add_option("--edges", order_args.base, "Base edge order, greatest first (default: by label)");
  order->add_flag("--pretty", order_args.pretty, "Superscript exponents");
  order->add_flag("--expressions", order_args.expressions, "Print maximal expressions");
  order->add_flag("--check", order_args.check, "Check the ordering property");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run a property check over a corpus");
  verify->add_option("check", verify_args.check, "Check id")->required()->check(CLI::IsMember(check_ids()));
  add_graph_source(verify, gsrc, true);
  verify->add_option("--s", verify_args.s, "Power or product size bound");
  verify->add_option("--n", verify_args.n, "Largest power for the order checks");
  verify->add_option("--edges", verify_args.base, "Fixed base edge order for the order checks");
  verify->add_option("--orders", verify_args.orders, "Random edge orders per graph")->capture_default_str();
  verify->add_option("--count", verify_args.count, "Random ideals for oracle-agreement")->capture_default_str();
  verify->add_option("--variables", verify_args.variables, "Variables per random ideal")->capture_default_str();
  verify->add_option("--max-generators", verify_args.max_generators, "Generators per random ideal")
      ->capture_default_str();
  verify->add_option("--max-exponent", verify_args.max_exponent, "Exponent bound for random ideals")
      ->capture_default_str();
  verify->add_option("--samples", verify_args.samples, "Deletion sets per instance")->capture_default_str();

  unsigned hunt_s = 3;
  auto* hunt_cmd = app.add_subcommand("hunt", "Search gap-free graphs with reg <= 3 for non-linear powers");
  add_graph_source(hunt_cmd, gsrc, true);
  hunt_cmd->add_option("--s", hunt_s, "Largest power")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "eir: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    FieldChoice{cfg.field}.validate();
    if (cfg.max_vertices == 0) throw InputError("--max-vertices must be positive");
    if (*classify) return cmd_classify(gsrc, classify_args, cfg, out);
    if (*reg) return report_regularity(input_ideal(isrc, gsrc, cfg), reg_args, cfg, out, std::nullopt);
    if (*power_reg) {
      if (reg_args.s == 0) throw InputError("--s must be at least 1");
      return report_regularity(power(input_ideal(isrc, gsrc, cfg), reg_args.s), reg_args, cfg, out, reg_args.s);
    }
    if (*colon) return cmd_colon_graph(gsrc, product, cfg, out);
    if (*order) return cmd_order(gsrc, order_args, cfg, out);
    if (*verify) return cmd_verify(gsrc, verify_args, cfg, out);
    if (*hunt_cmd) return cmd_hunt(gsrc, hunt_s, cfg, out);
  } catch (const InputError& e) {
    err << "eir: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceLimit& e) {
    err << "eir: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::exception& e) {
    err << "eir: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace eir
