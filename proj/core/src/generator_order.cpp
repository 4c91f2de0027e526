#include "eir/generator_order.hpp"

#include <algorithm>
#include <sstream>

#include "eir/error.hpp"

namespace eir {

namespace {

std::vector<Monomial> edge_monomials(const std::vector<Edge>& edges) {
  std::vector<Monomial> out;
  out.reserve(edges.size());
  for (const auto& [u, v] : edges) out.push_back(Monomial::edge(u, v));
  return out;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

EdgeOrder::EdgeOrder(const Graph& g) : edges_(g.edges_by_label()), monomials_(edge_monomials(edges_)) {}

EdgeOrder::EdgeOrder(const Graph& g, std::vector<Edge> order) {
  std::vector<Edge> normal;
  for (auto [u, v] : order) {
    if (u >= g.size() || v >= g.size() || !g.adjacent(u, v)) {
      throw InputError("edge order lists a pair that is not an edge of the graph");
    }
    normal.emplace_back(std::min(u, v), std::max(u, v));
  }
  auto sorted = normal;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InputError("edge order lists an edge twice");
  }
  if (sorted.size() != g.edge_count()) {
    throw InputError("edge order lists " + std::to_string(sorted.size()) + " of " + std::to_string(g.edge_count()) +
                     " edges");
  }
  edges_ = std::move(normal);
  monomials_ = edge_monomials(edges_);
}

EdgeOrder EdgeOrder::parse(const Graph& g, std::string_view list) {
  std::vector<Edge> order;
  for (const auto& [a, b] : parse_edge_tokens(list)) order.emplace_back(g.index_of(a), g.index_of(b));
  return EdgeOrder(g, std::move(order));
}

std::optional<std::size_t> EdgeOrder::index_of(const Monomial& m) const {
  const auto it = std::find(monomials_.begin(), monomials_.end(), m);
  if (it == monomials_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - monomials_.begin());
}

std::string EdgeOrder::to_string(const Graph& g) const {
  std::string out;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i) out += " > ";
    out += g.label(edges_[i].first) + g.label(edges_[i].second);
  }
  return out;
}

LabelEdge parse_edge_token(std::string_view token) {
  const std::string t = trim(token);
  if (t.empty()) throw InputError("empty edge token");
  const auto dash = t.find('-');
  if (dash != std::string::npos) {
    std::string a = trim(std::string_view(t).substr(0, dash));
    std::string b = trim(std::string_view(t).substr(dash + 1));
    if (a.empty() || b.empty() || b.find('-') != std::string::npos) {
      throw InputError("malformed edge token '" + t + "'");
    }
    return {a, b};
  }
  if (t.size() == 2) return {t.substr(0, 1), t.substr(1, 1)};
  throw InputError("edge token '" + t + "' needs the form x-y (or xy for one-character labels)");
}

std::vector<LabelEdge> parse_edge_tokens(std::string_view list) {
  std::vector<LabelEdge> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    const auto comma = list.find(',', start);
    const auto piece = list.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (!trim(piece).empty()) out.push_back(parse_edge_token(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (out.empty()) throw InputError("empty edge list");
  return out;
}

std::string format_monomial_pretty(const Monomial& m, const VariableContext& ctx) {
  static const char* const kSuperscript[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  if (m.is_one()) return "1";
  std::string out;
  for (std::size_t v = 0; v < ctx.size(); ++v) {
    const unsigned e = m[v];
    if (e == 0) continue;
    out += ctx.name(v);
    if (e > 1) {
      for (char digit : std::to_string(e)) out += kSuperscript[digit - '0'];
    }
  }
  return out;
}

std::string OrderedGenerators::summary(const VariableContext& ctx) const {
  std::string out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (i) out += " > ";
    out += format_monomial(list[i], ctx);
  }
  return out;
}

std::string OrderedGenerators::pretty_summary(const VariableContext& ctx) const {
  std::string out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (i) out += " > ";
    out += format_monomial_pretty(list[i], ctx);
  }
  return out;
}

std::string OrderingReport::render() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << c.j << ' ' << c.k << " -> ";
    switch (c.outcome) {
      case OrderingCheck::Outcome::Subset: os << "subset"; break;
      case OrderingCheck::Outcome::Principal: os << "principal:" << c.certificate; break;
      case OrderingCheck::Outcome::Counterexample: os << "counterexample"; break;
    }
    os << '\n';
  }
  return os.str();
}

GeneratorOrder::GeneratorOrder(const Graph& g, EdgeOrder order)
    : graph_(g), order_(std::move(order)), ideal_(edge_ideal(g)) {
  if (order_.size() != g.edge_count()) throw InputError("edge order does not match the graph");
}

const GeneratorOrder::PowerCache& GeneratorOrder::cache(unsigned n) const {
  std::lock_guard lock(mutex_);
  auto it = powers_.find(n);
  if (it != powers_.end()) return *it->second;
  auto entry = std::make_unique<PowerCache>();
  entry->ideal = eir::power(ideal_, n);
  entry->members.insert(entry->ideal.generators().begin(), entry->ideal.generators().end());
  return *powers_.emplace(n, std::move(entry)).first->second;
}

const MonomialIdeal& GeneratorOrder::power(unsigned n) const { return cache(n).ideal; }

bool GeneratorOrder::is_generator(const Monomial& m, unsigned n) const {
  if (m.degree() != 2 * n) return false;
  return cache(n).members.count(m) != 0;
}

void GeneratorOrder::require_generator(const Monomial& m, unsigned n, const char* what) const {
  if (!is_generator(m, n)) {
    throw InputError(std::string(what) + ": " + format_monomial(m, *ideal_.context()) +
                     " is not a minimal generator of I^" + std::to_string(n));
  }
}

bool GeneratorOrder::edge_divides(const Monomial& m1, const Monomial& m2, unsigned k, unsigned n) const {
  if (n <= k) throw InputError("edge_divides needs n > k");
  require_generator(m1, k, "edge_divides");
  require_generator(m2, n, "edge_divides");
  if (!m1.divides(m2)) return false;
  return is_generator(m2 / m1, n - k);
}

MaximalExpression GeneratorOrder::maximal_expression(const Monomial& m, unsigned n) const {
  require_generator(m, n, "maximal_expression");
  MaximalExpression out;
  out.exponents.assign(order_.size(), 0);
  Monomial rest = m;
  for (unsigned left = n; left > 0; --left) {
    bool found = false;
    for (std::size_t i = 0; i < order_.size(); ++i) {
      const Monomial& e = order_.monomial(i);
      if (e.divides(rest) && is_generator(rest / e, left - 1)) {
        out.factors.push_back(i);
        ++out.exponents[i];
        rest = rest / e;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("maximal_expression: generator has no edge factor");
  }
  return out;
}

std::size_t GeneratorOrder::belongs_to(const Monomial& m, unsigned n) const {
  return maximal_expression(m, n).factors.front();
}

std::strong_ordering GeneratorOrder::compare(const Monomial& a, const Monomial& b, unsigned n) const {
  if (a == b) {
    require_generator(a, n, "compare");
    return std::strong_ordering::equal;
  }
  const auto ea = maximal_expression(a, n);
  const auto eb = maximal_expression(b, n);
  for (std::size_t l = 0; l < n; ++l) {
    if (ea.factors[l] != eb.factors[l]) {
      return ea.factors[l] < eb.factors[l] ? std::strong_ordering::greater : std::strong_ordering::less;
    }
  }
  throw std::logic_error("distinct generators share a maximal expression");
}

OrderedGenerators GeneratorOrder::ordered_generators(unsigned n) const {
  if (n == 0) throw InputError("ordered_generators needs n >= 1");
  const auto& gens = power(n).generators();
  std::vector<std::pair<MaximalExpression, Monomial>> rows;
  rows.reserve(gens.size());
  for (const auto& g : gens) rows.emplace_back(maximal_expression(g, n), g);
  std::sort(rows.begin(), rows.end(),
            [](const auto& x, const auto& y) { return x.first.factors < y.first.factors; });
  OrderedGenerators out;
  out.n = n;
  for (auto& [e, m] : rows) {
    out.list.push_back(m);
    out.expressions.push_back(std::move(e));
  }
  return out;
}

std::vector<std::vector<unsigned>> GeneratorOrder::all_expressions(const Monomial& m, unsigned n) const {
  require_generator(m, n, "all_expressions");
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> current(order_.size(), 0);
  auto recurse = [&](auto&& self, const Monomial& rest, unsigned left, std::size_t from) -> void {
    if (left == 0) {
      if (rest.is_one()) out.push_back(current);
      return;
    }
    for (std::size_t i = from; i < order_.size(); ++i) {
      const Monomial& e = order_.monomial(i);
      if (!e.divides(rest)) continue;
      ++current[i];
      self(self, rest / e, left - 1, i);
      --current[i];
    }
  };
  recurse(recurse, m, n, 0);
  return out;
}

std::strong_ordering GeneratorOrder::compare_by_all_expressions(const Monomial& a, const Monomial& b,
                                                                unsigned n) const {
  const auto xs = all_expressions(a, n);
  const auto ys = all_expressions(b, n);
  auto dominates = [](const auto& p, const auto& q) {
    return std::any_of(p.begin(), p.end(), [&](const auto& x) {
      return std::all_of(q.begin(), q.end(), [&](const auto& y) { return x > y; });
    });
  };
  if (dominates(xs, ys)) return std::strong_ordering::greater;
  if (dominates(ys, xs)) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

OrderingReport GeneratorOrder::verify_ordering_property(unsigned n, bool keep_checks) const {
  if (n == 0) throw InputError("verify_ordering_property needs n >= 1");
  const auto ordered = ordered_generators(n);
  const auto& list = ordered.list;
  const MonomialIdeal& next = power(n + 1);
  OrderingReport report;
  report.n = n;
  report.generators = list.size();
  std::vector<Monomial> colons(list.size());
  for (std::size_t k = 1; k < list.size(); ++k) {
    const Monomial& target = list[k];  // L_{k+1} in 1-based terms
    const MonomialIdeal allowed = colon(next, target);
    for (std::size_t j = 0; j < k; ++j) colons[j] = list[j].colon(target);
    for (std::size_t j = 0; j < k; ++j) {
      OrderingCheck check{static_cast<unsigned>(j + 1), static_cast<unsigned>(k), OrderingCheck::Outcome::Subset, 0};
      if (allowed.contains(colons[j])) {
        ++report.subset;
      } else {
        std::optional<std::size_t> cert;
        for (std::size_t i = 0; i < k && !cert; ++i) {
          if (colons[i].degree() == 1 && colons[i].divides(colons[j])) cert = i;
        }
        if (cert) {
          check.outcome = OrderingCheck::Outcome::Principal;
          check.certificate = *cert + 1;
          ++report.principal;
        } else {
          check.outcome = OrderingCheck::Outcome::Counterexample;
          ++report.counterexamples;
        }
      }
      if (keep_checks || check.outcome == OrderingCheck::Outcome::Counterexample) report.checks.push_back(check);
    }
  }
  return report;
}

}  // namespace eir
