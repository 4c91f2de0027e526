#include "eir/monomial.hpp"

#include <algorithm>
#include <cstring>
#include <sstream>
#include <unordered_set>

#include "eir/error.hpp"

namespace eir {

namespace {

std::uint8_t checked_exponent(unsigned e) {
  if (e > 255) throw ResourceLimit("monomial exponent exceeds 255");
  return static_cast<std::uint8_t>(e);
}

void check_var(std::size_t var) {
  if (var >= kMaxVariables) {
    throw ResourceLimit("variable index " + std::to_string(var) + " exceeds the " +
                        std::to_string(kMaxVariables) + "-variable limit");
  }
}

}  // namespace

Monomial Monomial::variable(std::size_t var, unsigned exponent) {
  check_var(var);
  Monomial m;
  m.exp_[var] = checked_exponent(exponent);
  m.degree_ = static_cast<std::uint16_t>(exponent);
  return m;
}

Monomial Monomial::from_exponents(std::span<const unsigned> exponents) {
  Monomial m;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0) continue;
    check_var(i);
    m.exp_[i] = checked_exponent(exponents[i]);
    m.degree_ = static_cast<std::uint16_t>(m.degree_ + exponents[i]);
  }
  return m;
}

Monomial Monomial::from_support(VertexSet s) {
  Monomial m;
  for_each_member(s, [&](std::size_t i) { m.exp_[i] = 1; });
  m.degree_ = static_cast<std::uint16_t>(popcount(s));
  return m;
}

Monomial Monomial::edge(std::size_t u, std::size_t v) {
  check_var(u);
  check_var(v);
  Monomial m;
  m.exp_[u] = 1;
  m.exp_[v] = static_cast<std::uint8_t>(m.exp_[v] + 1);
  m.degree_ = 2;
  return m;
}

VertexSet Monomial::support() const {
  VertexSet s = 0;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exp_[i]) s |= bit(i);
  }
  return s;
}

bool Monomial::is_squarefree() const {
  return std::all_of(exp_.begin(), exp_.end(), [](std::uint8_t e) { return e <= 1; });
}

unsigned Monomial::max_exponent() const { return *std::max_element(exp_.begin(), exp_.end()); }

std::size_t Monomial::width() const {
  for (std::size_t i = kMaxVariables; i > 0; --i) {
    if (exp_[i - 1]) return i;
  }
  return 0;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exp_[i] > other.exp_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    m.exp_[i] = checked_exponent(unsigned{exp_[i]} + other.exp_[i]);
  }
  m.degree_ = static_cast<std::uint16_t>(degree_ + other.degree_);
  return m;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (other.exp_[i] > exp_[i]) throw InputError("monomial quotient is not exact");
    m.exp_[i] = static_cast<std::uint8_t>(exp_[i] - other.exp_[i]);
  }
  m.degree_ = static_cast<std::uint16_t>(degree_ - other.degree_);
  return m;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    m.exp_[i] = std::min(exp_[i], other.exp_[i]);
    m.degree_ = static_cast<std::uint16_t>(m.degree_ + m.exp_[i]);
  }
  return m;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    m.exp_[i] = std::max(exp_[i], other.exp_[i]);
    m.degree_ = static_cast<std::uint16_t>(m.degree_ + m.exp_[i]);
  }
  return m;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
  // Larger exponent vector first.
  return b.exp_ <=> a.exp_;
}

std::size_t Monomial::hash() const {
  std::uint64_t words[kMaxVariables / 8];
  std::memcpy(words, exp_.data(), sizeof(words));
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (auto w : words) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

VariableContext::VariableContext(std::vector<std::string> names) {
  for (auto& n : names) add(std::move(n), vars_.size(), 0);
}

std::shared_ptr<const VariableContext> VariableContext::of_graph(const Graph& g) {
  return std::make_shared<const VariableContext>(g.labels());
}

std::shared_ptr<const VariableContext> VariableContext::make(std::vector<std::string> names) {
  return std::make_shared<const VariableContext>(std::move(names));
}

std::optional<std::size_t> VariableContext::find(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].name == name) return i;
  }
  return std::nullopt;
}

std::size_t VariableContext::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw InputError("unknown variable '" + std::string(name) + "'");
}

std::size_t VariableContext::add(std::string name, std::size_t base, unsigned copy) {
  if (name.empty()) throw InputError("empty variable name");
  if (find(name)) throw InputError("duplicate variable name '" + name + "'");
  if (vars_.size() >= kMaxVariables) {
    throw ResourceLimit("more than " + std::to_string(kMaxVariables) + " variables");
  }
  vars_.push_back(Variable{std::move(name), base, copy});
  return vars_.size() - 1;
}

bool VariableContext::same_names(const VariableContext& other) const {
  if (size() != other.size()) return false;
  for (std::size_t i = 0; i < size(); ++i) {
    if (vars_[i].name != other.vars_[i].name) return false;
  }
  return true;
}

std::string format_monomial(const Monomial& m, const VariableContext& ctx) {
  if (m.is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.width(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += i < ctx.size() ? ctx.name(i) : "x" + std::to_string(i);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Splits "name^k" into (name, k).
std::pair<std::string, unsigned> split_power(std::string_view factor) {
  factor = trim(factor);
  if (factor.empty()) throw InputError("empty factor in monomial");
  const auto caret = factor.find('^');
  if (caret == std::string_view::npos) return {std::string(factor), 1};
  const auto name = trim(factor.substr(0, caret));
  const auto digits = trim(factor.substr(caret + 1));
  if (name.empty() || digits.empty() ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw InputError("malformed factor '" + std::string(factor) + "'");
  }
  const unsigned long e = std::stoul(std::string(digits));
  if (e > 255) throw ResourceLimit("exponent exceeds 255 in '" + std::string(factor) + "'");
  return {std::string(name), static_cast<unsigned>(e)};
}

template <class Lookup>
Monomial parse_with(std::string_view text, Lookup&& lookup) {
  text = trim(text);
  if (text == "1") return Monomial{};
  Monomial m;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto star = text.find('*', start);
    const auto piece = text.substr(start, star == std::string_view::npos ? std::string_view::npos : star - start);
    const auto [name, e] = split_power(piece);
    if (name.find_first_of(" \t") != std::string::npos) {
      throw InputError("factors must be joined with '*': '" + std::string(piece) + "'");
    }
    if (e > 0) m = m * Monomial::variable(lookup(name), e);
    if (star == std::string_view::npos) break;
    start = star + 1;
  }
  return m;
}

}  // namespace

Monomial parse_monomial(std::string_view text, const VariableContext& ctx) {
  return parse_with(text, [&](const std::string& name) { return ctx.index_of(name); });
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  std::size_t lower_degree_end = 0;  // kept[0, lower_degree_end) have degree < current
  for (const auto& g : gens) {
    while (lower_degree_end < kept.size() && kept[lower_degree_end].degree() < g.degree()) {
      ++lower_degree_end;
    }
    bool redundant = false;
    for (std::size_t i = 0; i < lower_degree_end && !redundant; ++i) redundant = kept[i].divides(g);
    if (!redundant) kept.push_back(g);
  }
  return kept;
}

MonomialIdeal::MonomialIdeal(ContextPtr ctx, std::vector<Monomial> gens)
    : ctx_(std::move(ctx)), gens_(minimalize(std::move(gens))) {
  if (!ctx_) throw InputError("monomial ideal without a variable context");
  for (const auto& g : gens_) {
    if (g.width() > ctx_->size()) throw InputError("generator uses a variable outside its context");
  }
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_squarefree(); });
}

std::optional<unsigned> MonomialIdeal::generating_degree() const {
  if (gens_.empty()) return std::nullopt;
  const unsigned d = gens_.front().degree();
  if (gens_.back().degree() != d) return std::nullopt;
  return d;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  require_same_context(*this, other);
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [&](const Monomial& g) { return contains(g); });
}

Monomial MonomialIdeal::lcm() const {
  Monomial l;
  for (const auto& g : gens_) l = l.lcm(g);
  return l;
}

std::string MonomialIdeal::to_string() const {
  if (is_zero()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    out += format_monomial(gens_[i], *ctx_);
  }
  return out + ")";
}

bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.ctx_ != b.ctx_ && !(a.ctx_ && b.ctx_ && a.ctx_->same_names(*b.ctx_))) return false;
  return a.gens_ == b.gens_;
}

void require_same_context(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.context() == b.context()) return;
  if (!a.context() || !b.context() || !a.context()->same_names(*b.context())) {
    throw InputError("monomial ideals over different variable contexts");
  }
}

MonomialIdeal edge_ideal(const Graph& g) {
  std::vector<Monomial> gens;
  for (const auto& [u, v] : g.edges()) gens.push_back(Monomial::edge(u, v));
  return MonomialIdeal(VariableContext::of_graph(g), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_context(a, b);
  std::unordered_set<Monomial, MonomialHash> seen;
  seen.reserve(a.size() * b.size());
  for (const auto& x : a.generators()) {
    for (const auto& y : b.generators()) seen.insert(x * y);
  }
  return MonomialIdeal(a.context(), std::vector<Monomial>(seen.begin(), seen.end()));
}

MonomialIdeal power(const MonomialIdeal& ideal, unsigned n) {
  if (n == 0) return MonomialIdeal(ideal.context(), {Monomial{}});
  MonomialIdeal out = ideal;
  for (unsigned k = 1; k < n; ++k) out = product(out, ideal);
  return out;
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_context(a, b);
  std::vector<Monomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.context(), std::move(gens));
}

MonomialIdeal add_generator(const MonomialIdeal& ideal, const Monomial& m) {
  std::vector<Monomial> gens = ideal.generators();
  gens.push_back(m);
  return MonomialIdeal(ideal.context(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m) {
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const auto& g : ideal.generators()) gens.push_back(g.colon(m));
  return MonomialIdeal(ideal.context(), std::move(gens));
}

std::string copy_label(const std::string& base, unsigned copy,
                       const std::function<bool(const std::string&)>& taken) {
  const std::string primed = base + std::string(copy, '\'');
  if (!taken(primed)) return primed;
  for (unsigned suffix = 2;; ++suffix) {
    std::string candidate = primed + std::to_string(suffix);
    if (!taken(candidate)) return candidate;
  }
}

Polarization polarize(const MonomialIdeal& ideal) {
  const auto& ctx = *ideal.context();
  const std::size_t n = ctx.size();
  std::vector<unsigned> top(n, 0);
  for (const auto& g : ideal.generators()) {
    for (std::size_t v = 0; v < n; ++v) top[v] = std::max(top[v], g[v]);
  }
  VariableContext out = ctx;
  std::vector<std::vector<std::size_t>> copies(n);
  for (std::size_t v = 0; v < n; ++v) {
    copies[v].push_back(v);
    for (unsigned c = 1; c < top[v]; ++c) {
      const auto label = copy_label(ctx.name(v), c, [&](const std::string& s) { return out.find(s).has_value(); });
      copies[v].push_back(out.add(label, v, c));
    }
  }
  auto out_ctx = std::make_shared<const VariableContext>(std::move(out));
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const auto& g : ideal.generators()) {
    VertexSet s = 0;
    for (std::size_t v = 0; v < n; ++v) {
      for (unsigned c = 0; c < g[v]; ++c) s |= bit(copies[v][c]);
    }
    gens.push_back(Monomial::from_support(s));
  }
  return Polarization{MonomialIdeal(out_ctx, std::move(gens)), std::move(copies)};
}

namespace {

std::vector<std::string_view> generator_lines(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto nl = text.find('\n', start);
    auto line = trim(text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start));
    if (!line.empty() && line.front() != '#') out.push_back(line);
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  return out;
}

}  // namespace

MonomialIdeal parse_ideal(std::string_view text) {
  VariableContext ctx;
  std::vector<Monomial> gens;
  for (auto line : generator_lines(text)) {
    gens.push_back(parse_with(line, [&](const std::string& name) {
      if (auto i = ctx.find(name)) return *i;
      return ctx.add(name, ctx.size(), 0);
    }));
  }
  return MonomialIdeal(std::make_shared<const VariableContext>(std::move(ctx)), std::move(gens));
}

MonomialIdeal parse_ideal(std::string_view text, ContextPtr ctx) {
  std::vector<Monomial> gens;
  for (auto line : generator_lines(text)) gens.push_back(parse_monomial(line, *ctx));
  return MonomialIdeal(std::move(ctx), std::move(gens));
}

}  // namespace eir
