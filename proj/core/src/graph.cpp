#include "eir/graph.hpp"

#include <algorithm>
#include <sstream>

#include "eir/error.hpp"

namespace eir {

std::vector<std::size_t> members(VertexSet s) {
  std::vector<std::size_t> out;
  out.reserve(static_cast<std::size_t>(popcount(s)));
  for_each_member(s, [&](std::size_t i) { out.push_back(i); });
  return out;
}

Graph::Graph(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.size() > kMaxVertices) {
    throw ResourceLimit("graph has " + std::to_string(labels_.size()) +
                        " vertices; at most " + std::to_string(kMaxVertices) + " supported");
  }
  std::vector<std::string> sorted = labels_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InputError("duplicate vertex label");
  }
  for (const auto& l : labels_) {
    if (l.empty()) throw InputError("empty vertex label");
  }
  adj_.assign(labels_.size(), 0);
}

Graph::Graph(std::vector<std::string> labels, std::span<const Edge> edges)
    : Graph(std::move(labels)) {
  for (const auto& [u, v] : edges) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InputError("self-loop at vertex '" + labels_[u] + "'");
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
  }
}

Graph Graph::from_edges(std::span<const LabelEdge> edges, std::span<const std::string> isolated) {
  std::vector<std::string> labels;
  auto intern = [&](const std::string& l) {
    if (l.empty()) throw InputError("empty vertex label");
    auto it = std::find(labels.begin(), labels.end(), l);
    if (it != labels.end()) return static_cast<std::size_t>(it - labels.begin());
    labels.push_back(l);
    return labels.size() - 1;
  };
  std::vector<Edge> idx;
  idx.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    if (a == b) throw InputError("self-loop at vertex '" + a + "'");
    const auto u = intern(a);
    const auto v = intern(b);
    idx.emplace_back(u, v);
  }
  for (const auto& l : isolated) intern(l);
  return Graph(std::move(labels), idx);
}

void Graph::check_vertex(std::size_t v) const {
  if (v >= labels_.size()) throw InputError("vertex index " + std::to_string(v) + " out of range");
}

std::optional<std::size_t> Graph::find(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

std::size_t Graph::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw InputError("unknown vertex '" + std::string(label) + "'");
}

VertexSet Graph::vertex_set(std::span<const std::string> labels) const {
  VertexSet s = 0;
  for (const auto& l : labels) s |= bit(index_of(l));
  return s;
}

VertexSet Graph::all() const {
  return prefix_mask(labels_.size());
}

int Graph::max_degree() const {
  int best = 0;
  for (std::size_t v = 0; v < size(); ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (std::size_t u = 0; u < size(); ++u) {
    for_each_member(adj_[u] & ~prefix_mask(u + 1), [&](std::size_t v) { out.emplace_back(u, v); });
  }
  return out;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (auto row : adj_) twice += static_cast<std::size_t>(popcount(row));
  return twice / 2;
}

std::vector<Edge> Graph::edges_by_label() const {
  auto es = edges();
  auto key = [&](const Edge& e) {
    const auto& a = labels_[e.first];
    const auto& b = labels_[e.second];
    return a < b ? std::pair{a, b} : std::pair{b, a};
  };
  std::stable_sort(es.begin(), es.end(), [&](const Edge& x, const Edge& y) { return key(x) < key(y); });
  return es;
}

Graph Graph::complement() const {
  Graph out(labels_);
  const VertexSet everything = all();
  for (std::size_t v = 0; v < size(); ++v) out.adj_[v] = everything & ~adj_[v] & ~bit(v);
  return out;
}

Graph Graph::induced(VertexSet keep) const {
  keep &= all();
  std::vector<std::size_t> old = members(keep);
  std::vector<std::string> labels;
  labels.reserve(old.size());
  for (auto v : old) labels.push_back(labels_[v]);
  Graph out(std::move(labels));
  for (std::size_t i = 0; i < old.size(); ++i) {
    for (std::size_t j = 0; j < old.size(); ++j) {
      if (adjacent(old[i], old[j])) out.adj_[i] |= bit(j);
    }
  }
  return out;
}

Graph Graph::induced(std::span<const std::string> labels) const {
  return induced(vertex_set(labels));
}

std::optional<std::size_t> Graph::distance(std::size_t u, std::size_t v) const {
  check_vertex(u);
  check_vertex(v);
  VertexSet seen = bit(u);
  VertexSet frontier = bit(u);
  for (std::size_t d = 0;; ++d) {
    if (has(frontier, v)) return d;
    VertexSet next = 0;
    for_each_member(frontier, [&](std::size_t w) { next |= adj_[w]; });
    next &= ~seen;
    if (next == 0) return std::nullopt;
    seen |= next;
    frontier = next;
  }
}

std::string Graph::edge_label(const Edge& e) const {
  return labels_.at(e.first) + "-" + labels_.at(e.second);
}

std::string Graph::describe() const {
  std::ostringstream os;
  os << "V={";
  for (std::size_t i = 0; i < size(); ++i) os << (i ? "," : "") << labels_[i];
  os << "} E={";
  bool first = true;
  for (const auto& e : edges()) {
    os << (first ? "" : ",") << edge_label(e);
    first = false;
  }
  os << "}";
  return os.str();
}

namespace {

// Depth-first extension of induced paths rooted at `root`, which is the
// smallest vertex of every cycle reported from this root.
class CycleSearch {
 public:
  CycleSearch(const Graph& g, std::size_t k, const std::function<bool(const CycleWitness&)>& visit)
      : g_(g), k_(k), visit_(visit) {}

  bool run() {
    for (std::size_t root = 0; root < g_.size(); ++root) {
      const VertexSet allowed = g_.all() & ~prefix_mask(root + 1);
      path_.assign(1, root);
      // Second vertex smaller than last one fixes the orientation.
      for_each_member(g_.neighbors(root) & allowed, [&](std::size_t second) {
        if (stop_) return;
        path_.push_back(second);
        extend(allowed, g_.neighbors(root) | bit(root));
        path_.pop_back();
      });
      if (stop_) return false;
    }
    return true;
  }

 private:
  // `blocked` holds vertices that may not appear next: anything on the path
  // or adjacent to an interior path vertex. Neighbours of the root stay
  // available only to close the cycle.
  void extend(VertexSet allowed, VertexSet root_closed) {
    const std::size_t last = path_.back();
    const std::size_t second = path_[1];
    VertexSet interior_closed = 0;
    VertexSet on_path = 0;
    for (std::size_t i = 0; i < path_.size(); ++i) {
      on_path |= bit(path_[i]);
      if (i >= 1 && i + 1 < path_.size()) interior_closed |= g_.neighbors(path_[i]);
    }
    const VertexSet candidates = g_.neighbors(last) & allowed & ~on_path & ~interior_closed;
    for_each_member(candidates, [&](std::size_t next) {
      if (stop_) return;
      if (has(root_closed, next)) {
        // Adjacent to the root: closes the cycle; path length 2 would be a triangle.
        if (path_.size() >= 2 && path_.size() + 1 >= k_ && second < next) {
          path_.push_back(next);
          if (!visit_(CycleWitness{path_})) stop_ = true;
          path_.pop_back();
        }
        return;
      }
      path_.push_back(next);
      extend(allowed, root_closed);
      path_.pop_back();
    });
  }

  const Graph& g_;
  std::size_t k_;
  const std::function<bool(const CycleWitness&)>& visit_;
  std::vector<std::size_t> path_;
  bool stop_ = false;
};

}  // namespace

void for_each_induced_cycle(const Graph& g, std::size_t k,
                            const std::function<bool(const CycleWitness&)>& visit) {
  CycleSearch(g, std::max<std::size_t>(k, 4), visit).run();
}

std::optional<CycleWitness> find_induced_cycle_at_least(const Graph& g, std::size_t k) {
  if (k < 4) throw InputError("induced cycle search needs k >= 4");
  std::optional<CycleWitness> found;
  for_each_induced_cycle(g, k, [&](const CycleWitness& c) {
    found = c;
    return false;
  });
  return found;
}

bool is_chordal(const Graph& g) { return !find_induced_cycle_at_least(g, 4).has_value(); }

bool is_induced_cycle(const Graph& g, std::span<const std::size_t> cycle) {
  const std::size_t n = cycle.size();
  if (n < 3) return false;
  VertexSet s = 0;
  for (auto v : cycle) {
    if (v >= g.size() || has(s, v)) return false;
    s |= bit(v);
  }
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t prev = cycle[(i + n - 1) % n];
    const std::size_t next = cycle[(i + 1) % n];
    if ((g.neighbors(cycle[i]) & s) != (bit(prev) | bit(next))) return false;
  }
  return true;
}

}  // namespace eir
