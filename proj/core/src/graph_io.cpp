#include "eir/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "eir/error.hpp"

namespace eir {

Graph parse_edge_list(std::istream& in) {
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  auto intern = [&](const std::string& l) {
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == l) return i;
    }
    labels.push_back(l);
    return labels.size() - 1;
  };
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty() || tok.front().front() == '#') continue;
    const std::string where = "line " + std::to_string(lineno) + ": ";
    if (tok.size() == 1) {
      intern(tok[0]);
    } else if (tok.size() == 2) {
      if (tok[0] == tok[1]) throw InputError(where + "self-loop at vertex '" + tok[0] + "'");
      const auto u = intern(tok[0]);
      edges.emplace_back(u, intern(tok[1]));
    } else {
      throw InputError(where + "expected one or two labels, got " + std::to_string(tok.size()));
    }
    if (labels.size() > kMaxVertices) {
      throw ResourceLimit(where + "more than " + std::to_string(kMaxVertices) + " vertices");
    }
  }
  return Graph(std::move(labels), edges);
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

Graph read_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  return parse_edge_list(in);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream os;
  VertexSet touched = 0;
  for (const auto& [u, v] : g.edges()) {
    os << g.label(u) << ' ' << g.label(v) << '\n';
    touched |= bit(u) | bit(v);
  }
  for_each_member(g.all() & ~touched, [&](std::size_t v) { os << g.label(v) << '\n'; });
  return os.str();
}

std::string default_label(std::size_t i) {
  if (i < 26) return std::string(1, static_cast<char>('a' + i));
  return "v" + std::to_string(i);
}

Graph read_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw InputError("empty graph6 string");
  for (char c : text) {
    if (c < 63 || c > 126) throw InputError("graph6: invalid character");
  }
  const std::size_t n = static_cast<std::size_t>(text[0] - 63);
  if (n > 62) throw InputError("graph6: only n <= 62 supported");
  const std::size_t bits = n * (n - (n ? 1 : 0)) / 2;
  if (text.size() != 1 + (bits + 5) / 6) throw InputError("graph6: wrong length");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(default_label(i));
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const int byte = text[1 + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  return Graph(std::move(labels), edges);
}

std::string write_graph6(const Graph& g) {
  const std::size_t n = g.size();
  if (n > 62) throw InputError("graph6: only n <= 62 supported");
  std::string out(1, static_cast<char>(63 + n));
  int acc = 0;
  int used = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = used = 0;
      }
    }
  }
  if (used) out.push_back(static_cast<char>(63 + (acc << (6 - used))));
  return out;
}

}  // namespace eir
