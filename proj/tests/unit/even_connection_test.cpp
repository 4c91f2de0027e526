#include "eir/even_connection.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "eir/catalog.hpp"
#include "eir/error.hpp"
#include "eir/graph_classes.hpp"
#include "eir/graph_io.hpp"
#include "eir/harness.hpp"
#include "oracles.hpp"

using namespace eir;

namespace {

Graph data(const char* name) { return read_edge_list(std::string(EIR_TEST_DATA "/") + name); }

std::set<std::string> label_pairs(const Graph& g, const std::vector<Edge>& pairs, bool skip_edges) {
  std::set<std::string> out;
  for (const auto& [u, v] : pairs) {
    if (skip_edges && u != v && g.adjacent(u, v)) continue;
    out.insert(g.label(u) + g.label(v));
  }
  return out;
}

std::set<std::string> edge_names(const Graph& g) {
  std::set<std::string> out;
  for (const auto& [u, v] : g.edges()) {
    auto a = g.label(u), b = g.label(v);
    if (b < a) std::swap(a, b);
    out.insert(a + "-" + b);
  }
  return out;
}

std::vector<Graph> corpus(std::size_t max_n) {
  std::vector<Graph> out;
  for (const auto& g : graphs_up_to(max_n)) {
    if (g.edge_count() > 0) out.push_back(g);
  }
  return out;
}

}  // namespace

TEST(EvenConnection, SquareWithTailWitnesses) {
  const Graph g = data("square_with_tail.edges");
  const auto ee = EdgeProduct::parse(g, "xy,wz");
  const EvenConnectionSearch search(g, ee);
  const auto u = g.index_of("u"), v = g.index_of("v");
  const auto longest = search.longest(u, v);
  ASSERT_TRUE(longest.has_value());
  std::vector<std::string> walk;
  for (auto p : longest->walk) walk.push_back(g.label(p));
  EXPECT_EQ(walk, (std::vector<std::string>{"u", "x", "y", "w", "z", "v"}));
  EXPECT_EQ(longest->k(), 2u);
  EXPECT_TRUE(is_valid_witness(g, ee, u, v, *longest));
  const auto shortest = search.shortest(u, v);
  ASSERT_TRUE(shortest.has_value());
  EXPECT_EQ(shortest->serialize(g), "u v: u x y v [1]");
  EXPECT_EQ(search.max_k(u, v), 2u);
}

TEST(EvenConnection, SelfConnectionThroughTriangle) {
  const Graph g = data("triangle_with_leaves.edges");
  const auto ee = EdgeProduct::parse(g, "xy");
  const auto z = g.index_of("z");
  const auto w = find_even_connection(g, ee, z, z);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->serialize(g), "z z: z y x z [1]");
  EXPECT_TRUE(is_valid_witness(g, ee, z, z, *w));
}

TEST(EvenConnection, EdgesAloneAreNotWitnesses) {
  const Graph g = oracle::from("ab,cd");
  const auto ee = EdgeProduct::parse(g, "cd");
  EXPECT_FALSE(find_even_connection(g, ee, g.index_of("a"), g.index_of("b")).has_value());
}

TEST(EvenConnection, PairsOfTriangleWithLeaves) {
  const Graph g = data("triangle_with_leaves.edges");
  const auto pairs = even_connected_pairs(g, EdgeProduct::parse(g, "xy"));
  EXPECT_EQ(label_pairs(g, pairs, true), (std::set<std::string>{"zz", "uz", "vz", "zw", "uw", "vw"}));
}

TEST(EvenConnection, SingleEdgeHasNoNewPairs) {
  const Graph g = oracle::from("ab");
  EXPECT_TRUE(label_pairs(g, even_connected_pairs(g, EdgeProduct::parse(g, "ab")), true).empty());
}

TEST(EvenConnection, PairsOfTriangleWithThreePendants) {
  const Graph g = data("triangle_three_pendants.edges");
  const auto pairs = even_connected_pairs(g, EdgeProduct::parse(g, "xw"));
  EXPECT_EQ(label_pairs(g, pairs, true), (std::set<std::string>{"zy", "zt", "yy", "yt", "ys", "ts"}));
}

TEST(ColonGraph, TriangleWithThreePendants) {
  const Graph g = data("triangle_three_pendants.edges");
  const auto cg = colon_graph(g, EdgeProduct::parse(g, "xw"));
  EXPECT_EQ(edge_names(cg.full), (std::set<std::string>{"w-z", "w-y", "y-z", "w-x", "x-y", "t-z", "t-y", "t-x", "s-w",
                                                        "s-y", "s-t", "y-y'"}));
  ASSERT_EQ(cg.whiskers.size(), 1u);
  EXPECT_EQ(cg.full.label(cg.whiskers[0].first), "y");
  EXPECT_EQ(cg.full.label(cg.whiskers[0].second), "y'");
  EXPECT_EQ(cg.full.degree(cg.whiskers[0].second), 1);
  EXPECT_EQ(cg.original_vertices, g.size());
}

TEST(ColonGraph, TriangleWithLeaves) {
  const Graph g = data("triangle_with_leaves.edges");
  const auto cg = colon_graph(g, EdgeProduct::parse(g, "xy"));
  auto expected = edge_names(g);
  for (const char* e : {"u-z", "v-z", "w-z", "u-w", "v-w", "z-z'"}) expected.insert(e);
  EXPECT_EQ(edge_names(cg.full), expected);
}

TEST(ColonGraph, NoConnectionsLeavesGraphUnchanged) {
  const Graph g = oracle::from("ab,cd");
  const auto cg = colon_graph(g, EdgeProduct::parse(g, "ab"));
  EXPECT_EQ(edge_names(cg.full), edge_names(g));
  EXPECT_TRUE(cg.whiskers.empty());
}

TEST(ColonGraph, EdgeIdealIsPolarizedColon) {
  for (const auto& g : corpus(5)) {
    for (unsigned s = 1; s <= 2; ++s) {
      for (const auto& ee : edge_multisets(g, s)) {
        const auto cg = colon_graph(g, ee);
        const auto pol = polarize(colon_ideal(g, ee)).ideal;
        std::set<std::string> a, b;
        const auto ei = edge_ideal(cg.full);
        for (const auto& m : ei.generators()) a.insert(format_monomial(m, *ei.context()));
        for (const auto& m : pol.generators()) b.insert(format_monomial(m, *pol.context()));
        EXPECT_EQ(a, b) << serialize_instance(g) << ' ' << ee.to_string(g);
      }
    }
  }
}

TEST(ColonCharacterization, FixturesMatch) {
  const Graph a = data("triangle_with_leaves.edges");
  EXPECT_TRUE(verify_colon_characterization(a, EdgeProduct::parse(a, "xy")).matches());
  const Graph b = data("triangle_three_pendants.edges");
  EXPECT_TRUE(verify_colon_characterization(b, EdgeProduct::parse(b, "xw")).matches());
}

TEST(ColonCharacterization, CatalogUpToSixVertices) {
  std::size_t checked = 0;
  for (const auto& g : corpus(6)) {
    for (unsigned s = 1; s <= 2; ++s) {
      const auto r = verify_colon_characterizations(g, s);
      EXPECT_TRUE(r.failures.empty()) << serialize_instance(g);
      checked += r.checked;
    }
  }
  EXPECT_GT(checked, 7000u);
}

TEST(ColonCharacterization, ColonIsQuadraticOnSevenVertices) {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 12; ++t) {
    const Graph g = oracle::random_graph(rng, 7, 0.3);
    if (g.edge_count() == 0 || g.edge_count() > 9) continue;
    for (const auto& ee : edge_multisets(g, 3)) {
      const auto q = colon_ideal(g, ee);
      EXPECT_EQ(q.generating_degree(), 2u) << serialize_instance(g) << ' ' << ee.to_string(g);
    }
  }
}

TEST(EvenConnection, WitnessesAreSound) {
  std::mt19937_64 rng(1);
  for (const auto& g : corpus(6)) {
    const auto I = edge_ideal(g);
    for (unsigned s = 1; s <= 2; ++s) {
      const auto next = power(I, s + 1);
      const auto multisets = edge_multisets(g, s);
      const auto& ee = multisets[rng() % multisets.size()];
      const EvenConnectionSearch search(g, ee);
      for (const auto& [u, v] : even_connected_pairs(g, ee)) {
        for (const auto& w : {search.shortest(u, v), search.longest(u, v)}) {
          ASSERT_TRUE(w.has_value());
          EXPECT_TRUE(is_valid_witness(g, ee, u, v, *w));
          EXPECT_TRUE(next.contains(Monomial::edge(u, v) * ee.product())) << serialize_instance(g);
        }
      }
    }
  }
}

TEST(EvenConnection, NeighboursAlongAWitnessAreConnected) {
  for (const auto& g : corpus(6)) {
    for (unsigned s = 1; s <= 2; ++s) {
      for (const auto& ee : edge_multisets(g, s)) {
        const EvenConnectionSearch search(g, ee);
        for (const auto& [u, v] : even_connected_pairs(g, ee)) {
          const auto w = search.longest(u, v);
          const auto& p = w->walk;
          const std::size_t k = w->k();
          for (std::size_t j = 0; j < k; ++j) {
            for (std::size_t jp = j; jp < k; ++jp) {
              for_each_member(g.neighbors(p[2 * j + 1]), [&](std::size_t x) {
                for_each_member(g.neighbors(p[2 * jp + 2]), [&](std::size_t y) {
                  EXPECT_TRUE(has(search.partners(x), y)) << serialize_instance(g) << ' ' << w->serialize(g);
                });
              });
            }
          }
        }
      }
    }
  }
}

TEST(EvenConnection, SharedFactorVertexGivesCrossConnections) {
  std::mt19937_64 rng(13);
  std::size_t sampled = 0;
  for (const auto& g : corpus(6)) {
    for (unsigned s = 1; s <= 2; ++s) {
      const auto multisets = edge_multisets(g, s);
      const auto& ee = multisets[rng() % multisets.size()];
      const EvenConnectionSearch search(g, ee);
      std::vector<std::pair<Edge, EvenConnectionWitness>> ws;
      for (const auto& [u, v] : even_connected_pairs(g, ee)) {
        ws.emplace_back(Edge{u, v}, *search.shortest(u, v));
        ws.emplace_back(Edge{v, u}, *search.longest(v, u));
      }
      for (int t = 0; t < 10 && !ws.empty(); ++t) {
        const auto& [e1, w1] = ws[rng() % ws.size()];
        const auto& [e2, w2] = ws[rng() % ws.size()];
        VertexSet f1 = 0, f2 = 0;
        for (std::size_t i = 1; i < w1.walk.size() - 1; ++i) f1 |= bit(w1.walk[i]);
        for (std::size_t i = 1; i < w2.walk.size() - 1; ++i) f2 |= bit(w2.walk[i]);
        if ((f1 & f2) == 0) continue;
        ++sampled;
        const auto [u, v] = e1;
        const auto [z, w] = e2;
        const auto pu = search.partners(u), pv = search.partners(v);
        EXPECT_TRUE(has(pu, z) || has(pu, w))
            << serialize_instance(g) << ' ' << w1.serialize(g) << " / " << w2.serialize(g);
        EXPECT_TRUE(has(pv, z) || has(pv, w))
            << serialize_instance(g) << ' ' << w1.serialize(g) << " / " << w2.serialize(g);
      }
    }
  }
  EXPECT_GT(sampled, 100u);
}

TEST(EvenConnection, PartnersAreSymmetricAndMatchPairs) {
  for (const auto& g : corpus(5)) {
    for (const auto& ee : edge_multisets(g, 2)) {
      const EvenConnectionSearch search(g, ee);
      std::set<Edge> pairs;
      for (const auto& p : even_connected_pairs(g, ee)) pairs.insert(p);
      for (std::size_t u = 0; u < g.size(); ++u) {
        const auto row = search.max_k_row(u);
        for (std::size_t v = 0; v < g.size(); ++v) {
          const bool linked = has(search.partners(u), v);
          EXPECT_EQ(linked, has(search.partners(v), u));
          EXPECT_EQ(linked, pairs.count({std::min(u, v), std::max(u, v)}) == 1);
          EXPECT_EQ(linked, row[v] >= 1);
        }
      }
    }
  }
}

TEST(EvenConnection, RepresentationIndependence) {
  const Graph c4 = oracle::from("ab,bc,cd,da");
  const auto ctx = VariableContext::of_graph(c4);
  const auto r = verify_representation_independence(c4, parse_monomial("a*b*c*d", *ctx));
  EXPECT_EQ(r.factorizations.size(), 2u);
  EXPECT_TRUE(r.identical);

  const Graph tri = oracle::from("xy,yz,xz");
  const auto r2 = verify_representation_independence(tri, parse_monomial("x*y^2*z", *VariableContext::of_graph(tri)));
  EXPECT_EQ(r2.factorizations.size(), 1u);
  EXPECT_TRUE(r2.identical);

  EXPECT_THROW(verify_representation_independence(c4, parse_monomial("a*c", *ctx)), InputError);

  for (const auto& g : corpus(5)) {
    for (const auto& ee : edge_multisets(g, 2)) {
      EXPECT_TRUE(verify_representation_independence(g, ee.product()).identical) << serialize_instance(g);
    }
  }
}

// Simple paths find a subset of the walk pairs. Walks are needed: with a
// pendant d on a triangle abc and product ab*ac, d is connected to itself
// only by d a b c a d, and d^2 is in the colon.
TEST(EvenConnection, SimplePathsMissRepeatedVertexWitnesses) {
  const Graph g = oracle::from("ab,ac,ad,bc");
  const auto ee = EdgeProduct::parse(g, "ab,ac");
  const auto walks = label_pairs(g, even_connected_pairs(g, ee), true);
  const auto paths = label_pairs(g, even_connected_pairs_simple_paths(g, ee), true);
  EXPECT_TRUE(walks.count("dd"));
  EXPECT_FALSE(paths.count("dd"));
  const auto q = colon_ideal(g, ee);
  EXPECT_TRUE(q.contains(MonomialIdeal(q.context(), {Monomial::edge(g.index_of("d"), g.index_of("d"))})));
  std::size_t differing = 0;
  for (const auto& h : corpus(6)) {
    for (unsigned s = 1; s <= 2; ++s) {
      for (const auto& f : edge_multisets(h, s)) {
        const auto a = label_pairs(h, even_connected_pairs(h, f), true);
        const auto b = label_pairs(h, even_connected_pairs_simple_paths(h, f), true);
        EXPECT_TRUE(std::includes(a.begin(), a.end(), b.begin(), b.end())) << serialize_instance(h);
        differing += a != b;
      }
    }
  }
  EXPECT_GT(differing, 0u);
}

TEST(EvenConnection, ProductValidation) {
  const Graph g = oracle::from("ab,bc");
  EXPECT_THROW(EdgeProduct::parse(g, "ac"), InputError);
  EXPECT_THROW(EdgeProduct(g, {}), InputError);
  const auto p = EdgeProduct::parse(g, "ba,ab,bc");
  EXPECT_EQ(p.size(), 3u);
  ASSERT_EQ(p.distinct().size(), 2u);
  EXPECT_EQ(p.distinct()[0].second, 2u);
}
