#include "eir/resolution.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>

#include "eir/catalog.hpp"
#include "eir/error.hpp"
#include "eir/graph_io.hpp"
#include "eir/harness.hpp"
#include "eir/homology.hpp"
#include "eir/monomial.hpp"
#include "oracles.hpp"

using namespace eir;

namespace {

using Table = std::map<std::pair<unsigned, unsigned>, std::uint64_t>;

// Hochster's formula over every subset W, faces listed by brute force and
// reduced homology from ranks of GF(2) boundary maps. Meant for ground sets
// of at most 10 variables.
Table naive_betti_gf2(const MonomialIdeal& I) {
  const std::size_t n = I.context()->size();
  std::vector<std::uint64_t> nonfaces;
  for (const auto& g : I.generators()) nonfaces.push_back(g.support());
  const auto is_face = [&](std::uint64_t s) {
    for (auto f : nonfaces) {
      if ((f & s) == f) return false;
    }
    return true;
  };
  Table t;
  for (std::uint64_t W = 1; W < (std::uint64_t{1} << n); ++W) {
    std::vector<std::vector<std::uint64_t>> by_dim(n + 2);  // index = |face|
    for (std::uint64_t s = W;; s = (s - 1) & W) {
      if (is_face(s)) by_dim[static_cast<std::size_t>(__builtin_popcountll(s))].push_back(s);
      if (s == 0) break;
    }
    // rank of boundary from size k faces to size k-1 faces (k >= 1); the
    // size 0 face is the augmentation
    std::vector<std::size_t> rank(n + 3, 0);
    for (std::size_t k = 1; k <= n; ++k) {
      const auto& hi = by_dim[k];
      const auto& lo = by_dim[k - 1];
      if (hi.empty() || lo.empty()) continue;
      std::map<std::uint64_t, std::size_t> pos;
      for (std::size_t i = 0; i < lo.size(); ++i) pos[lo[i]] = i;
      // columns over lo, chunked into 64-bit words
      const std::size_t words = (lo.size() + 63) / 64;
      std::vector<std::vector<std::uint64_t>> rows;
      for (auto f : hi) {
        std::vector<std::uint64_t> row(words, 0);
        for (std::size_t v = 0; v < n; ++v) {
          if ((f >> v) & 1U) {
            const auto j = pos.at(f & ~(std::uint64_t{1} << v));
            row[j / 64] |= std::uint64_t{1} << (j % 64);
          }
        }
        rows.push_back(row);
      }
      // elimination over multiword rows
      std::size_t r = 0;
      for (std::size_t col = 0; col < lo.size(); ++col) {
        const std::size_t w = col / 64, b = col % 64;
        std::size_t p = r;
        while (p < rows.size() && !((rows[p][w] >> b) & 1U)) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
          if (i != r && ((rows[i][w] >> b) & 1U)) {
            for (std::size_t x = 0; x < words; ++x) rows[i][x] ^= rows[r][x];
          }
        }
        ++r;
      }
      rank[k] = r;
    }
    const std::size_t w = static_cast<std::size_t>(__builtin_popcountll(W));
    for (std::size_t k = 0; k <= n; ++k) {
      // reduced homology in dimension k-1 (faces of size k)
      const long long h = static_cast<long long>(by_dim[k].size()) - static_cast<long long>(rank[k]) -
                          static_cast<long long>(rank[k + 1]);
      if (h <= 0) continue;
      // beta_{i,|W|} = h~_{|W|-i-2}; dimension k-1 gives i = |W| - k - 1
      if (w < k + 1) continue;
      t[{static_cast<unsigned>(w - k - 1), static_cast<unsigned>(w)}] += static_cast<std::uint64_t>(h);
    }
  }
  return t;
}

MonomialIdeal ideal(const char* text) { return parse_ideal(text); }

// Stanley-Reisner ideal of the six-vertex real projective plane: all 15
// edges are faces, the minimal non-faces are the 10 triangles that are not
// facets.
MonomialIdeal projective_plane() {
  const int facets[10][3] = {{1, 2, 4}, {1, 2, 6}, {1, 3, 5}, {1, 3, 6}, {1, 4, 5},
                             {2, 3, 4}, {2, 3, 5}, {2, 5, 6}, {3, 4, 6}, {4, 5, 6}};
  std::string text;
  for (int a = 1; a <= 6; ++a) {
    for (int b = a + 1; b <= 6; ++b) {
      for (int c = b + 1; c <= 6; ++c) {
        bool facet = false;
        for (const auto& f : facets) facet |= (f[0] == a && f[1] == b && f[2] == c);
        if (!facet) {
          text += "x" + std::to_string(a) + "*x" + std::to_string(b) + "*x" + std::to_string(c) + "\n";
        }
      }
    }
  }
  return parse_ideal(text);
}

}  // namespace

TEST(Homology, DegenerateComplexes) {
  EXPECT_TRUE(reduced_homology(std::vector<std::uint64_t>{}, {}).empty());
  EXPECT_EQ(reduced_homology(std::vector<std::uint64_t>{0}, {}), (std::vector<std::uint64_t>{1}));
  const auto point = reduced_homology(std::vector<std::uint64_t>{0, 1}, {});
  for (auto d : point) EXPECT_EQ(d, 0u);
  const auto two_points = reduced_homology(std::vector<std::uint64_t>{0, 1, 2}, {});
  ASSERT_GE(two_points.size(), 2u);
  EXPECT_EQ(two_points[0], 0u);
  EXPECT_EQ(two_points[1], 1u);
  const auto circle = reduced_homology(std::vector<std::uint64_t>{0, 1, 2, 4, 3, 5, 6}, {});
  ASSERT_GE(circle.size(), 3u);
  EXPECT_EQ(circle[1], 0u);
  EXPECT_EQ(circle[2], 1u);
}

TEST(Homology, RankDependsOnCharacteristic) {
  const std::vector<BoundaryColumn> cols = {{{0, 2}}};
  EXPECT_EQ(matrix_rank(1, cols, FieldChoice{2}), 0u);
  EXPECT_EQ(matrix_rank(1, cols, FieldChoice{3}), 1u);
  EXPECT_EQ(matrix_rank(1, cols, FieldChoice{0}), 1u);
  EXPECT_THROW(FieldChoice{4}.validate(), InputError);
  EXPECT_NO_THROW(FieldChoice{0}.validate());
  EXPECT_NO_THROW(FieldChoice{7}.validate());
}

TEST(Homology, ProjectivePlaneRegularityIsFieldSensitive) {
  const auto I = projective_plane();
  const int r2 = regularity(I, OracleOptions{FieldChoice{2}});
  const int r3 = regularity(I, OracleOptions{FieldChoice{3}});
  const int r0 = regularity(I, OracleOptions{FieldChoice{0}});
  EXPECT_EQ(r0, r3);
  EXPECT_EQ(r2, r0 + 1);
}

TEST(StanleyReisner, SingleEdge) {
  const auto c = stanley_reisner_complex(ideal("a*b"));
  auto faces = c.faces();
  std::sort(faces.begin(), faces.end());
  EXPECT_EQ(faces, (std::vector<std::uint64_t>{0, 1, 2}));
}

TEST(StanleyReisner, TriangleGivesThreePoints) {
  const auto c = stanley_reisner_complex(edge_ideal(oracle::from("xy,yz,xz")));
  EXPECT_EQ(c.facets(), (std::vector<std::uint64_t>{1, 2, 4}));
  EXPECT_EQ(c.faces().size(), 4u);
}

TEST(StanleyReisner, IndependenceComplexFacets) {
  const Graph g = read_edge_list(EIR_TEST_DATA "/square_with_tail.edges");
  const auto c = stanley_reisner_complex(edge_ideal(g));
  EXPECT_EQ(c.facets(), oracle::maximal_sets(oracle::independent_sets(g)));
  auto faces = c.faces();
  std::sort(faces.begin(), faces.end());
  EXPECT_EQ(faces, oracle::independent_sets(g));
}

TEST(StanleyReisner, RejectsNonSquarefree) { EXPECT_THROW(stanley_reisner_complex(ideal("a^2")), InputError); }

TEST(Betti, PrincipalIdeal) {
  const auto t = hochster_betti(ideal("a*b"));
  EXPECT_EQ(t.entries(), (Table{{{0, 2}, 1}}));
  EXPECT_EQ(t.regularity(), 2);
  EXPECT_EQ(taylor_betti(ideal("a*b")), t);
  EXPECT_TRUE(is_linear(t, 1));
}

TEST(Betti, FiveCycle) {
  const auto I = edge_ideal(oracle::from("ab,bc,cd,de,ea"));
  const auto h = hochster_betti(I);
  EXPECT_EQ(h.entries(), (Table{{{0, 2}, 5}, {{1, 3}, 5}, {{2, 5}, 1}}));
  EXPECT_EQ(h.regularity(), 3);
  EXPECT_EQ(taylor_betti(I), h);
  EXPECT_EQ(koszul_betti(I), h);
  EXPECT_TRUE(is_k_steps_linear(h, 1, 1));
  EXPECT_FALSE(is_k_steps_linear(h, 1, 2));
  EXPECT_FALSE(is_linear(h, 1));
}

TEST(Betti, TrianglePendant) {
  const Graph g = read_edge_list(EIR_TEST_DATA "/triangle_pendant.edges");
  const auto I = edge_ideal(g);
  const auto h = hochster_betti(I);
  EXPECT_EQ(h.entries(), (Table{{{0, 2}, 4}, {{1, 3}, 4}, {{2, 4}, 1}}));
  EXPECT_EQ(h.regularity(), 2);
  EXPECT_EQ(taylor_betti(I), h);
}

TEST(Betti, TriangleSquareIsLinear) {
  const auto I2 = power(edge_ideal(oracle::from("xy,yz,xz")), 2);
  const auto t = betti_table(I2);
  EXPECT_EQ(t.regularity(), 4);
  EXPECT_TRUE(is_linear(t, 2));
  EXPECT_EQ(t, taylor_betti(I2));
  EXPECT_THROW(is_k_steps_linear(t, 1, 1), InputError);
}

TEST(Betti, QuadraticColonAgreesWithPolarization) {
  const auto I = ideal("z^2\nu*z\nv*z\nw*z\nu*w\nv*w\n");
  const auto t = taylor_betti(I);
  const auto h = hochster_betti(polarize(I).ideal);
  EXPECT_EQ(t, h);
  EXPECT_EQ(t.regularity(), h.regularity());
}

TEST(Betti, ZeroDegreeRowCountsGenerators) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 60; ++t) {
    const auto I = random_monomial_ideal(rng, 4, 7, 3);
    if (!I.is_regular_input()) continue;
    const auto table = betti_table(I);
    std::map<unsigned, std::uint64_t> hist;
    for (const auto& g : I.generators()) ++hist[g.degree()];
    std::map<unsigned, std::uint64_t> row0;
    for (const auto& [ij, c] : table.entries()) {
      if (ij.first == 0) row0[ij.second] = c;
    }
    EXPECT_EQ(row0, hist) << I.to_string();
  }
}

TEST(Betti, ChordalComplementGivesRegularityTwo) {
  for (const auto& g : graphs_up_to(6)) {
    if (g.edge_count() == 0) continue;
    const int r = regularity(edge_ideal(g));
    EXPECT_EQ(r == 2, oracle::chordal(g.complement())) << write_graph6(g);
  }
}

TEST(Betti, HochsterMatchesNaiveOracleOnCatalog) {
  for (const auto& g : graphs_up_to(6)) {
    if (g.edge_count() == 0) continue;
    const auto I = edge_ideal(g);
    EXPECT_EQ(hochster_betti(I).entries(), naive_betti_gf2(I)) << write_graph6(g);
  }
}

TEST(Betti, NaiveOracleOnPolarizedSquares) {
  for (const auto& g : graphs_on(4)) {
    if (g.edge_count() == 0) continue;
    const auto I2 = power(edge_ideal(g), 2);
    const auto p = polarize(I2).ideal;
    if (p.context()->size() > 10) continue;
    EXPECT_EQ(taylor_betti(I2).entries(), naive_betti_gf2(p)) << write_graph6(g);
  }
}

TEST(Betti, RoutesAgreeOnRandomIdeals) {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 80; ++t) {
    const auto I = random_monomial_ideal(rng, 4, 8, 3);
    if (!I.is_regular_input()) continue;
    const auto tay = taylor_betti(I);
    EXPECT_EQ(koszul_betti(I), tay) << I.to_string();
    EXPECT_EQ(betti_table(I, BettiRoute::Hochster), tay) << I.to_string();
    EXPECT_EQ(betti_table(I, BettiRoute::Auto), tay) << I.to_string();
  }
}

TEST(Betti, ConeSkipAndThreadCountDoNotChangeResults) {
  for (const auto& g : graphs_on(6)) {
    if (g.edge_count() == 0) continue;
    const auto I = edge_ideal(g);
    OracleOptions plain;
    plain.skip_cones = false;
    OracleOptions threaded;
    threaded.jobs = 3;
    const auto ref = hochster_betti(I);
    EXPECT_EQ(hochster_betti(I, plain), ref) << write_graph6(g);
    EXPECT_EQ(hochster_betti(I, threaded), ref) << write_graph6(g);
    EXPECT_EQ(taylor_betti(I, threaded), ref) << write_graph6(g);
  }
}

TEST(Betti, CharacteristicZeroAgreesOnCatalog) {
  // Edge ideals of graphs on at most 6 vertices have field-independent Betti
  // numbers, so this is a consistency check rather than a field experiment.
  std::size_t differ = 0;
  for (const auto& g : graphs_up_to(6)) {
    if (g.edge_count() == 0) continue;
    const auto I = edge_ideal(g);
    differ += hochster_betti(I, OracleOptions{FieldChoice{0}}).entries() != hochster_betti(I).entries();
  }
  EXPECT_EQ(differ, 0u);
}

TEST(Betti, RegularityReportCrossCheck) {
  const auto I = edge_ideal(oracle::from("ab,bc,cd,de,ea"));
  const auto r = regularity_report(I, BettiRoute::Auto, {}, true);
  EXPECT_EQ(r.regularity, 3);
  ASSERT_TRUE(r.taylor_regularity.has_value());
  EXPECT_EQ(*r.taylor_regularity, 3);
  EXPECT_EQ(r.route, BettiRoute::Hochster);
}

TEST(Betti, RouteNames) {
  for (auto r : {BettiRoute::Auto, BettiRoute::Hochster, BettiRoute::Taylor, BettiRoute::Koszul}) {
    EXPECT_EQ(parse_route(to_string(r)), r);
  }
  EXPECT_THROW(parse_route("cellular"), InputError);
}

TEST(Betti, RenderShowsZerosAsDots) {
  const auto t = hochster_betti(edge_ideal(oracle::from("ab,bc,cd,de,ea")));
  const auto s = t.render();
  EXPECT_NE(s.find('.'), std::string::npos);
  EXPECT_NE(s.find("i\\j"), std::string::npos);
}
