#include <gtest/gtest.h>

#include "exactcomb/exactcomb.hpp"
#include "oracles.hpp"

using namespace exactcomb;
using namespace exactcomb::dimers;

namespace {

using Dart = PlanarEmbedding::Dart;

UndirectedGraph cycle4() { return UndirectedGraph(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}}); }

// square 0 (0,0), 1 (1,0), 2 (1,1), 3 (0,1)
PlanarEmbedding cycle4_embedding(const UndirectedGraph& g) {
  return PlanarEmbedding(g, {{1, 3}, {2, 0}, {3, 1}, {0, 2}}, Dart{0, 1});
}

UndirectedGraph triangle() { return UndirectedGraph(3, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}}); }

PlanarEmbedding triangle_embedding(const UndirectedGraph& g) {
  return PlanarEmbedding(g, {{1, 2}, {2, 0}, {0, 1}}, Dart{0, 1});
}

std::size_t bounded_face(const PlanarEmbedding& emb) { return *emb.outer_face() == 0 ? 1 : 0; }

// Orient every boundary dart of one face in its walking direction.
Orientation along_face(const UndirectedGraph& g, const PlanarEmbedding& emb, std::size_t face) {
  Orientation o(g.node_count());
  for (const auto& e : g.edges()) o.direct(e.u, e.v);
  for (const auto& [a, b] : emb.faces()[face])
    if (o.eps(a, b) < 0) o.flip(a, b);
  return o;
}

// Spanning path plus random extra edges.
UndirectedGraph random_connected(gen::Rng& rng, std::size_t n) {
  UndirectedGraph g(n);
  const auto p = gen::random_permutation(rng, n);
  for (std::size_t i = 1; i < n; ++i) g.add_edge(p[gen::uniform(rng, 0, i - 1)], p[i]);
  const std::size_t extra = gen::uniform(rng, 0, n);
  for (std::size_t t = 0; t < extra; ++t) {
    const std::size_t u = gen::uniform(rng, 0, n - 1), v = gen::uniform(rng, 0, n - 1);
    if (u != v && !g.has_edge(u, v)) g.add_edge(u, v);
  }
  return g;
}

}  // namespace

TEST(Graph, RejectsLoopsAndParallelEdges) {
  UndirectedGraph g(3);
  g.add_edge(0, 1);
  EXPECT_THROW(g.add_edge(1, 0), Error);
  EXPECT_THROW(g.add_edge(2, 2), Error);
  EXPECT_THROW(g.add_edge(0, 3), Error);
}

TEST(BruteForce, SmallGraphs) {
  EXPECT_EQ(count_matchings_bruteforce(cycle4()), 2);
  UndirectedGraph k4(4);
  for (std::size_t u = 0; u < 4; ++u)
    for (std::size_t v = u + 1; v < 4; ++v) k4.add_edge(u, v);
  EXPECT_EQ(count_matchings_bruteforce(k4), 3);
  EXPECT_EQ(count_matchings_bruteforce(grid_graph(2, 3)), 3);
  EXPECT_EQ(count_matchings_bruteforce(triangle()), 0);
  EXPECT_EQ(count_matchings_bruteforce(UndirectedGraph(0)), 1);
}

TEST(BruteForce, MatchesRecursiveOracle) {
  gen::Rng rng(31);
  for (int t = 0; t < 200; ++t) {
    auto g = random_connected(rng, gen::uniform(rng, 1, 12));
    ASSERT_EQ(count_matchings_bruteforce(g), oracle::matchings(g));
  }
}

TEST(BruteForce, Cap) {
  try {
    count_matchings_bruteforce(grid_graph(2, 11), 20);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooLarge);
  }
}

TEST(CircuitSign, Cases) {
  Orientation o(4);
  o.direct(0, 1);
  o.direct(1, 2);
  o.direct(2, 3);
  o.direct(3, 0);
  EXPECT_EQ(circuit_sign(o, {0, 1}), 1);
  EXPECT_EQ(circuit_sign(o, {1, 0}), 1);
  EXPECT_EQ(circuit_sign(o, {0, 1, 2, 3}), -1);
  o.flip(2, 3);
  EXPECT_EQ(circuit_sign(o, {0, 1, 2, 3}), 1);
  try {
    circuit_sign(o, {0, 1, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OddCircuit);
  }
}

TEST(Pfaffian, FourCycle) {
  const auto g = cycle4();
  const auto emb = cycle4_embedding(g);
  auto all_cw = along_face(g, emb, bounded_face(emb));
  EXPECT_EQ(clockwise_count(emb, all_cw, bounded_face(emb)), 4u);
  EXPECT_FALSE(is_pfaffian_orientation(g, all_cw));
  all_cw.flip(0, 1);
  EXPECT_TRUE(is_pfaffian_orientation(g, all_cw));
}

TEST(Pfaffian, VacuousCases) {
  EXPECT_TRUE(is_pfaffian_orientation(UndirectedGraph(4), Orientation(4)));
  // a path has one cover made of single edges
  UndirectedGraph path(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}});
  Orientation o(4);
  o.direct(1, 0);
  o.direct(1, 2);
  o.direct(3, 2);
  EXPECT_TRUE(is_pfaffian_orientation(path, o));
}

TEST(Pfaffian, AgreesWithCoverDefinition) {
  gen::Rng rng(32);
  for (int t = 0; t < 150; ++t) {
    auto g = random_connected(rng, gen::uniform(rng, 2, 9));
    Orientation o(g.node_count());
    for (const auto& e : g.edges()) gen::uniform(rng, 0, 1) ? o.direct(e.u, e.v) : o.direct(e.v, e.u);
    ASSERT_EQ(is_pfaffian_orientation(g, o), oracle::pfaffian_by_covers(g, o));
  }
}

TEST(Embedding, FacesOfGrid) {
  const auto g = grid_graph(3, 3);
  const auto emb = grid_embedding(g, 3, 3);
  EXPECT_EQ(emb.faces().size(), 5u);
  ASSERT_TRUE(emb.outer_face().has_value());
  EXPECT_EQ(emb.faces()[*emb.outer_face()].size(), 8u);
  for (std::size_t f = 0; f < 5; ++f)
    if (f != *emb.outer_face()) EXPECT_EQ(emb.faces()[f].size(), 4u);
}

TEST(Embedding, BoundedFacesWalkClockwise) {
  // unit square: the bounded face is walked 0 -> 3 -> 2 -> 1
  const auto g = cycle4();
  const auto emb = cycle4_embedding(g);
  const auto& f = emb.faces()[bounded_face(emb)];
  EXPECT_EQ(emb.face_of(Dart{0, 3}), bounded_face(emb));
  EXPECT_EQ(emb.face_of(Dart{3, 2}), bounded_face(emb));
  EXPECT_EQ(f.size(), 4u);
}

TEST(Embedding, Rejections) {
  const auto g = cycle4();
  try {
    PlanarEmbedding(g, {{1, 3}, {2, 0}, {3, 1}}, std::nullopt);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidEmbedding);
  }
  EXPECT_THROW(PlanarEmbedding(g, {{1, 2}, {2, 0}, {3, 1}, {0, 2}}, std::nullopt), Error);
  // K4 with a rotation system of genus 1
  UndirectedGraph k4(4);
  for (std::size_t u = 0; u < 4; ++u)
    for (std::size_t v = u + 1; v < 4; ++v) k4.add_edge(u, v);
  EXPECT_THROW(PlanarEmbedding(k4, {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}}, std::nullopt), Error);
  EXPECT_THROW(PlanarEmbedding(g, {{1, 3}, {2, 0}, {3, 1}, {0, 2}}, Dart{0, 2}), Error);
}

TEST(Kasteleyn, SingleEdgeAndTriangle) {
  UndirectedGraph edge(2, {{0, 1, 1}});
  const PlanarEmbedding e_emb(edge, {{1}, {0}}, Dart{0, 1});
  const auto o = kasteleyn_orient(edge, e_emb);
  EXPECT_TRUE(o.fits(edge));
  EXPECT_TRUE(check_clockwise_odd(edge, e_emb, o));

  const auto t = triangle();
  const auto emb = triangle_embedding(t);
  auto kt = kasteleyn_orient(t, emb);
  const std::size_t cw = clockwise_count(emb, kt, bounded_face(emb));
  EXPECT_TRUE(cw == 1 || cw == 3);
  EXPECT_TRUE(check_clockwise_odd(t, emb, kt));
  kt.flip(0, 1);
  EXPECT_FALSE(check_clockwise_odd(t, emb, kt));
}

TEST(Kasteleyn, GridFacesAreOdd) {
  const auto g = grid_graph(3, 3);
  const auto emb = grid_embedding(g, 3, 3);
  const auto o = kasteleyn_orient(g, emb);
  for (std::size_t f = 0; f < emb.faces().size(); ++f)
    if (f != *emb.outer_face()) EXPECT_EQ(clockwise_count(emb, o, f) % 2, 1u);
}

TEST(Kasteleyn, EdgelessGraph) {
  UndirectedGraph g(3);
  const PlanarEmbedding emb(g, {{}, {}, {}}, std::nullopt);
  const Orientation o(3);
  EXPECT_TRUE(check_clockwise_odd(g, emb, o));
  EXPECT_TRUE(is_pfaffian_orientation(g, o));
  try {
    kasteleyn_orient(g, emb);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Disconnected);
  }
}

TEST(Fkt, Grids) {
  const std::pair<std::size_t, std::size_t> dims[] = {{2, 2}, {2, 3}, {2, 4}, {4, 4}, {3, 4}, {2, 7}};
  for (auto [r, c] : dims) {
    const auto g = grid_graph(r, c);
    const auto o = kasteleyn_orient(g, grid_embedding(g, r, c));
    EXPECT_EQ(count_matchings_fkt(g, o), oracle::matchings(g)) << r << "x" << c;
  }
  const auto c4 = cycle4();
  EXPECT_EQ(count_matchings_fkt(c4, kasteleyn_orient(c4, cycle4_embedding(c4))), 2);
  EXPECT_EQ(count_matchings_fkt(grid_graph(2, 4), kasteleyn_orient(grid_graph(2, 4), grid_embedding(grid_graph(2, 4), 2, 4))),
            5);
  const auto g44 = grid_graph(4, 4);
  EXPECT_EQ(count_matchings_fkt(g44, kasteleyn_orient(g44, grid_embedding(g44, 4, 4))), 36);
  const auto g88 = grid_graph(8, 8);
  EXPECT_EQ(count_matchings_fkt(g88, kasteleyn_orient(g88, grid_embedding(g88, 8, 8))), 12988816);
}

TEST(Fkt, RandomPlaneGraphs) {
  gen::Rng rng(33);
  for (int t = 0; t < 120; ++t) {
    auto pg = gen::random_planar_graph(rng, gen::uniform(rng, 1, 12));
    const auto o = kasteleyn_orient(pg.graph, pg.embedding);
    ASSERT_TRUE(check_clockwise_odd(pg.graph, pg.embedding, o));
    ASSERT_EQ(count_matchings_fkt(pg.graph, o), oracle::matchings(pg.graph));
    ASSERT_TRUE(is_pfaffian_orientation(pg.graph, o));
  }
}

TEST(Fkt, WeightedSum) {
  gen::Rng rng(34);
  for (int t = 0; t < 60; ++t) {
    auto pg = gen::random_planar_graph(rng, gen::uniform(rng, 2, 12));
    UndirectedGraph w(pg.graph.node_count());
    for (const auto& e : pg.graph.edges()) w.add_edge(e.u, e.v, BigInt(static_cast<unsigned long>(gen::uniform(rng, 1, 9))));
    const auto o = kasteleyn_orient(pg.graph, pg.embedding);
    ASSERT_EQ(count_matchings_fkt(w, o), oracle::matchings(w));
    ASSERT_EQ(matching_weight_sum_bruteforce(w), oracle::matchings(w));
  }
}

TEST(Fkt, NonPfaffianOrientationCanMiscount) {
  const auto g = cycle4();
  const auto emb = cycle4_embedding(g);
  const auto bad = along_face(g, emb, bounded_face(emb));
  // both matchings cancel
  EXPECT_EQ(det(skew_weight_matrix(g, bad)), 0);
}

TEST(Little, Postcondition) {
  UndirectedGraph edge(2, {{0, 1, 1}});
  const auto o = little_orientation(edge, 1);
  EXPECT_EQ(o.eps(0, 1), 1);

  const auto t = triangle();
  const auto ot = little_orientation(t, 2);
  EXPECT_EQ(ot.out_degree(0) % 2, 1u);
  EXPECT_EQ(ot.out_degree(1) % 2, 1u);

  gen::Rng rng(35);
  for (int k = 0; k < 100; ++k) {
    auto g = random_connected(rng, gen::uniform(rng, 1, 10));
    for (std::size_t v = 0; v < g.node_count(); ++v) {
      const auto lo = little_orientation(g, v);
      ASSERT_TRUE(lo.fits(g));
      for (std::size_t u = 0; u < g.node_count(); ++u)
        if (u != v) ASSERT_EQ(lo.out_degree(u) % 2, 1u);
    }
  }
}

TEST(Little, Disconnected) {
  try {
    little_orientation(UndirectedGraph(2), 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Disconnected);
  }
}

TEST(PolyaMatrix, Cases) {
  EXPECT_TRUE(polya_matrix_check(IntMatrix{{1}}, IntMatrix{{1}}));
  EXPECT_TRUE(polya_matrix_check(IntMatrix{{1, 1}, {1, 1}}, IntMatrix{{1, 1}, {-1, 1}}));
  EXPECT_FALSE(polya_matrix_check(IntMatrix{{1, 1}, {1, 1}}, IntMatrix{{1, 1}, {1, 1}}));
  EXPECT_THROW(polya_matrix_check(IntMatrix{{1, 0}, {1, 1}}, IntMatrix{{1, 1}, {1, 1}}), Error);
}

TEST(PolyaMatrix, NoSigningOfThreeByThreeOnes) {
  const IntMatrix ones{{1, 1, 1}, {1, 1, 1}, {1, 1, 1}};
  for (unsigned mask = 0; mask < 512; ++mask) {
    IntMatrix b(3);
    for (unsigned k = 0; k < 9; ++k) b(k / 3, k % 3) = (mask >> k & 1U) ? -1 : 1;
    ASSERT_FALSE(polya_matrix_check(ones, b));
  }
}

TEST(PolyaMatrix, KasteleynSigningOfBipartitePlaneGraphs) {
  // signs from a Pfaffian orientation give |det| = perm; one row flip fixes the sign
  for (auto [r, c] : {std::pair<std::size_t, std::size_t>{2, 2}, {2, 3}, {3, 4}, {4, 4}}) {
    const auto g = grid_graph(r, c);
    const auto o = kasteleyn_orient(g, grid_embedding(g, r, c));
    const auto sides = g.bipartition();
    ASSERT_TRUE(sides.has_value());
    std::vector<std::size_t> left, right;
    for (std::size_t v = 0; v < g.node_count(); ++v) ((*sides)[v] == 0 ? left : right).push_back(v);
    const auto a01 = *biadjacency(g);
    IntMatrix b(left.size());
    for (std::size_t i = 0; i < left.size(); ++i)
      for (std::size_t j = 0; j < right.size(); ++j) b(i, j) = o.eps(left[i], right[j]);
    if (det(b) < 0)
      for (std::size_t j = 0; j < right.size(); ++j) b(0, j) = -b(0, j);
    EXPECT_TRUE(polya_matrix_check(a01, b)) << r << "x" << c;
  }
}
