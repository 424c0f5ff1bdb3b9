#include <gtest/gtest.h>

#include "exactcomb/exactcomb.hpp"
#include "oracles.hpp"

using namespace exactcomb;
using namespace exactcomb::polya;

namespace {

MultiPoly x(std::size_t i, unsigned e = 1) { return MultiPoly::var(cycle_variable(i)).pow(e); }
MultiPoly c(long num, long den = 1) { return MultiPoly(BigRational(num, den)); }

// the displayed cube indices, written term by term
MultiPoly faces_index() {
  return c(1, 24) * (x(1, 6) + c(3) * x(1, 2) * x(2, 2) + c(6) * x(1, 2) * x(4) + c(6) * x(2, 3) + c(8) * x(3, 2));
}
MultiPoly vertices_index() { return c(1, 24) * (x(1, 8) + c(9) * x(2, 4) + c(6) * x(4, 2) + c(8) * x(1, 2) * x(3, 2)); }
MultiPoly edges_index() {
  return c(1, 24) * (x(1, 12) + c(3) * x(2, 6) + c(6) * x(4, 3) + c(6) * x(1, 2) * x(2, 5) + c(8) * x(3, 4));
}

std::vector<PermGroup> builtin_groups() {
  return {cube_face_group(), cube_vertex_group(), cube_edge_group(), cyclic_group(5), dihedral_group(6),
          symmetric_group(4), close_group(3, {})};
}

}  // namespace

TEST(CycleType, Examples) {
  EXPECT_EQ(to_string(cycle_type(Permutation::identity(6))), "(6,0,0,0,0,0)");
  EXPECT_EQ(to_string(cycle_type(Permutation({1, 0}))), "(0,1)");
  // a quarter turn about the axis through two opposite faces
  bool found = false;
  for (const auto& g : cube_face_group().elements())
    if (to_string(cycle_type(g)) == "(2,0,0,1,0,0)") found = true;
  EXPECT_TRUE(found);
}

TEST(Permutation, Algebra) {
  const Permutation p({1, 2, 0, 3}), q({0, 3, 2, 1});
  EXPECT_EQ(p * p.inverse(), Permutation::identity(4));
  EXPECT_EQ((p * q).inverse(), q.inverse() * p.inverse());
  EXPECT_THROW(Permutation({0, 0}), Error);
}

TEST(CloseGroup, Orders) {
  EXPECT_EQ(close_group(4, {}).order(), 1u);
  EXPECT_EQ(close_group(4, {rotation(4)}).order(), 4u);
  EXPECT_EQ(cube_face_group().order(), 24u);
  EXPECT_EQ(cube_vertex_group().order(), 24u);
  EXPECT_EQ(cube_edge_group().order(), 24u);
  EXPECT_EQ(dihedral_group(5).order(), 10u);
  EXPECT_EQ(symmetric_group(5).order(), 120u);
  for (const auto& g : builtin_groups()) EXPECT_TRUE(is_group(g));
}

TEST(CycleIndex, CubeActions) {
  EXPECT_EQ(cycle_index(cube_face_group()), faces_index());
  EXPECT_EQ(cycle_index(cube_vertex_group()), vertices_index());
  EXPECT_EQ(cycle_index(cube_edge_group()), edges_index());
}

TEST(CycleIndex, Display) {
  EXPECT_EQ(cycle_index(cyclic_group(4)).to_string(), "1/4*x1^4 + 1/4*x2^2 + 1/2*x4");
}

TEST(CountOrbits, Cases) {
  EXPECT_EQ(count_orbits(close_group(5, {})), 5);
  EXPECT_EQ(count_orbits(cyclic_group(4)), 1);
  EXPECT_EQ(count_orbits(cube_face_group()), 1);
}

TEST(CountPatterns, Cases) {
  EXPECT_EQ(count_patterns(cycle_index(cube_face_group()), 2), 10);
  EXPECT_EQ(count_patterns(cycle_index(cube_face_group()), 1), 1);
  EXPECT_EQ(count_patterns(cycle_index(cube_vertex_group()), 2), oracle::colouring_orbits(cube_vertex_group(), 2));
}

TEST(CountPatterns, MatchesUnionFind) {
  for (const auto& g : builtin_groups())
    for (unsigned k = 1; k <= 3; ++k) {
      if (g.degree() >= 12 && k == 3) continue;
      EXPECT_EQ(count_patterns(cycle_index(g), k), oracle::colouring_orbits(g, k));
    }
}

TEST(Inventory, CubeFaces) {
  const auto inv = pattern_inventory(cycle_index(cube_face_group()), colors_as_variables({"z", "w"}));
  EXPECT_EQ(inv.coefficient(Monomial::var("z", 4) * Monomial::var("w", 2)), 2);
  EXPECT_EQ(inv.coefficient(Monomial::var("z", 3) * Monomial::var("w", 3)), 2);
  EXPECT_EQ(inv.coefficient(Monomial::var("z", 6)), 1);
  EXPECT_EQ(inv.coefficient_sum(), 10);
  EXPECT_EQ(inv, orbit_inventory_oracle(cube_face_group(), colors_as_variables({"z", "w"})));
}

TEST(Inventory, UnitWeightsGiveTheCount) {
  const auto ci = cycle_index(cube_edge_group());
  EXPECT_EQ(pattern_inventory(ci, unit_colors(3)), MultiPoly(BigRational(count_patterns(ci, 3))));
}

TEST(Inventory, OracleSmallCases) {
  const auto zw = colors_as_variables({"z", "w"});
  EXPECT_EQ(orbit_inventory_oracle(close_group(1, {}), zw), MultiPoly::var("z") + MultiPoly::var("w"));
  const auto c3 = orbit_inventory_oracle(cyclic_group(3), zw);
  EXPECT_EQ(c3.coefficient_sum(), 4);
}

TEST(Inventory, MatchesOrbitOracleOnBuiltinGroups) {
  for (const auto& g : builtin_groups()) {
    for (const auto& names : {std::vector<std::string>{"z", "w"}, std::vector<std::string>{"r", "g", "b"}}) {
      const auto w = colors_as_variables(names);
      EXPECT_EQ(pattern_inventory(cycle_index(g), w), orbit_inventory_oracle(g, w));
      EXPECT_EQ(weighted_cauchy_frobenius(g, w), orbit_inventory_oracle(g, w));
    }
  }
}

TEST(Inventory, ColourGroup) {
  // 2-colourings of the cube faces up to rotation and swapping the colours
  EXPECT_EQ(count_orbits_with_color_group(cube_face_group(), symmetric_group(2)), 6);
}

TEST(Act, FollowsInverse) {
  // (sigma(g) f)(d) = f(g^-1 d)
  const Permutation g({1, 2, 0});
  const std::vector<std::size_t> f{7, 8, 9};
  const auto h = act(g, f);
  for (std::size_t d = 0; d < 3; ++d) EXPECT_EQ(h[d], f[g.inverse()(d)]);
}

TEST(NamedGroup, Specs) {
  EXPECT_EQ(named_group("cube-faces").order(), 24u);
  EXPECT_EQ(named_group("cyclic:6").order(), 6u);
  EXPECT_EQ(named_group("dihedral:4").order(), 8u);
  EXPECT_EQ(named_group("symmetric:3").order(), 6u);
  EXPECT_THROW(named_group("tetra"), Error);
  EXPECT_THROW(named_group("cyclic:x"), Error);
  EXPECT_THROW(named_group("symmetric:20"), Error);
}
