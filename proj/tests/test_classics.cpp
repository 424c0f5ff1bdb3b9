#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "exactcomb/exactcomb.hpp"
#include "oracles.hpp"

using namespace exactcomb;
using namespace exactcomb::classics;

TEST(Representatives, Singletons) {
  RepInstance inst{3, {{0}, {1}, {2}}, {{2}, {0}, {1}}};
  const auto r = common_representatives(inst);
  ASSERT_TRUE(r.success);
  EXPECT_EQ(r.representatives, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(Representatives, TwoByTwo) {
  RepInstance inst{4, {{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}};
  const auto r = common_representatives(inst);
  ASSERT_TRUE(r.success);
  EXPECT_EQ(r.representatives.size(), 2u);
  EXPECT_TRUE(is_common_system(inst, r.representatives));
}

TEST(Representatives, FailureCertificate) {
  RepInstance inst{2, {{0, 1}}, {{0}, {1}}};
  const auto r = common_representatives(inst);
  ASSERT_FALSE(r.success);
  EXPECT_FALSE(r.swapped);
  EXPECT_EQ(r.cert_u.size(), 1u);
  EXPECT_EQ(r.cert_b.size(), 2u);
  EXPECT_TRUE(certificate_violates_condition(inst, r));

  RepInstance flipped{2, {{0}, {1}}, {{0, 1}}};
  const auto s = common_representatives(flipped);
  ASSERT_FALSE(s.success);
  EXPECT_TRUE(s.swapped);
  EXPECT_TRUE(certificate_violates_condition(flipped, s));
}

TEST(Representatives, MalformedPartitions) {
  try {
    common_representatives(RepInstance{3, {{0, 1}}, {{0, 1, 2}}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MalformedPartition);
  }
  EXPECT_THROW(common_representatives(RepInstance{2, {{0, 1}, {1}}, {{0, 1}}}), Error);
  EXPECT_THROW(common_representatives(RepInstance{2, {{0, 1}, {}}, {{0, 1}}}), Error);
}

TEST(Representatives, UniformBlocksAlwaysSucceed) {
  gen::Rng rng(41);
  for (int t = 0; t < 200; ++t) {
    const std::size_t size = gen::uniform(rng, 1, 6);
    const auto inst = gen::random_uniform_rep_instance(rng, size, gen::uniform(rng, 1, 40 / size));
    const auto r = common_representatives(inst);
    ASSERT_TRUE(r.success);
    ASSERT_TRUE(is_common_system(inst, r.representatives));
  }
}

TEST(Representatives, MatchesSearchOracle) {
  gen::Rng rng(42);
  int failures = 0;
  for (int t = 0; t < 400; ++t) {
    const auto inst = gen::random_rep_instance(rng, gen::uniform(rng, 1, 9));
    const auto r = common_representatives(inst);
    ASSERT_EQ(r.success, oracle::has_common_system(inst));
    if (r.success) {
      ASSERT_TRUE(is_common_system(inst, r.representatives));
    } else {
      ++failures;
      ASSERT_TRUE(certificate_violates_condition(inst, r));
    }
  }
  EXPECT_GT(failures, 50);
}

TEST(LinearSpace, Classification) {
  const auto np = linear_space_validate(near_pencil(4));
  EXPECT_EQ(np.m, 4u);
  EXPECT_EQ(np.n, 4u);
  EXPECT_EQ(np.equality, EqualityCase::NearPencil);

  const auto fano = linear_space_validate(fano_plane());
  EXPECT_EQ(fano.m, 7u);
  EXPECT_EQ(fano.equality, EqualityCase::Design);
  EXPECT_EQ(fano.k, 3u);

  const auto k5 = linear_space_validate(complete_graph_space(5));
  EXPECT_EQ(k5.m, 10u);
  EXPECT_TRUE(k5.bound_holds);
  EXPECT_EQ(k5.equality, EqualityCase::None);

  const auto pg3 = linear_space_validate(cyclic_plane(13, {0, 1, 3, 9}));
  EXPECT_EQ(pg3.equality, EqualityCase::Design);
  EXPECT_EQ(pg3.k, 4u);
}

TEST(LinearSpace, Rejections) {
  try {
    linear_space_validate(LinearSpace{4, {{0, 1, 2}, {0, 1, 3}}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotLinearSpace);
  }
  EXPECT_THROW(linear_space_validate(LinearSpace{3, {{0, 1}, {1, 2}}}), Error);
}

TEST(LinearSpace, BoundOnRandomSpaces) {
  gen::Rng rng(43);
  for (int t = 0; t < 500; ++t) {
    const auto ls = gen::random_linear_space(rng);
    const auto r = linear_space_validate(ls);
    ASSERT_TRUE(r.bound_holds) << ls.points << " points, " << ls.lines.size() << " lines";
    if (r.m == r.n) ASSERT_NE(r.equality, EqualityCase::None);
  }
}

TEST(LinearSpace, SingleLineIsReportedAsBelowTheBound) {
  const auto r = linear_space_validate(LinearSpace{4, {{0, 1, 2, 3}}});
  EXPECT_EQ(r.m, 1u);
  EXPECT_FALSE(r.bound_holds);
}

TEST(OrdinaryLine, Cases) {
  auto pt = [](long x, long y) { return Point{BigRational(x), BigRational(y)}; };
  const auto [a, b] = ordinary_line({pt(0, 0), pt(1, 0), pt(0, 1)});
  EXPECT_NE(a, b);
  // triangle with its centroid; the lines through the centroid and a vertex are not ordinary
  std::vector<Point> tc{pt(0, 0), pt(3, 0), pt(0, 3), pt(1, 1)};
  const auto [i, j] = ordinary_line(tc);
  for (std::size_t k = 0; k < tc.size(); ++k)
    if (k != i && k != j) EXPECT_FALSE(collinear(tc[i], tc[j], tc[k]));
  for (std::size_t n = 4; n <= 8; ++n) {
    std::vector<Point> pts;
    for (std::size_t p = 0; p + 1 < n; ++p) pts.push_back(pt(static_cast<long>(p), 0));
    pts.push_back(pt(0, 1));
    const auto [u, v] = ordinary_line(pts);
    EXPECT_TRUE(u == n - 1 || v == n - 1) << n;
  }
  try {
    ordinary_line({pt(0, 0), pt(1, 1), pt(2, 2)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::AllCollinear);
  }
}

TEST(Fundament, Examples) {
  EXPECT_TRUE(fundament_decide({1, -1}));
  EXPECT_FALSE(fundament_decide({1, 1}));
  EXPECT_EQ(fundament_witness({1, 1}), std::optional<BigInt>(BigInt(-1)));
  EXPECT_THROW(fundament_decide({2, 1}), Error);
  EXPECT_THROW(fundament_decide({}), Error);
}

TEST(Fundament, NegabinaryRepresentsEverySmallInteger) {
  for (long x = -100; x <= 100; ++x) {
    const auto eps = greedy_expansion({1, -1}, x);
    ASSERT_TRUE(eps.has_value()) << x;
    ASSERT_EQ(evaluate_expansion({1, -1}, *eps), x);
  }
}

TEST(Fundament, DecisionAgreesWithSubsetSums) {
  // period 2 with small digits: a fundament reaches every |x| <= 20 within
  // 18 digits; a witness is missing from every sum of the first 18
  for (long a = 1; a <= 9; a += 2)
    for (long b = -9; b <= 9; b += 2) {
      const PeriodicOddSeq d{a, b};
      std::vector<long> sums{0};
      for (std::size_t i = 0; i < 18; ++i) {
        const long term = d[i % 2] * (1L << i);
        const std::size_t half = sums.size();
        for (std::size_t k = 0; k < half; ++k) sums.push_back(sums[k] + term);
      }
      std::sort(sums.begin(), sums.end());
      auto has = [&](long x) { return std::binary_search(sums.begin(), sums.end(), x); };
      const auto w = fundament_witness(d);
      if (!w) {
        for (long x = -20; x <= 20; ++x) ASSERT_TRUE(has(x)) << a << "," << b << " x=" << x;
      } else {
        ASSERT_FALSE(has(w->get_si())) << a << "," << b;
        ASSERT_FALSE(greedy_expansion(d, w->get_si(), 10000).has_value());
      }
    }
}

TEST(Fundament, LongerPeriods) {
  EXPECT_TRUE(fundament_decide({1, -1, 1, -1}));
  EXPECT_FALSE(fundament_decide({1, 1, 1}));
  gen::Rng rng(44);
  for (int t = 0; t < 100; ++t) {
    PeriodicOddSeq d(gen::uniform(rng, 1, 4));
    for (auto& x : d) x = 2 * (static_cast<long>(gen::uniform(rng, 0, 7)) - 4) + 1;
    const bool decided = fundament_decide(d);
    for (long x = -30; x <= 30 && decided; ++x) {
      const auto eps = greedy_expansion(d, x);
      ASSERT_TRUE(eps.has_value());
      ASSERT_EQ(evaluate_expansion(d, *eps), x);
    }
  }
}

TEST(Fundament, Scan) {
  const auto strict = fundament_scan(100);
  for (const auto& [a, b] : strict) {
    EXPECT_LT(-b, a);
    EXPECT_TRUE(fundament_decide({a, b}));
  }
  EXPECT_GE(fundament_scan(100, true).size(), strict.size());
}

TEST(MoserDeBruijn, FirstTerms) {
  const auto s = moser_debruijn(10);
  const std::vector<long> expect{0, 1, 4, 5, 16, 17, 20, 21, 64, 65};
  ASSERT_EQ(s.size(), expect.size());
  for (std::size_t i = 0; i < s.size(); ++i) EXPECT_EQ(s[i], expect[i]);
}

TEST(Factorization, Predicates) {
  const AbelianGroup z4({4});
  EXPECT_TRUE(is_factorization(z4, {0, 1}, {0, 2}));
  EXPECT_FALSE(is_factorization(z4, {0, 1}, {0, 1}));
  const AbelianGroup z23({2, 3});
  // subgroups Z2 x 0 and 0 x Z3
  EXPECT_TRUE(is_factorization(z23, {z23.element({0, 0}), z23.element({1, 0})},
                               {z23.element({0, 0}), z23.element({0, 1}), z23.element({0, 2})}));
  EXPECT_TRUE(is_periodic_subset(z4, {0, 1, 2, 3}));
  EXPECT_FALSE(is_periodic_subset(z4, {0}));
  EXPECT_TRUE(is_periodic_subset(z4, {0, 2}));
  try {
    is_periodic_subset(z4, {4});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ElementOutOfGroup);
  }
}

TEST(Hajos, SmallGroupsHaveOnlyPeriodicFactorizations) {
  for (unsigned p : {2u, 3u, 5u, 7u, 11u, 13u}) EXPECT_TRUE(hajos_search(AbelianGroup({p})).empty()) << p;
  EXPECT_TRUE(hajos_search(AbelianGroup({4})).empty());
  EXPECT_TRUE(hajos_search(AbelianGroup({3, 3})).empty());
  EXPECT_TRUE(hajos_search(AbelianGroup({2, 2, 3})).empty());
}

TEST(Hajos, AgreesWithSubsetPairSearch) {
  for (const auto& type : std::vector<std::vector<unsigned>>{{4}, {6}, {8}, {2, 2}, {2, 4}, {3, 3}, {2, 2, 2}, {12}, {2, 6}}) {
    const AbelianGroup g(type);
    EXPECT_EQ(hajos_search(g).size(), oracle::nonperiodic_factorizations(g));
  }
}

TEST(Hajos, Limits) {
  try {
    hajos_search(AbelianGroup({5, 5, 5}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::GroupTooLarge);
  }
  EXPECT_THROW(hajos_search(AbelianGroup({72}), 10), Error);
}
