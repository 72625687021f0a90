#include <gtest/gtest.h>

#include <random>

#include "corpus.hpp"
#include "motionforge/catalog.hpp"
#include "motionforge/coloring.hpp"
#include "motionforge/errors.hpp"
#include "motionforge/normal.hpp"
#include "oracles.hpp"

using namespace mf;

TEST(Coloring, SetwiseStabilizerMatchesFilter) {
  std::mt19937_64 rng(3);
  for (const char* name : {"S6", "A5 x C2", "C2 wr S3", "PSL(2,7)", "D10", "L(3)", "AGL(2,3)"}) {
    PermGroup g = named_group(name);
    auto elems = oracle::elements(g);
    for (int t = 0; t < 25; ++t) {
      auto s = oracle::random_subset(g.degree(), rng);
      auto expect = oracle::filter_stabilizer(elems, oracle::indicator(g.degree(), s));
      EXPECT_EQ(oracle::sorted_elements(setwise_stabilizer(g, s)), expect) << name;
    }
  }
}

TEST(Coloring, ColoringStabilizerMatchesFilter) {
  std::mt19937_64 rng(5);
  for (const char* name : {"S5", "D8", "S3 wr C2", "T(5)"}) {
    PermGroup g = named_group(name);
    auto elems = oracle::elements(g);
    for (int t = 0; t < 25; ++t) {
      Coloring c(g.degree());
      for (auto& x : c) x = static_cast<std::uint32_t>(rng() % 3);
      EXPECT_EQ(oracle::sorted_elements(coloring_stabilizer(g, c)), oracle::filter_stabilizer(elems, c)) << name;
    }
  }
}

TEST(Coloring, TwoColouringIsItsRedSet) {
  std::mt19937_64 rng(9);
  for (const auto& name : corpus::small_group_names()) {
    PermGroup g = corpus::group(name);
    auto s = oracle::random_subset(g.degree(), rng);
    EXPECT_TRUE(coloring_stabilizer(g, subset_coloring(g.degree(), s)).same_group(setwise_stabilizer(g, s))) << name;
  }
}

TEST(Coloring, ReportFlagsAgreeWithStabilizer) {
  PermGroup g = symmetric_group(5);
  auto r = classify_coloring(g, {0, 0, 1, 1, 2});
  EXPECT_EQ(r.stabilizer.order(), Order(4));
  EXPECT_FALSE(r.asymmetric);
  EXPECT_TRUE(r.solvable);
  EXPECT_EQ(r.orbit_bound, 2u);
  auto a = classify_coloring(g, {0, 1, 2, 3, 4});
  EXPECT_TRUE(a.asymmetric);
  EXPECT_EQ(a.stabilizer.order(), Order(1));
  EXPECT_THROW(classify_coloring(g, {0, 1}), DomainError);
}

TEST(Coloring, AsymmetricSubsetsAgreeWithExhaustiveScan) {
  for (const auto& name : corpus::small_group_names()) {
    PermGroup g = corpus::group(name);
    if (g.degree() > 10) continue;
    auto elems = oracle::elements(g);
    auto found = find_asymmetric_subset(g);
    EXPECT_EQ(found.has_value(), oracle::has_asymmetric_subset(elems, g.degree())) << name;
    if (found) EXPECT_TRUE(is_asymmetric(g, subset_coloring(g.degree(), *found))) << name;
  }
  EXPECT_FALSE(find_asymmetric_subset(dihedral_group(5)).has_value());
  EXPECT_TRUE(find_asymmetric_subset(cyclic_group(5)).has_value());
}

TEST(Coloring, SearchIsIndependentOfThreadCount) {
  Caps one, four;
  four.threads = 4;
  for (const char* name : {"C2 wr C2 wr C2", "PSL(2,7)", "D8 x C3", "AGL(1,7)"}) {
    PermGroup g = named_group(name);
    EXPECT_EQ(find_asymmetric_subset(g, one), find_asymmetric_subset(g, four)) << name;
    EXPECT_EQ(find_solvable_subset(g, one), find_solvable_subset(g, four)) << name;
  }
}

TEST(Coloring, CapExhaustionIsReported) {
  Caps small;
  small.subsets = 1 << 10;
  EXPECT_THROW(find_asymmetric_subset(symmetric_group(12), small), CapExceeded);
  EXPECT_THROW(find_solvable_subset(symmetric_group(12), small), CapExceeded);
}

TEST(Coloring, AsyNumbers) {
  EXPECT_EQ(asy_number(symmetric_group(4)).k, 4u);
  EXPECT_EQ(asy_number(named_group("S4 wr C2")).k, 5u);
  EXPECT_EQ(asy_number(dihedral_group(5)).k, 3u);
  EXPECT_EQ(asy_number(cyclic_group(5)).k, 2u);
  EXPECT_EQ(asy_number(PermGroup::trivial(3)).k, 1u);
  for (const auto& name : corpus::small_group_names()) {
    PermGroup g = corpus::group(name);
    if (g.degree() > 6) continue;
    auto r = asy_number(g);
    EXPECT_EQ(r.k, oracle::asy(oracle::elements(g), g.degree())) << name;
    EXPECT_TRUE(is_asymmetric(g, r.witness)) << name;
    EXPECT_EQ(color_count(r.witness), r.k) << name;
  }
}

TEST(Coloring, SolvNumbersAreMonotoneInSubgroups) {
  const std::pair<const char*, const char*> pairs[] = {
      {"A5", "S5"}, {"C5", "S5"}, {"D5", "S5"}, {"AGL(1,5)", "S5"}, {"A6", "S6"}, {"A4", "S4"}, {"PSL(3,2)", "S7"},
  };
  for (auto [h, g] : pairs) {
    PermGroup hg = named_group(h), gg = named_group(g);
    ASSERT_TRUE(hg.is_subgroup_of(gg)) << h << " " << g;
    EXPECT_LE(solv_number(hg).k, solv_number(gg).k) << h << " " << g;
  }
}

TEST(Coloring, SolvNumberIsMaximumOverOrbits) {
  for (const char* name : {"S5 x S3", "A6 x C3", "S6 x S5", "A5 x A5", "PSL(3,2) x S4"}) {
    PermGroup g = named_group(name);
    std::size_t best = 1;
    for (const auto& o : g.orbits()) best = std::max(best, solv_number(g.restricted_to(o)).k);
    auto r = solv_number(g);
    EXPECT_EQ(r.k, best) << name;
    EXPECT_TRUE(is_solvable(coloring_stabilizer(g, r.witness))) << name;
  }
}

TEST(Coloring, SolvableSubsets) {
  auto s = find_solvable_subset(symmetric_group(5));
  ASSERT_TRUE(s.has_value());
  EXPECT_TRUE(is_solvable(setwise_stabilizer(symmetric_group(5), *s)));
  auto none = find_solvable_subset(symmetric_group(9));
  EXPECT_FALSE(none.has_value());
}

TEST(Coloring, MotionBoundResultsAreVerified) {
  auto r = motion_bound_coloring(named_group("L(5)"), 10);
  EXPECT_TRUE(r.bound_holds);
  EXPECT_EQ(r.minimal_degree, 10u);
  ASSERT_TRUE(r.coloring.has_value());
  EXPECT_TRUE(is_asymmetric(named_group("L(5)"), *r.coloring));

  auto c = motion_bound_coloring(cyclic_group(7), 2);
  EXPECT_TRUE(c.bound_holds);
  ASSERT_TRUE(c.coloring.has_value());
  EXPECT_TRUE(is_asymmetric(cyclic_group(7), *c.coloring));

  Caps few;
  few.trials = 50;
  auto s = motion_bound_coloring(symmetric_group(6), 2, few);
  EXPECT_FALSE(s.bound_holds);
  EXPECT_FALSE(s.coloring.has_value());
  EXPECT_EQ(s.trials, 50u);
}

TEST(Coloring, Enumerators) {
  std::size_t count = 0;
  for_each_subset(7, 3, [&](const Subset&) { return ++count, false; });
  EXPECT_EQ(count, 35u);
  count = 0;
  for_each_rgs_coloring(5, 2, [&](const Coloring&) { return ++count, false; });
  EXPECT_EQ(count, 15u);  // Stirling number S(5,2)
  count = 0;
  for_each_rgs_coloring(6, 3, [&](const Coloring&) { return ++count, false; });
  EXPECT_EQ(count, 90u);  // S(6,3)

  PermGroup g = symmetric_group(4);
  EXPECT_TRUE(colorings_isomorphic(g, {0, 0, 1, 1}, {1, 0, 1, 0}));
  EXPECT_FALSE(colorings_isomorphic(g, {0, 0, 0, 1}, {0, 0, 1, 1}));
}
