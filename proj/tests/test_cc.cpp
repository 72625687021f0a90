#include <gtest/gtest.h>

#include <cmath>

#include "corpus.hpp"
#include "motionforge/coherent.hpp"
#include "motionforge/coloring.hpp"
#include "motionforge/errors.hpp"
#include "motionforge/io.hpp"
#include "motionforge/perm_group.hpp"
#include "oracles.hpp"

using namespace mf;

namespace {

bool preserves_colors(const CoherentConfig& cc, const Perm& p) {
  for (Point x = 0; x < cc.n; ++x)
    for (Point y = 0; y < cc.n; ++y)
      if (cc(p(x), p(y)) != cc(x, y)) return false;
  return true;
}

std::size_t brute_min_distinguishing(const CoherentConfig& cc) {
  std::size_t best = SIZE_MAX;
  for (Point x = 0; x < cc.n; ++x)
    for (Point y = x + 1; y < cc.n; ++y) {
      std::size_t d = 0;
      for (Point z = 0; z < cc.n; ++z) d += cc(z, x) != cc(z, y);
      best = std::min(best, d);
    }
  return best;
}

Order factorial(unsigned r) {
  Order f = 1;
  for (unsigned i = 2; i <= r; ++i) f *= i;
  return f;
}

}  // namespace

TEST(CoherentConfig, SchurianRanks) {
  EXPECT_EQ(schurian_cc(symmetric_group(5)).rank, 2u);
  EXPECT_EQ(schurian_cc(named_group("T(5)")).rank, 3u);
  EXPECT_EQ(schurian_cc(cyclic_group(5)).rank, 5u);
  EXPECT_EQ(schurian_cc(cyclic_group(7)).rank, 7u);
  auto intrans = schurian_cc(named_group("S3 x S2"));
  EXPECT_EQ(intrans.diagonal_colors(), 2u);
  EXPECT_TRUE(validate_cc(intrans).valid);
}

TEST(CoherentConfig, SchurianConfigsAreValidAndInvariant) {
  for (const auto& name : corpus::small_group_names()) {
    PermGroup g = corpus::group(name);
    auto cc = schurian_cc(g);
    EXPECT_TRUE(validate_cc(cc).valid) << name;
    for (const auto& s : g.generators()) EXPECT_TRUE(preserves_colors(cc, s)) << name;
    if (g.degree() <= 12) EXPECT_TRUE(g.is_subgroup_of(cc_automorphisms(cc))) << name;
  }
}

TEST(CoherentConfig, AxiomViolations) {
  // Path on four vertices: not strongly regular.
  auto p4 = graph_cc(4, {{0, 1}, {1, 2}, {2, 3}});
  auto rep = validate_cc(p4);
  EXPECT_FALSE(rep.valid);
  EXPECT_EQ(rep.axiom, 3);
  EXPECT_FALSE(rep.message.empty());

  // A diagonal colour reused off the diagonal.
  auto bad1 = canonical_config(2, {0, 0, 1, 0});
  EXPECT_EQ(validate_cc(bad1).axiom, 1);

  // A colour class whose transpose is not a class.
  auto bad2 = canonical_config(3, {0, 1, 2, 2, 0, 1, 1, 1, 0});
  EXPECT_EQ(validate_cc(bad2).axiom, 2);

  EXPECT_TRUE(validate_cc(schurian_cc(dihedral_group(4))).valid);
  EXPECT_TRUE(validate_cc(schurian_cc(symmetric_group(6))).valid);
}

TEST(CoherentConfig, IntersectionNumbersOfTheClique) {
  auto k5 = schurian_cc(symmetric_group(5));
  auto rep = validate_cc(k5);
  ASSERT_TRUE(rep.valid);
  ASSERT_EQ(rep.p.size(), 8u);
  // p_{1,1}^1 = n - 2 on the clique.
  EXPECT_EQ(rep.p[(1 * 2 + 1) * 2 + 1], 3u);
  EXPECT_EQ(rep.p[(1 * 2 + 1) * 2 + 0], 4u);
}

TEST(CoherentConfig, Primitivity) {
  EXPECT_TRUE(is_upcc(triangular_cc(5)));
  auto clique = schurian_cc(symmetric_group(5));
  EXPECT_TRUE(is_primitive_cc(clique));
  EXPECT_FALSE(is_upcc(clique));
  EXPECT_FALSE(is_primitive_cc(schurian_cc(cyclic_group(4))));
  EXPECT_TRUE(is_upcc(schurian_cc(cyclic_group(5))));
  EXPECT_TRUE(is_upcc(lattice_cc(3)));
}

TEST(CoherentConfig, DistinguishingSets) {
  auto clique = schurian_cc(symmetric_group(5));
  EXPECT_EQ(distinguishing_set(clique, 0, 3), (std::vector<Point>{0, 3}));
  EXPECT_THROW(distinguishing_set(clique, 1, 1), DomainError);
  EXPECT_EQ(min_distinguishing(triangular_cc(5)), 6u);
  EXPECT_EQ(min_distinguishing(lattice_cc(3)), 6u);
  for (const char* name : {"D5", "C7", "AGL(1,7)", "PSL(2,7)", "T(6)", "L(4)", "S3 wr C2"})
    EXPECT_EQ(min_distinguishing(schurian_cc(named_group(name))), brute_min_distinguishing(schurian_cc(named_group(name))))
        << name;
}

TEST(CoherentConfig, MotionOfTriangularAndLatticeGraphs) {
  for (unsigned r : {5u, 6u, 7u}) {
    auto t = triangular_cc(r);
    EXPECT_EQ(motion_exact(t), 2 * r - 4) << r;
    EXPECT_EQ(cc_automorphisms(t).order(), factorial(r)) << r;
  }
  for (unsigned r : {3u, 4u, 5u}) {
    auto l = lattice_cc(r);
    EXPECT_EQ(motion_exact(l), 2 * r) << r;
    EXPECT_EQ(cc_automorphisms(l).order(), 2 * factorial(r) * factorial(r)) << r;
  }
  EXPECT_EQ(motion_exact(schurian_cc(symmetric_group(5))), 2u);
}

TEST(CoherentConfig, LowerBoundsHold) {
  std::vector<CoherentConfig> fixtures = {triangular_cc(5), triangular_cc(6), triangular_cc(7), lattice_cc(3),
                                          lattice_cc(4),    lattice_cc(5),    schurian_cc(symmetric_group(5))};
  for (const char* name : {"C5", "C7", "D5", "D7", "AGL(1,5)", "AGL(1,7)", "AGL(2,3)", "PSL(2,7)", "PSL(3,2)", "A5", "M11"})
    fixtures.push_back(schurian_cc(named_group(name)));
  for (const auto& cc : fixtures) {
    const std::size_t lower = motion_lower_bound(cc);
    EXPECT_LE(lower, motion_exact(cc)) << cc.n;
    if (is_upcc(cc) && cc.n <= 100) EXPECT_GE(static_cast<double>(lower), (std::sqrt(static_cast<double>(cc.n)) - 1) / 2) << cc.n;
  }
}

TEST(CoherentConfig, MotionBoundOnUpccs) {
  for (const auto& cc : {triangular_cc(5), triangular_cc(6), lattice_cc(3), lattice_cc(4)}) {
    PermGroup aut = cc_automorphisms(cc);
    std::size_t mu = motion_exact(cc);
    Order sq = aut.order() * aut.order();
    std::uint32_t d = 2;
    while (boost::multiprecision::pow(Order(d), static_cast<unsigned>(mu)) < sq) ++d;
    auto r = motion_bound_coloring(aut, d);
    EXPECT_TRUE(r.bound_holds) << cc.n;
    ASSERT_TRUE(r.coloring.has_value()) << cc.n;
    EXPECT_TRUE(is_asymmetric(aut, *r.coloring)) << cc.n;
  }
}

TEST(CoherentConfig, TextRoundTrip) {
  for (const auto& cc : {triangular_cc(5), lattice_cc(3), schurian_cc(dihedral_group(6))}) {
    auto back = parse_cc(format_cc(cc));
    EXPECT_EQ(back.color, cc.color);
    EXPECT_EQ(back.rank, cc.rank);
  }
  EXPECT_THROW(parse_cc("3\n0 1 1\n1 0\n"), ParseError);
  auto p4 = parse_cc(read_text_file(resolve_data_path("data/cc/p4.cc")));
  EXPECT_EQ(validate_cc(p4).axiom, 3);
  EXPECT_TRUE(validate_cc(parse_cc(read_text_file(resolve_data_path("data/cc/t5.cc")))).valid);
}
