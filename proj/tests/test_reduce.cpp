#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "motionforge/coloring.hpp"
#include "motionforge/errors.hpp"
#include "motionforge/reduce_image.hpp"
#include "oracles.hpp"

using namespace mf;

namespace {

bool inside_one_orbit(const PermGroup& g, const Subset& s) {
  if (s.empty()) return true;
  auto o = g.orbit(s.front());
  std::set<Point> orbit(o.begin(), o.end());
  for (Point x : s)
    if (!orbit.count(x)) return false;
  return true;
}

// Image order of the stabilizer, from element lists.
std::size_t brute_image_order(const GroupHom& phi, const Subset& s) {
  auto stab = oracle::filter_stabilizer(oracle::elements(phi.source()), oracle::indicator(phi.source().degree(), s));
  std::set<Perm> img;
  for (const auto& p : stab) img.insert(phi.apply(p));
  return img.size();
}

}  // namespace

TEST(ReduceSimple, WitnessesShrinkTheImage) {
  std::set<std::string> paths;
  for (auto strategy : {ReduceStrategy::BruteFirst, ReduceStrategy::StructuredFirst})
    for (const auto& e : fixtures::simple_epis()) {
      auto w = reduce_simple_image(e.phi, {}, strategy);
      EXPECT_EQ(w.image_before, e.phi.image().order()) << e.name;
      EXPECT_EQ(w.image_after, reduced_image_order(e.phi, w.subset)) << e.name;
      EXPECT_LT(w.image_after, w.image_before) << e.name;
      EXPECT_TRUE(inside_one_orbit(e.phi.source(), w.subset)) << e.name;
      paths.insert(w.path);
    }
  for (const char* p : {"brute", "intransitive", "blocks-case1", "almost-simple"}) EXPECT_TRUE(paths.count(p)) << p;
}

TEST(ReduceSimple, ImageOrderMatchesBruteForce) {
  for (const auto& e : fixtures::simple_epis()) {
    if (e.phi.source().order() > 20000) continue;
    auto w = reduce_simple_image(e.phi);
    EXPECT_EQ(Order(brute_image_order(e.phi, w.subset)), w.image_after) << e.name;
  }
}

TEST(ReduceSimple, SpecificInstances) {
  auto a5 = reduce_simple_image(GroupHom::identity(alternating_group(5)));
  EXPECT_EQ(a5.subset, Subset{0});
  EXPECT_EQ(a5.image_after, Order(12));
  auto prod = reduce_simple_image(fixtures::project(named_group("A5 x S4"), fixtures::range(0, 5)),
                                  {}, ReduceStrategy::StructuredFirst);
  EXPECT_EQ(prod.path, "intransitive");
  EXPECT_EQ(prod.subset, Subset{0});
  auto l32 = primitive_reduce(GroupHom::identity(named_group("PSL(3,2)")));
  EXPECT_EQ(l32.subset, Subset{0});
  EXPECT_EQ(l32.image_after, Order(24));
  auto a6 = primitive_reduce(GroupHom::identity(alternating_group(6)));
  EXPECT_EQ(a6.image_after, Order(60));
}

TEST(ReduceSimple, AffineGroupOntoItsLinearQuotient) {
  PermGroup agl = named_group("AGL(3,2)");
  auto phi = mf::simple_quotient_epi(agl);
  ASSERT_TRUE(phi.has_value());
  EXPECT_EQ(phi->target().order(), Order(168));
  for (auto strategy : {ReduceStrategy::BruteFirst, ReduceStrategy::StructuredFirst}) {
    auto w = reduce_simple_image(*phi, {}, strategy);
    EXPECT_LT(w.image_after, Order(168));
    EXPECT_EQ(phi->image_of(setwise_stabilizer(agl, w.subset)).order(), w.image_after);
  }
}

TEST(ReduceSimple, RejectsNonSimpleTargets) {
  EXPECT_THROW(reduce_simple_image(GroupHom::identity(symmetric_group(5))), DomainError);
  EXPECT_THROW(reduce_simple_image(GroupHom::identity(symmetric_group(4))), DomainError);
  EXPECT_THROW(reduce_simple_image(GroupHom::identity(cyclic_group(5))), DomainError);
}

TEST(ReduceNonsolvable, WitnessesShrinkTheImage) {
  for (const auto& name : fixtures::nonsolvable_names()) {
    auto phi = GroupHom::identity(named_group(name));
    auto w = reduce_nonsolvable_image(phi);
    EXPECT_EQ(w.image_before, phi.source().order()) << name;
    EXPECT_EQ(w.image_after, setwise_stabilizer(phi.source(), w.subset).order()) << name;
    EXPECT_LT(w.image_after, w.image_before) << name;
  }
  auto s5 = reduce_nonsolvable_image(GroupHom::identity(symmetric_group(5)));
  EXPECT_EQ(s5.subset, Subset{0});
  EXPECT_EQ(s5.image_after, Order(24));
  EXPECT_THROW(reduce_nonsolvable_image(GroupHom::identity(symmetric_group(4))), DomainError);
}

TEST(ReduceNonsolvable, ThroughABlockAction) {
  PermGroup g = named_group("C2 wr S5");
  auto phi = fixtures::on_blocks(g);
  auto w = reduce_nonsolvable_image(phi);
  EXPECT_EQ(w.image_before, Order(120));
  EXPECT_LT(w.image_after, w.image_before);
  EXPECT_EQ(phi.image_of(setwise_stabilizer(g, w.subset)).order(), w.image_after);
}

TEST(ReduceNonsolvable, IterationReachesASolvableImage) {
  for (const auto& name : fixtures::nonsolvable_names()) {
    PermGroup h = named_group(name);
    const Order start = h.order();
    std::size_t rounds = 0;
    Order prev = start;
    while (!is_solvable(h)) {
      auto w = reduce_nonsolvable_image(GroupHom::identity(h));
      h = setwise_stabilizer(h, w.subset);
      ASSERT_LT(h.order(), prev) << name;
      prev = h.order();
      ++rounds;
    }
    EXPECT_LE(rounds, static_cast<std::size_t>(boost::multiprecision::msb(start))) << name;
  }
}

TEST(Properties, PerfectCoreCommutesWithEpimorphisms) {
  for (const auto& e : fixtures::simple_epis()) {
    const auto& phi = e.phi;
    EXPECT_TRUE(phi.image_of(perfect_core(phi.source())).same_group(perfect_core(phi.image()))) << e.name;
  }
}
