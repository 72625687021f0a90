// Epimorphisms used by the reduction tests and the acceptance suite.
#pragma once

#include <string>
#include <vector>

#include "motionforge/blocks.hpp"
#include "motionforge/catalog.hpp"
#include "motionforge/homomorphism.hpp"
#include "motionforge/inverse_sequence.hpp"
#include "motionforge/normal.hpp"

namespace fixtures {

struct Epi {
  std::string name;
  mf::GroupHom phi;
};

// Projection of g onto its action on an invariant set.
inline mf::GroupHom project(const mf::PermGroup& g, const std::vector<mf::Point>& points) {
  std::vector<mf::Perm> imgs;
  for (const auto& s : g.generators()) imgs.push_back(mf::PermGroup::restrict_perm(s, points));
  return mf::GroupHom::checked(g, g.restricted_to(points), std::move(imgs));
}

inline std::vector<mf::Point> range(mf::Point lo, mf::Point hi) {
  std::vector<mf::Point> r;
  for (mf::Point x = lo; x < hi; ++x) r.push_back(x);
  return r;
}

// Action of g on the blocks of the finest system joining 0 and 1.
inline mf::GroupHom on_blocks(const mf::PermGroup& g) {
  return mf::action_on_blocks(g, mf::minimal_block_system(g, {0, 1})).onto_image();
}

inline mf::GroupHom simple_quotient(const mf::PermGroup& g) { return *mf::simple_quotient_epi(g); }

// Epimorphisms onto nonabelian simple groups.
inline std::vector<Epi> simple_epis() {
  using mf::named_group;
  using mf::GroupHom;
  std::vector<Epi> out;
  for (const char* name : {"A5", "A6", "A7", "A8", "PSL(3,2)", "PSL(2,8)", "PSL(2,11)", "PSL(2,5)", "M11", "M12"})
    out.push_back({std::string(name) + " identity", GroupHom::identity(named_group(name))});
  out.push_back({"PSL(2,7) on 8 points", GroupHom::identity(mf::ProjectiveSpace(7, 2).psl())});
  out.push_back({"A5 on pairs", GroupHom::identity(mf::induced_on_subsets(mf::alternating_group(5), 2))});
  out.push_back({"A5 diagonal on 5+5", GroupHom::identity(mf::diagonal_copies(mf::alternating_group(5), 2))});
  out.push_back({"A5 x S4 onto A5", project(named_group("A5 x S4"), range(0, 5))});
  out.push_back({"S4 x A5 onto A5", project(named_group("S4 x A5"), range(4, 9))});
  out.push_back({"A5 x A5 onto second", project(named_group("A5 x A5"), range(5, 10))});
  out.push_back({"A6 x C3 onto A6", project(named_group("A6 x C3"), range(0, 6))});
  out.push_back({"C2 wr A5 on blocks", on_blocks(named_group("C2 wr A5"))});
  out.push_back({"S3 wr A5 on blocks", on_blocks(named_group("S3 wr A5"))});
  out.push_back({"C2 wr PSL(3,2) on blocks", on_blocks(named_group("C2 wr PSL(3,2)"))});
  out.push_back({"A5 wr C2 simple quotient", simple_quotient(named_group("A5 wr C2"))});
  out.push_back({"S5 x S5 simple quotient", simple_quotient(named_group("S5 x S5"))});
  out.push_back({"S5 on pairs simple quotient", simple_quotient(named_group("T(5)"))});
  return out;
}

// Identity maps of nonsolvable groups.
inline std::vector<std::string> nonsolvable_names() {
  return {"S5", "S6", "A5 x A5", "C2 wr A5", "A5 wr C2", "S5 x S3", "M11", "PSL(2,7) x C2", "T(5)", "S7", "A5 x A5 x A5"};
}

// Levels on consecutive domains; maps[i - 1] goes from level i to level i - 1.
inline mf::InverseSequence chain(std::vector<mf::PermGroup> groups, std::vector<mf::GroupHom> maps) {
  mf::InverseSequence seq;
  std::size_t off = 0;
  for (auto& g : groups) {
    seq.offsets.push_back(off);
    off += g.degree();
  }
  seq.groups = std::move(groups);
  seq.maps = std::move(maps);
  return seq;
}

// S4 onto S3 through its action on the three pairings of {0,1,2,3}; S3 fixes point 3.
inline mf::GroupHom s4_onto_s3() {
  mf::PermGroup s4 = mf::symmetric_group(4);
  std::vector<mf::Perm> imgs;
  for (const auto& g : s4.generators()) {
    std::vector<mf::Point> img{0, 1, 2, 3};
    // Pairing j matches 0 with j + 1.
    for (mf::Point j = 0; j < 3; ++j) {
      mf::Point a = g(0), b = g(j + 1);
      mf::Point partner = a == 0 ? b : b == 0 ? a : 6 - a - b;
      img[j] = partner - 1;
    }
    imgs.push_back(mf::Perm::from_images_unchecked(img));
  }
  mf::PermGroup s3(4, imgs);
  return mf::GroupHom::checked(s4, s3, imgs);
}

struct Sequence {
  std::string name;
  mf::InverseSequence seq;
};

// Epimorphic sequences for the pipeline.
inline std::vector<Sequence> pipeline_sequences() {
  using mf::named_group;
  std::vector<Sequence> out;
  const std::pair<const char*, std::size_t> diagonals[] = {
      {"C2", 1}, {"S3", 2}, {"S4 wr C2", 5}, {"S5", 3}, {"C4", 1}, {"A5", 3}, {"S4", 3}, {"AGL(1,5)", 2}, {"PSL(3,2)", 3},
  };
  for (auto [name, k] : diagonals)
    out.push_back({std::string("diagonal ") + name + " k=" + std::to_string(k), mf::diagonal_sequence(named_group(name), k)});
  {
    mf::PermGroup top = named_group("C2 wr S5");
    mf::GroupHom down = on_blocks(top);
    out.push_back({"C2 wr S5 over S5", chain({down.target(), top, top, top}, {down, mf::GroupHom::identity(top), mf::GroupHom::identity(top)})});
  }
  {
    mf::GroupHom q = s4_onto_s3();
    mf::PermGroup s4 = q.source();
    out.push_back({"S4 over S3", chain({q.target(), s4, s4, s4}, {q, mf::GroupHom::identity(s4), mf::GroupHom::identity(s4)})});
  }
  return out;
}

}  // namespace fixtures
