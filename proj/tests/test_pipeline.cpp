#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "motionforge/errors.hpp"
#include "motionforge/io.hpp"
#include "motionforge/pipeline.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace mf;
using properties::random_coloring;

namespace {

std::vector<Perm> brute_limit_stabilizer(const InverseSequence& seq, const Coloring& gamma) {
  LimitView view = limit_view(seq);
  std::vector<Perm> out;
  for (const auto& g : oracle::elements(view.top))
    if (oracle::preserves(combined_element(seq, view, g), gamma)) out.push_back(g);
  return out;
}

std::string data_path(const std::string& rel) { return resolve_data_path(rel).string(); }

}  // namespace

TEST(Sequence, ValidationFlagsEachProblem) {
  EXPECT_TRUE(validate_sequence(diagonal_sequence(symmetric_group(3), 2)).ok());

  PermGroup s3 = symmetric_group(3);
  // Generators (0 1 2) and (0 1) sent to (0 1) and (0 1 2): orders disagree.
  GroupHom bad(s3, s3, {s3.generators()[1], s3.generators()[0]});
  if (s3.generators()[0].order() != s3.generators()[1].order()) {
    auto rep = validate_sequence(fixtures::chain({s3, s3}, {bad}));
    EXPECT_FALSE(rep.homomorphisms);
    ASSERT_FALSE(rep.problems.empty());
    EXPECT_NE(rep.problems.front().find("map 1"), std::string::npos) << rep.problems.front();
  }

  PermGroup a3 = alternating_group(3);
  GroupHom into(a3, s3, a3.generators());
  auto rep = validate_sequence(fixtures::chain({s3, a3}, {into}));
  EXPECT_TRUE(rep.homomorphisms);
  EXPECT_FALSE(rep.epimorphic);

  auto overlap = diagonal_sequence(s3, 1);
  overlap.offsets[1] = 1;
  EXPECT_FALSE(validate_sequence(overlap).disjoint);
}

TEST(Sequence, EpimorphicReduction) {
  auto diag = diagonal_sequence(symmetric_group(4), 2);
  auto same = epimorphic_reduction(diag);
  for (std::size_t i = 0; i < diag.levels(); ++i) EXPECT_TRUE(same.groups[i].same_group(diag.groups[i]));

  GroupHom q = fixtures::s4_onto_s3();
  PermGroup s4 = symmetric_group(4);
  // The middle map is into S4 but only onto S3.
  auto seq = fixtures::chain({s4, s4, s4}, {GroupHom::identity(s4), GroupHom(s4, s4, q.images())});
  EXPECT_FALSE(validate_sequence(seq).epimorphic);
  auto red = epimorphic_reduction(seq);
  EXPECT_TRUE(validate_sequence(red).ok());
  EXPECT_EQ(red.groups[0].order(), Order(6));
  EXPECT_EQ(red.groups[1].order(), Order(6));
  EXPECT_EQ(red.groups[2].order(), Order(24));
  auto twice = epimorphic_reduction(red);
  for (std::size_t i = 0; i < red.levels(); ++i) EXPECT_TRUE(twice.groups[i].same_group(red.groups[i]));

  auto trivial_top = fixtures::chain({s4, PermGroup::trivial(3)}, {GroupHom(PermGroup::trivial(3), s4, {})});
  auto t = epimorphic_reduction(trivial_top);
  EXPECT_TRUE(t.groups[0].is_trivial());
}

TEST(Sequence, LimitStabilizerMatchesBruteForce) {
  std::mt19937_64 rng(21);
  auto seqs = fixtures::pipeline_sequences();
  for (const auto& f : seqs) {
    if (limit_view(f.seq).top.order() > 10000) continue;
    for (int t = 0; t < 10; ++t) {
      Coloring gamma = random_coloring(f.seq.total_degree(), rng, t % 2 ? 3 : 2);
      auto got = oracle::sorted_elements(coloring_stabilizer_in_limit(f.seq, gamma));
      EXPECT_EQ(got, brute_limit_stabilizer(f.seq, gamma)) << f.name;
    }
  }
}

TEST(Sequence, LimitStabilizerExamples) {
  auto c4 = diagonal_sequence(cyclic_group(4), 1);
  Coloring gamma(8, 0);
  EXPECT_EQ(coloring_stabilizer_in_limit(c4, gamma).order(), Order(4));
  gamma[4] = 1;
  EXPECT_TRUE(coloring_stabilizer_in_limit(c4, gamma).is_trivial());
  Coloring level1(8, 0);
  for (int x = 4; x < 8; ++x) level1[x] = 1;
  EXPECT_EQ(coloring_stabilizer_in_limit(c4, level1).order(), Order(4));
  EXPECT_THROW(coloring_stabilizer_in_limit(c4, Coloring(5, 0)), DomainError);
}

TEST(Sequence, SublimitsGiveTheSameStabilizers) {
  std::mt19937_64 rng(33);
  for (const auto& f : fixtures::pipeline_sequences()) {
    auto t = properties::sublimit_invariance(f.seq, rng, 5);
    EXPECT_EQ(t.failures, 0u) << f.name;
  }
}

TEST(Sequence, FileRoundTrip) {
  auto dir = std::filesystem::temp_directory_path() / ("mf_seq_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  for (const auto& f : fixtures::pipeline_sequences()) {
    auto path = (dir / "s.seq").string();
    write_sequence(f.seq, path);
    auto back = read_sequence(path);
    ASSERT_EQ(back.levels(), f.seq.levels()) << f.name;
    EXPECT_EQ(back.offsets, f.seq.offsets) << f.name;
    for (std::size_t i = 0; i < back.levels(); ++i) EXPECT_TRUE(back.groups[i].same_group(f.seq.groups[i])) << f.name;
    for (std::size_t i = 0; i < back.maps.size(); ++i) EXPECT_EQ(back.maps[i].images(), f.seq.maps[i].images()) << f.name;
  }
  std::filesystem::remove_all(dir);
  EXPECT_THROW(parse_sequence("levels 2\nlevel 0 offset 0 file nowhere.gens\n"), Error);
  EXPECT_THROW(parse_sequence("levels x\n"), ParseError);
}

TEST(Sequence, BundledFixturesAreValid) {
  for (const char* name : {"diag-c2", "diag-s3", "diag-s5", "diag-s4wrc2", "tree3-r5"}) {
    auto seq = read_sequence(data_path(std::string("data/seq/") + name + ".seq"));
    EXPECT_TRUE(validate_sequence(seq).ok()) << name;
  }
}

TEST(ReductionLoop, StopsWhenThePredicateHolds) {
  auto s5 = diagonal_sequence(symmetric_group(5), 3);
  PermGroup l = s5.groups.back();
  auto entries = color_reduction_loop(s5, 0, [](const PermGroup& f) { return is_solvable(f); }, l);
  EXPECT_GE(entries.size(), 1u);
  EXPECT_LE(entries.size(), 2u);
  for (const auto& e : entries) EXPECT_LT(e.after, e.before);

  PermGroup l2 = s5.groups.back();
  EXPECT_TRUE(color_reduction_loop(s5, 0, [](const PermGroup&) { return true; }, l2).empty());
  EXPECT_TRUE(l2.same_group(s5.groups.back()));

  auto short_seq = diagonal_sequence(symmetric_group(5), 1);
  PermGroup l3 = short_seq.groups.back();
  EXPECT_THROW(color_reduction_loop(short_seq, 0, [](const PermGroup& f) { return f.is_trivial(); }, l3), DomainError);
}

TEST(Pipeline, PostconditionsOnFixtures) {
  auto seqs = fixtures::pipeline_sequences();
  seqs.push_back({"tree3-r5", read_sequence(data_path("data/seq/tree3-r5.seq"))});
  for (const auto& f : seqs) {
    const auto& seq = f.seq;
    PipelineTrace t = run_pipeline(seq);
    EXPECT_TRUE(t.zero_neutral && t.zero_asymmetric) << f.name;

    // Independent replay of the final colouring.
    Coloring gamma = subset_coloring(seq.total_degree(), t.delta);
    for (std::size_t x = 0; x < seq.degree(0); ++x) EXPECT_EQ(gamma[seq.offsets[0] + x], 0u) << f.name;
    PermGroup stab = coloring_stabilizer_in_limit(seq, gamma);
    LimitView view = limit_view(seq);
    EXPECT_TRUE(view.projections[0].image_of(stab).is_trivial()) << f.name;
    EXPECT_TRUE(stab.same_group(t.limit)) << f.name;

    // Phase A: strict decrease, within log2 of the pivot group.
    std::size_t phase_a = 0;
    for (const auto& e : t.entries)
      if (e.phase == 'A') {
        EXPECT_LT(e.after, e.before) << f.name;
        ++phase_a;
      }
    EXPECT_LE(phase_a, static_cast<std::size_t>(boost::multiprecision::msb(seq.groups[t.pivot].order()))) << f.name;

    // Phase C: derived length drops at every coloured level.
    Coloring partial(seq.total_degree(), 0);
    for (const auto& e : t.entries) {
      PermGroup before = view.projections[e.level].image_of(coloring_stabilizer_in_limit(seq, partial));
      for (Point x : e.subset) partial[seq.offsets[e.level] + x] = 1;
      PermGroup after = view.projections[e.level].image_of(coloring_stabilizer_in_limit(seq, partial));
      if (e.phase == 'C') EXPECT_LT(derived_length(after), derived_length(before)) << f.name << " level " << e.level;
    }
  }
}

TEST(Pipeline, ShortSequencesReportTheDeficit) {
  try {
    run_pipeline(diagonal_sequence(symmetric_group(5), 1));
    FAIL() << "expected a short-sequence error";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("more level"), std::string::npos) << e.what();
  }
  EXPECT_THROW(run_pipeline(diagonal_sequence(cyclic_group(2), 0)), DomainError);
}

TEST(Pipeline, SimplestDiagonal) {
  auto t = run_pipeline(diagonal_sequence(cyclic_group(2), 1));
  EXPECT_EQ(t.delta.size(), 1u);
  EXPECT_GE(t.delta.front(), 2u);
}

TEST(Pipeline, TraceIsJsonLines) {
  auto t = run_pipeline(diagonal_sequence(symmetric_group(3), 2));
  auto text = trace_to_jsonl(t);
  std::size_t lines = std::count(text.begin(), text.end(), '\n');
  EXPECT_EQ(lines, t.entries.size() + 2);
  EXPECT_EQ(text.rfind("{\"trace\":\"motionforge-pipeline\"", 0), 0u);
  auto empty = trace_to_jsonl(PipelineTrace{});
  EXPECT_EQ(std::count(empty.begin(), empty.end(), '\n'), 1);
}

TEST(Diagonal, DecodingGivesAsymmetricColourings) {
  EXPECT_EQ(color_count(decode_diagonal_coloring(Coloring(12, 0), 3, 3)), 1u);
  for (const auto& [name, k] : std::vector<std::pair<std::string, std::size_t>>{
           {"C2", 1}, {"S3", 2}, {"S4 wr C2", 5}, {"S5", 3}, {"C3", 2}, {"D4", 2}}) {
    PermGroup g = named_group(name);
    auto seq = diagonal_sequence(g, k);
    auto t = run_pipeline(seq);
    Coloring decoded = decode_diagonal_coloring(subset_coloring(seq.total_degree(), t.delta), g.degree(), k);
    EXPECT_TRUE(is_asymmetric(g, decoded)) << name;
    EXPECT_LE(color_count(decoded), std::size_t{1} << k) << name;
    EXPECT_GE(std::size_t{1} << k, asy_number(g).k) << name;
  }
}

TEST(Diagonal, CyclicDecodingMatchesZeroAsymmetry) {
  auto seq = diagonal_sequence(cyclic_group(3), 2);
  for (std::uint32_t mask = 0; mask < 64; ++mask) {
    Coloring gamma(9, 0);
    for (std::size_t b = 0; b < 6; ++b) gamma[3 + b] = mask >> b & 1;
    bool zero_asym = limit_view(seq).projections[0].image_of(coloring_stabilizer_in_limit(seq, gamma)).is_trivial();
    EXPECT_EQ(is_asymmetric(cyclic_group(3), decode_diagonal_coloring(gamma, 3, 2)), zero_asym) << mask;
  }
}
