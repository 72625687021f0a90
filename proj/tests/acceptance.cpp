// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// non-zero when any criterion fails.
#include <boost/multiprecision/cpp_int.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "corpus.hpp"
#include "fixtures.hpp"
#include "motionforge/catalog.hpp"
#include "motionforge/coherent.hpp"
#include "motionforge/coloring.hpp"
#include "motionforge/constructions.hpp"
#include "motionforge/errors.hpp"
#include "motionforge/io.hpp"
#include "motionforge/normal.hpp"
#include "motionforge/pipeline.hpp"
#include "motionforge/reduce_image.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace mf;

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
  bool ok = true;
  std::size_t cases = 0;
  std::string first_failure;

  void expect(bool cond, const std::string& what) {
    ++cases;
    if (!cond && ok) first_failure = what;
    ok = ok && cond;
  }
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;  // 0 means no limit
  std::function<void(Check&)> body;
};

std::string str(const Order& o) { return o.str(); }

Order factorial(unsigned r) {
  Order f = 1;
  for (unsigned i = 2; i <= r; ++i) f *= i;
  return f;
}

void stabilizers_match_brute_force(Check& c) {
  std::mt19937_64 rng(20240601);
  std::size_t groups = 0;
  for (const auto& name : corpus::small_group_names()) {
    PermGroup g = corpus::group(name);
    if (g.order() > 10000) continue;
    ++groups;
    const std::size_t n = g.degree();
    auto elems = oracle::elements(g);
    for (int t = 0; t < 200; ++t) {
      Subset s;
      for (Point x = 0; x < n; ++x)
        if (rng() & 1) s.push_back(x);
      auto expected = oracle::filter_stabilizer(elems, oracle::indicator(n, s));
      auto got = oracle::elements(setwise_stabilizer(g, s));
      c.expect(got == expected, name + " subset #" + std::to_string(t));
    }
  }
  c.expect(groups >= 50, "only " + std::to_string(groups) + " corpus groups");
}

void minimal_degrees(Check& c) {
  for (std::size_t n = 3; n <= 8; ++n) {
    c.expect(minimal_degree(symmetric_group(n)) == 2, "mu(S" + std::to_string(n) + ")");
    c.expect(minimal_degree(alternating_group(n)) == 3, "mu(A" + std::to_string(n) + ")");
    if (n <= 6) {
      c.expect(oracle::minimal_degree(oracle::elements(symmetric_group(n))) == 2, "oracle mu(S" + std::to_string(n) + ")");
      c.expect(oracle::minimal_degree(oracle::elements(alternating_group(n))) == 3, "oracle mu(A" + std::to_string(n) + ")");
    }
  }
  c.expect(minimal_degree(PermGroup::trivial(5)) == kInfinity, "trivial group sentinel");
}

void solvable_color_numbers(Check& c) {
  c.expect(solv_number(symmetric_group(8)).k == 2, "solv(S8)");
  auto s12 = solv_number(symmetric_group(12));
  c.expect(s12.k == 3, "solv(S12) = " + std::to_string(s12.k));
  c.expect(is_solvable(coloring_stabilizer(symmetric_group(12), s12.witness)), "S12 witness");
}

void exception_fixtures(Check& c) {
  auto d5 = oracle::elements(dihedral_group(5));
  c.expect(!oracle::has_asymmetric_subset(d5, 5), "D5 has an asymmetric subset");
  c.expect(!find_asymmetric_subset(dihedral_group(5)).has_value(), "D5 search");
  auto c5 = find_asymmetric_subset(cyclic_group(5));
  c.expect(c5.has_value() && setwise_stabilizer(cyclic_group(5), *c5).is_trivial(), "C5");
  c.expect(oracle::has_asymmetric_subset(oracle::elements(cyclic_group(5)), 5), "C5 oracle");
  auto s4 = asy_number(symmetric_group(4));
  c.expect(s4.k == 4 && oracle::asy(oracle::elements(symmetric_group(4)), 4) == 4, "asy(S4)");
  PermGroup w = named_group("S4 wr C2");
  auto a = asy_number(w);
  c.expect(a.k == 5 && is_asymmetric(w, a.witness), "asy(S4 wr C2) = " + std::to_string(a.k));
}

void construction_postconditions(Check& c) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> affine;
  for (std::uint32_t d = 1; d <= 7; ++d)
    for (std::uint32_t p : {2u, 3u}) affine.push_back({d, p});
  affine.push_back({2, 5});
  affine.push_back({3, 5});
  for (auto [d, p] : affine) {
    PermGroup g = AffineSpace(p, d).agl();
    auto stab = setwise_stabilizer(g, affine_solvable_subset(p, d));
    c.expect(stab.is_subgroup_of(g) && is_solvable(stab),
             "AGL(" + std::to_string(d) + "," + std::to_string(p) + ")");
  }
  for (auto [d, q] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 5}, {3, 2}, {3, 3}, {4, 2}, {5, 2}}) {
    PermGroup g = ProjectiveSpace(q, d).psl();
    auto stab = setwise_stabilizer(g, projective_solvable_subset(q, d));
    c.expect(stab.is_subgroup_of(g) && is_solvable(stab),
             "PSL(" + std::to_string(d) + "," + std::to_string(q) + ")");
  }
}

void mathieu_24(Check& c) {
  PermGroup m24 = read_generators(resolve_data_path("data/m24.gens"));
  c.expect(m24.order() == Order(244823040), "|M24| = " + str(m24.order()));
  auto stab = setwise_stabilizer(m24, fixtures::range(0, 10));
  c.expect(stab.order() == Order(144), "stabilizer order " + str(stab.order()));
  c.expect(is_solvable(stab), "stabilizer solvable");
}

void reduction_engine(Check& c) {
  auto epis = fixtures::simple_epis();
  c.expect(epis.size() >= 20, "instance count");
  for (const auto& e : epis) {
    const GroupHom& phi = e.phi;
    const PermGroup& g = phi.source();
    for (auto strategy : {ReduceStrategy::BruteFirst, ReduceStrategy::StructuredFirst}) {
      auto w = reduce_simple_image(phi, {}, strategy);
      bool one_orbit = false;
      for (const auto& o : g.orbits())
        one_orbit = one_orbit || std::includes(o.begin(), o.end(), w.subset.begin(), w.subset.end());
      Order after = phi.image_of(setwise_stabilizer(g, w.subset)).order();
      c.expect(!w.subset.empty() && one_orbit, e.name + ": subset spans orbits");
      c.expect(after == w.image_after && after < phi.target().order(), e.name + ": image not reduced");
    }
  }
  for (const auto& name : fixtures::nonsolvable_names()) {
    PermGroup g = named_group(name);
    const std::size_t bound = static_cast<std::size_t>(boost::multiprecision::msb(g.order()));
    PermGroup h = g;
    std::size_t rounds = 0;
    while (!is_solvable(h) && rounds <= bound) {
      auto w = reduce_nonsolvable_image(GroupHom::identity(h));
      PermGroup next = setwise_stabilizer(h, w.subset);
      c.expect(next.order() < h.order(), name + ": no progress");
      h = next;
      ++rounds;
    }
    c.expect(is_solvable(h) && rounds <= bound, name + ": " + std::to_string(rounds) + " rounds");
  }
}

void pipeline_postconditions(Check& c) {
  auto seqs = fixtures::pipeline_sequences();
  seqs.push_back({"tree3-r5", read_sequence(resolve_data_path("data/seq/tree3-r5.seq").string())});
  c.expect(seqs.size() >= 10, "fixture count");
  for (const auto& f : seqs) {
    const auto& seq = f.seq;
    PipelineTrace t = run_pipeline(seq);
    Coloring gamma = subset_coloring(seq.total_degree(), t.delta);
    bool untouched = true;
    for (std::size_t x = 0; x < seq.degree(0); ++x) untouched = untouched && gamma[seq.offsets[0] + x] == 0;
    c.expect(untouched, f.name + ": bottom level coloured");
    PermGroup stab = coloring_stabilizer_in_limit(seq, gamma);
    c.expect(limit_view(seq).projections[0].image_of(stab).is_trivial(), f.name + ": bottom image not trivial");
  }
  const std::pair<const char*, std::size_t> diagonals[] = {{"C2", 1}, {"S3", 2}, {"S4 wr C2", 5}, {"S5", 3}};
  for (auto [name, k] : diagonals) {
    PermGroup g = named_group(name);
    auto seq = diagonal_sequence(g, k);
    auto t = run_pipeline(seq);
    Coloring decoded = decode_diagonal_coloring(subset_coloring(seq.total_degree(), t.delta), g.degree(), k);
    c.expect(is_asymmetric(g, decoded), std::string(name) + ": decoded colouring not asymmetric");
    c.expect(color_count(decoded) <= (std::size_t{1} << k), std::string(name) + ": too many colours");
    c.expect((std::size_t{1} << k) >= asy_number(g).k, std::string(name) + ": 2^k below asy");
  }
}

void cc_constants(Check& c) {
  for (unsigned r : {5u, 6u, 7u}) {
    auto t = triangular_cc(r);
    c.expect(motion_exact(t) == 2 * r - 4, "motion T(" + std::to_string(r) + ")");
  }
  for (unsigned r : {3u, 4u, 5u}) {
    auto l = lattice_cc(r);
    c.expect(motion_exact(l) == 2 * r, "motion L(" + std::to_string(r) + ")");
    c.expect(cc_automorphisms(l).order() == 2 * factorial(r) * factorial(r), "|Aut L(" + std::to_string(r) + ")|");
  }
  std::vector<CoherentConfig> fixtures;
  for (unsigned r = 5; r <= 14; ++r) fixtures.push_back(triangular_cc(r));
  for (unsigned r = 3; r <= 10; ++r) fixtures.push_back(lattice_cc(r));
  for (const char* name : {"C5", "C7", "C11", "C13", "D5", "D7", "AGL(1,7)", "PSL(2,7)", "PSL(3,2)", "A5", "T(5)", "L(3)", "M11"})
    fixtures.push_back(schurian_cc(named_group(name)));
  std::size_t upccs = 0;
  for (const auto& cc : fixtures) {
    if (cc.n > 100 || !is_upcc(cc)) continue;
    ++upccs;
    double bound = (std::sqrt(static_cast<double>(cc.n)) - 1) / 2;
    c.expect(static_cast<double>(min_distinguishing(cc)) >= bound, "sqrt bound at n=" + std::to_string(cc.n));
  }
  c.expect(upccs >= 15, "UPCC fixture count " + std::to_string(upccs));
}

void property_suites(Check& c) {
  std::mt19937_64 rng(11);
  std::size_t triples = 0;
  for (const auto& name : properties::three_normal_hosts()) {
    auto t = properties::three_normal_subgroups(name, rng);
    c.expect(t.failures == 0, "three normal subgroups: " + name);
    triples += t.checked;
  }
  c.expect(triples > 10, "too few normal triples sampled");
  for (const auto& phi : properties::sampled_epimorphisms())
    c.expect(properties::core_commutes(phi), "perfect core image on " + str(phi.source().order()));
  auto seqs = fixtures::pipeline_sequences();
  seqs.push_back({"tree3-r5", read_sequence(resolve_data_path("data/seq/tree3-r5.seq").string())});
  for (const auto& f : seqs) c.expect(properties::sublimit_invariance(f.seq, rng, 5).failures == 0, "sublimit: " + f.name);
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "setwise stabilizers equal brute-force filtering", 120, stabilizers_match_brute_force},
      {2, "minimal degree constants", 0, minimal_degrees},
      {3, "solvable colouring numbers of S8 and S12", 300, solvable_color_numbers},
      {4, "asymmetric colouring exceptions", 0, exception_fixtures},
      {5, "affine and projective subsets have solvable stabilizers", 600, construction_postconditions},
      {6, "M24 order and the stabilizer of {1..10}", 120, mathieu_24},
      {7, "simple and nonsolvable image reduction", 0, reduction_engine},
      {8, "pipeline colourings are zero-neutral and zero-asymmetric", 0, pipeline_postconditions},
      {9, "coherent configuration motion constants and bounds", 300, cc_constants},
      {10, "property suites", 0, property_suites},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Check c;
    auto start = Clock::now();
    try {
      cr.body(c);
    } catch (const std::exception& e) {
      c.ok = false;
      c.first_failure = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (cr.limit_seconds > 0 && secs > cr.limit_seconds) {
      if (c.ok) c.first_failure = "time limit exceeded";
      c.ok = false;
    }
    std::ostringstream line;
    line << (c.ok ? "PASS" : "FAIL") << " criterion " << cr.id << ": " << cr.title << " (" << c.cases << " checks, ";
    line.precision(2);
    line << std::fixed << secs << " s";
    if (cr.limit_seconds > 0) line << " of " << static_cast<int>(cr.limit_seconds) << " s";
    line << ")";
    if (!c.ok) line << " -- " << c.first_failure;
    std::cout << line.str() << std::endl;
    failed += !c.ok;
  }
  return failed ? 1 : 0;
}
