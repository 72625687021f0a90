#include "motionforge/motionforge.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <json.hpp>
#include <new>
#include <stdexcept>
#include <sstream>
#include <string>

#include "motionforge/blocks.hpp"
#include "motionforge/catalog.hpp"
#include "motionforge/coherent.hpp"
#include "motionforge/coloring.hpp"
#include "motionforge/constructions.hpp"
#include "motionforge/errors.hpp"
#include "motionforge/graph_spheres.hpp"
#include "motionforge/inverse_sequence.hpp"
#include "motionforge/io.hpp"
#include "motionforge/normal.hpp"
#include "motionforge/pipeline.hpp"
#include "motionforge/reduce_image.hpp"

struct mf_group {
  mf::PermGroup g;
};
struct mf_sequence {
  mf::InverseSequence s;
};
struct mf_graph {
  mf::RootedGraph g;
};
struct mf_cc {
  mf::CoherentConfig c;
};

namespace {

using nlohmann::json;

thread_local std::string last_error;

struct ArgumentError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

template <class F>
mf_status guard(F&& f) {
  last_error.clear();
  try {
    f();
    return MF_OK;
  } catch (const mf::ParseError& e) {
    last_error = e.what();
    return MF_E_PARSE;
  } catch (const mf::CapExceeded& e) {
    last_error = e.what();
    return MF_E_CAP;
  } catch (const mf::InvariantViolation& e) {
    last_error = e.what();
    return MF_E_INVARIANT;
  } catch (const mf::DomainError& e) {
    last_error = e.what();
    return MF_E_DOMAIN;
  } catch (const ArgumentError& e) {
    last_error = e.what();
    return MF_E_ARGUMENT;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return MF_E_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return MF_E_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw ArgumentError(what);
}

mf::Caps caps_of(const mf_config* cfg) {
  mf::Caps c;
  if (!cfg) return c;
  c.elements = cfg->cap_elements;
  c.subsets = cfg->cap_subsets;
  c.colorings = cfg->cap_colorings;
  c.trials = cfg->trials;
  c.seed = cfg->seed;
  c.threads = cfg->threads ? cfg->threads : 1;
  return c;
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void fill(mf_u32_array* out, const std::vector<std::uint32_t>& v) {
  out->len = v.size();
  out->data = nullptr;
  if (v.empty()) return;
  out->data = static_cast<std::uint32_t*>(std::malloc(v.size() * sizeof(std::uint32_t)));
  if (!out->data) throw std::bad_alloc();
  std::memcpy(out->data, v.data(), v.size() * sizeof(std::uint32_t));
}

std::string str(const mf::Order& o) { return o.str(); }

json one_based(const std::vector<mf::Point>& v) {
  json a = json::array();
  for (auto x : v) a.push_back(x + 1);
  return a;
}

mf::Subset subset_from(const mf_group* g, const uint32_t* pts, size_t len) {
  require(len == 0 || pts, "null subset");
  mf::Subset s(pts, pts + len);
  for (auto x : s)
    if (x >= g->g.degree()) throw mf::DomainError("point " + std::to_string(x + 1) + " outside the domain");
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

mf::Coloring coloring_from(const mf_group* g, const uint32_t* c, size_t n) {
  require(n == 0 || c, "null colouring");
  if (n != g->g.degree()) throw mf::DomainError("colouring length differs from the degree");
  return mf::Coloring(c, c + n);
}

template <class T, class F>
mf_status make(T** out, F&& f) {
  return guard([&] {
    require(out != nullptr, "null output handle");
    *out = nullptr;
    *out = new T{f()};
  });
}

template <class F>
mf_status text(char** out, F&& f) {
  return guard([&] {
    require(out != nullptr, "null output string");
    *out = nullptr;
    *out = dup(f());
  });
}

json stabilizer_json(const mf::PermGroup& stab) {
  json j;
  j["stabilizer_order"] = str(stab.order());
  bool solv = mf::is_solvable(stab);
  j["solvable"] = solv;
  if (solv) j["derived_length"] = mf::derived_length(stab);
  j["orbit_bound"] = mf::max_orbit_length(stab);
  return j;
}

}  // namespace

extern "C" {

MF_API const char* mf_version(void) { return "1.0.0"; }
MF_API const char* mf_last_error(void) { return last_error.c_str(); }

MF_API const char* mf_status_name(mf_status s) {
  switch (s) {
    case MF_OK: return "ok";
    case MF_E_DOMAIN: return "domain error";
    case MF_E_PARSE: return "parse error";
    case MF_E_CAP: return "cap exceeded";
    case MF_E_INVARIANT: return "invariant violation";
    case MF_E_ARGUMENT: return "bad argument";
    case MF_E_INTERNAL: return "internal error";
  }
  return "unknown";
}

MF_API void mf_config_default(mf_config* cfg) {
  if (!cfg) return;
  mf::Caps c;
  cfg->cap_elements = c.elements;
  cfg->cap_subsets = c.subsets;
  cfg->cap_colorings = c.colorings;
  cfg->trials = c.trials;
  cfg->seed = c.seed;
  cfg->threads = c.threads;
}

MF_API void mf_string_free(char* s) { std::free(s); }

MF_API void mf_array_free(mf_u32_array* a) {
  if (!a) return;
  std::free(a->data);
  a->data = nullptr;
  a->len = 0;
}

// ---- groups

MF_API mf_status mf_group_read(const char* path, mf_group** out) {
  return make(out, [&] {
    require(path, "null path");
    return mf::read_generators(path);
  });
}

MF_API mf_status mf_group_parse(const char* t, mf_group** out) {
  return make(out, [&] {
    require(t, "null text");
    return mf::parse_generators(std::string(t));
  });
}

MF_API mf_status mf_group_named(const char* name, mf_group** out) {
  return make(out, [&] {
    require(name, "null name");
    return mf::named_group(name);
  });
}

MF_API mf_status mf_group_affine(uint32_t d, uint32_t p, mf_group** out) {
  return make(out, [&] { return mf::AffineSpace(p, d).agl(); });
}

MF_API mf_status mf_group_projective(uint32_t d, uint32_t q, mf_group** out) {
  return make(out, [&] { return mf::ProjectiveSpace(q, d).psl(); });
}

MF_API void mf_group_free(mf_group* g) { delete g; }
MF_API size_t mf_group_degree(const mf_group* g) { return g ? g->g.degree() : 0; }

MF_API mf_status mf_group_order(const mf_group* g, char** out) {
  return text(out, [&] {
    require(g, "null group");
    return str(g->g.order());
  });
}

MF_API mf_status mf_group_format(const mf_group* g, char** out) {
  return text(out, [&] {
    require(g, "null group");
    return mf::format_generators(g->g);
  });
}

MF_API mf_status mf_group_orbits(const mf_group* g, char** out) {
  return text(out, [&] {
    require(g, "null group");
    std::string s;
    for (const auto& o : g->g.orbits()) s += mf::format_subset(o) + "\n";
    return s;
  });
}

MF_API mf_status mf_group_minimal_degree(const mf_group* g, const mf_config* cfg, uint64_t* out) {
  return guard([&] {
    require(g && out, "null argument");
    std::size_t mu = mf::minimal_degree(g->g, caps_of(cfg).elements);
    *out = mu == mf::kInfinity ? MF_INFINITE : mu;
  });
}

MF_API mf_status mf_group_derived_series(const mf_group* g, char** out) {
  return text(out, [&] {
    require(g, "null group");
    auto series = mf::derived_series(g->g);
    json j;
    j["orders"] = json::array();
    for (const auto& h : series) j["orders"].push_back(str(h.order()));
    bool solv = series.back().is_trivial();
    j["solvable"] = solv;
    if (solv) j["derived_length"] = series.size() - 1;
    return j.dump();
  });
}

// ---- colourings

MF_API mf_status mf_setwise_stabilizer(const mf_group* g, const uint32_t* subset, size_t len, mf_group** out) {
  return make(out, [&] {
    require(g, "null group");
    return mf::setwise_stabilizer(g->g, subset_from(g, subset, len));
  });
}

MF_API mf_status mf_coloring_stabilizer(const mf_group* g, const uint32_t* colors, size_t n, mf_group** out) {
  return make(out, [&] {
    require(g, "null group");
    return mf::coloring_stabilizer(g->g, coloring_from(g, colors, n));
  });
}

MF_API mf_status mf_coloring_report(const mf_group* g, const uint32_t* colors, size_t n, char** out) {
  return text(out, [&] {
    require(g, "null group");
    auto r = mf::classify_coloring(g->g, coloring_from(g, colors, n));
    json j = stabilizer_json(r.stabilizer);
    j["asymmetric"] = r.asymmetric;
    return j.dump();
  });
}

MF_API mf_status mf_is_asymmetric(const mf_group* g, const uint32_t* colors, size_t n, int* out) {
  return guard([&] {
    require(g && out, "null argument");
    *out = mf::is_asymmetric(g->g, coloring_from(g, colors, n)) ? 1 : 0;
  });
}

MF_API mf_status mf_find_asymmetric_subset(const mf_group* g, const mf_config* cfg, int* found, mf_u32_array* out) {
  return guard([&] {
    require(g && found && out, "null argument");
    auto s = mf::find_asymmetric_subset(g->g, caps_of(cfg));
    *found = s ? 1 : 0;
    fill(out, s ? *s : mf::Subset{});
  });
}

MF_API mf_status mf_find_solvable_subset(const mf_group* g, const mf_config* cfg, int* found, mf_u32_array* out) {
  return guard([&] {
    require(g && found && out, "null argument");
    auto s = mf::find_solvable_subset(g->g, caps_of(cfg));
    *found = s ? 1 : 0;
    fill(out, s ? *s : mf::Subset{});
  });
}

MF_API mf_status mf_asy_number(const mf_group* g, const mf_config* cfg, size_t* k, mf_u32_array* witness) {
  return guard([&] {
    require(g && k && witness, "null argument");
    auto r = mf::asy_number(g->g, caps_of(cfg));
    *k = r.k;
    fill(witness, r.witness);
  });
}

MF_API mf_status mf_solv_number(const mf_group* g, const mf_config* cfg, size_t* k, mf_u32_array* witness) {
  return guard([&] {
    require(g && k && witness, "null argument");
    auto r = mf::solv_number(g->g, caps_of(cfg));
    *k = r.k;
    fill(witness, r.witness);
  });
}

MF_API mf_status mf_motion_bound(const mf_group* g, uint32_t colors, const mf_config* cfg, char** out) {
  return text(out, [&] {
    require(g, "null group");
    auto r = mf::motion_bound_coloring(g->g, colors, caps_of(cfg));
    json j;
    j["colors"] = colors;
    j["minimal_degree"] = r.minimal_degree;
    j["minimal_degree_exact"] = r.minimal_degree_exact;
    j["bound_holds"] = r.bound_holds;
    j["trials"] = r.trials;
    if (r.coloring) {
      json c = json::array();
      for (auto x : *r.coloring) c.push_back(x + 1);
      j["coloring"] = c;
    } else {
      j["coloring"] = nullptr;
    }
    return j.dump();
  });
}

// ---- constructions

MF_API mf_status mf_affine_subset(uint32_t d, uint32_t p, mf_u32_array* out) {
  return guard([&] {
    require(out, "null argument");
    fill(out, mf::affine_solvable_subset(p, d));
  });
}

MF_API mf_status mf_projective_subset(uint32_t d, uint32_t q, mf_u32_array* out) {
  return guard([&] {
    require(out, "null argument");
    fill(out, mf::projective_solvable_subset(q, d));
  });
}

MF_API mf_status mf_mathieu_subset(const char* name, mf_u32_array* out) {
  return guard([&] {
    require(name && out, "null argument");
    fill(out, mf::mathieu_solvable_subset(name));
  });
}

MF_API mf_status mf_transversal_subset(const mf_group* g, mf_u32_array* out) {
  return guard([&] {
    require(g && out, "null argument");
    bool abelian = mf::derived_subgroup(g->g).is_trivial();
    fill(out, abelian ? mf::abelian_asymmetric_subset(g->g) : mf::derived_length_reduction(g->g));
  });
}

MF_API mf_status mf_five_coloring(const mf_group* g, const mf_config* cfg, mf_u32_array* out) {
  return guard([&] {
    require(g && out, "null argument");
    fill(out, mf::solvable_asymmetric_5coloring(g->g, caps_of(cfg)));
  });
}

MF_API mf_status mf_bounded_orbit_subset(const mf_group* g, const mf_config* cfg, char** out) {
  return text(out, [&] {
    require(g, "null group");
    auto r = mf::bounded_orbit_subset(g->g, caps_of(cfg));
    json j;
    j["subset"] = one_based(r.subset);
    j["orbit_bound"] = r.bound;
    j["cases"] = json::array();
    for (auto c : r.cases) j["cases"].push_back(mf::to_string(c));
    auto stab = mf::setwise_stabilizer(g->g, r.subset);
    j["stabilizer_order"] = str(stab.order());
    j["derived_length"] = mf::derived_length(stab);
    return j.dump();
  });
}

MF_API mf_status mf_subset_report(const mf_group* g, const uint32_t* subset, size_t len, char** out) {
  return text(out, [&] {
    require(g, "null group");
    auto s = subset_from(g, subset, len);
    json j = stabilizer_json(mf::setwise_stabilizer(g->g, s));
    j["subset"] = one_based(s);
    return j.dump();
  });
}

// ---- reduction

MF_API mf_status mf_reduce_simple(const mf_group* g, const mf_config* cfg, int structured_first, char** out) {
  return text(out, [&] {
    require(g, "null group");
    auto caps = caps_of(cfg);
    auto epi = mf::simple_quotient_epi(g->g, caps.elements);
    if (!epi) throw mf::DomainError("group has no nonabelian simple quotient");
    auto w = mf::reduce_simple_image(*epi, caps,
                                     structured_first ? mf::ReduceStrategy::StructuredFirst
                                                      : mf::ReduceStrategy::BruteFirst);
    json j;
    j["target_order"] = str(epi->target().order());
    j["subset"] = one_based(w.subset);
    j["image_before"] = str(w.image_before);
    j["image_after"] = str(w.image_after);
    j["path"] = w.path;
    return j.dump();
  });
}

MF_API mf_status mf_reduce_map(const mf_group* source, const mf_group* target, const char* images_text,
                               const mf_config* cfg, int nonsolvable, int structured_first, char** out) {
  return text(out, [&] {
    require(source && target && images_text, "null argument");
    auto caps = caps_of(cfg);
    std::vector<mf::Perm> imgs;
    std::istringstream in(images_text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      line = line.substr(0, line.find('#'));
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      try {
        imgs.push_back(mf::parse_cycles(line, target->g.degree()));
      } catch (const mf::ParseError& e) {
        throw mf::ParseError(e.what(), lineno);
      }
    }
    if (imgs.size() != source->g.generators().size())
      throw mf::DomainError("expected " + std::to_string(source->g.generators().size()) + " image lines, got " +
                            std::to_string(imgs.size()));
    auto phi = mf::GroupHom::checked(source->g, target->g, std::move(imgs));
    auto strategy = structured_first ? mf::ReduceStrategy::StructuredFirst : mf::ReduceStrategy::BruteFirst;
    auto w = nonsolvable ? mf::reduce_nonsolvable_image(phi, caps, strategy) : mf::reduce_simple_image(phi, caps, strategy);
    json j;
    j["target_order"] = str(phi.image().order());
    j["subset"] = one_based(w.subset);
    j["image_before"] = str(w.image_before);
    j["image_after"] = str(w.image_after);
    j["path"] = w.path;
    return j.dump();
  });
}

MF_API mf_status mf_reduce_nonsolvable(const mf_group* g, const mf_config* cfg, char** out) {
  return text(out, [&] {
    require(g, "null group");
    auto caps = caps_of(cfg);
    mf::PermGroup h = g->g;
    json rounds = json::array();
    while (!mf::is_solvable(h)) {
      auto w = mf::reduce_nonsolvable_image(mf::GroupHom::identity(h), caps);
      json r;
      r["subset"] = one_based(w.subset);
      r["order_before"] = str(w.image_before);
      r["order_after"] = str(w.image_after);
      r["path"] = w.path;
      rounds.push_back(r);
      h = mf::setwise_stabilizer(h, w.subset);
    }
    json j;
    j["rounds"] = rounds;
    j["final_order"] = str(h.order());
    j["round_bound"] = boost::multiprecision::msb(g->g.order());
    return j.dump();
  });
}

// ---- sequences

MF_API mf_status mf_sequence_read(const char* path, mf_sequence** out) {
  return make(out, [&] {
    require(path, "null path");
    return mf::read_sequence(path);
  });
}

MF_API mf_status mf_sequence_diagonal(const mf_group* g, size_t k, mf_sequence** out) {
  return make(out, [&] {
    require(g, "null group");
    return mf::diagonal_sequence(g->g, k);
  });
}

MF_API void mf_sequence_free(mf_sequence* s) { delete s; }
MF_API size_t mf_sequence_levels(const mf_sequence* s) { return s ? s->s.levels() : 0; }

MF_API mf_status mf_sequence_write(const mf_sequence* s, const char* path) {
  return guard([&] {
    require(s && path, "null argument");
    mf::write_sequence(s->s, path);
  });
}

MF_API mf_status mf_sequence_validate(const mf_sequence* s, char** out) {
  return text(out, [&] {
    require(s, "null sequence");
    auto r = mf::validate_sequence(s->s);
    json j;
    j["ok"] = r.ok();
    j["levels"] = s->s.levels();
    j["disjoint"] = r.disjoint;
    j["homomorphisms"] = r.homomorphisms;
    j["epimorphic"] = r.epimorphic;
    j["problems"] = r.problems;
    j["orders"] = json::array();
    for (const auto& g : s->s.groups) j["orders"].push_back(str(g.order()));
    return j.dump();
  });
}

MF_API mf_status mf_sequence_epimorphic(const mf_sequence* s, mf_sequence** out) {
  return make(out, [&] {
    require(s, "null sequence");
    return mf::epimorphic_reduction(s->s);
  });
}

MF_API mf_status mf_pipeline_run(const mf_sequence* s, const mf_config* cfg, char** out) {
  return text(out, [&] {
    require(s, "null sequence");
    return mf::trace_to_jsonl(mf::run_pipeline(s->s, caps_of(cfg)));
  });
}

MF_API mf_status mf_pipeline_diagonal(const mf_group* g, size_t k, const mf_config* cfg, char** out) {
  return text(out, [&] {
    require(g, "null group");
    auto seq = mf::diagonal_sequence(g->g, k);
    auto tr = mf::run_pipeline(seq, caps_of(cfg));
    mf::Coloring gamma(seq.total_degree(), 0);
    for (auto x : tr.delta) gamma[x] = 1;
    auto c = mf::decode_diagonal_coloring(gamma, g->g.degree(), k);
    json j;
    j["k"] = k;
    j["delta"] = one_based(tr.delta);
    json col = json::array();
    for (auto x : c) col.push_back(x + 1);
    j["coloring"] = col;
    j["colors_used"] = mf::color_count(c);
    j["color_bound"] = std::uint64_t{1} << k;
    j["asymmetric"] = mf::is_asymmetric(g->g, c);
    j["zero_neutral"] = tr.zero_neutral;
    j["zero_asymmetric"] = tr.zero_asymmetric;
    return j.dump();
  });
}

// ---- graphs

MF_API mf_status mf_graph_read(const char* path, mf_graph** out) {
  return make(out, [&] {
    require(path, "null path");
    return mf::read_graph(path);
  });
}

MF_API mf_status mf_graph_parse(const char* t, mf_graph** out) {
  return make(out, [&] {
    require(t, "null text");
    return mf::load_graph(t);
  });
}

MF_API void mf_graph_free(mf_graph* g) { delete g; }
MF_API size_t mf_graph_size(const mf_graph* g) { return g ? g->g.size() : 0; }

MF_API mf_status mf_graph_spheres(const mf_graph* g, char** out) {
  return text(out, [&] {
    require(g, "null graph");
    json j;
    j["root"] = g->g.names[g->g.root];
    j["twin_free"] = mf::twin_free(g->g);
    j["spheres"] = json::array();
    for (const auto& s : mf::spheres(g->g)) {
      json names = json::array();
      for (auto v : s) names.push_back(g->g.names[v]);
      j["spheres"].push_back(names);
    }
    return j.dump();
  });
}

MF_API mf_status mf_graph_sphere_sequence(const mf_graph* g, size_t radius, mf_sequence** out) {
  return make(out, [&] {
    require(g, "null graph");
    return mf::sphere_sequence(g->g, radius);
  });
}

MF_API mf_status mf_graph_special_subset(const mf_graph* g, size_t radius, const mf_config* cfg, char** out) {
  return text(out, [&] {
    require(g, "null graph");
    auto r = mf::special_subset(g->g, radius, caps_of(cfg));
    json j;
    json names = json::array();
    for (auto v : r.subset) names.push_back(g->g.names[v]);
    j["subset"] = names;
    j["avoids_inner_ball"] = r.avoids_inner_ball;
    j["covers_even_spheres"] = r.covers_even_spheres;
    j["root_fixed"] = r.root_fixed;
    j["spheres_fixed"] = r.spheres_fixed;
    j["stabilizer_order"] = str(r.stabilizer_order);
    j["zero_neutral"] = r.trace.zero_neutral;
    j["zero_asymmetric"] = r.trace.zero_asymmetric;
    j["pivot"] = r.trace.pivot;
    return j.dump();
  });
}

// ---- coherent configurations

MF_API mf_status mf_cc_read(const char* path, mf_cc** out) {
  return make(out, [&] {
    require(path, "null path");
    return mf::parse_cc(mf::read_text_file(mf::resolve_data_path(path)));
  });
}

MF_API mf_status mf_cc_parse(const char* t, mf_cc** out) {
  return make(out, [&] {
    require(t, "null text");
    return mf::parse_cc(t);
  });
}

MF_API mf_status mf_cc_from_group(const mf_group* g, mf_cc** out) {
  return make(out, [&] {
    require(g, "null group");
    return mf::schurian_cc(g->g);
  });
}

MF_API mf_status mf_cc_triangular(size_t r, mf_cc** out) {
  return make(out, [&] { return mf::triangular_cc(r); });
}

MF_API mf_status mf_cc_lattice(size_t r, mf_cc** out) {
  return make(out, [&] { return mf::lattice_cc(r); });
}

MF_API void mf_cc_free(mf_cc* c) { delete c; }
MF_API size_t mf_cc_size(const mf_cc* c) { return c ? c->c.n : 0; }
MF_API size_t mf_cc_rank(const mf_cc* c) { return c ? c->c.rank : 0; }

MF_API mf_status mf_cc_format(const mf_cc* c, char** out) {
  return text(out, [&] {
    require(c, "null configuration");
    return mf::format_cc(c->c);
  });
}

MF_API mf_status mf_cc_validate(const mf_cc* c, char** out) {
  return text(out, [&] {
    require(c, "null configuration");
    auto r = mf::validate_cc(c->c);
    json j;
    j["n"] = c->c.n;
    j["rank"] = c->c.rank;
    j["valid"] = r.valid;
    if (!r.valid) {
      j["axiom"] = r.axiom;
      j["witness"] = one_based({r.witness.begin(), r.witness.end()});
      j["message"] = r.message;
    } else {
      j["homogeneous"] = c->c.diagonal_colors() == 1;
      j["primitive"] = mf::is_primitive_cc(c->c);
      j["uniprimitive"] = mf::is_upcc(c->c);
    }
    return j.dump();
  });
}

MF_API mf_status mf_cc_motion(const mf_cc* c, const mf_config* cfg, char** out) {
  return text(out, [&] {
    require(c, "null configuration");
    auto rep = mf::validate_cc(c->c);
    if (!rep.valid) throw mf::DomainError("not a coherent configuration: " + rep.message);
    auto aut = mf::cc_automorphisms(c->c);
    std::size_t lower = mf::motion_lower_bound(c->c);
    std::size_t mu = mf::minimal_degree(aut, caps_of(cfg).elements);
    json j;
    j["n"] = c->c.n;
    j["lower_bound"] = lower;
    j["automorphisms"] = str(aut.order());
    if (mu == mf::kInfinity)
      j["motion"] = nullptr;
    else
      j["motion"] = mu;
    j["lower_le_exact"] = mu == mf::kInfinity || lower <= mu;
    if (mf::is_upcc(c->c)) {
      double n = static_cast<double>(c->c.n);
      j["sqrt_bound"] = (std::sqrt(n) - 1) / 2;
      j["sqrt_bound_holds"] = static_cast<double>(lower) >= (std::sqrt(n) - 1) / 2;
    }
    return j.dump();
  });
}

}  // extern "C"
