// Command-line front end over the motionforge C API.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "motionforge/motionforge.h"

namespace {

using nlohmann::json;

// Thrown to leave main with an exit code after a library failure.
struct Failure {
  mf_status status;
};

void check(mf_status s) {
  if (s != MF_OK) throw Failure{s};
}

int exit_code(mf_status s) { return s == MF_E_CAP ? 2 : 1; }

template <class T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Free(p); }
  T** out() { return &p; }
  T* get() const { return p; }
};
using Group = Handle<mf_group, mf_group_free>;
using Sequence = Handle<mf_sequence, mf_sequence_free>;
using Graph = Handle<mf_graph, mf_graph_free>;
using Config = Handle<mf_cc, mf_cc_free>;

struct Text {
  char* p = nullptr;
  ~Text() { mf_string_free(p); }
  char** out() { return &p; }
  std::string str() const { return p ? p : ""; }
};

struct Array {
  mf_u32_array a{nullptr, 0};
  ~Array() { mf_array_free(&a); }
  std::vector<uint32_t> vec() const { return {a.data, a.data + a.len}; }
};

struct Options {
  mf_config cfg{};
  std::string out;
};

// Output goes to --out when given, stdout otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot write " + path);
    }
  }
  std::ostream& os() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

// A path (contains '/' or a file suffix) or a catalogue name such as "S5".
void load_group(const std::string& arg, Group& g) {
  bool path = arg.find('/') != std::string::npos || arg.find(".gens") != std::string::npos;
  check(path ? mf_group_read(arg.c_str(), g.out()) : mf_group_named(arg.c_str(), g.out()));
}

std::string points(const std::vector<uint32_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i] + 1);
  return s;
}

std::vector<uint32_t> parse_points(const std::string& s, bool zero_allowed) {
  std::vector<uint32_t> v;
  std::istringstream in(s);
  long long x;
  while (in >> x) {
    if (x < (zero_allowed ? 0 : 1)) throw CLI::ValidationError("points and colours are 1-based");
    v.push_back(static_cast<uint32_t>(x - 1));
  }
  if (!in.eof()) throw CLI::ValidationError("expected whitespace-separated integers");
  return v;
}

std::string scalar(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + scalar(v[i]);
    return s;
  }
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_null()) return "none";
  return v.dump();
}

// One "key: value" line per field.
void print_report(std::ostream& os, const std::string& js) {
  json j = json::parse(js);
  for (auto it = j.begin(); it != j.end(); ++it) os << it.key() << ": " << scalar(it.value()) << "\n";
}

void add_group_commands(CLI::App& app, Options& o) {
  auto* grp = app.add_subcommand("group", "Basic group data")->require_subcommand(1);
  static std::string garg;
  for (const char* name : {"order", "orbits", "mu", "derived"}) {
    auto* c = grp->add_subcommand(name);
    c->add_option("group", garg, "generator file or catalogue name")->required();
    c->callback([&o, c] {
      Group g;
      load_group(garg, g);
      Sink sink(o.out);
      std::string n = c->get_name();
      if (n == "order") {
        Text t;
        check(mf_group_order(g.get(), t.out()));
        sink.os() << t.str() << "\n";
      } else if (n == "orbits") {
        Text t;
        check(mf_group_orbits(g.get(), t.out()));
        sink.os() << t.str();
      } else if (n == "mu") {
        uint64_t mu = 0;
        check(mf_group_minimal_degree(g.get(), &o.cfg, &mu));
        if (mu == MF_INFINITE)
          sink.os() << "inf\n";
        else
          sink.os() << mu << "\n";
      } else {
        Text t;
        check(mf_group_derived_series(g.get(), t.out()));
        print_report(sink.os(), t.str());
      }
    });
  }
}

void add_color_commands(CLI::App& app, Options& o) {
  auto* col = app.add_subcommand("color", "Colourings and their stabilizers")->require_subcommand(1);
  static std::string garg, subset, coloring;
  static uint32_t colors = 2;

  auto* st = col->add_subcommand("stabilizer", "Stabilizer of a subset or colouring");
  st->add_option("group", garg)->required();
  auto* so = st->add_option("--subset", subset, "1-based points");
  auto* co = st->add_option("--coloring", coloring, "one 1-based colour per point");
  so->excludes(co);
  st->callback([&o] {
    if (subset.empty() && coloring.empty()) throw CLI::ValidationError("give --subset or --coloring");
    Group g, s;
    load_group(garg, g);
    Text rep, gens;
    if (!coloring.empty()) {
      auto c = parse_points(coloring, false);
      check(mf_coloring_stabilizer(g.get(), c.data(), c.size(), s.out()));
      check(mf_coloring_report(g.get(), c.data(), c.size(), rep.out()));
    } else {
      auto p = parse_points(subset, false);
      check(mf_setwise_stabilizer(g.get(), p.data(), p.size(), s.out()));
      check(mf_subset_report(g.get(), p.data(), p.size(), rep.out()));
    }
    check(mf_group_format(s.get(), gens.out()));
    Sink sink(o.out);
    print_report(sink.os(), rep.str());
    sink.os() << "generators:\n" << gens.str();
  });

  auto* asym = col->add_subcommand("asymmetric", "Subset with trivial setwise stabilizer");
  asym->add_option("group", garg)->required();
  asym->callback([&o] {
    Group g;
    load_group(garg, g);
    int found = 0;
    Array a;
    check(mf_find_asymmetric_subset(g.get(), &o.cfg, &found, &a.a));
    Sink sink(o.out);
    if (found)
      sink.os() << points(a.vec()) << "\n";
    else
      sink.os() << "NONE\n# no asymmetric 2-colouring: all 2^" << mf_group_degree(g.get())
                << " subsets checked\n";
  });

  auto* solv = col->add_subcommand("solvable", "Subset with solvable setwise stabilizer");
  solv->add_option("group", garg)->required();
  solv->callback([&o] {
    Group g;
    load_group(garg, g);
    int found = 0;
    Array a;
    check(mf_find_solvable_subset(g.get(), &o.cfg, &found, &a.a));
    Sink sink(o.out);
    if (found)
      sink.os() << points(a.vec()) << "\n";
    else
      sink.os() << "NONE\n# every subset checked\n";
  });

  for (const char* name : {"asy", "solv"}) {
    auto* c = col->add_subcommand(name, std::string("Exact ") + name + " colour number");
    c->add_option("group", garg)->required();
    c->callback([&o, c] {
      Group g;
      load_group(garg, g);
      size_t k = 0;
      Array w;
      check(c->get_name() == "asy" ? mf_asy_number(g.get(), &o.cfg, &k, &w.a)
                                   : mf_solv_number(g.get(), &o.cfg, &k, &w.a));
      Sink sink(o.out);
      sink.os() << k << "\nwitness: " << points(w.vec()) << "\n";
    });
  }

  auto* ml = col->add_subcommand("motion-bound", "Random asymmetric colouring when d^(mu/2) >= |G|");
  ml->add_option("group", garg)->required();
  ml->add_option("--colors", colors, "number of colours d")->check(CLI::Range(2u, 1000u));
  ml->callback([&o] {
    Group g;
    load_group(garg, g);
    Text t;
    check(mf_motion_bound(g.get(), colors, &o.cfg, t.out()));
    Sink sink(o.out);
    print_report(sink.os(), t.str());
  });
}

void add_construct_commands(CLI::App& app, Options& o) {
  auto* con = app.add_subcommand("construct", "Explicit subsets and colourings")->require_subcommand(1);
  static uint32_t dim = 2, field = 2;
  static std::string garg, mname;

  auto report = [&o](mf_group* g, const std::vector<uint32_t>& s) {
    Text t;
    check(mf_subset_report(g, s.data(), s.size(), t.out()));
    Sink sink(o.out);
    print_report(sink.os(), t.str());
  };

  auto* aff = con->add_subcommand("affine", "Solvable-stabilizer subset of AG(d,p)");
  aff->add_option("--dim", dim)->required()->check(CLI::Range(1u, 12u));
  aff->add_option("--prime", field)->required();
  aff->callback([report] {
    Group g;
    Array a;
    check(mf_group_affine(dim, field, g.out()));
    check(mf_affine_subset(dim, field, &a.a));
    report(g.get(), a.vec());
  });

  auto* proj = con->add_subcommand("projective", "Solvable-stabilizer subset of PG(d-1,q)");
  proj->add_option("--dim", dim)->required()->check(CLI::Range(2u, 12u));
  proj->add_option("--field", field)->required();
  proj->callback([report] {
    Group g;
    Array a;
    check(mf_group_projective(dim, field, g.out()));
    check(mf_projective_subset(dim, field, &a.a));
    report(g.get(), a.vec());
  });

  auto* mat = con->add_subcommand("mathieu", "Solvable-stabilizer subset of a Mathieu group");
  mat->add_option("name", mname, "M11, M12, M22, M23 or M24")->required();
  mat->callback([report] {
    Group g;
    Array a;
    check(mf_group_named(mname.c_str(), g.out()));
    check(mf_mathieu_subset(mname.c_str(), &a.a));
    report(g.get(), a.vec());
  });

  auto* tr = con->add_subcommand("transversal", "Orbit transversal subset");
  tr->add_option("group", garg)->required();
  tr->callback([report] {
    Group g;
    Array a;
    load_group(garg, g);
    check(mf_transversal_subset(g.get(), &a.a));
    report(g.get(), a.vec());
  });

  auto* five = con->add_subcommand("five-coloring", "Asymmetric colouring of a solvable group with 5 colours");
  five->add_option("group", garg)->required();
  five->callback([&o] {
    Group g;
    Array a;
    load_group(garg, g);
    check(mf_five_coloring(g.get(), &o.cfg, &a.a));
    auto c = a.vec();
    Text t;
    check(mf_coloring_report(g.get(), c.data(), c.size(), t.out()));
    Sink sink(o.out);
    sink.os() << "coloring: " << points(c) << "\n";
    print_report(sink.os(), t.str());
  });

  auto* bo = con->add_subcommand("bounded-orbits", "Subset whose stabilizer has short orbits");
  bo->add_option("group", garg)->required();
  bo->callback([&o] {
    Group g;
    load_group(garg, g);
    Text t;
    check(mf_bounded_orbit_subset(g.get(), &o.cfg, t.out()));
    Sink sink(o.out);
    print_report(sink.os(), t.str());
  });
}

void add_reduce_commands(CLI::App& app, Options& o) {
  auto* red = app.add_subcommand("reduce", "Shrink a nonsolvable image by colouring")->require_subcommand(1);
  static std::string garg, target, images;
  static bool structured = false;

  // With --target and --images the map is read from files; otherwise it is
  // chosen automatically.
  auto run_map = [&o](bool nonsolvable) {
    if (target.empty() != images.empty()) throw CLI::ValidationError("--target and --images go together");
    Group g, h;
    load_group(garg, g);
    load_group(target, h);
    std::ifstream in(images);
    if (!in) throw CLI::ValidationError("cannot read " + images);
    std::stringstream buf;
    buf << in.rdbuf();
    Text t;
    check(mf_reduce_map(g.get(), h.get(), buf.str().c_str(), &o.cfg, nonsolvable ? 1 : 0, structured ? 1 : 0, t.out()));
    Sink sink(o.out);
    print_report(sink.os(), t.str());
  };

  auto* simple = red->add_subcommand("simple", "One reduction step onto a simple quotient");
  simple->add_option("group", garg)->required();
  simple->add_option("--target", target, "generator file of the target group");
  simple->add_option("--images", images, "one cycle line per source generator, in target points");
  simple->add_flag("--structured", structured, "try the structural cases before brute force");
  simple->callback([&o, run_map] {
    if (!target.empty() || !images.empty()) return run_map(false);
    Group g;
    load_group(garg, g);
    Text t;
    check(mf_reduce_simple(g.get(), &o.cfg, structured ? 1 : 0, t.out()));
    Sink sink(o.out);
    print_report(sink.os(), t.str());
  });

  auto* ns = red->add_subcommand("nonsolvable", "Iterate reductions until the stabilizer is solvable");
  ns->add_option("group", garg)->required();
  ns->add_option("--target", target, "generator file of the target group (one step along that map)");
  ns->add_option("--images", images, "one cycle line per source generator, in target points");
  ns->callback([&o, run_map] {
    if (!target.empty() || !images.empty()) return run_map(true);
    Group g;
    load_group(garg, g);
    Text t;
    check(mf_reduce_nonsolvable(g.get(), &o.cfg, t.out()));
    json j = json::parse(t.str());
    Sink sink(o.out);
    std::size_t i = 0;
    for (const auto& r : j["rounds"])
      sink.os() << "round " << ++i << ": " << r["order_before"].get<std::string>() << " -> "
                << r["order_after"].get<std::string>() << " via " << r["path"].get<std::string>()
                << " subset " << scalar(r["subset"]) << "\n";
    sink.os() << "final_order: " << j["final_order"].get<std::string>() << "\n";
    sink.os() << "rounds: " << i << " (bound " << j["round_bound"].dump() << ")\n";
  });
}

void add_pipeline_commands(CLI::App& app, Options& o) {
  auto* pipe = app.add_subcommand("pipeline", "Finite inverse sequences")->require_subcommand(1);
  static std::string seq, garg;
  static std::size_t levels = 1;

  auto* val = pipe->add_subcommand("validate", "Check disjointness, homomorphisms and surjectivity");
  val->add_option("sequence", seq)->required();
  val->callback([&o] {
    Sequence s;
    check(mf_sequence_read(seq.c_str(), s.out()));
    Text t;
    check(mf_sequence_validate(s.get(), t.out()));
    Sink sink(o.out);
    print_report(sink.os(), t.str());
    if (!json::parse(t.str())["problems"].empty()) throw Failure{MF_E_DOMAIN};
  });

  auto* er = pipe->add_subcommand("reduce", "Replace each level by the image from above");
  er->add_option("sequence", seq)->required();
  er->callback([&o] {
    if (o.out.empty()) throw CLI::ValidationError("pipeline reduce needs --out for the new sequence file");
    Sequence s, r;
    check(mf_sequence_read(seq.c_str(), s.out()));
    check(mf_sequence_epimorphic(s.get(), r.out()));
    check(mf_sequence_write(r.get(), o.out.c_str()));
    Text t;
    check(mf_sequence_validate(r.get(), t.out()));
    print_report(std::cout, t.str());
  });

  auto* run = pipe->add_subcommand("run", "Zero-neutral zero-asymmetric 2-colouring");
  run->add_option("sequence", seq)->required();
  run->callback([&o] {
    Sequence s;
    check(mf_sequence_read(seq.c_str(), s.out()));
    Text t;
    check(mf_pipeline_run(s.get(), &o.cfg, t.out()));
    std::string trace = t.str();
    if (!o.out.empty()) {
      Sink sink(o.out);
      sink.os() << trace;
    }
    auto last = trace.find_last_of('\n', trace.size() - 2);
    json summary = json::parse(trace.substr(last == std::string::npos ? 0 : last + 1));
    std::cout << "subset: " << scalar(summary["delta"]) << "\n";
    std::cout << "pivot: " << summary["pivot"].dump() << "\n";
    std::cout << "zero_neutral: " << scalar(summary["zero_neutral"]) << "\n";
    std::cout << "zero_asymmetric: " << scalar(summary["zero_asymmetric"]) << "\n";
  });

  auto* diag = pipe->add_subcommand("diagonal", "Pipeline on k diagonal copies; decode the colouring");
  diag->add_option("group", garg)->required();
  diag->add_option("--levels", levels, "k")->check(CLI::Range(1, 16));
  diag->callback([&o] {
    Group g;
    load_group(garg, g);
    Text t;
    check(mf_pipeline_diagonal(g.get(), levels, &o.cfg, t.out()));
    Sink sink(o.out);
    print_report(sink.os(), t.str());
  });
}

void add_graph_commands(CLI::App& app, Options& o) {
  auto* gr = app.add_subcommand("graph", "Rooted graph truncations")->require_subcommand(1);
  static std::string file;
  static std::size_t radius = 5;

  auto* sp = gr->add_subcommand("spheres", "Spheres about the root");
  sp->add_option("graph", file)->required();
  sp->callback([&o] {
    Graph g;
    check(mf_graph_read(file.c_str(), g.out()));
    Text t;
    check(mf_graph_spheres(g.get(), t.out()));
    json j = json::parse(t.str());
    Sink sink(o.out);
    sink.os() << "root: " << j["root"].get<std::string>() << "\ntwin_free: " << scalar(j["twin_free"]) << "\n";
    std::size_t d = 0;
    for (const auto& s : j["spheres"]) sink.os() << "S" << d++ << ": " << scalar(s) << "\n";
  });

  auto* ss = gr->add_subcommand("special-subset", "Even spheres plus a pipeline colouring of the odd ones");
  ss->add_option("graph", file)->required();
  ss->add_option("--radius", radius)->check(CLI::Range(3, 1000));
  ss->callback([&o] {
    Graph g;
    check(mf_graph_read(file.c_str(), g.out()));
    Text t;
    check(mf_graph_special_subset(g.get(), radius, &o.cfg, t.out()));
    json j = json::parse(t.str());
    Sink sink(o.out);
    print_report(sink.os(), t.str());
    sink.os() << "root fixed by the stabilizer: " << scalar(j["root_fixed"]) << "\n";
    sink.os() << "# a truncation does not certify infinite motion of the whole graph\n";
  });
}

void add_cc_commands(CLI::App& app, Options& o) {
  auto* cc = app.add_subcommand("cc", "Coherent configurations")->require_subcommand(1);
  static std::string file, garg;
  static std::size_t tri = 0, lat = 0;

  auto load = [](Config& c) {
    int given = !file.empty() + !garg.empty() + (tri > 0) + (lat > 0);
    if (given != 1) throw CLI::ValidationError("give exactly one of FILE, --group, --triangular, --lattice");
    if (!file.empty()) check(mf_cc_read(file.c_str(), c.out()));
    if (!garg.empty()) {
      Group g;
      load_group(garg, g);
      check(mf_cc_from_group(g.get(), c.out()));
    }
    if (tri) check(mf_cc_triangular(tri, c.out()));
    if (lat) check(mf_cc_lattice(lat, c.out()));
  };
  auto sources = [](CLI::App* c) {
    c->add_option("file", file, "configuration file");
    c->add_option("--group", garg, "orbital configuration of a group");
    c->add_option("--triangular", tri, "T(r)")->check(CLI::Range(2, 60));
    c->add_option("--lattice", lat, "L2(r)")->check(CLI::Range(2, 30));
  };

  auto* build = cc->add_subcommand("build", "Write a configuration");
  sources(build);
  build->callback([&o, load] {
    Config c;
    load(c);
    Text t;
    check(mf_cc_format(c.get(), t.out()));
    Sink sink(o.out);
    sink.os() << t.str();
  });

  auto* val = cc->add_subcommand("validate", "Check the axioms");
  sources(val);
  val->callback([&o, load] {
    Config c;
    load(c);
    Text t;
    check(mf_cc_validate(c.get(), t.out()));
    Sink sink(o.out);
    print_report(sink.os(), t.str());
  });

  auto* mot = cc->add_subcommand("motion", "Distinguishing-set bound and exact motion");
  sources(mot);
  mot->callback([&o, load] {
    Config c;
    load(c);
    Text t;
    check(mf_cc_motion(c.get(), &o.cfg, t.out()));
    Sink sink(o.out);
    print_report(sink.os(), t.str());
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"motionforge: symmetry breaking in finite permutation groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  mf_config_default(&o.cfg);
  app.add_option("--cap-elements", o.cfg.cap_elements, "element enumeration cap")->check(CLI::PositiveNumber);
  app.add_option("--cap-subsets", o.cfg.cap_subsets, "subset search cap")->check(CLI::PositiveNumber);
  app.add_option("--cap-colorings", o.cfg.cap_colorings, "colouring search cap")->check(CLI::PositiveNumber);
  app.add_option("--trials", o.cfg.trials, "randomized trial budget")->check(CLI::PositiveNumber);
  app.add_option("--seed", o.cfg.seed, "PRNG seed");
  app.add_option("--threads", o.cfg.threads, "worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--out", o.out, "write the result to this file");

  add_group_commands(app, o);
  add_color_commands(app, o);
  add_construct_commands(app, o);
  add_reduce_commands(app, o);
  add_pipeline_commands(app, o);
  add_graph_commands(app, o);
  add_cc_commands(app, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const Failure& f) {
    std::cerr << "error: " << mf_status_name(f.status) << ": " << mf_last_error() << "\n";
    return exit_code(f.status);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
