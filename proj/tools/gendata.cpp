// Writes the bundled fixtures: generator files, inverse sequences, rooted
// graphs and coherent configurations. Output is deterministic.
//
//   mf_gendata [DIR]   (default: data)
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "motionforge/blocks.hpp"
#include "motionforge/catalog.hpp"
#include "motionforge/coherent.hpp"
#include "motionforge/graph_spheres.hpp"
#include "motionforge/inverse_sequence.hpp"
#include "motionforge/io.hpp"

namespace fs = std::filesystem;
using namespace mf;

namespace {

void write(const fs::path& p, const std::string& text) {
  fs::create_directories(p.parent_path());
  std::ofstream out(p);
  if (!out) throw std::runtime_error("cannot write " + p.string());
  out << text;
}

std::string edge(const std::string& a, const std::string& b) { return "e " + a + " " + b + "\n"; }

// Path -r..r rooted at 0.
std::string path_graph(int r) {
  std::string s = "# path from -" + std::to_string(r) + " to " + std::to_string(r) + "\n";
  for (int i = -r; i < r; ++i) s += edge(std::to_string(i), std::to_string(i + 1));
  return s + "r 0\n";
}

// Rooted tree: the root has `first` children, later vertices at depth d
// have branching[d % branching.size()] children.
std::string tree(const std::string& title, int depth, int first, const std::vector<int>& branching) {
  std::string s = "# " + title + "\n";
  int next = 1;
  std::vector<int> layer{0};
  for (int d = 0; d < depth; ++d) {
    std::vector<int> nl;
    int k = d == 0 ? first : branching[d % branching.size()];
    for (int v : layer)
      for (int j = 0; j < k; ++j) {
        s += edge(std::to_string(v), std::to_string(next));
        nl.push_back(next++);
      }
    layer = std::move(nl);
  }
  return s + "r 0\n";
}

}  // namespace

int main(int argc, char** argv) {
  fs::path dir = argc > 1 ? argv[1] : "data";
  try {
    struct Named {
      const char* file;
      const char* name;
    };
    const Named groups[] = {
        {"c5", "C5"},         {"d5", "D5"},         {"s4", "S4"},           {"s5", "S5"},
        {"a5", "A5"},         {"a6", "A6"},         {"s8", "S8"},           {"s12", "S12"},
        {"s4wrc2", "S4 wr C2"}, {"agl3-2", "AGL(3,2)"}, {"psl3-2", "PSL(3,2)"}, {"a5xa5", "A5 x A5"},
        {"c2wra5", "C2 wr A5"}, {"t5", "T(5)"},     {"m11", "M11"},         {"m12", "M12"},
        {"m22", "M22"},       {"m23", "M23"},
    };
    for (const auto& g : groups) write(dir / (std::string(g.file) + ".gens"), format_generators(named_group(g.name)));

    // M24 exactly as printed in the literature, one generator per line.
    std::string m24 = "24\n";
    for (const auto& line : mathieu_generator_lines("M24")) m24 += line + "\n";
    write(dir / "m24.gens", m24);

    struct Diag {
      const char* file;
      const char* name;
      std::size_t k;
    };
    const Diag diags[] = {{"diag-c2", "C2", 1}, {"diag-s3", "S3", 2}, {"diag-s4wrc2", "S4 wr C2", 5},
                          {"diag-s5", "S5", 3}};
    for (const auto& d : diags) {
      fs::create_directories(dir / "seq");
      write_sequence(diagonal_sequence(named_group(d.name), d.k), (dir / "seq" / (std::string(d.file) + ".seq")).string());
    }

    const std::string tree3 = tree("3-regular tree, radius 5", 5, 3, {2});
    const std::string hairy = tree("subdivided tree, radius 8 (twin-free)", 8, 3, {2, 1});
    write(dir / "graphs" / "path9.graph", path_graph(9));
    write(dir / "graphs" / "bintree4.graph", tree("binary tree, depth 4", 4, 2, {2}));
    write(dir / "graphs" / "tree3-r5.graph", tree3);
    write(dir / "graphs" / "hairy-r8.graph", hairy);
    write(dir / "graphs" / "star3.graph", "# K(1,3)\ne c a\ne c b\ne c d\nr c\n");
    write_sequence(sphere_sequence(load_graph(tree3), 5), (dir / "seq" / "tree3-r5.seq").string());

    // C2 wr A5 onto A5 through its action on the five blocks.
    {
      PermGroup src = named_group("C2 wr A5");
      GroupHom act = action_on_blocks(src, minimal_block_system(src, {0, 1}));
      std::string img = "# images of the generators of c2wra5.gens under the block action\n";
      for (const auto& s : src.generators()) img += act.apply(s).to_string() + "\n";
      write(dir / "maps" / "c2wra5-blocks.img", img);
      write(dir / "maps" / "a5-blocks.gens", format_generators(act.image()));
    }

    write(dir / "cc" / "t5.cc", format_cc(triangular_cc(5)));
    write(dir / "cc" / "l3.cc", format_cc(lattice_cc(3)));
    write(dir / "cc" / "p4.cc", "# path graph P4 with a diagonal colour; not coherent\n" +
                                    format_cc(graph_cc(4, {{0, 1}, {1, 2}, {2, 3}})));
  } catch (const std::exception& e) {
    std::cerr << "mf_gendata: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
