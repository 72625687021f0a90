#pragma once

#include <string>
#include <vector>

#include "motionforge/coloring.hpp"
#include "motionforge/homomorphism.hpp"

namespace mf {

/**
 * @brief Groups G_0..G_k on disjoint domains with maps G_i -> G_{i-1}.
 *
 * Level i acts on points offsets[i] .. offsets[i] + degree(i) - 1 of the
 * union domain. maps[i - 1] is the map out of level i.
 */
struct InverseSequence {
  std::vector<PermGroup> groups;
  std::vector<std::size_t> offsets;
  std::vector<GroupHom> maps;

  std::size_t levels() const { return groups.size(); }
  std::size_t degree(std::size_t i) const { return groups[i].degree(); }
  /// Smallest domain size containing every level.
  std::size_t total_degree() const;
  /// Composed map G_i -> G_j for i >= j.
  GroupHom composed(std::size_t i, std::size_t j) const;
};

struct SequenceReport {
  bool disjoint = true;
  bool homomorphisms = true;
  bool epimorphic = true;
  std::vector<std::string> problems;  // one line per violation, naming the level
  bool ok() const { return disjoint && homomorphisms && epimorphic; }
};

SequenceReport validate_sequence(const InverseSequence& seq);

/// Replaces every level by the image of the top group under the composed map.
InverseSequence epimorphic_reduction(const InverseSequence& seq);

/// The top group acting on every level through the composed maps.
struct LimitView {
  PermGroup top;
  std::vector<GroupHom> projections;  // top -> G_i
  PermGroup combined;                 // top acting on the union domain
};

LimitView limit_view(const InverseSequence& seq);

/// Perm of the union domain induced by an element of the top group.
Perm combined_element(const InverseSequence& seq, const LimitView& view, const Perm& top_element);

/// Stabilizer in the top group of a colouring of the union domain, computed
/// level by level through preimages of colouring stabilizers.
PermGroup coloring_stabilizer_in_limit(const InverseSequence& seq, const Coloring& gamma);

/// k + 1 copies of g on consecutive domains with identity maps.
InverseSequence diagonal_sequence(const PermGroup& g, std::size_t k);

/// Reads the colouring of levels 1..k of a diagonal sequence as the tuple
/// colouring x -> sum_i gamma(x at level i) * 2^(i-1) of the base domain.
Coloring decode_diagonal_coloring(const Coloring& gamma, std::size_t n, std::size_t k);

/**
 * Text format:
 *   levels K
 *   level I offset O file PATH     (one line per level, PATH relative to base_dir)
 *   map I                          (for I = 1..K-1, followed by one cycle
 *   <image of generator 1>          line per generator of level I, in the
 *   ...                             1-based points of level I-1)
 * Blank lines and lines starting with '#' are ignored. Throws ParseError.
 */
InverseSequence parse_sequence(const std::string& text, const std::string& base_dir = ".");
InverseSequence read_sequence(const std::string& path);
/// Writes the sequence as its own file plus one generator file per level.
void write_sequence(const InverseSequence& seq, const std::string& path);

}  // namespace mf
