#pragma once

#include <utility>
#include <vector>

#include "motionforge/perm_group.hpp"
#include "motionforge/types.hpp"

namespace mf {

/**
 * @brief Vertex- and arc-coloured digraph on {0..n-1}.
 *
 * Arcs not listed carry an implicit default colour. An undirected edge is
 * stored as two arcs.
 */
class ColoredDigraph {
 public:
  explicit ColoredDigraph(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  void set_vertex_color(Point v, std::uint32_t c);
  // Colour 0 is reserved for the implicit default.
  void add_arc(Point from, Point to, std::uint32_t color);
  void add_edge(Point a, Point b, std::uint32_t color = 1);

  /// Every ordered pair (x, y), x != y, gets color[x * n + y]; the diagonal
  /// gives vertex colours. The most frequent off-diagonal colour becomes the default.
  static ColoredDigraph from_matrix(std::size_t n, const std::vector<std::uint32_t>& color);

  std::uint32_t vertex_color(Point v) const { return vcol_[v]; }
  std::uint32_t arc_color(Point from, Point to) const;
  const std::vector<std::pair<Point, std::uint32_t>>& out(Point v) const { return out_[v]; }
  const std::vector<std::pair<Point, std::uint32_t>>& in(Point v) const { return in_[v]; }

  bool is_automorphism(const Perm& p) const;

 private:
  std::size_t n_;
  std::vector<std::uint32_t> vcol_;
  std::vector<std::vector<std::pair<Point, std::uint32_t>>> out_, in_;  // sorted by neighbour
};

/**
 * Automorphism group (preserving vertex and arc colours) by
 * individualization and refinement. The result carries a base and strong
 * generating set from the search. Throws CapExceeded after max_nodes search nodes.
 */
PermGroup digraph_automorphisms(const ColoredDigraph& g, std::uint64_t max_nodes = 1000000);

}  // namespace mf
