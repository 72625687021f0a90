#pragma once

#include <optional>
#include <string>
#include <vector>

#include "motionforge/inverse_sequence.hpp"
#include "motionforge/pipeline.hpp"

namespace mf {

/// Finite rooted graph with BFS distances from the root.
struct RootedGraph {
  std::vector<std::string> names;           // vertex labels from the file
  std::vector<std::vector<Point>> adj;      // sorted neighbour lists
  Point root = 0;
  std::vector<std::size_t> dist;            // distance to the root

  std::size_t size() const { return adj.size(); }
  std::size_t radius() const;               // largest distance
};

/**
 * Graph files: "v ID" declares a vertex, "e ID ID" an edge (endpoints are
 * declared implicitly), "r ID" the root. '#' starts a comment.
 * Throws ParseError on malformed lines, self-loops, a missing root or
 * vertices unreachable from the root.
 */
RootedGraph load_graph(const std::string& text);
RootedGraph read_graph(const std::string& path);

/// spheres(g)[d] lists the vertices at distance d, ascending.
std::vector<std::vector<Point>> spheres(const RootedGraph& g);
/// Vertices at distance <= r, ordered by distance then index.
std::vector<Point> ball(const RootedGraph& g, std::size_t r);

/// True unless some transposition of two vertices is an automorphism.
bool twin_free(const RootedGraph& g);

/// Automorphisms of the subgraph induced on ball(g, r), in ball order.
PermGroup ball_automorphisms(const RootedGraph& g, std::size_t r);
/// Same, restricted to automorphisms fixing the root.
PermGroup rooted_automorphisms(const RootedGraph& g, std::size_t r);

struct RestrictionCheck {
  bool injective = true;
  std::optional<Perm> witness;  // non-identity, fixes the sphere S_r pointwise (ball order)
};

/// Whether the rooted automorphisms of B_r act faithfully on S_r.
RestrictionCheck sphere_restriction_check(const RootedGraph& g, std::size_t r);

/**
 * Levels are the odd spheres S_3, S_5, ... up to radius R under the rooted
 * automorphisms of B_R, with maps given by restriction. Throws DomainError
 * when R < 3 or when a restriction map is ill-defined (naming the radius).
 */
InverseSequence sphere_sequence(const RootedGraph& g, std::size_t R);

struct SpecialSubsetResult {
  std::vector<Point> subset;          // graph vertices
  PipelineTrace trace;
  bool avoids_inner_ball = false;     // no vertex within distance 1 of the root
  bool covers_even_spheres = false;
  bool root_fixed = false;            // every automorphism of B_R keeping the subset fixes the root
  std::vector<std::size_t> spheres_fixed;  // odd radii fixed pointwise by that stabilizer
  Order stabilizer_order = 0;
};

/// Pipeline subset on the odd spheres plus every even sphere 2, 4, ... <= R,
/// verified on the truncation. Throws DomainError if the graph has twins.
SpecialSubsetResult special_subset(const RootedGraph& g, std::size_t R, const Caps& caps = {});

}  // namespace mf
