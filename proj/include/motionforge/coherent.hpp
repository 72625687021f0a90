#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "motionforge/perm_group.hpp"

namespace mf {

/// Colour matrix of a configuration on {0..n-1}; colours canonically
/// numbered (diagonal colours first, then row-major first occurrence).
struct CoherentConfig {
  std::size_t n = 0;
  std::size_t rank = 0;
  std::vector<std::uint32_t> color;  // color[x * n + y]

  std::uint32_t operator()(Point x, Point y) const { return color[x * n + y]; }
  /// Diagonal colour classes; homogeneous iff there is one.
  std::size_t diagonal_colors() const;
};

/// Renumbers colours canonically.
CoherentConfig canonical_config(std::size_t n, const std::vector<std::uint32_t>& color);

/// Orbitals of g as a configuration.
CoherentConfig schurian_cc(const PermGroup& g);

struct CcReport {
  bool valid = true;
  int axiom = 0;                       // first violated axiom (1..3), 0 if valid
  std::array<Point, 3> witness{};      // points exhibiting the violation
  std::string message;
  std::vector<std::uint32_t> p;        // intersection numbers p[(i * r + j) * r + k] when valid
};

/**
 * Checks (1) a diagonal colour never occurs off the diagonal, (2) the
 * transpose of a colour class is a colour class, (3) the number of z with
 * c(x,z) = i and c(z,y) = j depends only on c(x,y). Violations are reported
 * for the first offending triple in row-major order.
 */
CcReport validate_cc(const CoherentConfig& cc);

/// Every non-diagonal colour class is a strongly connected digraph.
bool is_primitive_cc(const CoherentConfig& cc);
/// Primitive of rank at least 3.
bool is_upcc(const CoherentConfig& cc);

/// Points z with c(z,x) != c(z,y). Throws DomainError if x == y.
std::vector<Point> distinguishing_set(const CoherentConfig& cc, Point x, Point y);
std::size_t min_distinguishing(const CoherentConfig& cc);
/// The motion lower bound min |D(x,y)|.
inline std::size_t motion_lower_bound(const CoherentConfig& cc) { return min_distinguishing(cc); }

/// Colour-preserving permutations of the configuration.
PermGroup cc_automorphisms(const CoherentConfig& cc);
/// Minimal degree of the automorphism group (enumerates up to cap elements).
std::size_t motion_exact(const CoherentConfig& cc, std::uint64_t cap = 10000000);

/// Triangular graph T(r) on 2-subsets (adjacent when meeting), as a configuration.
CoherentConfig triangular_cc(std::size_t r);
/// Lattice graph L2(r) on [r]^2 (adjacent when sharing a coordinate).
CoherentConfig lattice_cc(std::size_t r);
/// Configuration of a simple graph: diagonal, edge, non-edge.
CoherentConfig graph_cc(std::size_t n, const std::vector<std::pair<Point, Point>>& edges);

/// Text: n, then n rows of n colour indices.
CoherentConfig parse_cc(const std::string& text);
std::string format_cc(const CoherentConfig& cc);

}  // namespace mf
