#pragma once

#include <string>
#include <vector>

#include "motionforge/finite_field.hpp"
#include "motionforge/perm_group.hpp"

namespace mf {

// Standard permutation groups.
PermGroup symmetric_group(std::size_t n);
PermGroup alternating_group(std::size_t n);
PermGroup cyclic_group(std::size_t n);
PermGroup dihedral_group(std::size_t n);  // order 2n on n points

// Disjoint union action of G x H.
PermGroup direct_product(const PermGroup& g, const PermGroup& h);
// G acting diagonally on c disjoint copies of its domain.
PermGroup diagonal_copies(const PermGroup& g, std::size_t c);
// Imprimitive action of G wr H on m*k points; block b is {b*m, ..., b*m+m-1}.
PermGroup wreath_product(const PermGroup& g, const PermGroup& h);
// Induced action on k-subsets, listed in lexicographic order.
PermGroup induced_on_subsets(const PermGroup& g, std::size_t k);
std::vector<std::vector<Point>> k_subsets(std::size_t n, std::size_t k);
// Automorphisms of the r x r rook's graph on points i*r+j.
PermGroup lattice_group(std::size_t r);

/// F_p^d with x = sum v_i p^i. e_0 is the zero vector, e_i the i-th unit vector (1-based).
class AffineSpace {
 public:
  AffineSpace(std::uint32_t p, std::uint32_t d);
  std::uint32_t p() const { return p_; }
  std::uint32_t dim() const { return d_; }
  std::size_t size() const { return n_; }
  Point index(const std::vector<std::uint32_t>& v) const;
  std::vector<std::uint32_t> coords(Point x) const;
  std::vector<std::uint32_t> unit(std::uint32_t i) const;  // e_i, e_0 = 0
  std::vector<std::uint32_t> add(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) const;
  std::vector<std::uint32_t> scale(std::uint32_t c, const std::vector<std::uint32_t>& a) const;
  /// Full affine group AGL(d, p).
  PermGroup agl() const;

 private:
  std::uint32_t p_, d_;
  std::size_t n_;
};

/// Points of PG(d-1, q): vectors whose first non-zero coordinate is 1.
class ProjectiveSpace {
 public:
  ProjectiveSpace(std::uint32_t q, std::uint32_t d);
  const FiniteField& field() const { return f_; }
  std::uint32_t dim() const { return d_; }
  std::size_t size() const { return pts_.size(); }
  const std::vector<std::uint32_t>& vector_of(Point x) const { return pts_[x]; }
  // Normalizes v (non-zero) and returns its point index.
  Point index(std::vector<std::uint32_t> v) const;
  std::vector<std::uint32_t> unit(std::uint32_t i) const;  // e_i, 1-based
  /// PSL(d, q) acting on the points.
  PermGroup psl() const;
  /// Rank of a set of vectors.
  std::size_t rank(std::vector<std::vector<std::uint32_t>> vs) const;

 private:
  FiniteField f_;
  std::uint32_t d_;
  std::vector<std::vector<std::uint32_t>> pts_;
  std::vector<Point> lookup_;  // indexed by the base-q encoding of the normalized vector
};

Order agl_order(std::uint32_t d, std::uint32_t p);
Order psl_order(std::uint32_t d, std::uint32_t q);

/// Mathieu groups "M11", "M12", "M22", "M23", "M24" in their natural actions.
PermGroup mathieu_group(const std::string& name);
/// The generator lines (1-based cycle notation) used by mathieu_group.
std::vector<std::string> mathieu_generator_lines(const std::string& name);

/**
 * Group from a short name. Atoms: Sn, An, Cn, Dn, M11..M24, AGL(d,p),
 * PSL(d,q), T(r) (Sr on 2-subsets), L(r) (rook's graph). Atoms combine with
 * "x" (direct product) and "wr" (wreath product), left to right; parentheses
 * group. Example: "(S4 wr C2) x A5". Throws ParseError on bad input.
 */
PermGroup named_group(const std::string& name);

}  // namespace mf
