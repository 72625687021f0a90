#pragma once

#include <optional>
#include <string>
#include <vector>

#include "motionforge/catalog.hpp"
#include "motionforge/coloring.hpp"
#include "motionforge/perm_group.hpp"

namespace mf {

/// Subset of F_p^d (AffineSpace indexing) whose stabilizer in AGL(d, p) is solvable.
Subset affine_solvable_subset(std::uint32_t p, std::uint32_t d);
/// The four-element subsets Q_i of the d >= 7 construction (empty otherwise).
std::vector<Subset> affine_quadruples(std::uint32_t p, std::uint32_t d);

/// Subset of PG(d-1, q) (ProjectiveSpace indexing) with solvable stabilizer in PSL(d, q).
Subset projective_solvable_subset(std::uint32_t q, std::uint32_t d);
/// Dependent triples of the construction.
std::vector<Subset> projective_expected_triples(std::uint32_t q, std::uint32_t d);

/// First 2+k points (k = 1 for M11/M22, k = 2 for M12/M23), or {1..10} for M24.
Subset mathieu_solvable_subset(const std::string& name);

/// Smallest point of each orbit. Throws DomainError unless g is abelian.
Subset abelian_asymmetric_subset(const PermGroup& g);

/// One point per orbit of G^(k-1), k the derived length; the stabilizer of
/// the result has derived length at most k-1. Throws DomainError if not solvable.
Subset derived_length_reduction(const PermGroup& g);

/// Asymmetric colouring of a solvable group with at most five colours.
Coloring solvable_asymmetric_5coloring(const PermGroup& g, const Caps& caps = {});

/// Sizes j for which an asymmetric j-subset exists (exhaustive).
std::vector<std::size_t> asymmetric_size_catalog(const PermGroup& g, const Caps& caps = {});

enum class OrbitCase { Abelian, Asymmetric, BlocksSizes, BlocksFive, BlocksLift, Exhaustive, Trivial };
const char* to_string(OrbitCase c);

struct BoundedOrbitResult {
  Subset subset;
  std::size_t bound = 0;  // longest orbit of the stabilizer
  std::vector<OrbitCase> cases;  // per orbit of g, in orbit order
};

/// Subset whose stabilizer in the solvable group g has short orbits.
BoundedOrbitResult bounded_orbit_subset(const PermGroup& g, const Caps& caps = {});

}  // namespace mf
