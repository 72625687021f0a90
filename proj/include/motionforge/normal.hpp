#pragma once

#include <optional>
#include <vector>

#include "motionforge/homomorphism.hpp"
#include "motionforge/perm_group.hpp"

namespace mf {

/// Smallest normal subgroup of g containing the given elements.
PermGroup normal_closure(const PermGroup& g, const std::vector<Perm>& elems);
bool is_normal(const PermGroup& g, const PermGroup& n);

/// Normal closure of the generator commutators.
PermGroup derived_subgroup(const PermGroup& g);
/// G = G^(0) > G^(1) > ... ending at the first repeated term.
std::vector<PermGroup> derived_series(const PermGroup& g);
bool is_solvable(const PermGroup& g);
/// Number of steps to the trivial group; throws DomainError if not solvable.
std::size_t derived_length(const PermGroup& g);
/// Last term of the derived series.
PermGroup perfect_core(const PermGroup& g);
bool is_perfect(const PermGroup& g);

/// One representative per conjugacy class, ordered by first appearance in
/// element enumeration. Enumerates up to cap elements.
std::vector<Perm> conjugacy_class_representatives(const PermGroup& g, std::uint64_t cap);

/// Action of g on the left cosets of a normal subgroup k.
GroupHom quotient_action(const PermGroup& g, const PermGroup& k, std::uint64_t cap);

/// True if g is nonabelian simple (checked on conjugacy classes).
bool is_nonabelian_simple(const PermGroup& g, std::uint64_t cap);

/// A maximal proper normal subgroup of a non-trivial group.
PermGroup maximal_normal_subgroup(const PermGroup& g, std::uint64_t cap);

/**
 * Epimorphism from the perfect core P of g onto a nonabelian simple group T,
 * realized as the action of P on the cosets of a maximal normal subgroup.
 * Returns nullopt if g is solvable.
 */
std::optional<GroupHom> simple_quotient_epi(const PermGroup& g, std::uint64_t cap = 1000000);

/**
 * Given maps pi_i out of a common source and a normal subgroup k of the
 * source, returns an i with ker(pi_i) <= k. Throws InvariantViolation if none.
 */
std::size_t subdirect_find_factor(const std::vector<GroupHom>& projections, const PermGroup& k);

}  // namespace mf
