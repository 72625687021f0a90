#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <span>
#include <vector>

#include "motionforge/perm.hpp"
#include "motionforge/stab_chain.hpp"
#include "motionforge/types.hpp"

namespace mf {

/**
 * @brief A permutation group given by generators on {0..n-1}.
 *
 * Immutable and cheap to copy. The stabilizer chain is computed on first use
 * (base in ascending point order) and shared between copies.
 */
class PermGroup {
 public:
  PermGroup();
  // Throws DomainError if a generator has the wrong degree.
  PermGroup(std::size_t degree, std::vector<Perm> gens);
  // Adopts a complete chain (e.g. from a backtrack search).
  explicit PermGroup(StabChain chain);
  // Generators together with a chain already known to describe them.
  PermGroup(std::vector<Perm> gens, StabChain chain);

  static PermGroup trivial(std::size_t degree) { return PermGroup(degree, {}); }

  std::size_t degree() const noexcept;
  const std::vector<Perm>& generators() const noexcept;
  const StabChain& chain() const;

  Order order() const;
  bool is_trivial() const;
  bool contains(const Perm& g) const;
  bool is_subgroup_of(const PermGroup& other) const;
  bool same_group(const PermGroup& other) const;

  // Throws CapExceeded when the order exceeds cap.
  std::vector<Perm> elements(std::uint64_t cap) const;
  void for_each_element(std::uint64_t cap, const std::function<void(const Perm&)>& fn) const;
  Perm random_element(std::mt19937_64& rng) const;

  std::vector<Point> orbit(Point x) const;
  // Orbits sorted by smallest point; each orbit sorted.
  std::vector<std::vector<Point>> orbits() const;
  bool is_transitive() const;

  // Chain whose base starts with prefix (uses the known order).
  StabChain chain_with_base(std::span<const Point> prefix) const;
  PermGroup pointwise_stabilizer(std::span<const Point> points) const;

  // Action on an invariant set, relabelled so points[i] becomes i.
  PermGroup restricted_to(std::span<const Point> points) const;
  // Generators restricted to an invariant set (same relabelling).
  static Perm restrict_perm(const Perm& g, std::span<const Point> points);

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

/// Validating factory: throws DomainError for an empty domain or a non-bijective generator.
PermGroup group_from_generators(std::size_t n, const std::vector<std::vector<Point>>& images);

/// Sentinel returned by minimal_degree for the trivial group.
inline constexpr std::size_t kInfinity = SIZE_MAX;

/// Smallest support size of a non-identity element (exact, enumerates up to cap elements).
std::size_t minimal_degree(const PermGroup& g, std::uint64_t cap = 10000000);

/// A non-identity element attaining the minimal degree.
Perm minimal_degree_witness(const PermGroup& g, std::uint64_t cap = 10000000);

/**
 * Lower bound on the minimal degree computed from generators only: every
 * element moving x to y must move every point z whose orbital colour with x
 * differs from that with y.
 */
std::size_t minimal_degree_lower_bound(const PermGroup& g);

/// Orbital colouring of ordered pairs: colour[x*n+y]. Diagonal orbitals first,
/// then off-diagonal ones by first occurrence in row-major order.
std::vector<std::uint32_t> orbital_colors(const PermGroup& g, std::uint32_t* rank = nullptr);

}  // namespace mf
