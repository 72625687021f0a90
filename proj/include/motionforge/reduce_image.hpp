#pragma once

#include <string>

#include "motionforge/homomorphism.hpp"
#include "motionforge/types.hpp"

namespace mf {

/// A subset whose setwise stabilizer has a strictly smaller image.
struct ReductionWitness {
  Subset subset;
  Order image_before = 0;
  Order image_after = 0;
  // brute | intransitive | blocks-case1 | blocks-case2a | almost-simple | primitive-solvable | fallback
  std::string path;
};

enum class ReduceStrategy {
  BruteFirst,       // exhaustive scan of small orbits, then the structural ladder
  StructuredFirst,  // structural ladder, brute force only as fallback
};

/**
 * For an epimorphism phi from G = phi.source() onto a nonabelian simple
 * group, finds Delta inside one G-orbit with phi(G_Delta) < phi(G).
 *
 * Throws DomainError if phi is not onto a nonabelian simple group and
 * CapExceeded if every strategy ran out of budget.
 */
ReductionWitness reduce_simple_image(const GroupHom& phi, const Caps& caps = {},
                                     ReduceStrategy strategy = ReduceStrategy::BruteFirst);

/// Same contract for an epimorphism onto any nonsolvable group, via a simple
/// quotient of the perfect core of the image.
ReductionWitness reduce_nonsolvable_image(const GroupHom& phi, const Caps& caps = {},
                                          ReduceStrategy strategy = ReduceStrategy::BruteFirst);

/// The primitive case: phi.source() primitive, onto a nonabelian simple group.
ReductionWitness primitive_reduce(const GroupHom& phi, const Caps& caps = {});

/// Order of phi(G_Delta).
Order reduced_image_order(const GroupHom& phi, const Subset& delta);

}  // namespace mf
