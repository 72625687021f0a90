#pragma once

#include <optional>
#include <span>
#include <vector>

#include "motionforge/perm_group.hpp"

namespace mf {

/**
 * Stabilizer of a colouring by backtrack over a stabilizer chain whose base
 * starts with every point outside the largest colour class. Pruning uses the
 * colours of base images and of points fixed by deeper chain levels.
 *
 * With first_only the search stops at the first non-identity element found
 * and the returned group is generated by that element alone (or is trivial).
 */
PermGroup coloring_stabilizer_backtrack(const PermGroup& g, std::span<const std::uint32_t> colors,
                                        bool first_only = false);

/// An element t of g with dst[t(x)] == src[x] for all x, if any.
std::optional<Perm> coloring_transporter(const PermGroup& g, std::span<const std::uint32_t> src,
                                         std::span<const std::uint32_t> dst);

}  // namespace mf
