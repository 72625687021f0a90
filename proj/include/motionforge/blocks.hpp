#pragma once

#include <vector>

#include "motionforge/homomorphism.hpp"
#include "motionforge/perm_group.hpp"

namespace mf {

/// A G-invariant partition of the domain. Blocks are sorted and ordered by
/// their smallest point.
struct BlockSystem {
  std::vector<std::vector<Point>> blocks;
  std::vector<std::uint32_t> block_of;  // point -> block index

  std::size_t block_size() const { return blocks.empty() ? 0 : blocks.front().size(); }
  std::size_t count() const { return blocks.size(); }
  bool is_trivial() const { return blocks.size() <= 1 || block_size() <= 1; }

  static BlockSystem from_labels(const std::vector<std::uint32_t>& labels);
  friend bool operator==(const BlockSystem&, const BlockSystem&) = default;
};

/// Finest block system in which all seed points share a block (union-find closure).
BlockSystem minimal_block_system(const PermGroup& g, const std::vector<Point>& seeds);

/// All non-trivial block systems of a transitive group, by block size then
/// lexicographically on the block containing 0. Throws DomainError if intransitive.
std::vector<BlockSystem> block_systems(const PermGroup& g);

/// Non-trivial system with the smallest blocks, if any.
std::optional<BlockSystem> minimal_blocks(const PermGroup& g);
/// Non-trivial system with the largest blocks (primitive action on blocks), if any.
std::optional<BlockSystem> maximal_blocks(const PermGroup& g);

bool is_primitive(const PermGroup& g);
bool is_block_system(const PermGroup& g, const BlockSystem& b);

/// Action on the blocks; the target is the image group on count() points.
GroupHom action_on_blocks(const PermGroup& g, const BlockSystem& b);

/// Setwise stabilizer of block i, restricted to block i (relabelled in order).
PermGroup block_stabilizer_action(const PermGroup& g, const BlockSystem& b, std::size_t i);

/// For each block i an element mapping block 0 onto block i.
std::vector<Perm> block_transversal(const PermGroup& g, const BlockSystem& b);

}  // namespace mf
