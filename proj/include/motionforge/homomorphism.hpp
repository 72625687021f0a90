#pragma once

#include <memory>
#include <vector>

#include "motionforge/perm_group.hpp"

namespace mf {

/**
 * @brief A map between permutation groups given on the source generators.
 *
 * Evaluation, kernels and preimages use the graph subgroup
 * D = <(s, phi(s))> acting on the disjoint union of both domains.
 */
class GroupHom {
 public:
  GroupHom() = default;
  // Unchecked: images[i] is the image of source.generators()[i].
  GroupHom(PermGroup source, PermGroup target, std::vector<Perm> images);
  // Throws DomainError unless the data defines a homomorphism into target.
  static GroupHom checked(PermGroup source, PermGroup target, std::vector<Perm> images);
  static GroupHom identity(const PermGroup& g);

  const PermGroup& source() const { return source_; }
  const PermGroup& target() const { return target_; }
  const std::vector<Perm>& images() const { return images_; }

  // Graph criterion: |D| == |source| and every image lies in target.
  bool is_homomorphism() const;
  bool is_epimorphism() const;

  Perm apply(const Perm& g) const;
  PermGroup image() const;
  PermGroup image_of(const PermGroup& sub) const;
  PermGroup kernel() const;
  PermGroup preimage(const PermGroup& sub) const;
  Perm lift(const Perm& t) const;

  // The same map with source replaced by a subgroup of it.
  GroupHom restrict_to(const PermGroup& sub) const;
  // after o this.
  GroupHom then(const GroupHom& after) const;
  // Same map with the target replaced by the image.
  GroupHom onto_image() const;

 private:
  struct Graph;
  const Graph& graph() const;

  PermGroup source_;
  PermGroup target_;
  std::vector<Perm> images_;
  std::shared_ptr<Graph> graph_;
};

}  // namespace mf
