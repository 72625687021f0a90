#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include "motionforge/perm.hpp"
#include "motionforge/types.hpp"

namespace mf {

/**
 * @brief Base and strong generating set with explicit transversals.
 *
 * Level i stores base point b_i, the strong generators fixing b_0..b_{i-1},
 * the basic orbit of b_i and, for every orbit point y, the inverse of a
 * coset representative u_y with u_y(b_i) == y.
 */
class StabChain {
 public:
  struct Level {
    Point base = 0;
    std::vector<std::size_t> gens;        // indices into strong_generators()
    std::vector<Point> orbit;             // orbit[0] == base
    std::vector<std::int32_t> pos;        // point -> index in orbit, or -1
    std::vector<Perm> inv_transversal;    // inverse coset representatives
  };

  struct SiftResult {
    std::size_t level;  // first level where sifting stopped, or levels().size()
    Perm residue;
  };

  StabChain() = default;
  explicit StabChain(std::size_t n) : n_(n) {}

  /**
   * Schreier-Sims. The base begins with @p base_prefix (redundant points are
   * kept as trivial levels) and is extended by the smallest moved point of
   * each new strong generator. With @p known_order the randomized phase stops
   * once the order is reached; otherwise every Schreier generator is sifted.
   * @p sampler, when given, supplies uniform random elements of the group.
   */
  static StabChain build(std::size_t n, const std::vector<Perm>& gens,
                         std::span<const Point> base_prefix = {},
                         const Order* known_order = nullptr,
                         const StabChain* sampler = nullptr,
                         std::uint64_t seed = 0x5eed);

  // Trusts that (base, gens) is a base and strong generating set.
  static StabChain from_bsgs(std::size_t n, std::vector<Point> base, std::vector<Perm> gens);

  std::size_t degree() const noexcept { return n_; }
  const std::vector<Level>& levels() const noexcept { return levels_; }
  const std::vector<Perm>& strong_generators() const noexcept { return strong_; }
  std::vector<Point> base() const;
  std::vector<Perm> level_generators(std::size_t i) const;

  Order order() const;
  bool contains(const Perm& g) const;
  SiftResult sift(Perm g, std::size_t from = 0, std::size_t to = SIZE_MAX) const;

  // u_y for level i and orbit point y.
  Perm transversal(std::size_t level, Point y) const;
  const Perm& inv_transversal(std::size_t level, Point y) const;

  Perm random_element(std::mt19937_64& rng) const;
  // Throws CapExceeded if the order exceeds cap.
  void for_each_element(std::uint64_t cap, const std::function<void(const Perm&)>& fn) const;

 private:
  friend struct ChainBuilder;
  std::size_t n_ = 0;
  std::vector<Perm> strong_;
  std::vector<Perm> strong_inv_;
  std::vector<Level> levels_;
};

}  // namespace mf
