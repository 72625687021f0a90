#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "motionforge/types.hpp"

namespace mf {

/**
 * A permutation of {0, ..., n-1} stored as its image array.
 *
 * Products compose right to left: (a * b)(x) == a(b(x)).
 */
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::size_t n);
  // Throws DomainError unless images is a bijection of {0..n-1}.
  explicit Perm(std::vector<Point> images);

  static Perm identity(std::size_t n) { return Perm(n); }
  // No validation; caller guarantees a bijection.
  static Perm from_images_unchecked(std::vector<Point> images);
  // Cycles in 0-based points.
  static Perm from_cycles(std::size_t n, const std::vector<std::vector<Point>>& cycles);
  static Perm transposition(std::size_t n, Point a, Point b);

  std::size_t degree() const noexcept { return img_.size(); }
  Point operator()(Point x) const noexcept { return img_[x]; }
  Point operator[](Point x) const noexcept { return img_[x]; }
  const std::vector<Point>& images() const noexcept { return img_; }

  bool is_identity() const noexcept;
  bool fixes(Point x) const noexcept { return img_[x] == x; }
  Perm inverse() const;
  std::size_t support_size() const noexcept;
  std::vector<Point> support() const;
  std::vector<std::vector<Point>> cycles() const;  // non-trivial cycles only
  std::uint64_t order() const;

  // The same permutation on a larger domain, fixing the new points.
  Perm extended(std::size_t n) const;

  // Disjoint-cycle notation; "()" for the identity.
  std::string to_string(bool one_based = true) const;

  friend Perm operator*(const Perm& a, const Perm& b);
  friend bool operator==(const Perm& a, const Perm& b) = default;
  friend auto operator<=>(const Perm& a, const Perm& b) = default;

 private:
  std::vector<Point> img_;
};

// a^{-1} b^{-1} a b
Perm commutator(const Perm& a, const Perm& b);
// g^{-1} x g
Perm conjugate(const Perm& x, const Perm& g);

// Parses one line of disjoint-cycle notation with 1-based points, e.g. "(1,2,3)(4,5)".
Perm parse_cycles(std::string_view text, std::size_t n);

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

}  // namespace mf
