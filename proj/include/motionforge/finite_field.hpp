#pragma once

#include <cstdint>
#include <vector>

namespace mf {

/// GF(q) for a prime power q, elements encoded as 0..q-1 (base-p digits of
/// the polynomial coefficients). Tables are built at construction.
class FiniteField {
 public:
  explicit FiniteField(std::uint32_t q);

  std::uint32_t order() const { return q_; }
  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return k_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_[a * q_ + b]; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add_[a * q_ + neg_[b]]; }
  std::uint32_t neg(std::uint32_t a) const { return neg_[a]; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[a * q_ + b]; }
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t primitive_element() const { return prim_; }
  // Additive basis over the prime field: 1, x, ..., x^{k-1}.
  std::vector<std::uint32_t> prime_basis() const;

 private:
  std::uint32_t q_, p_, k_, prim_ = 1;
  std::vector<std::uint32_t> add_, mul_, neg_, inv_;
};

/// Returns (p, k) with q = p^k, or throws DomainError.
std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint32_t q);

}  // namespace mf
