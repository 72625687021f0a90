#include "motionforge/finite_field.hpp"

#include <string>

#include "motionforge/errors.hpp"

namespace mf {

std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint32_t q) {
  if (q < 2) throw DomainError("field order must be at least 2");
  std::uint32_t p = 2;
  while (q % p) ++p;
  std::uint32_t k = 0, r = q;
  while (r % p == 0) {
    r /= p;
    ++k;
  }
  if (r != 1) throw DomainError(std::to_string(q) + " is not a prime power");
  return {p, k};
}

namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients, low degree first

Poly digits(std::uint32_t a, std::uint32_t p, std::uint32_t k) {
  Poly d(k);
  for (std::uint32_t i = 0; i < k; ++i) {
    d[i] = a % p;
    a /= p;
  }
  return d;
}

std::uint32_t encode(const Poly& d, std::uint32_t p) {
  std::uint32_t a = 0;
  for (std::size_t i = d.size(); i-- > 0;) a = a * p + d[i];
  return a;
}

// Product of a and b modulo the monic polynomial m of degree k.
Poly mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
  std::size_t k = m.size() - 1;
  Poly r(2 * k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  for (std::size_t i = 2 * k; i-- > k;) {
    std::uint32_t c = r[i];
    if (!c) continue;
    for (std::size_t j = 0; j <= k; ++j) r[i - k + j] = (r[i - k + j] + (p - c) * m[j] % p) % p;
  }
  r.resize(k);
  return r;
}

bool irreducible(const Poly& m, std::uint32_t p) {
  // Trial division by every monic polynomial of degree 1..k/2.
  std::size_t k = m.size() - 1;
  for (std::size_t d = 1; d <= k / 2; ++d) {
    std::uint32_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint32_t c = 0; c < count; ++c) {
      Poly f = digits(c, p, static_cast<std::uint32_t>(d));
      f.push_back(1);
      // polynomial long division remainder of m by f
      Poly r = m;
      for (std::size_t i = k + 1; i-- > d;) {
        std::uint32_t lead = r[i];
        if (!lead) continue;
        for (std::size_t j = 0; j <= d; ++j) r[i - d + j] = (r[i - d + j] + (p - lead) * f[j] % p) % p;
      }
      bool zero = true;
      for (std::size_t i = 0; i < d; ++i) zero &= r[i] == 0;
      if (zero) return false;
    }
  }
  return true;
}

}  // namespace

FiniteField::FiniteField(std::uint32_t q) : q_(q) {
  auto [p, k] = prime_power(q);
  p_ = p;
  k_ = k;
  Poly m;
  if (k > 1) {
    for (std::uint32_t c = 0;; ++c) {
      m = digits(c, p, k);
      m.push_back(1);
      if (m[0] != 0 && irreducible(m, p)) break;
    }
  }
  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  for (std::uint32_t a = 0; a < q; ++a) {
    Poly da = digits(a, p, k);
    Poly na(k);
    for (std::uint32_t i = 0; i < k; ++i) na[i] = (p - da[i]) % p;
    neg_[a] = encode(na, p);
    for (std::uint32_t b = 0; b < q; ++b) {
      Poly db = digits(b, p, k), s(k);
      for (std::uint32_t i = 0; i < k; ++i) s[i] = (da[i] + db[i]) % p;
      add_[a * q + b] = encode(s, p);
      if (k == 1)
        mul_[a * q + b] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
      else
        mul_[a * q + b] = encode(mulmod(da, db, m, p), p);
    }
  }
  inv_.assign(q, 0);
  for (std::uint32_t a = 1; a < q; ++a)
    for (std::uint32_t b = 1; b < q; ++b)
      if (mul(a, b) == 1) inv_[a] = b;
  for (std::uint32_t g = 1; g < q; ++g) {
    std::uint32_t x = g, ord = 1;
    while (x != 1) {
      x = mul(x, g);
      ++ord;
    }
    if (ord == q - 1) {
      prim_ = g;
      break;
    }
  }
}

std::uint32_t FiniteField::inv(std::uint32_t a) const {
  if (a == 0) throw DomainError("zero has no inverse");
  return inv_[a];
}

std::vector<std::uint32_t> FiniteField::prime_basis() const {
  std::vector<std::uint32_t> b;
  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    b.push_back(x);
    x *= p_;
  }
  return b;
}

}  // namespace mf
