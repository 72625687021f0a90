// Brute-force reference implementations. They work from element lists
// obtained by closure under the generators and never touch stabilizer
// chains, so they serve as independent oracles for the library.
#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <unordered_set>
#include <vector>

#include "motionforge/perm.hpp"
#include "motionforge/perm_group.hpp"

namespace oracle {

using mf::Perm;
using mf::Point;

inline std::vector<Perm> closure(std::size_t n, const std::vector<Perm>& gens) {
  std::unordered_set<Perm, mf::PermHash> seen{Perm::identity(n)};
  std::vector<Perm> out{Perm::identity(n)};
  for (std::size_t k = 0; k < out.size(); ++k)
    for (const auto& s : gens) {
      Perm p = s * out[k];
      if (seen.insert(p).second) out.push_back(p);
    }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Perm> elements(const mf::PermGroup& g) { return closure(g.degree(), g.generators()); }

inline std::vector<Perm> sorted_elements(const mf::PermGroup& g, std::uint64_t cap = 1000000) {
  auto e = g.elements(cap);
  std::sort(e.begin(), e.end());
  return e;
}

inline bool preserves(const Perm& p, const std::vector<std::uint32_t>& coloring) {
  for (Point x = 0; x < coloring.size(); ++x)
    if (coloring[p(x)] != coloring[x]) return false;
  return true;
}

inline std::vector<std::uint32_t> indicator(std::size_t n, const std::vector<Point>& s) {
  std::vector<std::uint32_t> c(n, 0);
  for (Point x : s) c[x] = 1;
  return c;
}

inline std::vector<Perm> filter_stabilizer(const std::vector<Perm>& elems, const std::vector<std::uint32_t>& coloring) {
  std::vector<Perm> out;
  for (const auto& p : elems)
    if (preserves(p, coloring)) out.push_back(p);
  return out;
}

inline std::size_t minimal_degree(const std::vector<Perm>& elems) {
  std::size_t best = SIZE_MAX;
  for (const auto& p : elems)
    if (!p.is_identity()) best = std::min(best, p.support_size());
  return best;
}

// Does some subset have a trivial setwise stabilizer? Scans all 2^n masks.
inline bool has_asymmetric_subset(const std::vector<Perm>& elems, std::size_t n) {
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    std::vector<std::uint32_t> c(n);
    for (std::size_t x = 0; x < n; ++x) c[x] = (mask >> x) & 1;
    if (filter_stabilizer(elems, c).size() == 1) return true;
  }
  return false;
}

// Fewest colours of an asymmetric colouring, by scanning all k^n colourings.
inline std::size_t asy(const std::vector<Perm>& elems, std::size_t n) {
  for (std::size_t k = 1;; ++k) {
    std::vector<std::uint32_t> c(n, 0);
    for (;;) {
      if (filter_stabilizer(elems, c).size() == 1) return k;
      std::size_t i = 0;
      while (i < n && ++c[i] == k) c[i++] = 0;
      if (i == n) break;
    }
  }
}

// Subgroup generated by a set of elements (closure).
inline std::vector<Perm> generated(std::size_t n, const std::vector<Perm>& gens) { return closure(n, gens); }

inline std::vector<Perm> derived(std::size_t n, const std::vector<Perm>& elems) {
  std::set<Perm> comms;
  for (const auto& a : elems)
    for (const auto& b : elems) comms.insert(a.inverse() * b.inverse() * a * b);
  return generated(n, {comms.begin(), comms.end()});
}

inline std::size_t derived_length_or_max(std::size_t n, std::vector<Perm> elems) {
  std::size_t len = 0;
  while (elems.size() > 1) {
    auto d = derived(n, elems);
    if (d.size() == elems.size()) return SIZE_MAX;  // perfect, not solvable
    elems = std::move(d);
    ++len;
  }
  return len;
}

inline std::vector<std::vector<Point>> orbits(std::size_t n, const std::vector<Perm>& elems) {
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Point>> out;
  for (Point x = 0; x < n; ++x) {
    if (seen[x]) continue;
    std::set<Point> o;
    for (const auto& p : elems) o.insert(p(x));
    for (Point y : o) seen[y] = true;
    out.emplace_back(o.begin(), o.end());
  }
  return out;
}

inline std::vector<Point> random_subset(std::size_t n, std::mt19937_64& rng) {
  std::vector<Point> s;
  for (Point x = 0; x < n; ++x)
    if (rng() & 1) s.push_back(x);
  return s;
}

}  // namespace oracle
