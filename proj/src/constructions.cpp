#include "motionforge/constructions.hpp"

#include <algorithm>
#include <random>

#include "motionforge/blocks.hpp"
#include "motionforge/errors.hpp"
#include "motionforge/normal.hpp"

namespace mf {

namespace {

Subset sorted_unique(Subset s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

}  // namespace

Subset affine_solvable_subset(std::uint32_t p, std::uint32_t d) {
  AffineSpace A(p, d);
  Subset s;
  if (d == 1) return s;
  if (d == 2) return sorted_unique({A.index(A.unit(0)), A.index(A.unit(1))});
  if (d <= 6) {
    s = {A.index(A.unit(0)), A.index(A.unit(1)), A.index(A.unit(2)), A.index(A.add(A.unit(1), A.unit(2)))};
    for (std::uint32_t i = 3; i <= d; ++i) s.push_back(A.index(A.unit(i)));
    return sorted_unique(s);
  }
  for (std::uint32_t i = 0; i <= d; ++i) s.push_back(A.index(A.scale(i % 2 ? 1 : p - 1, A.unit(i))));
  for (const auto& q : affine_quadruples(p, d)) s.push_back(q.back());
  return sorted_unique(s);
}

std::vector<Subset> affine_quadruples(std::uint32_t p, std::uint32_t d) {
  std::vector<Subset> out;
  if (d < 7) return out;
  AffineSpace A(p, d);
  std::uint32_t k = (d - 1) / 2;
  for (std::uint32_t i = 1; i <= k; ++i) {
    auto a = A.unit(2 * i - 1), b = A.unit(2 * i), c = A.unit(2 * i + 1);
    // Last entry is the sum e_{2i-1} + e_{2i} + e_{2i+1}.
    out.push_back({A.index(a), A.index(A.scale(p - 1, b)), A.index(c), A.index(A.add(A.add(a, b), c))});
  }
  return out;
}

Subset projective_solvable_subset(std::uint32_t q, std::uint32_t d) {
  ProjectiveSpace P(q, d);
  if (d == 2) return {P.index(P.unit(1))};
  auto sum = [&](const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r(d);
    for (std::uint32_t i = 0; i < d; ++i) r[i] = P.field().add(a[i], b[i]);
    return r;
  };
  Subset s;
  for (std::uint32_t i = 1; i <= d; ++i) s.push_back(P.index(P.unit(i)));
  std::vector<std::uint32_t> f(d, 1);
  if (d == 3) {
    s.push_back(P.index(f));
    return sorted_unique(s);
  }
  for (std::uint32_t i = 1; i < d; ++i) s.push_back(P.index(sum(P.unit(i), P.unit(i + 1))));
  s.push_back(P.index(f));
  return sorted_unique(s);
}

std::vector<Subset> projective_expected_triples(std::uint32_t q, std::uint32_t d) {
  std::vector<Subset> out;
  if (d < 4) return out;
  ProjectiveSpace P(q, d);
  auto pair_sum = [&](std::uint32_t i, std::uint32_t j) {
    auto v = P.unit(i);
    v[j - 1] = 1;
    return P.index(v);
  };
  for (std::uint32_t i = 1; i < d; ++i)
    out.push_back(sorted_unique({P.index(P.unit(i)), P.index(P.unit(i + 1)), pair_sum(i, i + 1)}));
  if (d == 4) out.push_back(sorted_unique({pair_sum(1, 2), pair_sum(3, 4), P.index(std::vector<std::uint32_t>(4, 1))}));
  std::sort(out.begin(), out.end());
  return out;
}

Subset mathieu_solvable_subset(const std::string& name) {
  std::size_t take;
  if (name == "M11" || name == "M22")
    take = 3;
  else if (name == "M12" || name == "M23")
    take = 4;
  else if (name == "M24")
    take = 10;
  else
    throw DomainError("unknown Mathieu group " + name);
  Subset s(take);
  for (std::size_t i = 0; i < take; ++i) s[i] = static_cast<Point>(i);
  return s;
}

Subset abelian_asymmetric_subset(const PermGroup& g) {
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (gens[i] * gens[j] != gens[j] * gens[i]) throw DomainError("group is not abelian");
  Subset s;
  for (const auto& o : g.orbits()) s.push_back(o.front());
  return s;
}

Subset derived_length_reduction(const PermGroup& g) {
  auto series = derived_series(g);
  if (series.back().order() != 1) throw DomainError("group is not solvable");
  std::size_t k = series.size() - 1;
  if (k == 0) throw DomainError("group is trivial");
  return abelian_asymmetric_subset(series[k - 1]);
}

// ---------------------------------------------------------------- 5-colourings

namespace {

// Random subsets first, then exhaustive search when the group is small.
std::optional<Subset> try_asymmetric(const PermGroup& g, const Caps& caps) {
  const std::size_t n = g.degree();
  std::mt19937_64 rng(caps.seed);
  for (std::uint64_t t = 0; t < caps.trials; ++t) {
    Subset s;
    for (Point x = 0; x < n; ++x)
      if (rng() & 1) s.push_back(x);
    if (is_asymmetric(g, subset_coloring(n, s))) return s;
  }
  if (n > 20) return std::nullopt;
  try {
    return find_asymmetric_subset(g, caps, false);
  } catch (const CapExceeded&) {
    return std::nullopt;
  }
}

// Non-uniform asymmetric colouring of a primitive solvable group with at most
// five colours (some possibly unused).
Coloring primitive_five(const PermGroup& g, const Caps& caps) {
  const std::size_t n = g.degree();
  if (n >= 10) {
    if (auto s = try_asymmetric(g, caps)) return subset_coloring(n, *s);
  }
  // Distinct colours on a non-redundant base, colour 0 elsewhere.
  Coloring c(n, 0);
  std::uint32_t next = 1;
  for (const auto& L : g.chain().levels()) {
    if (L.orbit.size() <= 1) continue;
    if (next >= 5) throw CapExceeded("base too long for a five-colouring");
    c[L.base] = next++;
  }
  return c;
}

Coloring five_rec(const PermGroup& g, const Caps& caps) {
  const std::size_t n = g.degree();
  Coloring c(n, 0);
  if (g.is_trivial() || n <= 1) return c;
  auto orbits = g.orbits();
  if (orbits.size() > 1) {
    for (const auto& o : orbits) {
      auto sub = five_rec(g.restricted_to(o), caps);
      for (std::size_t i = 0; i < o.size(); ++i) c[o[i]] = sub[i];
    }
    return c;
  }
  auto blocks = minimal_blocks(g);
  if (!blocks) return primitive_five(g, caps);
  const BlockSystem& B = *blocks;
  Coloring delta = primitive_five(block_stabilizer_action(g, B, 0), caps);
  GroupHom act = action_on_blocks(g, B);
  Coloring top = five_rec(act.image(), caps);
  auto sigma = block_transversal(g, B);
  std::vector<std::int64_t> local(n, -1);
  for (std::size_t l = 0; l < B.blocks[0].size(); ++l) local[B.blocks[0][l]] = static_cast<std::int64_t>(l);
  for (std::size_t i = 0; i < B.count(); ++i) {
    Perm inv = sigma[i].inverse();
    for (Point x : B.blocks[i]) {
      auto l = local[inv(x)];
      c[x] = (delta[static_cast<std::size_t>(l)] + top[i]) % 5;
    }
  }
  return c;
}

}  // namespace

Coloring solvable_asymmetric_5coloring(const PermGroup& g, const Caps& caps) {
  if (!is_solvable(g)) throw DomainError("group is not solvable");
  Coloring c = five_rec(g, caps);
  if (!is_asymmetric(g, c)) throw InvariantViolation("five-colouring is not asymmetric");
  if (*std::max_element(c.begin(), c.end()) >= 5) throw InvariantViolation("five-colouring uses too many colours");
  return c;
}

std::vector<std::size_t> asymmetric_size_catalog(const PermGroup& g, const Caps& caps) {
  const std::size_t n = g.degree();
  if (n >= 63 || (1ull << n) > caps.subsets)
    throw CapExceeded("2^" + std::to_string(n) + " subsets exceed the subset cap");
  std::vector<bool> ok(n + 1, false);
  for (std::size_t j = 0; j <= n / 2; ++j) {
    bool found = for_each_subset(n, j, [&](const Subset& s) { return is_asymmetric(g, subset_coloring(n, s)); });
    ok[j] = ok[n - j] = found;
  }
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j <= n; ++j)
    if (ok[j]) out.push_back(j);
  return out;
}

// ---------------------------------------------------------------- bounded orbits

const char* to_string(OrbitCase c) {
  switch (c) {
    case OrbitCase::Abelian: return "abelian";
    case OrbitCase::Asymmetric: return "asymmetric";
    case OrbitCase::BlocksSizes: return "blocks-sizes";
    case OrbitCase::BlocksFive: return "blocks-five-sizes";
    case OrbitCase::BlocksLift: return "blocks-lift";
    case OrbitCase::Exhaustive: return "exhaustive";
    case OrbitCase::Trivial: return "trivial";
  }
  return "?";
}

namespace {

bool fits(std::size_t n, const Caps& caps) { return n < 63 && (1ull << n) <= caps.subsets; }

std::size_t orbit_bound_of(const PermGroup& g, const Subset& s) { return max_orbit_length(setwise_stabilizer(g, s)); }

// Subset minimizing the longest stabilizer orbit (first by size, then lex).
Subset exhaustive_min(const PermGroup& g) {
  const std::size_t n = g.degree();
  Subset best;
  std::size_t best_bound = orbit_bound_of(g, best);
  for (std::size_t k = 1; k <= n / 2 && best_bound > 1; ++k)
    for_each_subset(n, k, [&](const Subset& s) {
      std::size_t b = orbit_bound_of(g, s);
      if (b < best_bound) {
        best_bound = b;
        best = s;
      }
      return best_bound == 1;
    });
  return best;
}

// Case: five distinct asymmetric sizes inside a minimal block.
std::optional<Subset> blocks_five(const PermGroup& g, const BlockSystem& B, const Caps& caps) {
  PermGroup g1 = block_stabilizer_action(g, B, 0);
  if (!fits(g1.degree(), caps)) return std::nullopt;
  auto sizes = asymmetric_size_catalog(g1, caps);
  if (sizes.size() < 5) return std::nullopt;
  std::vector<Subset> local(5);
  for (std::size_t c = 0; c < 5; ++c)
    for_each_subset(g1.degree(), sizes[c], [&](const Subset& s) {
      if (!is_asymmetric(g1, subset_coloring(g1.degree(), s))) return false;
      local[c] = s;
      return true;
    });
  Coloring top = solvable_asymmetric_5coloring(action_on_blocks(g, B).image(), caps);
  auto sigma = block_transversal(g, B);
  Subset out;
  for (std::size_t i = 0; i < B.count(); ++i)
    for (Point l : local[top[i]]) out.push_back(sigma[i](B.blocks[0][l]));
  return sorted_unique(out);
}

// Case: blocks of size 2 or 3, lift an asymmetric set of blocks.
std::optional<Subset> blocks_lift(const PermGroup& g, const BlockSystem& B, const Caps& caps) {
  if (B.block_size() > 3) return std::nullopt;
  PermGroup top = action_on_blocks(g, B).image();
  auto chosen = try_asymmetric(top, caps);
  if (!chosen) return std::nullopt;
  Subset out;
  for (Point b : *chosen) out.insert(out.end(), B.blocks[b].begin(), B.blocks[b].end());
  return sorted_unique(out);
}

// Case: block sizes encode a five-colouring of the blocks (blocks of size >= 4).
std::optional<Subset> blocks_sizes(const PermGroup& g, const Caps& caps) {
  for (const auto& B : block_systems(g)) {
    if (B.block_size() < 4) continue;
    Coloring top = solvable_asymmetric_5coloring(action_on_blocks(g, B).image(), caps);
    Subset out;
    for (std::size_t i = 0; i < B.count(); ++i)
      for (std::uint32_t j = 0; j < top[i]; ++j) out.push_back(B.blocks[i][j]);
    return sorted_unique(out);
  }
  return std::nullopt;
}

std::pair<Subset, OrbitCase> bounded_transitive(const PermGroup& g, const Caps& caps) {
  const std::size_t n = g.degree();
  if (g.is_trivial()) return {{}, OrbitCase::Trivial};
  if (derived_subgroup(g).order() == 1) return {{0}, OrbitCase::Abelian};
  auto blocks = minimal_blocks(g);
  if (!blocks) {
    if (auto s = try_asymmetric(g, caps)) return {*s, OrbitCase::Asymmetric};
    if (fits(n, caps)) return {exhaustive_min(g), OrbitCase::Exhaustive};
    return {{}, OrbitCase::Exhaustive};
  }
  if (auto s = blocks_five(g, *blocks, caps)) return {*s, OrbitCase::BlocksFive};
  if (auto s = blocks_lift(g, *blocks, caps)) return {*s, OrbitCase::BlocksLift};
  if (auto s = blocks_sizes(g, caps)) return {*s, OrbitCase::BlocksSizes};
  if (fits(n, caps)) return {exhaustive_min(g), OrbitCase::Exhaustive};
  return {{}, OrbitCase::Exhaustive};
}

}  // namespace

BoundedOrbitResult bounded_orbit_subset(const PermGroup& g, const Caps& caps) {
  if (!is_solvable(g)) throw DomainError("group is not solvable");
  BoundedOrbitResult r;
  for (const auto& o : g.orbits()) {
    auto [local, kind] = bounded_transitive(g.restricted_to(o), caps);
    for (Point x : local) r.subset.push_back(o[x]);
    r.cases.push_back(kind);
  }
  r.subset = sorted_unique(r.subset);
  PermGroup stab = setwise_stabilizer(g, r.subset);
  r.bound = max_orbit_length(stab);
  if (derived_length(stab) >= 2 * std::max<std::size_t>(r.bound, 1))
    throw InvariantViolation("derived length of the stabilizer exceeds twice the orbit bound");
  return r;
}

}  // namespace mf
