#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "motionforge/perm_group.hpp"
#include "motionforge/types.hpp"

namespace mf {

/// Colour of each point, 0-based.
using Coloring = std::vector<std::uint32_t>;

Coloring subset_coloring(std::size_t n, const Subset& s);
std::size_t color_count(const Coloring& c);  // number of non-empty classes

PermGroup setwise_stabilizer(const PermGroup& g, const Subset& s);
/// Intersection of the setwise stabilizers of all colour classes.
PermGroup coloring_stabilizer(const PermGroup& g, const Coloring& c);
bool is_asymmetric(const PermGroup& g, const Coloring& c);

struct ColoringReport {
  PermGroup stabilizer;
  bool asymmetric = false;
  bool solvable = false;
  std::size_t orbit_bound = 0;                  // longest orbit of the stabilizer
  std::optional<std::size_t> derived_length;   // set when solvable
};

ColoringReport classify_coloring(const PermGroup& g, const Coloring& c);

/// Longest orbit length of g (1 for the trivial group on a non-empty domain).
std::size_t max_orbit_length(const PermGroup& g);

/**
 * First asymmetric subset by size, then lexicographically. Returns nullopt
 * when exhaustive search proves none exists. Throws CapExceeded when
 * 2^n > caps.subsets, unless heuristic is set, in which case caps.trials
 * random subsets are tried and CapExceeded is thrown if none works.
 */
std::optional<Subset> find_asymmetric_subset(const PermGroup& g, const Caps& caps = {}, bool heuristic = false);

/// First subset (by size, then lex) whose setwise stabilizer is solvable.
std::optional<Subset> find_solvable_subset(const PermGroup& g, const Caps& caps = {});

struct ColorNumber {
  std::size_t k = 0;
  Coloring witness;
};

/// Fewest colours admitting an asymmetric colouring (exhaustive over
/// colour-permutation classes, capped by caps.colorings).
ColorNumber asy_number(const PermGroup& g, const Caps& caps = {});
/// Fewest colours admitting a colouring with solvable stabilizer.
ColorNumber solv_number(const PermGroup& g, const Caps& caps = {});

/// First colouring with at most max_colors colours (colour-permutation
/// canonical order) whose stabilizer satisfies pred.
std::optional<Coloring> find_coloring(const PermGroup& g, std::size_t max_colors,
                                      const std::function<bool(const PermGroup&)>& pred, const Caps& caps = {});

struct MotionBoundResult {
  bool bound_holds = false;        // d^(mu/2) >= |G|
  std::size_t minimal_degree = 0;  // mu used for the bound
  bool minimal_degree_exact = true;
  std::optional<Coloring> coloring;  // verified asymmetric
  std::uint64_t trials = 0;
};

/// Random d-colourings (seeded) until one is verified asymmetric or
/// caps.trials is exhausted.
MotionBoundResult motion_bound_coloring(const PermGroup& g, std::uint32_t d, const Caps& caps = {});

bool colorings_isomorphic(const PermGroup& g, const Coloring& a, const Coloring& b);

/// Calls fn on every colouring of n points with exactly k non-empty classes
/// in restricted-growth form, lexicographically; stops when fn returns true.
bool for_each_rgs_coloring(std::size_t n, std::size_t k, const std::function<bool(const Coloring&)>& fn);

/// Calls fn on every k-subset of {0..n-1} in lexicographic order; stops when fn returns true.
bool for_each_subset(std::size_t n, std::size_t k, const std::function<bool(const Subset&)>& fn);

}  // namespace mf
