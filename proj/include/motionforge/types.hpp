#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace mf {

using Point = std::uint32_t;

// Group orders exceed 64 bits for the larger affine groups.
using Order = boost::multiprecision::cpp_int;

// Subsets are sorted vectors of distinct points.
using Subset = std::vector<Point>;

// Enumeration and search limits shared by the modules.
struct Caps {
  std::uint64_t elements = 1000000;        // element enumeration
  std::uint64_t subsets = 1ull << 24;      // subset searches
  std::uint64_t colorings = 100000000;     // coloring enumeration
  std::uint64_t trials = 1000;             // randomized trials
  std::uint64_t seed = 0x5eed;             // PRNG seed
  unsigned threads = 1;
};

}  // namespace mf
