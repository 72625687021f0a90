#include "motionforge/coloring.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>
#include <thread>

#include "motionforge/backtrack.hpp"
#include "motionforge/errors.hpp"
#include "motionforge/normal.hpp"

namespace mf {

Coloring subset_coloring(std::size_t n, const Subset& s) {
  Coloring c(n, 0);
  for (Point x : s) {
    if (x >= n) throw DomainError("subset point outside domain");
    c[x] = 1;
  }
  return c;
}

std::size_t color_count(const Coloring& c) { return std::set<std::uint32_t>(c.begin(), c.end()).size(); }

PermGroup setwise_stabilizer(const PermGroup& g, const Subset& s) {
  return coloring_stabilizer_backtrack(g, subset_coloring(g.degree(), s));
}

PermGroup coloring_stabilizer(const PermGroup& g, const Coloring& c) { return coloring_stabilizer_backtrack(g, c); }

bool is_asymmetric(const PermGroup& g, const Coloring& c) {
  return coloring_stabilizer_backtrack(g, c, true).is_trivial();
}

std::size_t max_orbit_length(const PermGroup& g) {
  std::size_t best = 0;
  for (const auto& o : g.orbits()) best = std::max(best, o.size());
  return best;
}

ColoringReport classify_coloring(const PermGroup& g, const Coloring& c) {
  ColoringReport r;
  r.stabilizer = coloring_stabilizer(g, c);
  r.asymmetric = r.stabilizer.order() == 1;
  auto series = derived_series(r.stabilizer);
  r.solvable = series.back().order() == 1;
  if (r.solvable) r.derived_length = series.size() - 1;
  r.orbit_bound = max_orbit_length(r.stabilizer);
  return r;
}

bool for_each_subset(std::size_t n, std::size_t k, const std::function<bool(const Subset&)>& fn) {
  if (k > n) return false;
  Subset s(k);
  for (std::size_t i = 0; i < k; ++i) s[i] = static_cast<Point>(i);
  while (true) {
    if (fn(s)) return true;
    std::size_t i = k;
    while (i > 0 && s[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++s[i - 1];
    for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

bool for_each_rgs_coloring(std::size_t n, std::size_t k, const std::function<bool(const Coloring&)>& fn) {
  if (k == 0 || k > n) return false;
  Coloring c(n, 0);
  // rec(i, used): positions < i assigned, `used` classes opened so far.
  std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t used) -> bool {
    if (i == n) return used == k && fn(c);
    if (k - used > n - i) return false;
    std::size_t top = std::min(used + 1, k);
    for (std::size_t col = 0; col < top; ++col) {
      c[i] = static_cast<std::uint32_t>(col);
      if (rec(i + 1, std::max(used, col + 1))) return true;
    }
    return false;
  };
  c[0] = 0;
  return rec(1, 1);
}

namespace {

// Index of the first candidate satisfying pred, evaluated on `threads` workers.
template <class T, class Pred>
std::optional<std::size_t> first_match(const std::vector<T>& batch, const Pred& pred, unsigned threads) {
  if (threads <= 1 || batch.size() < 2) {
    for (std::size_t i = 0; i < batch.size(); ++i)
      if (pred(batch[i])) return i;
    return std::nullopt;
  }
  std::atomic<std::size_t> best{batch.size()};
  std::vector<std::thread> pool;
  std::exception_ptr err;
  std::mutex err_mu;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < batch.size() && i < best.load(); i += threads)
          if (pred(batch[i])) {
            std::size_t cur = best.load();
            while (i < cur && !best.compare_exchange_weak(cur, i)) {
            }
            return;
          }
      } catch (...) {
        std::lock_guard<std::mutex> lk(err_mu);
        err = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
  if (best.load() == batch.size()) return std::nullopt;
  return best.load();
}

constexpr std::size_t kBatch = 2048;

template <class T>
using Enumerator = std::function<bool(const std::function<bool(const T&)>&)>;

// Enumerates candidates in order and returns the first satisfying pred.
template <class T, class Pred>
std::optional<T> search_batched(const Enumerator<T>& enumerate, const Pred& pred, unsigned threads) {
  std::vector<T> batch;
  std::optional<T> result;
  auto flush = [&]() {
    if (auto i = first_match(batch, pred, threads)) result = batch[*i];
    batch.clear();
    return result.has_value();
  };
  bool stopped = enumerate([&](const T& cand) {
    batch.push_back(cand);
    return batch.size() >= kBatch && flush();
  });
  if (!stopped && !result) flush();
  return result;
}

Enumerator<Subset> subsets_of_size(std::size_t n, std::size_t k) {
  return [n, k](const std::function<bool(const Subset&)>& fn) { return for_each_subset(n, k, fn); };
}

bool pow2_exceeds(std::size_t n, std::uint64_t cap) { return n >= 63 || (1ull << n) > cap; }

}  // namespace

std::optional<Subset> find_asymmetric_subset(const PermGroup& g, const Caps& caps, bool heuristic) {
  const std::size_t n = g.degree();
  auto pred = [&](const Subset& s) { return is_asymmetric(g, subset_coloring(n, s)); };
  if (pow2_exceeds(n, caps.subsets)) {
    if (!heuristic)
      throw CapExceeded("2^" + std::to_string(n) + " subsets exceed the subset cap " + std::to_string(caps.subsets));
    std::mt19937_64 rng(caps.seed);
    for (std::uint64_t t = 0; t < caps.trials; ++t) {
      Subset s;
      for (Point x = 0; x < n; ++x)
        if (rng() & 1) s.push_back(x);
      if (pred(s)) return s;
    }
    throw CapExceeded("no asymmetric subset found within the trial budget");
  }
  // Complements are asymmetric together, so sizes up to n/2 suffice.
  for (std::size_t k = 0; k <= n / 2; ++k)
    if (auto found = search_batched(subsets_of_size(n, k), pred, caps.threads)) return found;
  return std::nullopt;
}

std::optional<Subset> find_solvable_subset(const PermGroup& g, const Caps& caps) {
  const std::size_t n = g.degree();
  if (pow2_exceeds(n, caps.subsets))
    throw CapExceeded("2^" + std::to_string(n) + " subsets exceed the subset cap " + std::to_string(caps.subsets));
  auto pred = [&](const Subset& s) { return is_solvable(setwise_stabilizer(g, s)); };
  for (std::size_t k = 0; k <= n / 2; ++k)
    if (auto found = search_batched(subsets_of_size(n, k), pred, caps.threads)) return found;
  return std::nullopt;
}

namespace {

Enumerator<Coloring> colorings_with_classes(std::size_t n, std::size_t k, std::uint64_t& used, std::uint64_t cap) {
  return [n, k, &used, cap](const std::function<bool(const Coloring&)>& fn) {
    return for_each_rgs_coloring(n, k, [&](const Coloring& c) {
      if (++used > cap) throw CapExceeded("colouring search exceeded cap of " + std::to_string(cap));
      return fn(c);
    });
  };
}

// Properties closed under subgroups only need colourings with exactly k classes.
ColorNumber min_colors(const PermGroup& g, const Caps& caps, const std::function<bool(const Coloring&)>& test) {
  const std::size_t n = g.degree();
  std::uint64_t used = 0;
  for (std::size_t k = 1; k <= n; ++k)
    if (auto found = search_batched(colorings_with_classes(n, k, used, caps.colorings), test, caps.threads))
      return {k, *found};
  throw InvariantViolation("no colouring found with n colours");
}

}  // namespace

std::optional<Coloring> find_coloring(const PermGroup& g, std::size_t max_colors,
                                      const std::function<bool(const PermGroup&)>& pred, const Caps& caps) {
  const std::size_t n = g.degree();
  auto test = [&](const Coloring& c) { return pred(coloring_stabilizer(g, c)); };
  std::uint64_t used = 0;
  for (std::size_t k = 1; k <= std::min(max_colors, n); ++k)
    if (auto found = search_batched(colorings_with_classes(n, k, used, caps.colorings), test, caps.threads))
      return found;
  return std::nullopt;
}

ColorNumber asy_number(const PermGroup& g, const Caps& caps) {
  return min_colors(g, caps, [&](const Coloring& c) { return is_asymmetric(g, c); });
}

ColorNumber solv_number(const PermGroup& g, const Caps& caps) {
  return min_colors(g, caps, [&](const Coloring& c) { return is_solvable(coloring_stabilizer(g, c)); });
}

MotionBoundResult motion_bound_coloring(const PermGroup& g, std::uint32_t d, const Caps& caps) {
  if (d == 0) throw DomainError("number of colours must be positive");
  MotionBoundResult r;
  const std::size_t n = g.degree();
  try {
    r.minimal_degree = minimal_degree(g, caps.elements);
  } catch (const CapExceeded&) {
    r.minimal_degree = minimal_degree_lower_bound(g);
    r.minimal_degree_exact = false;
  }
  Order order = g.order();
  if (r.minimal_degree == kInfinity) {
    r.bound_holds = true;
  } else {
    Order lhs = boost::multiprecision::pow(Order(d), static_cast<unsigned>(r.minimal_degree));
    r.bound_holds = lhs >= order * order;
  }
  std::mt19937_64 rng(caps.seed);
  std::uniform_int_distribution<std::uint32_t> col(0, d - 1);
  Coloring c(n);
  for (r.trials = 0; r.trials < caps.trials;) {
    ++r.trials;
    for (auto& x : c) x = col(rng);
    if (is_asymmetric(g, c)) {
      r.coloring = c;
      break;
    }
  }
  return r;
}

bool colorings_isomorphic(const PermGroup& g, const Coloring& a, const Coloring& b) {
  return coloring_transporter(g, a, b).has_value();
}

}  // namespace mf
