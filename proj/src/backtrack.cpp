#include "motionforge/backtrack.hpp"

#include <algorithm>
#include <map>

#include "motionforge/errors.hpp"

namespace mf {

namespace {

// Base prefix: all points outside the largest colour class, smaller classes first.
std::vector<Point> class_prefix(std::span<const std::uint32_t> colors) {
  std::map<std::uint32_t, std::vector<Point>> classes;
  for (Point x = 0; x < colors.size(); ++x) classes[colors[x]].push_back(x);
  std::vector<std::pair<std::uint32_t, std::vector<Point>>> order(classes.begin(), classes.end());
  std::stable_sort(order.begin(), order.end(),
                   [](const auto& a, const auto& b) { return a.second.size() < b.second.size(); });
  std::vector<Point> prefix;
  for (std::size_t i = 0; i + 1 < order.size(); ++i)
    prefix.insert(prefix.end(), order[i].second.begin(), order[i].second.end());
  return prefix;
}

class Search {
 public:
  Search(const StabChain& c, std::size_t m, std::span<const std::uint32_t> src, std::span<const std::uint32_t> dst)
      : c_(c), m_(m), src_(src), dst_(dst) {
    const std::size_t n = c.degree();
    const auto& levels = c.levels();
    // fixed_[i]: points fixed by every generator of level i (all points below the chain).
    std::vector<std::vector<bool>> fixed(levels.size() + 1, std::vector<bool>(n, true));
    for (std::size_t i = 0; i < levels.size(); ++i)
      for (std::size_t gi : levels[i].gens) {
        const Perm& s = c.strong_generators()[gi];
        for (Point x = 0; x < n; ++x)
          if (s(x) != x) fixed[i][x] = false;
      }
    newly_fixed_.resize(levels.size() + 1);
    for (Point x = 0; x < n; ++x)
      if (fixed[0][x]) root_fixed_.push_back(x);
    for (std::size_t i = 1; i <= levels.size(); ++i)
      for (Point x = 0; x < n; ++x)
        if (fixed[i][x] && !fixed[i - 1][x]) newly_fixed_[i].push_back(x);
  }

  bool root_consistent() const {
    for (Point x : root_fixed_)
      if (dst_[x] != src_[x]) return false;
    return true;
  }

  // Candidate q = p * u_y at level j; returns false if pruned.
  bool extend(std::size_t j, const Perm& p, Point y, Perm& q) const {
    if (dst_[p(y)] != src_[c_.levels()[j].base]) return false;
    q = (y == c_.levels()[j].base) ? p : p * c_.transversal(j, y);
    for (Point x : newly_fixed_[j + 1])
      if (dst_[q(x)] != src_[x]) return false;
    return true;
  }

  // Any element of p * G^{(j)} respecting the colours, if one exists.
  std::optional<Perm> dfs(std::size_t j, const Perm& p) const {
    if (j == m_) return p;
    Perm q;
    for (Point y : c_.levels()[j].orbit) {
      if (!extend(j, p, y, q)) continue;
      if (auto r = dfs(j + 1, q)) return r;
    }
    return std::nullopt;
  }

 private:
  const StabChain& c_;
  std::size_t m_;
  std::span<const std::uint32_t> src_, dst_;
  std::vector<Point> root_fixed_;
  std::vector<std::vector<Point>> newly_fixed_;
};

std::vector<bool> orbit_mask(std::size_t n, Point b, const std::vector<Perm>& gens) {
  std::vector<bool> in(n, false);
  std::vector<Point> orb{b};
  in[b] = true;
  for (std::size_t k = 0; k < orb.size(); ++k)
    for (const auto& s : gens) {
      Point y = s(orb[k]);
      if (!in[y]) {
        in[y] = true;
        orb.push_back(y);
      }
    }
  return in;
}

}  // namespace

PermGroup coloring_stabilizer_backtrack(const PermGroup& g, std::span<const std::uint32_t> colors, bool first_only) {
  const std::size_t n = g.degree();
  if (colors.size() != n) throw DomainError("colouring length does not match the domain");
  if (g.is_trivial()) return PermGroup::trivial(n);
  auto prefix = class_prefix(colors);
  if (prefix.empty()) return g;
  StabChain c = g.chain_with_base(prefix);
  const std::size_t m = prefix.size();

  // Everything below the prefix fixes all non-largest classes pointwise.
  std::vector<Perm> found = c.level_generators(m);
  if (first_only && !found.empty()) return PermGroup(n, {found.front()});

  Search search(c, m, colors, colors);
  for (std::size_t i = m; i-- > 0;) {
    const auto& L = c.levels()[i];
    auto in_orbit = orbit_mask(n, L.base, found);
    std::vector<Point> candidates = L.orbit;
    std::sort(candidates.begin(), candidates.end());
    for (Point y : candidates) {
      if (in_orbit[y]) continue;
      Perm q;
      if (!search.extend(i, Perm(n), y, q)) continue;
      if (auto r = search.dfs(i + 1, q)) {
        if (first_only) return PermGroup(n, {*r});
        found.push_back(std::move(*r));
        in_orbit = orbit_mask(n, L.base, found);
      }
    }
  }
  if (found.empty()) return PermGroup::trivial(n);
  return PermGroup(StabChain::from_bsgs(n, c.base(), std::move(found)));
}

std::optional<Perm> coloring_transporter(const PermGroup& g, std::span<const std::uint32_t> src,
                                         std::span<const std::uint32_t> dst) {
  const std::size_t n = g.degree();
  if (src.size() != n || dst.size() != n) throw DomainError("colouring length does not match the domain");
  std::map<std::uint32_t, std::size_t> a, b;
  for (auto x : src) ++a[x];
  for (auto x : dst) ++b[x];
  if (a != b) return std::nullopt;
  auto prefix = class_prefix(src);
  StabChain c = g.chain_with_base(prefix);
  Search search(c, prefix.size(), src, dst);
  if (!search.root_consistent()) return std::nullopt;
  return search.dfs(0, Perm(n));
}

}  // namespace mf
