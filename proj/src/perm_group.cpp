#include "motionforge/perm_group.hpp"

#include <algorithm>
#include <mutex>
#include <optional>

#include "motionforge/errors.hpp"

namespace mf {

struct PermGroup::Impl {
  std::size_t degree = 0;
  std::vector<Perm> gens;
  std::once_flag once;
  std::optional<StabChain> chain;
};

PermGroup::PermGroup() : impl_(std::make_shared<Impl>()) {}

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> gens) : impl_(std::make_shared<Impl>()) {
  impl_->degree = degree;
  for (auto& g : gens) {
    if (g.degree() != degree) throw DomainError("generator degree does not match domain size");
    impl_->gens.push_back(std::move(g));
  }
}

PermGroup::PermGroup(StabChain chain) : impl_(std::make_shared<Impl>()) {
  impl_->degree = chain.degree();
  impl_->gens = chain.strong_generators();
  std::call_once(impl_->once, [&] { impl_->chain = std::move(chain); });
}

PermGroup::PermGroup(std::vector<Perm> gens, StabChain chain) : impl_(std::make_shared<Impl>()) {
  impl_->degree = chain.degree();
  impl_->gens = std::move(gens);
  std::call_once(impl_->once, [&] { impl_->chain = std::move(chain); });
}

std::size_t PermGroup::degree() const noexcept { return impl_->degree; }
const std::vector<Perm>& PermGroup::generators() const noexcept { return impl_->gens; }

const StabChain& PermGroup::chain() const {
  std::call_once(impl_->once, [&] { impl_->chain = StabChain::build(impl_->degree, impl_->gens); });
  return *impl_->chain;
}

Order PermGroup::order() const { return chain().order(); }
bool PermGroup::is_trivial() const {
  for (const auto& g : impl_->gens)
    if (!g.is_identity()) return false;
  return true;
}
bool PermGroup::contains(const Perm& g) const { return chain().contains(g); }

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  if (degree() != other.degree()) return false;
  for (const auto& g : generators())
    if (!other.contains(g)) return false;
  return true;
}

bool PermGroup::same_group(const PermGroup& other) const {
  return degree() == other.degree() && order() == other.order() && is_subgroup_of(other);
}

std::vector<Perm> PermGroup::elements(std::uint64_t cap) const {
  std::vector<Perm> out;
  for_each_element(cap, [&](const Perm& p) { out.push_back(p); });
  std::sort(out.begin(), out.end());
  return out;
}

void PermGroup::for_each_element(std::uint64_t cap, const std::function<void(const Perm&)>& fn) const {
  chain().for_each_element(cap, fn);
}

Perm PermGroup::random_element(std::mt19937_64& rng) const { return chain().random_element(rng); }

std::vector<Point> PermGroup::orbit(Point x) const {
  std::vector<bool> seen(degree(), false);
  std::vector<Point> orb{x};
  seen[x] = true;
  for (std::size_t k = 0; k < orb.size(); ++k)
    for (const auto& g : generators()) {
      Point y = g(orb[k]);
      if (!seen[y]) {
        seen[y] = true;
        orb.push_back(y);
      }
    }
  std::sort(orb.begin(), orb.end());
  return orb;
}

std::vector<std::vector<Point>> PermGroup::orbits() const {
  std::vector<bool> seen(degree(), false);
  std::vector<std::vector<Point>> out;
  for (Point x = 0; x < degree(); ++x) {
    if (seen[x]) continue;
    auto o = orbit(x);
    for (Point y : o) seen[y] = true;
    out.push_back(std::move(o));
  }
  return out;
}

bool PermGroup::is_transitive() const { return degree() <= 1 || orbit(0).size() == degree(); }

StabChain PermGroup::chain_with_base(std::span<const Point> prefix) const {
  const StabChain& c = chain();
  bool matches = prefix.size() <= c.levels().size();
  for (std::size_t i = 0; matches && i < prefix.size(); ++i) matches = c.levels()[i].base == prefix[i];
  if (matches) return c;
  Order o = c.order();
  return StabChain::build(degree(), c.strong_generators(), prefix, &o, &c);
}

PermGroup PermGroup::pointwise_stabilizer(std::span<const Point> points) const {
  if (points.empty()) return *this;
  std::vector<Point> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  for (Point p : pts)
    if (p >= degree()) throw DomainError("point outside domain");
  StabChain c = chain_with_base(pts);
  std::size_t k = pts.size();
  if (k >= c.levels().size()) return trivial(degree());
  auto full = c.base();
  std::vector<Point> base(full.begin() + static_cast<std::ptrdiff_t>(k), full.end());
  return PermGroup(StabChain::from_bsgs(degree(), std::move(base), c.level_generators(k)));
}

Perm PermGroup::restrict_perm(const Perm& g, std::span<const Point> points) {
  std::vector<std::int64_t> index(g.degree(), -1);
  for (std::size_t i = 0; i < points.size(); ++i) index[points[i]] = static_cast<std::int64_t>(i);
  std::vector<Point> img(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::int64_t j = index[g(points[i])];
    if (j < 0) throw DomainError("set is not invariant under the permutation");
    img[i] = static_cast<Point>(j);
  }
  return Perm::from_images_unchecked(std::move(img));
}

PermGroup PermGroup::restricted_to(std::span<const Point> points) const {
  std::vector<Perm> gens;
  for (const auto& g : generators()) gens.push_back(restrict_perm(g, points));
  return PermGroup(points.size(), std::move(gens));
}

PermGroup group_from_generators(std::size_t n, const std::vector<std::vector<Point>>& images) {
  if (n == 0) throw DomainError("empty domain");
  std::vector<Perm> gens;
  for (const auto& img : images) {
    if (img.size() != n) throw DomainError("generator has wrong length");
    gens.emplace_back(img);
  }
  return PermGroup(n, std::move(gens));
}

namespace {

template <class Fn>
void scan_nonidentity(const PermGroup& g, std::uint64_t cap, Fn fn) {
  g.for_each_element(cap, [&](const Perm& p) {
    if (!p.is_identity()) fn(p);
  });
}

}  // namespace

std::size_t minimal_degree(const PermGroup& g, std::uint64_t cap) {
  if (g.is_trivial()) return kInfinity;
  std::size_t best = kInfinity;
  for (const auto& s : g.generators()) best = std::min(best, s.support_size());
  if (best == 2) return 2;
  scan_nonidentity(g, cap, [&](const Perm& p) { best = std::min(best, p.support_size()); });
  return best;
}

Perm minimal_degree_witness(const PermGroup& g, std::uint64_t cap) {
  if (g.is_trivial()) throw DomainError("trivial group has no non-identity element");
  std::optional<Perm> best;
  scan_nonidentity(g, cap, [&](const Perm& p) {
    if (!best || p.support_size() < best->support_size()) best = p;
  });
  return *best;
}

std::vector<std::uint32_t> orbital_colors(const PermGroup& g, std::uint32_t* rank) {
  const std::size_t n = g.degree();
  constexpr std::uint32_t kNone = UINT32_MAX;
  std::vector<std::uint32_t> raw(n * n, kNone);
  std::uint32_t next = 0;
  std::vector<std::size_t> queue;
  for (std::size_t start = 0; start < n * n; ++start) {
    if (raw[start] != kNone) continue;
    raw[start] = next;
    queue.assign(1, start);
    for (std::size_t k = 0; k < queue.size(); ++k) {
      std::size_t x = queue[k] / n, y = queue[k] % n;
      for (const auto& s : g.generators()) {
        std::size_t idx = static_cast<std::size_t>(s(static_cast<Point>(x))) * n + s(static_cast<Point>(y));
        if (raw[idx] == kNone) {
          raw[idx] = next;
          queue.push_back(idx);
        }
      }
    }
    ++next;
  }
  // Renumber: diagonal classes first in order of x, then the rest row-major.
  std::vector<std::uint32_t> relabel(next, kNone);
  std::uint32_t c = 0;
  for (std::size_t x = 0; x < n; ++x) {
    auto& r = relabel[raw[x * n + x]];
    if (r == kNone) r = c++;
  }
  for (std::size_t i = 0; i < n * n; ++i) {
    auto& r = relabel[raw[i]];
    if (r == kNone) r = c++;
  }
  for (auto& v : raw) v = relabel[v];
  if (rank) *rank = c;
  return raw;
}

std::size_t minimal_degree_lower_bound(const PermGroup& g) {
  if (g.is_trivial()) return kInfinity;
  const std::size_t n = g.degree();
  auto col = orbital_colors(g);
  std::size_t best = kInfinity;
  for (const auto& orb : g.orbits()) {
    for (std::size_t a = 0; a < orb.size(); ++a)
      for (std::size_t b = a + 1; b < orb.size(); ++b) {
        Point x = orb[a], y = orb[b];
        std::size_t d = 0;
        for (std::size_t z = 0; z < n; ++z) d += col[z * n + x] != col[z * n + y];
        best = std::min(best, d);
      }
  }
  return best;
}

}  // namespace mf
