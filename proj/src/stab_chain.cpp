#include "motionforge/stab_chain.hpp"

#include <algorithm>

#include "motionforge/errors.hpp"

namespace mf {

namespace {

// Product replacement random elements for groups without a chain yet.
class ProductReplacement {
 public:
  ProductReplacement(const std::vector<Perm>& gens, std::size_t n, std::uint64_t seed) : rng_(seed) {
    std::size_t r = std::max<std::size_t>(10, gens.size() + 1);
    for (std::size_t i = 0; i < r; ++i) state_.push_back(gens.empty() ? Perm(n) : gens[i % gens.size()]);
    acc_ = Perm(n);
    for (int i = 0; i < 50; ++i) next();
  }

  Perm next() {
    std::uniform_int_distribution<std::size_t> pick(0, state_.size() - 1);
    std::size_t i = pick(rng_), j = pick(rng_);
    while (j == i) j = pick(rng_);
    bool left = rng_() & 1, inv = rng_() & 1;
    const Perm other = inv ? state_[j].inverse() : state_[j];
    state_[i] = left ? other * state_[i] : state_[i] * other;
    acc_ = acc_ * state_[i];
    return acc_;
  }

 private:
  std::mt19937_64 rng_;
  std::vector<Perm> state_;
  Perm acc_;
};

Point smallest_moved(const Perm& g) {
  for (Point x = 0; x < g.degree(); ++x)
    if (g(x) != x) return x;
  throw InvariantViolation("identity has no moved point");
}

}  // namespace

struct ChainBuilder {
  StabChain& c;

  bool fixes_prefix(const Perm& g, std::size_t k) const {
    for (std::size_t i = 0; i < k; ++i)
      if (g(c.levels_[i].base) != c.levels_[i].base) return false;
    return true;
  }

  void add_level(Point b) {
    StabChain::Level L;
    L.base = b;
    L.pos.assign(c.n_, -1);
    L.pos[b] = 0;
    L.orbit.push_back(b);
    L.inv_transversal.push_back(Perm(c.n_));
    c.levels_.push_back(std::move(L));
  }

  // BFS closing the orbit; points before `start` have already been expanded
  // by every generator except those listed in `fresh`.
  void close_orbit(StabChain::Level& L, const std::vector<std::size_t>& fresh) {
    std::size_t old = L.orbit.size();
    for (std::size_t k = 0; k < old; ++k) {
      for (std::size_t gi : fresh) expand(L, k, gi);
    }
    for (std::size_t k = old; k < L.orbit.size(); ++k) {
      for (std::size_t gi : L.gens) expand(L, k, gi);
    }
  }

  void expand(StabChain::Level& L, std::size_t k, std::size_t gi) {
    Point x = L.orbit[k];
    Point y = c.strong_[gi](x);
    if (L.pos[y] >= 0) return;
    L.pos[y] = static_cast<std::int32_t>(L.orbit.size());
    L.orbit.push_back(y);
    // u_y = s u_x, so u_y^{-1} = u_x^{-1} s^{-1}
    L.inv_transversal.push_back(L.inv_transversal[k] * c.strong_inv_[gi]);
  }

  void add_strong(Perm h, std::size_t j) {
    if (j == c.levels_.size()) add_level(smallest_moved(h));
    c.strong_inv_.push_back(h.inverse());
    c.strong_.push_back(std::move(h));
    std::size_t gi = c.strong_.size() - 1;
    for (std::size_t i = 0; i <= j; ++i) {
      auto& L = c.levels_[i];
      L.gens.push_back(gi);
      close_orbit(L, {gi});
    }
  }

  void init(const std::vector<Perm>& gens, std::span<const Point> prefix) {
    for (Point b : prefix) {
      if (b >= c.n_) throw DomainError("base point outside domain");
      add_level(b);
    }
    for (const Perm& g : gens) {
      if (g.is_identity()) continue;
      if (std::find(c.strong_.begin(), c.strong_.end(), g) != c.strong_.end()) continue;
      std::size_t j = 0;
      while (j < c.levels_.size() && g(c.levels_[j].base) == c.levels_[j].base) ++j;
      add_strong(g, j);
    }
  }

  bool try_add(const Perm& g, std::size_t from) {
    auto r = c.sift(g, from);
    if (r.level == c.levels_.size() && r.residue.is_identity()) return false;
    add_strong(std::move(r.residue), r.level);
    return true;
  }

  void random_phase(const Order* known, const StabChain* sampler, std::uint64_t seed) {
    if (c.strong_.empty()) return;
    ProductReplacement pr(c.strong_, c.n_, seed);
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    int quiet = 0;
    const int quiet_limit = known ? 1 << 30 : 12;
    while (quiet < quiet_limit) {
      if (known && c.order() == *known) return;
      Perm g = sampler ? sampler->random_element(rng) : pr.next();
      if (try_add(g, 0))
        quiet = 0;
      else
        ++quiet;
    }
  }

  void deterministic_phase() {
    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(c.levels_.size()) - 1;
    while (i >= 0) {
      bool added = false;
      const auto& L = c.levels_[static_cast<std::size_t>(i)];
      for (std::size_t k = 0; k < L.orbit.size() && !added; ++k) {
        Perm u = L.inv_transversal[k].inverse();
        for (std::size_t gi : std::vector<std::size_t>(L.gens)) {
          const Perm& s = c.strong_[gi];
          Point y = s(L.orbit[k]);
          Perm h = L.inv_transversal[static_cast<std::size_t>(L.pos[y])] * (s * u);
          if (h.is_identity()) continue;
          auto r = c.sift(std::move(h), static_cast<std::size_t>(i) + 1);
          if (r.level == c.levels_.size() && r.residue.is_identity()) continue;
          std::size_t j = r.level;
          add_strong(std::move(r.residue), j);
          i = static_cast<std::ptrdiff_t>(j);
          added = true;
          break;
        }
      }
      if (!added) --i;
    }
  }
};

StabChain StabChain::build(std::size_t n, const std::vector<Perm>& gens, std::span<const Point> base_prefix,
                           const Order* known_order, const StabChain* sampler, std::uint64_t seed) {
  for (const Perm& g : gens)
    if (g.degree() != n) throw DomainError("generator degree does not match domain size");
  StabChain c(n);
  ChainBuilder b{c};
  b.init(gens, base_prefix);
  b.random_phase(known_order, sampler, seed);
  if (known_order) {
    if (c.order() != *known_order) throw InvariantViolation("stabilizer chain order does not match the known order");
  } else {
    b.deterministic_phase();
  }
  return c;
}

StabChain StabChain::from_bsgs(std::size_t n, std::vector<Point> base, std::vector<Perm> gens) {
  StabChain c(n);
  ChainBuilder b{c};
  for (Point p : base) b.add_level(p);
  for (auto& g : gens) {
    if (g.is_identity()) continue;
    c.strong_inv_.push_back(g.inverse());
    c.strong_.push_back(std::move(g));
  }
  for (std::size_t i = 0; i < c.levels_.size(); ++i) {
    auto& L = c.levels_[i];
    for (std::size_t gi = 0; gi < c.strong_.size(); ++gi)
      if (b.fixes_prefix(c.strong_[gi], i)) L.gens.push_back(gi);
    b.close_orbit(L, {});
    for (std::size_t k = 0; k < L.orbit.size(); ++k)
      for (std::size_t gi : L.gens) b.expand(L, k, gi);
  }
  return c;
}

std::vector<Point> StabChain::base() const {
  std::vector<Point> b;
  for (const auto& L : levels_) b.push_back(L.base);
  return b;
}

std::vector<Perm> StabChain::level_generators(std::size_t i) const {
  std::vector<Perm> out;
  if (i >= levels_.size()) {
    // Generators fixing every base point: only the identity for a complete chain.
    return out;
  }
  for (std::size_t gi : levels_[i].gens) out.push_back(strong_[gi]);
  return out;
}

Order StabChain::order() const {
  Order o = 1;
  for (const auto& L : levels_) o *= L.orbit.size();
  return o;
}

StabChain::SiftResult StabChain::sift(Perm g, std::size_t from, std::size_t to) const {
  std::size_t end = std::min(to, levels_.size());
  for (std::size_t i = from; i < end; ++i) {
    const auto& L = levels_[i];
    Point x = g(L.base);
    if (L.pos[x] < 0) return {i, std::move(g)};
    if (x != L.base) g = L.inv_transversal[static_cast<std::size_t>(L.pos[x])] * g;
  }
  return {end, std::move(g)};
}

bool StabChain::contains(const Perm& g) const {
  if (g.degree() != n_) return false;
  auto r = sift(g);
  return r.level == levels_.size() && r.residue.is_identity();
}

Perm StabChain::transversal(std::size_t level, Point y) const { return inv_transversal(level, y).inverse(); }

const Perm& StabChain::inv_transversal(std::size_t level, Point y) const {
  const auto& L = levels_.at(level);
  if (L.pos[y] < 0) throw InvariantViolation("point not in basic orbit");
  return L.inv_transversal[static_cast<std::size_t>(L.pos[y])];
}

Perm StabChain::random_element(std::mt19937_64& rng) const {
  Perm g(n_);
  for (const auto& L : levels_) {
    std::uniform_int_distribution<std::size_t> d(0, L.orbit.size() - 1);
    std::size_t k = d(rng);
    if (k) g = g * L.inv_transversal[k].inverse();
  }
  return g;
}

void StabChain::for_each_element(std::uint64_t cap, const std::function<void(const Perm&)>& fn) const {
  if (order() > cap) throw CapExceeded("group order " + order().str() + " exceeds element cap " + std::to_string(cap));
  std::vector<std::vector<Perm>> reps(levels_.size());
  for (std::size_t i = 0; i < levels_.size(); ++i)
    for (const Perm& iv : levels_[i].inv_transversal) reps[i].push_back(iv.inverse());
  std::function<void(std::size_t, const Perm&)> rec = [&](std::size_t i, const Perm& p) {
    if (i == levels_.size()) {
      fn(p);
      return;
    }
    for (const Perm& u : reps[i]) rec(i + 1, p * u);
  };
  rec(0, Perm(n_));
}

}  // namespace mf
