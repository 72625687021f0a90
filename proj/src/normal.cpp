#include "motionforge/normal.hpp"

#include <map>
#include <unordered_map>

#include "motionforge/errors.hpp"

namespace mf {

namespace {

// Grows a subgroup one element at a time, keeping only generators that enlarge it.
class Closure {
 public:
  explicit Closure(std::size_t n) : n_(n), group_(PermGroup::trivial(n)) {}

  bool add(const Perm& x) {
    if (x.is_identity() || group_.contains(x)) return false;
    auto strong = group_.chain().strong_generators();
    strong.push_back(x);
    gens_.push_back(x);
    group_ = PermGroup(gens_, StabChain::build(n_, strong));
    return true;
  }

  const PermGroup& group() const { return group_; }
  const std::vector<Perm>& gens() const { return gens_; }

 private:
  std::size_t n_;
  std::vector<Perm> gens_;
  PermGroup group_;
};

PermGroup close_under(const PermGroup& g, Closure& c) {
  for (std::size_t k = 0; k < c.gens().size(); ++k)
    for (const auto& s : g.generators()) c.add(conjugate(c.gens()[k], s));
  return c.group();
}

}  // namespace

PermGroup normal_closure(const PermGroup& g, const std::vector<Perm>& elems) {
  Closure c(g.degree());
  for (const auto& e : elems) c.add(e);
  return close_under(g, c);
}

bool is_normal(const PermGroup& g, const PermGroup& n) {
  for (const auto& x : n.generators())
    for (const auto& s : g.generators())
      if (!n.contains(conjugate(x, s))) return false;
  return true;
}

PermGroup derived_subgroup(const PermGroup& g) {
  Closure c(g.degree());
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) c.add(commutator(gens[i], gens[j]));
  return close_under(g, c);
}

std::vector<PermGroup> derived_series(const PermGroup& g) {
  std::vector<PermGroup> series{g};
  while (true) {
    const PermGroup& last = series.back();
    if (last.is_trivial()) break;
    PermGroup next = derived_subgroup(last);
    if (next.order() == last.order()) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_solvable(const PermGroup& g) { return derived_series(g).back().is_trivial() || g.order() == 1; }

std::size_t derived_length(const PermGroup& g) {
  auto s = derived_series(g);
  if (s.back().order() != 1) throw DomainError("group is not solvable");
  return s.size() - 1;
}

PermGroup perfect_core(const PermGroup& g) { return derived_series(g).back(); }

bool is_perfect(const PermGroup& g) { return derived_subgroup(g).order() == g.order(); }

std::vector<Perm> conjugacy_class_representatives(const PermGroup& g, std::uint64_t cap) {
  auto elems = g.elements(cap);
  std::unordered_map<Perm, std::size_t, PermHash> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], i);
  std::vector<bool> done(elems.size(), false);
  std::vector<Perm> reps;
  std::vector<std::size_t> queue;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (done[i]) continue;
    reps.push_back(elems[i]);
    done[i] = true;
    queue.assign(1, i);
    for (std::size_t k = 0; k < queue.size(); ++k)
      for (const auto& s : g.generators()) {
        std::size_t j = index.at(conjugate(elems[queue[k]], s));
        if (!done[j]) {
          done[j] = true;
          queue.push_back(j);
        }
      }
  }
  return reps;
}

namespace {

// Lexicographically least element of the left coset y K with respect to the
// base images of K's chain.
Perm canonical_coset_rep(Perm y, const StabChain& k) {
  for (std::size_t i = 0; i < k.levels().size(); ++i) {
    const auto& L = k.levels()[i];
    Point best = y(L.base), arg = L.base;
    for (Point x : L.orbit)
      if (y(x) < best) {
        best = y(x);
        arg = x;
      }
    if (arg != L.base) y = y * k.transversal(i, arg);
  }
  return y;
}

}  // namespace

GroupHom quotient_action(const PermGroup& g, const PermGroup& k, std::uint64_t cap) {
  Order idx = g.order() / k.order();
  if (idx > cap) throw CapExceeded("quotient of order " + idx.str() + " exceeds cap " + std::to_string(cap));
  const StabChain& kc = k.chain();
  std::map<std::vector<Point>, std::uint32_t> id;
  std::vector<Perm> reps{canonical_coset_rep(Perm(g.degree()), kc)};
  id.emplace(reps[0].images(), 0);
  std::vector<std::vector<Point>> act(g.generators().size());
  for (std::size_t r = 0; r < reps.size(); ++r) {
    for (std::size_t si = 0; si < g.generators().size(); ++si) {
      Perm c = canonical_coset_rep(g.generators()[si] * reps[r], kc);
      auto [it, inserted] = id.emplace(c.images(), static_cast<std::uint32_t>(reps.size()));
      if (inserted) reps.push_back(std::move(c));
      act[si].push_back(it->second);
    }
  }
  std::vector<Perm> imgs;
  for (auto& a : act) imgs.push_back(Perm::from_images_unchecked(std::move(a)));
  PermGroup target(reps.size(), imgs);
  return GroupHom(g, target, std::move(imgs));
}

bool is_nonabelian_simple(const PermGroup& g, std::uint64_t cap) {
  if (g.order() == 1 || !is_perfect(g)) return false;
  for (const auto& r : conjugacy_class_representatives(g, cap)) {
    if (r.is_identity()) continue;
    if (normal_closure(g, {r}).order() != g.order()) return false;
  }
  return true;
}

PermGroup maximal_normal_subgroup(const PermGroup& g, std::uint64_t cap) {
  if (g.order() == 1) throw DomainError("trivial group has no proper normal subgroup");
  auto reps = conjugacy_class_representatives(g, cap);
  PermGroup k = PermGroup::trivial(g.degree());
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& r : reps) {
      if (r.is_identity() || k.contains(r)) continue;
      auto gens = k.generators();
      gens.push_back(r);
      PermGroup n = normal_closure(g, gens);
      if (n.order() < g.order()) {
        k = n;
        changed = true;
      }
    }
  }
  return k;
}

std::optional<GroupHom> simple_quotient_epi(const PermGroup& g, std::uint64_t cap) {
  PermGroup p = perfect_core(g);
  if (p.order() == 1) return std::nullopt;
  PermGroup k = maximal_normal_subgroup(p, cap);
  if (k.order() == 1) return GroupHom::identity(p);
  // Prefer an orbit whose action has kernel k over the coset action.
  const Order idx = p.order() / k.order();
  for (const auto& o : p.orbits()) {
    PermGroup r = p.restricted_to(o);
    if (r.order() != idx) continue;
    std::vector<Perm> imgs;
    for (const auto& s : p.generators()) imgs.push_back(PermGroup::restrict_perm(s, o));
    GroupHom q(p, r, std::move(imgs));
    if (q.kernel().same_group(k)) return q;
  }
  GroupHom q = quotient_action(p, k, cap);
  if (!is_nonabelian_simple(q.target(), cap))
    throw InvariantViolation("quotient by a maximal normal subgroup of a perfect group is not simple");
  return q;
}

std::size_t subdirect_find_factor(const std::vector<GroupHom>& projections, const PermGroup& k) {
  for (std::size_t i = 0; i < projections.size(); ++i) {
    if (projections[i].kernel().is_subgroup_of(k)) return i;
  }
  throw InvariantViolation("no factor kernel is contained in the given normal subgroup");
}

}  // namespace mf
