#include "motionforge/reduce_image.hpp"

#include <optional>
#include <random>

#include "motionforge/blocks.hpp"
#include "motionforge/coloring.hpp"
#include "motionforge/errors.hpp"
#include "motionforge/normal.hpp"

namespace mf {

Order reduced_image_order(const GroupHom& phi, const Subset& delta) {
  return phi.image_of(setwise_stabilizer(phi.source(), delta)).order();
}

namespace {

constexpr std::size_t kBruteOrbitLimit = 24;

struct Found {
  Subset subset;
  std::string path;
};

Subset map_points(const Subset& local, const std::vector<Point>& points) {
  Subset out;
  for (Point x : local) out.push_back(points[x]);
  std::sort(out.begin(), out.end());
  return out;
}

// Exhaustive scan inside each orbit, smallest subsets first.
std::optional<Subset> brute(const GroupHom& phi, const Caps& caps) {
  const Order t = phi.target().order();
  for (const auto& o : phi.source().orbits()) {
    if (o.size() > kBruteOrbitLimit || (1ull << o.size()) > caps.subsets) continue;
    std::optional<Subset> hit;
    for (std::size_t k = 1; k <= o.size() / 2 && !hit; ++k)
      for_each_subset(o.size(), k, [&](const Subset& s) {
        Subset d = map_points(s, o);
        if (reduced_image_order(phi, d) >= t) return false;
        hit = std::move(d);
        return true;
      });
    if (hit) return hit;
  }
  return std::nullopt;
}

std::optional<Found> structured(const GroupHom& phi, const Caps& caps, ReduceStrategy strategy);

Found ladder(const GroupHom& phi, const Caps& caps, ReduceStrategy strategy) {
  if (strategy == ReduceStrategy::BruteFirst)
    if (auto s = brute(phi, caps)) return {*s, "brute"};
  if (auto f = structured(phi, caps, strategy)) return *f;
  if (strategy == ReduceStrategy::StructuredFirst)
    if (auto s = brute(phi, caps)) return {*s, "fallback"};
  throw CapExceeded("image reduction exhausted its strategies within the caps");
}

std::optional<Found> primitive_case(const GroupHom& phi, const Caps& caps) {
  const PermGroup& g = phi.source();
  const Order t = phi.target().order();
  if (g.order() == t) return Found{{0}, "almost-simple"};
  // A subset with solvable stabilizer has solvable image, hence a proper one.
  try {
    if (auto s = find_solvable_subset(g, caps)) return Found{*s, "primitive-solvable"};
  } catch (const CapExceeded&) {
  }
  std::mt19937_64 rng(caps.seed);
  for (std::uint64_t i = 0; i < caps.trials; ++i) {
    Subset s;
    for (Point x = 0; x < g.degree(); ++x)
      if (rng() & 1) s.push_back(x);
    if (is_solvable(setwise_stabilizer(g, s))) return Found{s, "primitive-solvable"};
  }
  return std::nullopt;
}

std::optional<Found> intransitive_case(const GroupHom& phi, const Caps& caps, ReduceStrategy strategy) {
  const PermGroup& g = phi.source();
  auto orbits = g.orbits();
  std::vector<GroupHom> proj;
  for (const auto& o : orbits) {
    PermGroup h = g.restricted_to(o);
    proj.emplace_back(g, h, h.generators());
  }
  std::size_t i = subdirect_find_factor(proj, phi.kernel());
  GroupHom bar(proj[i].target(), phi.target(), phi.images());
  Found inner = ladder(bar, caps, strategy);
  return Found{map_points(inner.subset, orbits[i]), "intransitive"};
}

std::optional<Found> imprimitive_case(const GroupHom& phi, const BlockSystem& b, const Caps& caps,
                                      ReduceStrategy strategy) {
  const PermGroup& g = phi.source();
  GroupHom act = action_on_blocks(g, b);
  PermGroup top = act.target();
  PermGroup n = act.kernel();
  PermGroup k = phi.kernel();

  if (n.is_subgroup_of(k)) {
    // phi factors through the primitive action on the blocks.
    auto w = primitive_case(GroupHom(top, phi.target(), phi.images()), caps);
    if (!w) return std::nullopt;
    Subset out;
    for (Point bi : w->subset) out.insert(out.end(), b.blocks[bi].begin(), b.blocks[bi].end());
    std::sort(out.begin(), out.end());
    return Found{out, "blocks-case1"};
  }

  // phi(N) is the whole simple group; it factors through some block restriction.
  std::vector<GroupHom> rho;
  for (const auto& blk : b.blocks) {
    PermGroup ni = n.restricted_to(blk);
    rho.emplace_back(n, ni, ni.generators());
  }
  std::size_t i = subdirect_find_factor(rho, k);
  std::vector<Perm> imgs;
  for (const auto& x : n.generators()) imgs.push_back(phi.apply(x));
  Found local = ladder(GroupHom(rho[i].target(), phi.target(), imgs), caps, strategy);
  const std::size_t t = local.subset.size();

  Coloring gamma(top.degree(), 0);
  if (!is_solvable(top)) {
    std::optional<Coloring> c;
    try {
      c = find_coloring(top, 5, [](const PermGroup& s) { return is_solvable(s); }, caps);
    } catch (const CapExceeded&) {
    }
    if (!c) return std::nullopt;
    gamma = *c;
  }
  // Colour c is coded by the size c, skipping t so block i stays unique.
  Subset out = map_points(local.subset, b.blocks[i]);
  for (std::size_t j = 0; j < b.count(); ++j) {
    if (j == i) continue;
    std::size_t size = gamma[j] < t ? gamma[j] : gamma[j] + 1;
    if (size > b.block_size()) return std::nullopt;
    out.insert(out.end(), b.blocks[j].begin(), b.blocks[j].begin() + static_cast<std::ptrdiff_t>(size));
  }
  std::sort(out.begin(), out.end());
  return Found{out, "blocks-case2a"};
}

std::optional<Found> structured(const GroupHom& phi, const Caps& caps, ReduceStrategy strategy) {
  const PermGroup& g = phi.source();
  std::optional<Found> f;
  if (!g.is_transitive()) {
    f = intransitive_case(phi, caps, strategy);
  } else if (auto b = maximal_blocks(g)) {
    f = imprimitive_case(phi, *b, caps, strategy);
  } else {
    f = primitive_case(phi, caps);
  }
  if (f && reduced_image_order(phi, f->subset) >= phi.target().order()) return std::nullopt;
  return f;
}

void require_simple_epi(const GroupHom& phi, const Caps& caps) {
  if (!phi.is_epimorphism()) throw DomainError("map is not an epimorphism onto its target");
  if (!is_nonabelian_simple(phi.target(), caps.elements)) throw DomainError("target is not nonabelian simple");
}

ReductionWitness finish(const GroupHom& phi, const Order& before, Found f) {
  ReductionWitness w;
  w.image_before = before;
  w.image_after = reduced_image_order(phi, f.subset);
  if (w.image_after >= w.image_before) throw InvariantViolation("reduction did not shrink the image");
  w.subset = std::move(f.subset);
  w.path = std::move(f.path);
  return w;
}

}  // namespace

ReductionWitness reduce_simple_image(const GroupHom& phi, const Caps& caps, ReduceStrategy strategy) {
  require_simple_epi(phi, caps);
  return finish(phi, phi.target().order(), ladder(phi, caps, strategy));
}

ReductionWitness primitive_reduce(const GroupHom& phi, const Caps& caps) {
  if (!is_primitive(phi.source())) throw DomainError("group is not primitive");
  require_simple_epi(phi, caps);
  auto f = primitive_case(phi, caps);
  if (!f) {
    auto s = brute(phi, caps);
    if (!s) throw CapExceeded("primitive reduction exhausted its strategies within the caps");
    f = Found{*s, "fallback"};
  }
  return finish(phi, phi.target().order(), std::move(*f));
}

ReductionWitness reduce_nonsolvable_image(const GroupHom& phi, const Caps& caps, ReduceStrategy strategy) {
  if (!phi.is_homomorphism()) throw DomainError("map is not a homomorphism");
  PermGroup h = phi.image();
  auto psi = simple_quotient_epi(h, caps.elements);
  if (!psi) throw DomainError("image is solvable");
  // xi = psi o phi on the perfect core of G, which maps onto the core of h.
  PermGroup core = perfect_core(phi.source());
  std::vector<Perm> imgs;
  for (const auto& x : core.generators()) imgs.push_back(psi->apply(phi.apply(x)));
  GroupHom xi(core, psi->target(), std::move(imgs));
  Found f = ladder(xi, caps, strategy);
  GroupHom onto = phi.onto_image();
  return finish(onto, h.order(), std::move(f));
}

}  // namespace mf
