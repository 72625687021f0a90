#include "motionforge/homomorphism.hpp"

#include <mutex>
#include <numeric>
#include <optional>

#include "motionforge/errors.hpp"

namespace mf {

namespace {

Perm join(const Perm& a, const Perm& b) {
  std::size_t na = a.degree();
  std::vector<Point> img(na + b.degree());
  for (std::size_t i = 0; i < na; ++i) img[i] = a(static_cast<Point>(i));
  for (std::size_t i = 0; i < b.degree(); ++i) img[na + i] = static_cast<Point>(na + b(static_cast<Point>(i)));
  return Perm::from_images_unchecked(std::move(img));
}

Perm part(const Perm& d, std::size_t offset, std::size_t len) {
  std::vector<Point> img(len);
  for (std::size_t i = 0; i < len; ++i) {
    Point y = d(static_cast<Point>(offset + i));
    if (y < offset || y >= offset + len) throw InvariantViolation("graph element does not preserve the domains");
    img[i] = static_cast<Point>(y - offset);
  }
  return Perm::from_images_unchecked(std::move(img));
}

}  // namespace

struct GroupHom::Graph {
  PermGroup d;
  std::once_flag src_once, tgt_once;
  std::optional<StabChain> by_source, by_target;
  std::size_t src_prefix = 0, tgt_prefix = 0;
};

GroupHom::GroupHom(PermGroup source, PermGroup target, std::vector<Perm> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_.generators().size())
    throw DomainError("homomorphism needs one image per source generator");
  for (const auto& t : images_)
    if (t.degree() != target_.degree()) throw DomainError("image degree does not match target domain");
  std::vector<Perm> dg;
  for (std::size_t i = 0; i < images_.size(); ++i) dg.push_back(join(source_.generators()[i], images_[i]));
  graph_ = std::make_shared<Graph>();
  graph_->d = PermGroup(source_.degree() + target_.degree(), std::move(dg));
}

GroupHom GroupHom::checked(PermGroup source, PermGroup target, std::vector<Perm> images) {
  GroupHom h(std::move(source), std::move(target), std::move(images));
  if (!h.is_homomorphism()) throw DomainError("generator images do not define a homomorphism");
  return h;
}

GroupHom GroupHom::identity(const PermGroup& g) { return GroupHom(g, g, g.generators()); }

const GroupHom::Graph& GroupHom::graph() const { return *graph_; }

bool GroupHom::is_homomorphism() const {
  for (const auto& t : images_)
    if (!target_.contains(t)) return false;
  return graph_->d.order() == source_.order();
}

bool GroupHom::is_epimorphism() const { return is_homomorphism() && image().order() == target_.order(); }

Perm GroupHom::apply(const Perm& g) const {
  const std::size_t ns = source_.degree(), nt = target_.degree();
  if (g.degree() != ns) throw DomainError("element degree does not match source domain");
  auto& G = *graph_;
  std::call_once(G.src_once, [&] {
    auto b = source_.chain().base();
    G.src_prefix = b.size();
    G.by_source = G.d.chain_with_base(b);
  });
  auto r = G.by_source->sift(join(g, Perm(nt)), 0, G.src_prefix);
  if (r.level < G.src_prefix || !part(r.residue, 0, ns).is_identity())
    throw DomainError("element is not in the source group");
  return part(r.residue, ns, nt).inverse();
}

Perm GroupHom::lift(const Perm& t) const {
  const std::size_t ns = source_.degree(), nt = target_.degree();
  auto& G = *graph_;
  std::call_once(G.tgt_once, [&] {
    auto b = target_.chain().base();
    for (auto& p : b) p += static_cast<Point>(ns);
    G.tgt_prefix = b.size();
    G.by_target = G.d.chain_with_base(b);
  });
  auto r = G.by_target->sift(join(Perm(ns), t), 0, G.tgt_prefix);
  if (r.level < G.tgt_prefix || !part(r.residue, ns, nt).is_identity())
    throw DomainError("element is not in the image");
  return part(r.residue, 0, ns).inverse();
}

PermGroup GroupHom::image() const { return PermGroup(target_.degree(), images_); }

PermGroup GroupHom::image_of(const PermGroup& sub) const {
  std::vector<Perm> gens;
  for (const auto& g : sub.generators()) gens.push_back(apply(g));
  return PermGroup(target_.degree(), std::move(gens));
}

PermGroup GroupHom::kernel() const {
  const std::size_t ns = source_.degree();
  lift(Perm(target_.degree()));  // builds the target-based chain
  auto& G = *graph_;
  const auto& c = *G.by_target;
  std::vector<Perm> gens;
  for (const auto& d : c.level_generators(G.tgt_prefix)) gens.push_back(part(d, 0, ns));
  if (G.tgt_prefix >= c.levels().size()) return PermGroup::trivial(ns);
  std::vector<Point> base;
  for (std::size_t i = G.tgt_prefix; i < c.levels().size(); ++i) base.push_back(c.levels()[i].base);
  // Level generators fix the target domain pointwise, so the base lies in the source.
  for (auto b : base)
    if (b >= ns) return PermGroup(ns, std::move(gens));
  return PermGroup(StabChain::from_bsgs(ns, base, gens));
}

PermGroup GroupHom::preimage(const PermGroup& sub) const {
  auto gens = kernel().generators();
  for (const auto& t : sub.generators()) gens.push_back(lift(t));
  return PermGroup(source_.degree(), std::move(gens));
}

GroupHom GroupHom::restrict_to(const PermGroup& sub) const {
  std::vector<Perm> imgs;
  for (const auto& g : sub.generators()) imgs.push_back(apply(g));
  return GroupHom(sub, target_, std::move(imgs));
}

GroupHom GroupHom::then(const GroupHom& after) const {
  std::vector<Perm> imgs;
  for (const auto& t : images_) imgs.push_back(after.apply(t));
  return GroupHom(source_, after.target_, std::move(imgs));
}

GroupHom GroupHom::onto_image() const { return GroupHom(source_, image(), images_); }

}  // namespace mf
