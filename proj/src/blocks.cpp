#include "motionforge/blocks.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>

#include "motionforge/errors.hpp"

namespace mf {

namespace {

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

}  // namespace

BlockSystem BlockSystem::from_labels(const std::vector<std::uint32_t>& labels) {
  std::map<std::uint32_t, std::vector<Point>> groups;
  for (Point x = 0; x < labels.size(); ++x) groups[labels[x]].push_back(x);
  BlockSystem b;
  for (auto& [_, pts] : groups) b.blocks.push_back(std::move(pts));
  std::sort(b.blocks.begin(), b.blocks.end());
  b.block_of.assign(labels.size(), 0);
  for (std::uint32_t i = 0; i < b.blocks.size(); ++i)
    for (Point x : b.blocks[i]) b.block_of[x] = i;
  return b;
}

BlockSystem minimal_block_system(const PermGroup& g, const std::vector<Point>& seeds) {
  const std::size_t n = g.degree();
  UnionFind uf(n);
  std::vector<std::pair<Point, Point>> work;
  for (std::size_t i = 1; i < seeds.size(); ++i)
    if (uf.unite(seeds[0], seeds[i])) work.emplace_back(seeds[0], seeds[i]);
  while (!work.empty()) {
    auto [a, b] = work.back();
    work.pop_back();
    for (const auto& s : g.generators()) {
      Point x = s(a), y = s(b);
      if (uf.find(x) != uf.find(y)) {
        uf.unite(x, y);
        work.emplace_back(x, y);
      }
    }
  }
  std::vector<std::uint32_t> labels(n);
  for (Point x = 0; x < n; ++x) labels[x] = uf.find(x);
  return BlockSystem::from_labels(labels);
}

std::vector<BlockSystem> block_systems(const PermGroup& g) {
  if (!g.is_transitive()) throw DomainError("block systems require a transitive group");
  const std::size_t n = g.degree();
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<BlockSystem> found;
  std::vector<std::vector<Point>> queue;
  auto consider = [&](const std::vector<Point>& seeds) {
    BlockSystem b = minimal_block_system(g, seeds);
    if (b.count() == 1) return;
    if (seen.insert(b.block_of).second) {
      queue.push_back(b.blocks[0]);
      found.push_back(std::move(b));
    }
  };
  for (Point y = 1; y < n; ++y) consider({0, y});
  for (std::size_t k = 0; k < queue.size(); ++k) {
    std::vector<Point> base = queue[k];
    std::vector<bool> in(n, false);
    for (Point x : base) in[x] = true;
    for (Point y = 1; y < n; ++y) {
      if (in[y]) continue;
      auto seeds = base;
      seeds.push_back(y);
      consider(seeds);
    }
  }
  std::sort(found.begin(), found.end(), [](const BlockSystem& a, const BlockSystem& b) {
    if (a.block_size() != b.block_size()) return a.block_size() < b.block_size();
    return a.blocks[0] < b.blocks[0];
  });
  return found;
}

std::optional<BlockSystem> minimal_blocks(const PermGroup& g) {
  auto all = block_systems(g);
  if (all.empty()) return std::nullopt;
  return all.front();
}

std::optional<BlockSystem> maximal_blocks(const PermGroup& g) {
  auto all = block_systems(g);
  if (all.empty()) return std::nullopt;
  std::size_t best = all.back().block_size();
  for (auto& b : all)
    if (b.block_size() == best) return b;
  return std::nullopt;
}

bool is_primitive(const PermGroup& g) {
  if (!g.is_transitive()) return false;
  for (Point y = 1; y < g.degree(); ++y)
    if (minimal_block_system(g, {0, y}).count() > 1) return false;
  return true;
}

bool is_block_system(const PermGroup& g, const BlockSystem& b) {
  for (const auto& s : g.generators())
    for (const auto& blk : b.blocks) {
      auto target = b.block_of[s(blk[0])];
      for (Point x : blk)
        if (b.block_of[s(x)] != target) return false;
    }
  return true;
}

GroupHom action_on_blocks(const PermGroup& g, const BlockSystem& b) {
  if (!is_block_system(g, b)) throw DomainError("partition is not a block system of the group");
  std::vector<Perm> imgs;
  for (const auto& s : g.generators()) {
    std::vector<Point> img(b.count());
    for (std::size_t i = 0; i < b.count(); ++i) img[i] = b.block_of[s(b.blocks[i][0])];
    imgs.push_back(Perm::from_images_unchecked(std::move(img)));
  }
  PermGroup target(b.count(), imgs);
  return GroupHom(g, target, std::move(imgs));
}

PermGroup block_stabilizer_action(const PermGroup& g, const BlockSystem& b, std::size_t i) {
  GroupHom act = action_on_blocks(g, b);
  Point bi = static_cast<Point>(i);
  PermGroup stab = act.preimage(act.target().pointwise_stabilizer(std::span<const Point>(&bi, 1)));
  return stab.restricted_to(b.blocks[i]);
}

std::vector<Perm> block_transversal(const PermGroup& g, const BlockSystem& b) {
  std::vector<std::optional<Perm>> rep(b.count());
  rep[0] = Perm(g.degree());
  std::vector<std::size_t> queue{0};
  for (std::size_t k = 0; k < queue.size(); ++k) {
    std::size_t i = queue[k];
    for (const auto& s : g.generators()) {
      std::size_t j = b.block_of[s(b.blocks[i][0])];
      if (!rep[j]) {
        rep[j] = s * *rep[i];
        queue.push_back(j);
      }
    }
  }
  std::vector<Perm> out;
  for (auto& r : rep) {
    if (!r) throw DomainError("blocks are not permuted transitively");
    out.push_back(*r);
  }
  return out;
}

}  // namespace mf
