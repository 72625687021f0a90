#include "motionforge/digraph_aut.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>

#include "motionforge/errors.hpp"

namespace mf {

ColoredDigraph::ColoredDigraph(std::size_t n) : n_(n), vcol_(n, 0), out_(n), in_(n) {}

void ColoredDigraph::set_vertex_color(Point v, std::uint32_t c) {
  if (v >= n_) throw DomainError("vertex out of range");
  vcol_[v] = c;
}

namespace {

void upsert(std::vector<std::pair<Point, std::uint32_t>>& list, Point w, std::uint32_t c) {
  auto it = std::lower_bound(list.begin(), list.end(), std::make_pair(w, 0u),
                             [](const auto& a, const auto& b) { return a.first < b.first; });
  if (it != list.end() && it->first == w)
    it->second = c;
  else
    list.insert(it, {w, c});
}

}  // namespace

void ColoredDigraph::add_arc(Point from, Point to, std::uint32_t color) {
  if (from >= n_ || to >= n_) throw DomainError("vertex out of range");
  if (from == to) throw DomainError("loops are given as vertex colours");
  if (color == 0) throw DomainError("arc colour 0 is reserved for the default");
  upsert(out_[from], to, color);
  upsert(in_[to], from, color);
}

void ColoredDigraph::add_edge(Point a, Point b, std::uint32_t color) {
  add_arc(a, b, color);
  add_arc(b, a, color);
}

ColoredDigraph ColoredDigraph::from_matrix(std::size_t n, const std::vector<std::uint32_t>& color) {
  if (color.size() != n * n) throw DomainError("colour matrix must be n x n");
  std::map<std::uint32_t, std::size_t> freq;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (x != y) ++freq[color[x * n + y]];
  std::uint32_t dflt = 0;
  std::size_t best = 0;
  for (auto [c, f] : freq)
    if (f > best) best = f, dflt = c;
  ColoredDigraph g(n);
  for (std::size_t x = 0; x < n; ++x) {
    g.set_vertex_color(static_cast<Point>(x), color[x * n + x]);
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      std::uint32_t c = color[x * n + y];
      if (c != dflt) g.add_arc(static_cast<Point>(x), static_cast<Point>(y), c + 1);
    }
  }
  return g;
}

std::uint32_t ColoredDigraph::arc_color(Point from, Point to) const {
  const auto& l = out_[from];
  auto it = std::lower_bound(l.begin(), l.end(), std::make_pair(to, 0u),
                             [](const auto& a, const auto& b) { return a.first < b.first; });
  return (it != l.end() && it->first == to) ? it->second : 0;
}

bool ColoredDigraph::is_automorphism(const Perm& p) const {
  if (p.degree() != n_) return false;
  for (Point v = 0; v < n_; ++v) {
    Point pv = p(v);
    if (vcol_[v] != vcol_[pv] || out_[v].size() != out_[pv].size()) return false;
    for (auto [w, c] : out_[v])
      if (arc_color(pv, p(w)) != c) return false;
  }
  return true;
}

namespace {

// Ordered partition with contiguous cells in lab.
struct Partition {
  std::vector<Point> lab;
  std::vector<std::uint32_t> start_of;  // vertex -> start of its cell
  std::vector<std::uint32_t> end_at;    // cell start -> cell end
  std::size_t cells = 0;

  bool discrete() const { return cells == lab.size(); }
  // Ends of all cells in order; equal for partitions related by a relabelling.
  std::vector<std::uint32_t> shape() const {
    std::vector<std::uint32_t> s;
    for (std::uint32_t a = 0; a < lab.size(); a = end_at[a]) s.push_back(end_at[a]);
    return s;
  }
  // Start of the first smallest non-singleton cell.
  std::uint32_t target_cell() const {
    std::uint32_t best = 0, size = UINT32_MAX;
    for (std::uint32_t a = 0; a < lab.size(); a = end_at[a]) {
      std::uint32_t sz = end_at[a] - a;
      if (sz > 1 && sz < size) best = a, size = sz;
    }
    return best;
  }
};

class Refiner {
 public:
  explicit Refiner(const ColoredDigraph& g) : g_(g), sig_(g.size()) {}

  void refine(Partition& p, std::deque<std::uint32_t> queue) {
    std::vector<Point> touched;
    while (!queue.empty()) {
      std::uint32_t s = queue.front();
      queue.pop_front();
      std::uint32_t e = p.end_at[s];
      touched.clear();
      for (std::uint32_t k = s; k < e; ++k) {
        Point w = p.lab[k];
        for (auto [v, c] : g_.in(w)) note(touched, v, 2ull * c);
        for (auto [v, c] : g_.out(w)) note(touched, v, 2ull * c + 1);
      }
      std::vector<std::uint32_t> cells;
      for (Point v : touched) cells.push_back(p.start_of[v]);
      std::sort(cells.begin(), cells.end());
      cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
      for (std::uint32_t a : cells) split(p, a, queue);
      for (Point v : touched) sig_[v].clear();
    }
  }

 private:
  void note(std::vector<Point>& touched, Point v, std::uint64_t key) {
    if (sig_[v].empty()) touched.push_back(v);
    sig_[v].push_back(key);
  }

  void split(Partition& p, std::uint32_t a, std::deque<std::uint32_t>& queue) {
    std::uint32_t b = p.end_at[a];
    if (b - a == 1) return;
    for (std::uint32_t k = a; k < b; ++k) std::sort(sig_[p.lab[k]].begin(), sig_[p.lab[k]].end());
    auto less = [&](Point x, Point y) { return sig_[x] < sig_[y]; };
    std::stable_sort(p.lab.begin() + a, p.lab.begin() + b, less);
    if (sig_[p.lab[a]] == sig_[p.lab[b - 1]]) return;
    std::uint32_t start = a;
    for (std::uint32_t k = a + 1; k <= b; ++k) {
      if (k == b || sig_[p.lab[k]] != sig_[p.lab[k - 1]]) {
        p.end_at[start] = k;
        for (std::uint32_t j = start; j < k; ++j) p.start_of[p.lab[j]] = start;
        queue.push_back(start);
        if (start != a) ++p.cells;
        start = k;
      }
    }
  }

  const ColoredDigraph& g_;
  std::vector<std::vector<std::uint64_t>> sig_;
};

class AutSearch {
 public:
  AutSearch(const ColoredDigraph& g, std::uint64_t max_nodes) : g_(g), refiner_(g), max_nodes_(max_nodes) {}

  PermGroup run() {
    const std::size_t n = g_.size();
    if (n == 0) return PermGroup::trivial(0);
    Partition p;
    p.start_of.assign(n, 0);
    p.end_at.assign(n, 0);
    std::vector<Point> order(n);
    for (Point v = 0; v < n; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](Point x, Point y) { return g_.vertex_color(x) < g_.vertex_color(y); });
    p.lab = order;
    std::deque<std::uint32_t> queue;
    for (std::uint32_t k = 0; k < n;) {
      std::uint32_t j = k;
      while (j < n && g_.vertex_color(order[j]) == g_.vertex_color(order[k])) ++j;
      p.end_at[k] = j;
      for (std::uint32_t t = k; t < j; ++t) p.start_of[order[t]] = k;
      queue.push_back(k);
      ++p.cells;
      k = j;
    }
    refiner_.refine(p, queue);

    path_.push_back(p);
    while (!path_.back().discrete()) {
      std::uint32_t t = path_.back().target_cell();
      base_.push_back(path_.back().lab[t]);
      targets_.push_back(t);
      path_.push_back(individualize(path_.back(), t, base_.back()));
    }
    for (const auto& q : path_) shapes_.push_back(q.shape());
    leaf_ = path_.back().lab;

    std::vector<Perm> gens;
    for (std::size_t i = base_.size(); i-- > 0;) {
      const Partition& q = path_[i];
      std::uint32_t t = targets_[i];
      std::vector<Point> cand(q.lab.begin() + t, q.lab.begin() + q.end_at[t]);
      std::sort(cand.begin(), cand.end());
      auto in_orbit = orbit(n, base_[i], gens);
      for (Point v : cand) {
        if (in_orbit[v]) continue;
        Partition r = individualize(q, t, v);
        if (r.shape() != shapes_[i + 1]) continue;
        if (auto a = dfs(r, i + 1)) {
          gens.push_back(std::move(*a));
          in_orbit = orbit(n, base_[i], gens);
        }
      }
    }
    if (gens.empty()) return PermGroup::trivial(n);
    return PermGroup(StabChain::from_bsgs(n, base_, std::move(gens)));
  }

 private:
  Partition individualize(const Partition& p, std::uint32_t t, Point v) {
    if (++nodes_ > max_nodes_) throw CapExceeded("automorphism search exceeded its node cap");
    Partition q = p;
    std::uint32_t e = q.end_at[t];
    auto it = std::find(q.lab.begin() + t, q.lab.begin() + e, v);
    std::rotate(q.lab.begin() + t, it, it + 1);
    q.end_at[t] = t + 1;
    q.end_at[t + 1] = e;
    for (std::uint32_t k = t + 1; k < e; ++k) q.start_of[q.lab[k]] = t + 1;
    ++q.cells;
    refiner_.refine(q, {t});
    return q;
  }

  std::optional<Perm> dfs(const Partition& p, std::size_t depth) {
    if (p.discrete()) {
      std::vector<Point> img(p.lab.size());
      for (std::size_t k = 0; k < img.size(); ++k) img[leaf_[k]] = p.lab[k];
      Perm pi = Perm::from_images_unchecked(std::move(img));
      if (g_.is_automorphism(pi)) return pi;
      return std::nullopt;
    }
    std::uint32_t t = p.target_cell();
    for (std::uint32_t k = t; k < p.end_at[t]; ++k) {
      Partition r = individualize(p, t, p.lab[k]);
      if (depth + 1 >= shapes_.size() || r.shape() != shapes_[depth + 1]) continue;
      if (auto a = dfs(r, depth + 1)) return a;
    }
    return std::nullopt;
  }

  static std::vector<bool> orbit(std::size_t n, Point b, const std::vector<Perm>& gens) {
    std::vector<bool> in(n, false);
    std::vector<Point> o{b};
    in[b] = true;
    for (std::size_t k = 0; k < o.size(); ++k)
      for (const auto& s : gens)
        if (!in[s(o[k])]) {
          in[s(o[k])] = true;
          o.push_back(s(o[k]));
        }
    return in;
  }

  const ColoredDigraph& g_;
  Refiner refiner_;
  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
  std::vector<Partition> path_;
  std::vector<std::vector<std::uint32_t>> shapes_;
  std::vector<Point> base_;
  std::vector<std::uint32_t> targets_;
  std::vector<Point> leaf_;
};

}  // namespace

PermGroup digraph_automorphisms(const ColoredDigraph& g, std::uint64_t max_nodes) {
  return AutSearch(g, max_nodes).run();
}

}  // namespace mf
