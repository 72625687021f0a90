#include "motionforge/graph_spheres.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "motionforge/digraph_aut.hpp"
#include "motionforge/errors.hpp"
#include "motionforge/io.hpp"

namespace mf {

std::size_t RootedGraph::radius() const { return dist.empty() ? 0 : *std::max_element(dist.begin(), dist.end()); }

RootedGraph load_graph(const std::string& text) {
  RootedGraph g;
  std::map<std::string, Point> index;
  std::optional<std::string> root;
  auto vertex = [&](const std::string& id) {
    auto [it, fresh] = index.emplace(id, static_cast<Point>(g.names.size()));
    if (fresh) {
      g.names.push_back(id);
      g.adj.emplace_back();
    }
    return it->second;
  };
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::vector<std::string> t;
    for (std::string s; ls >> s;) t.push_back(s);
    if (t.empty()) continue;
    if (t[0] == "v" && t.size() == 2) {
      vertex(t[1]);
    } else if (t[0] == "e" && t.size() == 3) {
      if (t[1] == t[2]) throw ParseError("self-loop at vertex " + t[1], lineno);
      Point a = vertex(t[1]), b = vertex(t[2]);
      g.adj[a].push_back(b);
      g.adj[b].push_back(a);
    } else if (t[0] == "r" && t.size() == 2) {
      root = t[1];
    } else {
      throw ParseError("expected 'v ID', 'e ID ID' or 'r ID'", lineno);
    }
  }
  if (!root) throw ParseError("missing root line 'r ID'", lineno);
  auto it = index.find(*root);
  if (it == index.end()) throw ParseError("unknown root vertex " + *root, lineno);
  g.root = it->second;
  for (auto& a : g.adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  const std::size_t none = SIZE_MAX;
  g.dist.assign(g.size(), none);
  std::vector<Point> queue{g.root};
  g.dist[g.root] = 0;
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (Point w : g.adj[queue[k]])
      if (g.dist[w] == none) {
        g.dist[w] = g.dist[queue[k]] + 1;
        queue.push_back(w);
      }
  for (Point v = 0; v < g.size(); ++v)
    if (g.dist[v] == none) throw ParseError("vertex " + g.names[v] + " is not connected to the root", lineno);
  return g;
}

RootedGraph read_graph(const std::string& path) { return load_graph(read_text_file(resolve_data_path(path))); }

std::vector<std::vector<Point>> spheres(const RootedGraph& g) {
  std::vector<std::vector<Point>> s(g.radius() + 1);
  for (Point v = 0; v < g.size(); ++v) s[g.dist[v]].push_back(v);
  return s;
}

std::vector<Point> ball(const RootedGraph& g, std::size_t r) {
  std::vector<Point> b;
  for (const auto& s : spheres(g)) {
    if (!s.empty() && g.dist[s.front()] > r) break;
    b.insert(b.end(), s.begin(), s.end());
  }
  return b;
}

bool twin_free(const RootedGraph& g) {
  for (Point u = 0; u < g.size(); ++u)
    for (Point v = u + 1; v < g.size(); ++v) {
      std::vector<Point> a, b;
      for (Point w : g.adj[u])
        if (w != v) a.push_back(w);
      for (Point w : g.adj[v])
        if (w != u) b.push_back(w);
      if (a == b) return false;
    }
  return true;
}

namespace {

PermGroup ball_group(const RootedGraph& g, std::size_t r, bool rooted) {
  auto b = ball(g, r);
  std::vector<std::int64_t> local(g.size(), -1);
  for (std::size_t i = 0; i < b.size(); ++i) local[b[i]] = static_cast<std::int64_t>(i);
  ColoredDigraph d(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (rooted) d.set_vertex_color(static_cast<Point>(i), static_cast<std::uint32_t>(g.dist[b[i]]));
    for (Point w : g.adj[b[i]])
      if (local[w] > static_cast<std::int64_t>(i)) d.add_edge(static_cast<Point>(i), static_cast<Point>(local[w]));
  }
  return digraph_automorphisms(d);
}

// Ball positions of the sphere of radius r (ball order is by distance).
std::vector<Point> sphere_positions(const RootedGraph& g, const std::vector<Point>& b, std::size_t r) {
  std::vector<Point> p;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (g.dist[b[i]] == r) p.push_back(static_cast<Point>(i));
  return p;
}

bool fixes_pointwise(const PermGroup& h, const std::vector<Point>& pts) {
  for (const auto& s : h.generators())
    for (Point x : pts)
      if (s(x) != x) return false;
  return true;
}

}  // namespace

PermGroup ball_automorphisms(const RootedGraph& g, std::size_t r) { return ball_group(g, r, false); }
PermGroup rooted_automorphisms(const RootedGraph& g, std::size_t r) { return ball_group(g, r, true); }

RestrictionCheck sphere_restriction_check(const RootedGraph& g, std::size_t r) {
  PermGroup a = rooted_automorphisms(g, r);
  auto pts = sphere_positions(g, ball(g, r), r);
  PermGroup k = a.pointwise_stabilizer(pts);
  RestrictionCheck c;
  for (const auto& s : k.generators())
    if (!s.is_identity()) {
      c.injective = false;
      c.witness = s;
      break;
    }
  return c;
}

InverseSequence sphere_sequence(const RootedGraph& g, std::size_t R) {
  if (R < 3) throw DomainError("sphere sequence needs radius at least 3");
  if (R > g.radius()) throw DomainError("radius exceeds the depth of the graph");
  PermGroup a = rooted_automorphisms(g, R);
  auto b = ball(g, R);
  InverseSequence seq;
  std::vector<std::vector<Point>> positions;
  std::size_t offset = 0;
  for (std::size_t r = 3; r <= R; r += 2) {
    positions.push_back(sphere_positions(g, b, r));
    seq.groups.push_back(a.restricted_to(positions.back()));
    seq.offsets.push_back(offset);
    offset += positions.back().size();
  }
  for (std::size_t j = 1; j < positions.size(); ++j) {
    // Restriction to the outer sphere must determine the inner one.
    if (!fixes_pointwise(a.pointwise_stabilizer(positions[j]), positions[j - 1]))
      throw DomainError("restriction to sphere " + std::to_string(3 + 2 * j) + " does not determine sphere " +
                        std::to_string(1 + 2 * j));
    seq.maps.emplace_back(seq.groups[j], seq.groups[j - 1], seq.groups[j - 1].generators());
  }
  return seq;
}

SpecialSubsetResult special_subset(const RootedGraph& g, std::size_t R, const Caps& caps) {
  if (!twin_free(g)) throw DomainError("graph has twins");
  InverseSequence seq = sphere_sequence(g, R);
  SpecialSubsetResult res;
  // A trivial top group needs no odd-sphere colouring.
  if (!seq.groups.back().is_trivial()) res.trace = run_pipeline(seq, caps);
  auto sph = spheres(g);
  for (Point x : res.trace.delta) {
    std::size_t level = 0;
    while (level + 1 < seq.levels() && seq.offsets[level + 1] <= x) ++level;
    res.subset.push_back(sph[3 + 2 * level][x - seq.offsets[level]]);
  }
  for (std::size_t r = 2; r <= R; r += 2) res.subset.insert(res.subset.end(), sph[r].begin(), sph[r].end());
  std::sort(res.subset.begin(), res.subset.end());

  res.avoids_inner_ball = true;
  std::vector<bool> in(g.size(), false);
  for (Point v : res.subset) {
    in[v] = true;
    if (g.dist[v] <= 1) res.avoids_inner_ball = false;
  }
  res.covers_even_spheres = true;
  for (std::size_t r = 2; r <= R; r += 2)
    for (Point v : sph[r])
      if (!in[v]) res.covers_even_spheres = false;

  auto b = ball(g, R);
  Subset local;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (in[b[i]]) local.push_back(static_cast<Point>(i));
  PermGroup stab = setwise_stabilizer(ball_automorphisms(g, R), local);
  res.stabilizer_order = stab.order();
  res.root_fixed = fixes_pointwise(stab, {0});
  for (std::size_t r = 3; r <= R; r += 2)
    if (fixes_pointwise(stab, sphere_positions(g, b, r))) res.spheres_fixed.push_back(r);
  return res;
}

}  // namespace mf
