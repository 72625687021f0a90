#include "motionforge/coherent.hpp"

#include <map>
#include <set>
#include <sstream>

#include "motionforge/catalog.hpp"
#include "motionforge/digraph_aut.hpp"
#include "motionforge/errors.hpp"

namespace mf {

std::size_t CoherentConfig::diagonal_colors() const {
  std::set<std::uint32_t> d;
  for (std::size_t x = 0; x < n; ++x) d.insert(color[x * n + x]);
  return d.size();
}

CoherentConfig canonical_config(std::size_t n, const std::vector<std::uint32_t>& color) {
  if (color.size() != n * n) throw DomainError("colour matrix must be n x n");
  std::map<std::uint32_t, std::uint32_t> rename;
  auto see = [&](std::uint32_t c) { rename.emplace(c, static_cast<std::uint32_t>(rename.size())); };
  for (std::size_t x = 0; x < n; ++x) see(color[x * n + x]);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) see(color[x * n + y]);
  CoherentConfig cc;
  cc.n = n;
  cc.rank = rename.size();
  cc.color.resize(n * n);
  for (std::size_t i = 0; i < n * n; ++i) cc.color[i] = rename[color[i]];
  return cc;
}

CoherentConfig schurian_cc(const PermGroup& g) {
  std::uint32_t rank = 0;
  auto c = orbital_colors(g, &rank);
  return canonical_config(g.degree(), c);
}

CcReport validate_cc(const CoherentConfig& cc) {
  const std::size_t n = cc.n, r = cc.rank;
  CcReport rep;
  auto fail = [&](int axiom, Point a, Point b, Point c, std::string msg) {
    rep.valid = false;
    rep.axiom = axiom;
    rep.witness = {a, b, c};
    rep.message = std::move(msg);
    return rep;
  };
  if (cc.color.size() != n * n) return fail(0, 0, 0, 0, "colour matrix must be n x n");

  std::vector<std::int64_t> diag_owner(r, -1);
  for (std::size_t x = 0; x < n; ++x) diag_owner[cc(x, x)] = static_cast<std::int64_t>(x);
  for (Point y = 0; y < n; ++y)
    for (Point z = 0; z < n; ++z)
      if (y != z && diag_owner[cc(y, z)] >= 0)
        return fail(1, static_cast<Point>(diag_owner[cc(y, z)]), y, z, "diagonal colour on an off-diagonal pair");

  std::vector<std::int64_t> transpose(r, -1);
  std::vector<std::pair<Point, Point>> first(r, {0, 0});
  std::vector<bool> seen(r, false);
  for (Point x = 0; x < n; ++x)
    for (Point y = 0; y < n; ++y) {
      std::uint32_t c = cc(x, y);
      if (!seen[c]) {
        seen[c] = true;
        first[c] = {x, y};
        transpose[c] = cc(y, x);
      } else if (transpose[c] != cc(y, x)) {
        return fail(2, x, y, first[c].first, "transpose of a colour class is not a colour class");
      }
    }
  for (std::size_t c = 0; c < r; ++c)
    if (!seen[c]) return fail(0, 0, 0, 0, "colour " + std::to_string(c) + " is unused");

  rep.p.assign(r * r * r, 0);
  std::vector<bool> filled(r, false);
  std::vector<std::uint32_t> counts(r * r);
  for (Point x = 0; x < n; ++x)
    for (Point y = 0; y < n; ++y) {
      std::fill(counts.begin(), counts.end(), 0);
      for (Point z = 0; z < n; ++z) ++counts[cc(x, z) * r + cc(z, y)];
      std::uint32_t k = cc(x, y);
      if (!filled[k]) {
        for (std::size_t ij = 0; ij < r * r; ++ij) rep.p[ij * r + k] = counts[ij];
        filled[k] = true;
        continue;
      }
      for (std::size_t ij = 0; ij < r * r; ++ij)
        if (rep.p[ij * r + k] != counts[ij]) {
          Point z = 0;
          while (z + 1 < n && static_cast<std::size_t>(cc(x, z) * r + cc(z, y)) != ij) ++z;
          rep.p.clear();
          return fail(3, x, y, z, "intersection number depends on the pair, not only its colour");
        }
    }
  return rep;
}

bool is_primitive_cc(const CoherentConfig& cc) {
  const std::size_t n = cc.n;
  if (cc.diagonal_colors() != 1) return false;
  auto reach = [&](std::uint32_t c, bool forward) {
    std::vector<bool> in(n, false);
    std::vector<Point> q{0};
    in[0] = true;
    for (std::size_t k = 0; k < q.size(); ++k)
      for (Point y = 0; y < n; ++y) {
        std::uint32_t col = forward ? cc(q[k], y) : cc(y, q[k]);
        if (col == c && !in[y]) {
          in[y] = true;
          q.push_back(y);
        }
      }
    return q.size() == n;
  };
  std::uint32_t diag = cc(0, 0);
  for (std::uint32_t c = 0; c < cc.rank; ++c)
    if (c != diag && !(reach(c, true) && reach(c, false))) return false;
  return true;
}

bool is_upcc(const CoherentConfig& cc) { return cc.rank >= 3 && is_primitive_cc(cc); }

std::vector<Point> distinguishing_set(const CoherentConfig& cc, Point x, Point y) {
  if (x == y) throw DomainError("distinguishing set needs two distinct points");
  std::vector<Point> d;
  for (Point z = 0; z < cc.n; ++z)
    if (cc(z, x) != cc(z, y)) d.push_back(z);
  return d;
}

std::size_t min_distinguishing(const CoherentConfig& cc) {
  std::size_t best = cc.n;
  for (Point x = 0; x < cc.n; ++x)
    for (Point y = x + 1; y < cc.n; ++y) {
      std::size_t cnt = 0;
      for (Point z = 0; z < cc.n; ++z) cnt += cc(z, x) != cc(z, y);
      best = std::min(best, cnt);
    }
  return best;
}

PermGroup cc_automorphisms(const CoherentConfig& cc) {
  return digraph_automorphisms(ColoredDigraph::from_matrix(cc.n, cc.color));
}

std::size_t motion_exact(const CoherentConfig& cc, std::uint64_t cap) {
  return minimal_degree(cc_automorphisms(cc), cap);
}

CoherentConfig graph_cc(std::size_t n, const std::vector<std::pair<Point, Point>>& edges) {
  std::vector<std::uint32_t> c(n * n, 2);
  for (std::size_t x = 0; x < n; ++x) c[x * n + x] = 0;
  for (auto [a, b] : edges) {
    if (a >= n || b >= n || a == b) throw DomainError("bad edge");
    c[a * n + b] = c[b * n + a] = 1;
  }
  return canonical_config(n, c);
}

CoherentConfig triangular_cc(std::size_t r) {
  auto pts = k_subsets(r, 2);
  std::vector<std::pair<Point, Point>> edges;
  for (Point i = 0; i < pts.size(); ++i)
    for (Point j = i + 1; j < pts.size(); ++j) {
      const auto &a = pts[i], &b = pts[j];
      if (a[0] == b[0] || a[0] == b[1] || a[1] == b[0] || a[1] == b[1]) edges.emplace_back(i, j);
    }
  return graph_cc(pts.size(), edges);
}

CoherentConfig lattice_cc(std::size_t r) {
  std::vector<std::pair<Point, Point>> edges;
  for (Point i = 0; i < r * r; ++i)
    for (Point j = i + 1; j < r * r; ++j)
      if (i / r == j / r || i % r == j % r) edges.emplace_back(i, j);
  return graph_cc(r * r, edges);
}

CoherentConfig parse_cc(const std::string& text) {
  std::istringstream in(text);
  std::vector<long long> v;
  std::string tok;
  while (in >> tok) {
    if (tok[0] == '#') {
      std::string rest;
      std::getline(in, rest);
      continue;
    }
    try {
      std::size_t pos = 0;
      long long x = std::stoll(tok, &pos);
      if (pos != tok.size() || x < 0) throw std::invalid_argument(tok);
      v.push_back(x);
    } catch (const std::logic_error&) {
      throw ParseError("bad colour entry '" + tok + "'");
    }
  }
  if (v.empty()) throw ParseError("empty configuration");
  std::size_t n = static_cast<std::size_t>(v[0]);
  if (n == 0 || v.size() != 1 + n * n) throw ParseError("expected n followed by n*n colours");
  std::vector<std::uint32_t> c(v.begin() + 1, v.end());
  return canonical_config(n, c);
}

std::string format_cc(const CoherentConfig& cc) {
  std::ostringstream out;
  out << cc.n << "\n";
  for (std::size_t x = 0; x < cc.n; ++x) {
    for (std::size_t y = 0; y < cc.n; ++y) out << (y ? " " : "") << cc.color[x * cc.n + y];
    out << "\n";
  }
  return out.str();
}

}  // namespace mf
