#include "motionforge/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>

#include "motionforge/errors.hpp"

namespace mf {

PermGroup symmetric_group(std::size_t n) {
  if (n == 0) throw DomainError("empty domain");
  std::vector<Perm> gens;
  if (n >= 2) {
    gens.push_back(Perm::transposition(n, 0, 1));
    std::vector<Point> cyc(n);
    std::iota(cyc.begin(), cyc.end(), Point{0});
    if (n > 2) gens.push_back(Perm::from_cycles(n, {cyc}));
  }
  return PermGroup(n, std::move(gens));
}

PermGroup alternating_group(std::size_t n) {
  if (n == 0) throw DomainError("empty domain");
  std::vector<Perm> gens;
  for (Point i = 2; i < n; ++i) gens.push_back(Perm::from_cycles(n, {{0, 1, i}}));
  return PermGroup(n, std::move(gens));
}

PermGroup cyclic_group(std::size_t n) {
  if (n == 0) throw DomainError("empty domain");
  std::vector<Point> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>((i + 1) % n);
  return PermGroup(n, {Perm(img)});
}

PermGroup dihedral_group(std::size_t n) {
  if (n < 3) throw DomainError("dihedral groups need at least 3 points");
  std::vector<Point> rot(n), ref(n);
  for (std::size_t i = 0; i < n; ++i) {
    rot[i] = static_cast<Point>((i + 1) % n);
    ref[i] = static_cast<Point>((n - i) % n);
  }
  return PermGroup(n, {Perm(rot), Perm(ref)});
}

PermGroup direct_product(const PermGroup& g, const PermGroup& h) {
  std::size_t a = g.degree(), b = h.degree();
  std::vector<Perm> gens;
  for (const auto& s : g.generators()) gens.push_back(s.extended(a + b));
  for (const auto& s : h.generators()) {
    std::vector<Point> img(a + b);
    std::iota(img.begin(), img.end(), Point{0});
    for (std::size_t i = 0; i < b; ++i) img[a + i] = static_cast<Point>(a + s(static_cast<Point>(i)));
    gens.push_back(Perm::from_images_unchecked(std::move(img)));
  }
  return PermGroup(a + b, std::move(gens));
}

PermGroup diagonal_copies(const PermGroup& g, std::size_t c) {
  std::size_t m = g.degree();
  std::vector<Perm> gens;
  for (const auto& s : g.generators()) {
    std::vector<Point> img(m * c);
    for (std::size_t j = 0; j < c; ++j)
      for (std::size_t x = 0; x < m; ++x) img[j * m + x] = static_cast<Point>(j * m + s(static_cast<Point>(x)));
    gens.push_back(Perm::from_images_unchecked(std::move(img)));
  }
  return PermGroup(m * c, std::move(gens));
}

PermGroup wreath_product(const PermGroup& g, const PermGroup& h) {
  std::size_t m = g.degree(), k = h.degree(), n = m * k;
  std::vector<Perm> gens;
  for (const auto& s : g.generators()) gens.push_back(s.extended(n));
  for (const auto& t : h.generators()) {
    std::vector<Point> img(n);
    for (std::size_t b = 0; b < k; ++b)
      for (std::size_t x = 0; x < m; ++x) img[b * m + x] = static_cast<Point>(t(static_cast<Point>(b)) * m + x);
    gens.push_back(Perm::from_images_unchecked(std::move(img)));
  }
  return PermGroup(n, std::move(gens));
}

std::vector<std::vector<Point>> k_subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<Point>> out;
  std::vector<Point> cur;
  std::function<void(Point)> rec = [&](Point start) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (Point x = start; x < n; ++x) {
      cur.push_back(x);
      rec(x + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

PermGroup induced_on_subsets(const PermGroup& g, std::size_t k) {
  auto subs = k_subsets(g.degree(), k);
  std::map<std::vector<Point>, Point> index;
  for (Point i = 0; i < subs.size(); ++i) index[subs[i]] = i;
  std::vector<Perm> gens;
  for (const auto& s : g.generators()) {
    std::vector<Point> img(subs.size());
    for (std::size_t i = 0; i < subs.size(); ++i) {
      std::vector<Point> t;
      for (Point x : subs[i]) t.push_back(s(x));
      std::sort(t.begin(), t.end());
      img[i] = index.at(t);
    }
    gens.push_back(Perm::from_images_unchecked(std::move(img)));
  }
  return PermGroup(subs.size(), std::move(gens));
}

PermGroup lattice_group(std::size_t r) {
  PermGroup sr = symmetric_group(r);
  std::size_t n = r * r;
  std::vector<Perm> gens;
  for (const auto& s : sr.generators()) {
    std::vector<Point> rows(n), cols(n);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        rows[i * r + j] = static_cast<Point>(s(static_cast<Point>(i)) * r + j);
        cols[i * r + j] = static_cast<Point>(i * r + s(static_cast<Point>(j)));
      }
    gens.push_back(Perm::from_images_unchecked(std::move(rows)));
    gens.push_back(Perm::from_images_unchecked(std::move(cols)));
  }
  std::vector<Point> tr(n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) tr[i * r + j] = static_cast<Point>(j * r + i);
  gens.push_back(Perm::from_images_unchecked(std::move(tr)));
  return PermGroup(n, std::move(gens));
}

// ---------------------------------------------------------------- affine

AffineSpace::AffineSpace(std::uint32_t p, std::uint32_t d) : p_(p), d_(d) {
  auto [pp, k] = prime_power(p);
  if (k != 1) throw DomainError("affine spaces need a prime field");
  if (d == 0) throw DomainError("dimension must be positive");
  n_ = 1;
  for (std::uint32_t i = 0; i < d; ++i) n_ *= p;
}

Point AffineSpace::index(const std::vector<std::uint32_t>& v) const {
  Point x = 0;
  for (std::size_t i = d_; i-- > 0;) x = x * p_ + v[i] % p_;
  return x;
}

std::vector<std::uint32_t> AffineSpace::coords(Point x) const {
  std::vector<std::uint32_t> v(d_);
  for (std::uint32_t i = 0; i < d_; ++i) {
    v[i] = x % p_;
    x /= p_;
  }
  return v;
}

std::vector<std::uint32_t> AffineSpace::unit(std::uint32_t i) const {
  std::vector<std::uint32_t> v(d_, 0);
  if (i > d_) throw DomainError("unit vector index out of range");
  if (i > 0) v[i - 1] = 1;
  return v;
}

std::vector<std::uint32_t> AffineSpace::add(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b) const {
  std::vector<std::uint32_t> r(d_);
  for (std::uint32_t i = 0; i < d_; ++i) r[i] = (a[i] + b[i]) % p_;
  return r;
}

std::vector<std::uint32_t> AffineSpace::scale(std::uint32_t c, const std::vector<std::uint32_t>& a) const {
  std::vector<std::uint32_t> r(d_);
  for (std::uint32_t i = 0; i < d_; ++i) r[i] = (c % p_) * a[i] % p_;
  return r;
}

namespace {

using Vec = std::vector<std::uint32_t>;
using VecMap = std::function<Vec(const Vec&)>;

std::uint32_t primitive_root(std::uint32_t p) { return FiniteField(p).primitive_element(); }

}  // namespace

PermGroup AffineSpace::agl() const {
  std::vector<VecMap> maps;
  const std::uint32_t p = p_, d = d_;
  maps.push_back([p](const Vec& v) {
    Vec r = v;
    r[0] = (r[0] + 1) % p;
    return r;
  });
  if (p > 2) {
    std::uint32_t w = primitive_root(p);
    maps.push_back([p, w](const Vec& v) {
      Vec r = v;
      r[0] = r[0] * w % p;
      return r;
    });
  }
  if (d >= 2) {
    maps.push_back([p](const Vec& v) {
      Vec r = v;
      r[0] = (r[0] + r[1]) % p;
      return r;
    });
    maps.push_back([](const Vec& v) {
      Vec r = v;
      std::swap(r[0], r[1]);
      return r;
    });
    if (d >= 3)
      maps.push_back([d](const Vec& v) {
        Vec r(d);
        for (std::uint32_t i = 0; i < d; ++i) r[(i + 1) % d] = v[i];
        return r;
      });
  }
  std::vector<Perm> gens;
  for (const auto& f : maps) {
    std::vector<Point> img(n_);
    for (Point x = 0; x < n_; ++x) img[x] = index(f(coords(x)));
    gens.emplace_back(std::move(img));
  }
  return PermGroup(n_, std::move(gens));
}

Order agl_order(std::uint32_t d, std::uint32_t p) {
  Order pd = 1;
  for (std::uint32_t i = 0; i < d; ++i) pd *= p;
  Order o = pd, pi = 1;
  for (std::uint32_t i = 0; i < d; ++i) {
    o *= pd - pi;
    pi *= p;
  }
  return o;
}

// ---------------------------------------------------------------- projective

ProjectiveSpace::ProjectiveSpace(std::uint32_t q, std::uint32_t d) : f_(q), d_(d) {
  if (d < 2) throw DomainError("projective spaces need dimension at least 2");
  std::size_t total = 1;
  for (std::uint32_t i = 0; i < d; ++i) total *= q;
  lookup_.assign(total, UINT32_MAX);
  for (std::uint32_t lead = 0; lead < d; ++lead) {
    std::size_t tail = 1;
    for (std::uint32_t i = lead + 1; i < d; ++i) tail *= q;
    for (std::size_t t = 0; t < tail; ++t) {
      Vec v(d, 0);
      v[lead] = 1;
      std::size_t r = t;
      for (std::uint32_t i = d; i-- > lead + 1;) {
        v[i] = static_cast<std::uint32_t>(r % q);
        r /= q;
      }
      std::size_t code = 0;
      for (std::uint32_t i = 0; i < d; ++i) code = code * q + v[i];
      lookup_[code] = static_cast<Point>(pts_.size());
      pts_.push_back(std::move(v));
    }
  }
}

Point ProjectiveSpace::index(std::vector<std::uint32_t> v) const {
  std::uint32_t lead = 0;
  while (lead < d_ && v[lead] == 0) ++lead;
  if (lead == d_) throw DomainError("zero vector has no projective point");
  std::uint32_t s = f_.inv(v[lead]);
  for (auto& c : v) c = f_.mul(c, s);
  std::size_t code = 0;
  for (std::uint32_t i = 0; i < d_; ++i) code = code * f_.order() + v[i];
  return lookup_[code];
}

std::vector<std::uint32_t> ProjectiveSpace::unit(std::uint32_t i) const {
  if (i == 0 || i > d_) throw DomainError("unit vector index out of range");
  Vec v(d_, 0);
  v[i - 1] = 1;
  return v;
}

PermGroup ProjectiveSpace::psl() const {
  const FiniteField& F = f_;
  const std::uint32_t d = d_;
  std::vector<VecMap> maps;
  for (std::uint32_t lambda : F.prime_basis())
    maps.push_back([&F, lambda](const Vec& v) {
      Vec r = v;
      r[0] = F.add(r[0], F.mul(lambda, r[1]));
      return r;
    });
  // e0 -> e1, e1 -> -e0
  maps.push_back([&F](const Vec& v) {
    Vec r = v;
    r[0] = F.neg(v[1]);
    r[1] = v[0];
    return r;
  });
  if (d >= 3)
    maps.push_back([&F, d](const Vec& v) {
      // e_i -> e_{i+1}, with a sign on one column so the determinant is 1
      Vec r(d);
      for (std::uint32_t i = 0; i < d; ++i) r[(i + 1) % d] = v[i];
      if (d % 2 == 0) r[1] = F.neg(r[1]);
      return r;
    });
  std::vector<Perm> gens;
  for (const auto& f : maps) {
    std::vector<Point> img(pts_.size());
    for (Point x = 0; x < pts_.size(); ++x) img[x] = index(f(pts_[x]));
    gens.emplace_back(std::move(img));
  }
  return PermGroup(pts_.size(), std::move(gens));
}

std::size_t ProjectiveSpace::rank(std::vector<std::vector<std::uint32_t>> m) const {
  const FiniteField& F = f_;
  std::size_t r = 0;
  for (std::uint32_t c = 0; c < d_ && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    std::uint32_t inv = F.inv(m[r][c]);
    for (auto& x : m[r]) x = F.mul(x, inv);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      std::uint32_t f = m[i][c];
      for (std::uint32_t j = 0; j < d_; ++j) m[i][j] = F.sub(m[i][j], F.mul(f, m[r][j]));
    }
    ++r;
  }
  return r;
}

Order psl_order(std::uint32_t d, std::uint32_t q) {
  Order o = 1;
  for (std::uint32_t i = 0; i < d * (d - 1) / 2; ++i) o *= q;
  for (std::uint32_t i = 2; i <= d; ++i) {
    Order qi = 1;
    for (std::uint32_t j = 0; j < i; ++j) qi *= q;
    o *= qi - 1;
  }
  return o / std::gcd(d, q - 1);
}

// ---------------------------------------------------------------- Mathieu

std::vector<std::string> mathieu_generator_lines(const std::string& name) {
  if (name == "M11") return {"(1,2,3,4,5,6,7,8,9,10,11)", "(3,7,11,8)(4,10,5,6)"};
  if (name == "M12")
    return {"(1,2,3,4,5,6,7,8,9,10,11)", "(3,7,11,8)(4,10,5,6)", "(1,12)(2,11)(3,6)(4,8)(5,9)(7,10)"};
  if (name == "M22")
    return {"(1,2,3,4,5,6,7,8,9,10,11)(12,13,14,15,16,17,18,19,20,21,22)",
            "(1,4,5,9,3)(2,8,10,7,6)(12,15,16,20,14)(13,19,21,18,17)",
            "(1,21)(2,10,8,6)(3,13,4,17)(5,19,9,18)(11,22)(12,14,16,20)"};
  if (name == "M23")
    return {"(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23)",
            "(3,17,10,7,9)(4,13,14,19,5)(8,18,11,12,23)(15,20,22,21,16)"};
  if (name == "M24")
    return {"(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23)",
            "(3,17,10,7,9)(4,13,14,19,5)(8,18,11,12,23)(15,20,22,21,16)",
            "(1,24)(2,23)(3,12)(4,16)(5,18)(6,10)(7,20)(8,14)(9,21)(11,17)(13,22)(15,19)"};
  throw DomainError("unknown Mathieu group " + name);
}

PermGroup mathieu_group(const std::string& name) {
  std::size_t n = std::stoul(name.substr(1));
  std::vector<Perm> gens;
  for (const auto& line : mathieu_generator_lines(name)) gens.push_back(parse_cycles(line, n));
  return PermGroup(n, std::move(gens));
}

namespace {

class NameParser {
 public:
  explicit NameParser(const std::string& s) : s_(s) {}

  PermGroup parse() {
    PermGroup g = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + s_.substr(pos_) + "'");
    return g;
  }

 private:
  PermGroup expr() {
    PermGroup g = term();
    for (;;) {
      skip();
      if (s_.compare(pos_, 2, "wr") == 0) {
        pos_ += 2;
        g = wreath_product(g, term());
      } else if (pos_ < s_.size() && s_[pos_] == 'x') {
        ++pos_;
        g = direct_product(g, term());
      } else {
        return g;
      }
    }
  }

  PermGroup term() {
    skip();
    if (eat('(')) {
      PermGroup g = expr();
      expect(')');
      return g;
    }
    std::string w = word();
    if (w.empty()) fail("expected a group name");
    std::size_t split = 0;
    while (split < w.size() && std::isalpha(static_cast<unsigned char>(w[split]))) ++split;
    std::string head = w.substr(0, split), tail = w.substr(split);
    if (tail.empty()) {
      auto args = arguments();
      if (head == "AGL" && args.size() == 2) return AffineSpace(args[1], args[0]).agl();
      if (head == "PSL" && args.size() == 2) return ProjectiveSpace(args[1], args[0]).psl();
      if (head == "T" && args.size() == 1) return induced_on_subsets(symmetric_group(args[0]), 2);
      if (head == "L" && args.size() == 1) return lattice_group(args[0]);
      fail("unknown group " + w);
    }
    if (!std::all_of(tail.begin(), tail.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      fail("bad group name " + w);
    std::size_t n = std::stoul(tail);
    if (n == 0 || n > 100000) fail("degree out of range in " + w);
    if (head == "S") return symmetric_group(n);
    if (head == "A") return alternating_group(n);
    if (head == "C") return cyclic_group(n);
    if (head == "D") return dihedral_group(n);
    if (head == "M") return mathieu_group(w);
    fail("unknown group " + w);
  }

  std::vector<std::uint32_t> arguments() {
    std::vector<std::uint32_t> v;
    expect('(');
    do {
      std::string w = word();
      if (w.empty() || !std::all_of(w.begin(), w.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        fail("expected a number");
      v.push_back(static_cast<std::uint32_t>(std::stoul(w)));
    } while (eat(','));
    expect(')');
    return v;
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  // Upper-case letters followed by digits, or digits alone.
  std::string word() {
    skip();
    std::size_t b = pos_;
    while (pos_ < s_.size() && std::isupper(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return s_.substr(b, pos_ - b);
  }
  [[noreturn]] void fail(const std::string& msg) { throw ParseError("group name: " + msg); }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

PermGroup named_group(const std::string& name) {
  try {
    return NameParser(name).parse();
  } catch (const DomainError& e) {
    throw ParseError(std::string("group name: ") + e.what());
  }
}

}  // namespace mf
