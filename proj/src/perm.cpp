#include "motionforge/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "motionforge/errors.hpp"

namespace mf {

Perm::Perm(std::size_t n) : img_(n) { std::iota(img_.begin(), img_.end(), Point{0}); }

Perm::Perm(std::vector<Point> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (Point y : img_) {
    if (y >= img_.size() || seen[y]) throw DomainError("permutation images are not a bijection");
    seen[y] = true;
  }
}

Perm Perm::from_images_unchecked(std::vector<Point> images) {
  Perm p;
  p.img_ = std::move(images);
  return p;
}

Perm Perm::from_cycles(std::size_t n, const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<bool> used(n, false);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      Point a = c[i];
      if (a >= n) throw DomainError("cycle point " + std::to_string(a + 1) + " outside domain of size " + std::to_string(n));
      if (used[a]) throw DomainError("point " + std::to_string(a + 1) + " repeated in cycle notation");
      used[a] = true;
      img[a] = c[(i + 1) % c.size()];
    }
  }
  return from_images_unchecked(std::move(img));
}

Perm Perm::transposition(std::size_t n, Point a, Point b) {
  Perm p(n);
  std::swap(p.img_[a], p.img_[b]);
  return p;
}

bool Perm::is_identity() const noexcept {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<Point> inv(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) inv[img_[i]] = static_cast<Point>(i);
  return from_images_unchecked(std::move(inv));
}

std::size_t Perm::support_size() const noexcept {
  std::size_t s = 0;
  for (std::size_t i = 0; i < img_.size(); ++i) s += img_[i] != i;
  return s;
}

std::vector<Point> Perm::support() const {
  std::vector<Point> s;
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) s.push_back(static_cast<Point>(i));
  return s;
}

std::vector<std::vector<Point>> Perm::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(img_.size(), false);
  for (Point i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    std::vector<Point> c;
    for (Point x = i; !seen[x]; x = img_[x]) {
      seen[x] = true;
      c.push_back(x);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::uint64_t Perm::order() const {
  std::uint64_t o = 1;
  for (const auto& c : cycles()) o = std::lcm(o, static_cast<std::uint64_t>(c.size()));
  return o;
}

Perm Perm::extended(std::size_t n) const {
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), Point{0});
  std::copy(img_.begin(), img_.end(), img.begin());
  return from_images_unchecked(std::move(img));
}

std::string Perm::to_string(bool one_based) const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::string s;
  for (const auto& c : cs) {
    s += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(c[i] + (one_based ? 1 : 0));
    }
    s += ')';
  }
  return s;
}

Perm operator*(const Perm& a, const Perm& b) {
  std::vector<Point> img(b.img_.size());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = a.img_[b.img_[i]];
  return Perm::from_images_unchecked(std::move(img));
}

Perm commutator(const Perm& a, const Perm& b) { return a.inverse() * b.inverse() * a * b; }

Perm conjugate(const Perm& x, const Perm& g) { return g.inverse() * x * g; }

Perm parse_cycles(std::string_view text, std::size_t n) {
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation: " + std::string(text));
    ++i;
    std::vector<Point> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      skip_ws();
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) throw ParseError("expected a point in cycle notation: " + std::string(text));
      unsigned long v = std::stoul(std::string(text.substr(start, i - start)));
      if (v == 0) throw ParseError("points are 1-based: " + std::string(text));
      cycle.push_back(static_cast<Point>(v - 1));
      skip_ws();
      if (i < text.size() && text[i] == ',') ++i;
    }
    if (i >= text.size()) throw ParseError("unterminated cycle: " + std::string(text));
    ++i;  // ')'
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_ws();
  }
  return Perm::from_cycles(n, cycles);
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace mf
