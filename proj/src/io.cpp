#include "motionforge/io.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "motionforge/errors.hpp"

namespace mf {

namespace {

std::string strip(std::string line) {
  if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
  auto b = line.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  auto e = line.find_last_not_of(" \t\r\n");
  return line.substr(b, e - b + 1);
}

unsigned long parse_positive(const std::string& tok, std::size_t line) {
  if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw ParseError("expected a positive integer, got '" + tok + "'", line);
  return std::stoul(tok);
}

}  // namespace

PermGroup parse_generators(std::istream& in) {
  std::string raw;
  std::size_t lineno = 0, n = 0;
  bool have_n = false;
  std::vector<Perm> gens;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip(raw);
    if (line.empty()) continue;
    if (!have_n) {
      n = parse_positive(line, lineno);
      if (n == 0) throw DomainError("empty domain");
      have_n = true;
      continue;
    }
    try {
      gens.push_back(parse_cycles(line, n));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), lineno);
    } catch (const DomainError& e) {
      throw DomainError(std::string(e.what()) + " (line " + std::to_string(lineno) + ")");
    }
  }
  if (!have_n) throw ParseError("missing degree line");
  return PermGroup(n, std::move(gens));
}

PermGroup parse_generators(const std::string& text) {
  std::istringstream in(text);
  return parse_generators(in);
}

PermGroup read_generators(const std::filesystem::path& path) {
  std::ifstream in(resolve_data_path(path));
  return parse_generators(in);
}

std::string format_generators(const PermGroup& g) {
  std::string s = std::to_string(g.degree()) + "\n";
  for (const auto& p : g.generators()) s += p.to_string() + "\n";
  return s;
}

std::filesystem::path resolve_data_path(const std::filesystem::path& path) {
  if (std::filesystem::exists(path)) return path;
  if (const char* dir = std::getenv("MOTIONFORGE_DATA")) {
    auto alt = std::filesystem::path(dir) / path;
    if (std::filesystem::exists(alt)) return alt;
  }
  throw DomainError("cannot find file " + path.string());
}

Subset parse_subset(const std::string& text, std::size_t n) {
  std::string t = text;
  for (auto& c : t)
    if (c == ',' || c == '{' || c == '}') c = ' ';
  std::istringstream in(t);
  std::string tok;
  Subset s;
  while (in >> tok) {
    if (tok[0] == '#') {
      std::getline(in, tok);
      continue;
    }
    unsigned long v = parse_positive(tok, 0);
    if (v == 0 || v > n) throw DomainError("point " + tok + " outside domain of size " + std::to_string(n));
    s.push_back(static_cast<Point>(v - 1));
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::string format_subset(const Subset& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(s[i] + 1);
  }
  return out;
}

std::vector<std::uint32_t> parse_coloring(const std::string& text, std::size_t n) {
  std::vector<std::uint32_t> col(n, 0);
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::istringstream ls(strip(raw));
    std::string tok;
    while (ls >> tok) {
      auto colon = tok.find(':');
      if (colon == std::string::npos) throw ParseError("expected point:colour, got '" + tok + "'", lineno);
      unsigned long x = parse_positive(tok.substr(0, colon), lineno);
      unsigned long c = parse_positive(tok.substr(colon + 1), lineno);
      if (x == 0 || x > n) throw DomainError("point " + std::to_string(x) + " outside domain");
      if (c == 0) throw ParseError("colours are 1-based", lineno);
      col[x - 1] = static_cast<std::uint32_t>(c - 1);
    }
  }
  return col;
}

std::string format_coloring(const std::vector<std::uint32_t>& colors) {
  std::string out;
  for (std::size_t x = 0; x < colors.size(); ++x)
    out += std::to_string(x + 1) + ":" + std::to_string(colors[x] + 1) + "\n";
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(resolve_data_path(path));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace mf
