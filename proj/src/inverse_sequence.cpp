#include "motionforge/inverse_sequence.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "motionforge/errors.hpp"
#include "motionforge/io.hpp"

namespace mf {

std::size_t InverseSequence::total_degree() const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < groups.size(); ++i) n = std::max(n, offsets[i] + groups[i].degree());
  return n;
}

GroupHom InverseSequence::composed(std::size_t i, std::size_t j) const {
  if (i < j || i >= groups.size()) throw DomainError("composed map needs i >= j within the sequence");
  GroupHom h = GroupHom::identity(groups[i]);
  for (std::size_t m = i; m > j; --m) h = h.then(maps[m - 1]);
  return h;
}

SequenceReport validate_sequence(const InverseSequence& seq) {
  SequenceReport r;
  auto fail = [&](bool& flag, const std::string& msg) {
    flag = false;
    r.problems.push_back(msg);
  };
  if (seq.offsets.size() != seq.groups.size() || seq.maps.size() + 1 != seq.groups.size()) {
    fail(r.homomorphisms, "sequence has inconsistent level, offset and map counts");
    return r;
  }
  std::vector<std::pair<std::size_t, std::size_t>> ranges;
  for (std::size_t i = 0; i < seq.levels(); ++i) ranges.emplace_back(seq.offsets[i], i);
  std::sort(ranges.begin(), ranges.end());
  for (std::size_t a = 0; a + 1 < ranges.size(); ++a) {
    auto [off, i] = ranges[a];
    if (off + seq.degree(i) > ranges[a + 1].first)
      fail(r.disjoint, "level " + std::to_string(i) + " overlaps level " + std::to_string(ranges[a + 1].second));
  }
  for (std::size_t i = 1; i < seq.levels(); ++i) {
    const GroupHom& h = seq.maps[i - 1];
    if (h.source().degree() != seq.degree(i) || h.target().degree() != seq.degree(i - 1) ||
        h.images().size() != seq.groups[i].generators().size()) {
      fail(r.homomorphisms, "map " + std::to_string(i) + " has the wrong shape");
      r.epimorphic = false;
      continue;
    }
    if (!h.is_homomorphism()) {
      fail(r.homomorphisms, "map " + std::to_string(i) + " is not a homomorphism");
      r.epimorphic = false;
    } else if (h.image().order() != seq.groups[i - 1].order()) {
      fail(r.epimorphic, "map " + std::to_string(i) + " is not surjective");
    }
  }
  return r;
}

InverseSequence epimorphic_reduction(const InverseSequence& seq) {
  InverseSequence out = seq;
  const std::size_t k = seq.levels() - 1;
  for (std::size_t i = k; i-- > 0;) {
    // Image of the (already reduced) level above.
    GroupHom h = seq.maps[i].restrict_to(out.groups[i + 1]);
    out.groups[i] = h.image();
    out.maps[i] = GroupHom(out.groups[i + 1], out.groups[i], h.images());
  }
  return out;
}

LimitView limit_view(const InverseSequence& seq) {
  LimitView v;
  const std::size_t k = seq.levels() - 1;
  v.top = seq.groups[k];
  for (std::size_t i = 0; i <= k; ++i) v.projections.push_back(seq.composed(k, i));
  std::vector<Perm> gens;
  for (std::size_t g = 0; g < v.top.generators().size(); ++g) {
    std::vector<Point> img(seq.total_degree());
    for (std::size_t x = 0; x < img.size(); ++x) img[x] = static_cast<Point>(x);
    for (std::size_t i = 0; i <= k; ++i) {
      const Perm& p = v.projections[i].images()[g];
      for (Point x = 0; x < p.degree(); ++x)
        img[seq.offsets[i] + x] = static_cast<Point>(seq.offsets[i] + p(x));
    }
    gens.push_back(Perm::from_images_unchecked(std::move(img)));
  }
  v.combined = PermGroup(seq.total_degree(), std::move(gens));
  return v;
}

Perm combined_element(const InverseSequence& seq, const LimitView& view, const Perm& top_element) {
  std::vector<Point> img(seq.total_degree());
  for (std::size_t x = 0; x < img.size(); ++x) img[x] = static_cast<Point>(x);
  for (std::size_t i = 0; i < seq.levels(); ++i) {
    Perm p = view.projections[i].apply(top_element);
    for (Point x = 0; x < p.degree(); ++x) img[seq.offsets[i] + x] = static_cast<Point>(seq.offsets[i] + p(x));
  }
  return Perm::from_images_unchecked(std::move(img));
}

PermGroup coloring_stabilizer_in_limit(const InverseSequence& seq, const Coloring& gamma) {
  if (gamma.size() != seq.total_degree()) throw DomainError("colouring length does not match the union domain");
  const std::size_t k = seq.levels() - 1;
  PermGroup l = seq.groups[k];
  for (std::size_t i = k + 1; i-- > 0;) {
    Coloring local(gamma.begin() + static_cast<std::ptrdiff_t>(seq.offsets[i]),
                   gamma.begin() + static_cast<std::ptrdiff_t>(seq.offsets[i] + seq.degree(i)));
    GroupHom h = seq.composed(k, i).restrict_to(l).onto_image();
    l = h.preimage(coloring_stabilizer(h.target(), local));
  }
  return l;
}

InverseSequence diagonal_sequence(const PermGroup& g, std::size_t k) {
  if (k < 1) throw DomainError("diagonal sequence needs k >= 1");
  InverseSequence s;
  for (std::size_t i = 0; i <= k; ++i) {
    s.groups.push_back(g);
    s.offsets.push_back(i * g.degree());
    if (i > 0) s.maps.push_back(GroupHom::identity(g));
  }
  return s;
}

Coloring decode_diagonal_coloring(const Coloring& gamma, std::size_t n, std::size_t k) {
  if (gamma.size() < (k + 1) * n) throw DomainError("colouring does not cover the diagonal sequence");
  Coloring out(n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t i = 1; i <= k; ++i)
      if (gamma[i * n + x]) out[x] |= 1u << (i - 1);
  return out;
}

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string t; ss >> t;) out.push_back(t);
  return out;
}

std::size_t to_index(const std::string& s, std::size_t line) {
  try {
    std::size_t pos = 0;
    unsigned long long v = std::stoull(s, &pos);
    if (pos != s.size()) throw ParseError("bad integer '" + s + "'", line);
    return static_cast<std::size_t>(v);
  } catch (const std::logic_error&) {
    throw ParseError("bad integer '" + s + "'", line);
  }
}

}  // namespace

InverseSequence parse_sequence(const std::string& text, const std::string& base_dir) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0, count = 0;
  std::vector<std::optional<PermGroup>> groups;
  std::vector<std::size_t> offsets;
  std::vector<std::vector<std::string>> map_lines;
  std::size_t current_map = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto t = tokens(line);
    if (t.empty()) continue;
    if (!header) {
      if (t.size() != 2 || t[0] != "levels") throw ParseError("expected 'levels K'", lineno);
      count = to_index(t[1], lineno);
      if (count < 1) throw ParseError("a sequence needs at least one level", lineno);
      groups.resize(count);
      offsets.resize(count);
      map_lines.resize(count);
      header = true;
      continue;
    }
    if (t[0] == "level") {
      if (t.size() != 6 || t[2] != "offset" || t[4] != "file")
        throw ParseError("expected 'level I offset O file PATH'", lineno);
      std::size_t i = to_index(t[1], lineno);
      if (i >= count) throw ParseError("level index out of range", lineno);
      offsets[i] = to_index(t[3], lineno);
      std::filesystem::path p = std::filesystem::path(base_dir) / t[5];
      try {
        groups[i] = read_generators(std::filesystem::exists(p) ? p : resolve_data_path(t[5]));
      } catch (const ParseError& e) {
        throw ParseError(std::string("in level file: ") + e.what(), lineno);
      }
      current_map = 0;
    } else if (t[0] == "map") {
      if (t.size() != 2) throw ParseError("expected 'map I'", lineno);
      current_map = to_index(t[1], lineno);
      if (current_map < 1 || current_map >= count) throw ParseError("map index out of range", lineno);
    } else {
      if (current_map == 0) throw ParseError("image line outside a map block", lineno);
      map_lines[current_map].push_back(line);
    }
  }
  if (!header) throw ParseError("missing 'levels' header", lineno);
  InverseSequence seq;
  for (std::size_t i = 0; i < count; ++i) {
    if (!groups[i]) throw ParseError("level " + std::to_string(i) + " is not defined", lineno);
    seq.groups.push_back(*groups[i]);
    seq.offsets.push_back(offsets[i]);
  }
  for (std::size_t i = 1; i < count; ++i) {
    const auto& lines = map_lines[i];
    if (lines.size() != seq.groups[i].generators().size())
      throw ParseError("map " + std::to_string(i) + " needs one image per generator of level " + std::to_string(i),
                       lineno);
    std::vector<Perm> imgs;
    for (const auto& l : lines) imgs.push_back(parse_cycles(l, seq.degree(i - 1)));
    seq.maps.emplace_back(seq.groups[i], seq.groups[i - 1], std::move(imgs));
  }
  return seq;
}

InverseSequence read_sequence(const std::string& path) {
  auto p = resolve_data_path(path);
  return parse_sequence(read_text_file(p), p.parent_path().string());
}

void write_sequence(const InverseSequence& seq, const std::string& path) {
  std::filesystem::path p(path);
  std::string stem = p.stem().string();
  std::ofstream out(p);
  if (!out) throw DomainError("cannot write " + path);
  out << "levels " << seq.levels() << "\n";
  for (std::size_t i = 0; i < seq.levels(); ++i) {
    std::string name = stem + ".level" + std::to_string(i) + ".gens";
    std::ofstream g(p.parent_path() / name);
    if (!g) throw DomainError("cannot write " + name);
    g << format_generators(seq.groups[i]);
    out << "level " << i << " offset " << seq.offsets[i] << " file " << name << "\n";
  }
  for (std::size_t i = 1; i < seq.levels(); ++i) {
    out << "map " << i << "\n";
    for (const auto& img : seq.maps[i - 1].images()) out << img.to_string() << "\n";
  }
}

}  // namespace mf
