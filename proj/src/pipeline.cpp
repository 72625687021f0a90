#include "motionforge/pipeline.hpp"

#include <json.hpp>

#include "motionforge/constructions.hpp"
#include "motionforge/errors.hpp"
#include "motionforge/normal.hpp"

namespace mf {

namespace {

// The action of l on level i, as a map onto its image.
GroupHom at_level(const InverseSequence& seq, const PermGroup& l, std::size_t i) {
  return seq.composed(seq.levels() - 1, i).restrict_to(l).onto_image();
}

// Elements of l whose image at the level of h stabilizes s.
PermGroup pull_back(const GroupHom& h, const Subset& s) { return h.preimage(setwise_stabilizer(h.target(), s)); }

std::size_t floor_log2(const Order& x) { return x <= 1 ? 0 : static_cast<std::size_t>(boost::multiprecision::msb(x)); }

struct Attempt {
  std::optional<PipelineTrace> trace;
  bool levels_above_exhausted = false;
  std::string why;
  std::size_t missing = 0;
};

Attempt attempt(const InverseSequence& seq, std::size_t c, const Caps& caps, ReduceStrategy strategy) {
  const std::size_t k = seq.levels() - 1;
  Attempt a;
  PipelineTrace t;
  t.pivot = c;
  PermGroup l = seq.groups[k];
  try {
    t.entries = color_reduction_loop(seq, c, [](const PermGroup& f) { return is_solvable(f); }, l, caps, strategy);
  } catch (const DomainError&) {
    Order left = at_level(seq, l, c).target().order();
    a.levels_above_exhausted = true;
    a.missing = std::max<std::size_t>(1, floor_log2(left));
    a.why = "pivot " + std::to_string(c) + ": image at the pivot still nonsolvable (order " + left.str() + ")";
    if (c < k) a.why += " after colouring levels " + std::to_string(c + 1) + ".." + std::to_string(k);
    return a;
  }

  GroupHom hc = at_level(seq, l, c);
  if (!hc.target().is_trivial()) {
    BoundedOrbitResult r = bounded_orbit_subset(hc.target(), caps);
    TraceEntry e{'B', c, r.subset, c, hc.target().order(), 0, ""};
    l = pull_back(hc, r.subset);
    e.after = at_level(seq, l, c).target().order();
    t.entries.push_back(std::move(e));
  }

  for (std::size_t m = c; m-- > 1;) {
    GroupHom hm = at_level(seq, l, m);
    if (hm.target().is_trivial()) break;
    Subset d = derived_length_reduction(hm.target());
    TraceEntry e{'C', m, d, m, hm.target().order(), 0, ""};
    l = pull_back(hm, d);
    e.after = at_level(seq, l, m).target().order();
    t.entries.push_back(std::move(e));
  }

  PermGroup bottom = at_level(seq, l, 0).target();
  if (!bottom.is_trivial()) {
    a.missing = derived_length(bottom);
    a.why = "pivot " + std::to_string(c) + ": level 0 image keeps derived length " + std::to_string(a.missing);
    return a;
  }
  t.limit = l;
  a.trace = std::move(t);
  return a;
}

}  // namespace

std::vector<TraceEntry> color_reduction_loop(const InverseSequence& seq, std::size_t target,
                                             const std::function<bool(const PermGroup&)>& done, PermGroup& l,
                                             const Caps& caps, ReduceStrategy strategy) {
  std::vector<TraceEntry> out;
  for (std::size_t m = target + 1;; ++m) {
    GroupHom ht = at_level(seq, l, target);
    if (done(ht.target())) return out;
    if (m >= seq.levels())
      throw DomainError("sequence too short: levels above " + std::to_string(target) + " exhausted with image order " +
                        ht.target().order().str());
    GroupHom hm = at_level(seq, l, m);
    GroupHom down(hm.target(), ht.target(), ht.images());
    ReductionWitness w = reduce_nonsolvable_image(down, caps, strategy);
    out.push_back({'A', m, w.subset, target, w.image_before, w.image_after, w.path});
    l = pull_back(hm, w.subset);
  }
}

PipelineTrace run_pipeline(const InverseSequence& seq, const Caps& caps, const PipelineOptions& opts) {
  if (seq.levels() < 2) throw DomainError("pipeline needs at least two levels");
  SequenceReport rep = validate_sequence(seq);
  if (!rep.ok()) throw DomainError("invalid sequence: " + rep.problems.front());
  const std::size_t k = seq.levels() - 1;

  std::optional<Attempt> best;
  std::vector<std::size_t> pivots;
  if (opts.pivot) {
    if (*opts.pivot < 1 || *opts.pivot > k) throw DomainError("pivot must lie in 1..k");
    pivots.push_back(*opts.pivot);
  } else {
    for (std::size_t c = 1; c <= k; ++c) pivots.push_back(c);
  }
  for (std::size_t c : pivots) {
    Attempt a = attempt(seq, c, caps, opts.strategy);
    if (a.trace) {
      PipelineTrace t = std::move(*a.trace);
      for (const auto& e : t.entries)
        for (Point x : e.subset) t.delta.push_back(static_cast<Point>(seq.offsets[e.level] + x));
      std::sort(t.delta.begin(), t.delta.end());
      // Independent checks of both postconditions.
      Coloring gamma = subset_coloring(seq.total_degree(), t.delta);
      t.zero_neutral = true;
      for (std::size_t x = 0; x < seq.degree(0); ++x)
        if (gamma[seq.offsets[0] + x]) t.zero_neutral = false;
      PermGroup stab = coloring_stabilizer_in_limit(seq, gamma);
      t.zero_asymmetric = at_level(seq, stab, 0).target().is_trivial();
      if (!t.zero_neutral || !t.zero_asymmetric) throw InvariantViolation("pipeline postcondition failed");
      return t;
    }
    if (!best || a.missing < best->missing) best = a;
    if (a.levels_above_exhausted) break;  // a higher pivot leaves even fewer levels above
  }
  throw DomainError("sequence too short (" + best->why + "); at least " + std::to_string(best->missing) +
                    " more level(s) needed");
}

std::string trace_to_jsonl(const PipelineTrace& trace) {
  nlohmann::ordered_json h;
  h["trace"] = "motionforge-pipeline";
  h["fields"] = {"phase", "level", "subset", "watched_level", "order_before", "order_after", "path"};
  std::string out = h.dump() + "\n";
  if (trace.entries.empty() && trace.pivot == 0) return out;
  for (const auto& e : trace.entries) {
    nlohmann::ordered_json j;
    j["phase"] = std::string(1, e.phase);
    j["level"] = e.level;
    std::vector<std::size_t> pts;
    for (Point x : e.subset) pts.push_back(x + 1);
    j["subset"] = pts;
    j["watched_level"] = e.watched;
    j["order_before"] = e.before.str();
    j["order_after"] = e.after.str();
    if (!e.path.empty()) j["path"] = e.path;
    out += j.dump() + "\n";
  }
  nlohmann::ordered_json s;
  s["pivot"] = trace.pivot;
  std::vector<std::size_t> pts;
  for (Point x : trace.delta) pts.push_back(x + 1);
  s["delta"] = pts;
  s["zero_neutral"] = trace.zero_neutral;
  s["zero_asymmetric"] = trace.zero_asymmetric;
  out += s.dump() + "\n";
  return out;
}

}  // namespace mf
