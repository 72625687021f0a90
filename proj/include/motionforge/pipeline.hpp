#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "motionforge/inverse_sequence.hpp"
#include "motionforge/reduce_image.hpp"

namespace mf {

struct TraceEntry {
  char phase = 'A';        // 'A', 'B' or 'C'
  std::size_t level = 0;   // level whose domain was coloured
  Subset subset;           // points of that level, local numbering
  std::size_t watched = 0; // level whose image order is recorded
  Order before = 0;        // image order at `watched` before colouring
  Order after = 0;
  std::string path;        // reduction path for phase A
};

struct PipelineTrace {
  std::size_t pivot = 0;
  std::vector<TraceEntry> entries;
  Subset delta;      // union-domain points coloured red
  PermGroup limit;   // final stabilizer, a subgroup of the top group
  bool zero_neutral = false;
  bool zero_asymmetric = false;
};

/// A header line, one JSON object per trace entry, then a summary line.
/// A default-constructed trace gives the header alone.
std::string trace_to_jsonl(const PipelineTrace& trace);

/**
 * Starting from the subgroup l of the top group, colours levels
 * target+1, target+2, ... with reduce_nonsolvable_image until the image of
 * l at `target` satisfies done. Returns the entries and updates l.
 * Throws DomainError when the levels run out first.
 */
std::vector<TraceEntry> color_reduction_loop(const InverseSequence& seq, std::size_t target,
                                             const std::function<bool(const PermGroup&)>& done, PermGroup& l,
                                             const Caps& caps = {},
                                             ReduceStrategy strategy = ReduceStrategy::BruteFirst);

struct PipelineOptions {
  std::optional<std::size_t> pivot;  // fixed pivot level instead of the adaptive search
  ReduceStrategy strategy = ReduceStrategy::BruteFirst;
};

/**
 * Colours levels 1..k of an epimorphic sequence so that the stabilizer of
 * the colouring fixes level 0 pointwise, leaving level 0 uncoloured.
 * Throws DomainError when the sequence is too short; the message states how
 * many further levels the best attempt was missing.
 */
PipelineTrace run_pipeline(const InverseSequence& seq, const Caps& caps = {}, const PipelineOptions& opts = {});

}  // namespace mf
