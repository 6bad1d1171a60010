#pragma once

#include <map>

#include "lambek/enumerate.hpp"
#include "lambek/frame_valid.hpp"
#include "lambek/signature.hpp"

namespace lambek {

struct CountermodelResult {
  bool found = false;
  Frame frame;                            // meaningful when found
  std::map<std::string, Mask> valuation;  // least failing valuation
  std::uint64_t frames_tried = 0;
  bool budget_exhausted = false;
};

// First enumerated frame and valuation refuting the sequent. The frame
// stream is scanned in batches in parallel; the reported hit is the least
// in enumeration order regardless of scheduling.
CountermodelResult countermodel(const Sequent& s, const SearchConfig& cfg);

struct SweepOutcome {
  std::uint64_t frames = 0;  // full frames covered
  std::uint64_t cores = 0;
  std::uint64_t checks = 0;  // frame_valid calls actually run
  CheckReport report;
};

// frame_valid for every schema sequent on every enumerated frame. The sweep
// factors through cores: a sequent reads only the relations its connectives
// mention, so sequents without box (dia) are checked once per core and box
// (dia) family instead of once per full frame.
SweepOutcome validity_sweep(const std::vector<Schema>& schemata,
                            const SearchConfig& cfg);

// validity_sweep over the base axiom schemata of the monomodal signature.
SweepOutcome soundness_sweep(const SearchConfig& cfg);

}  // namespace lambek
