#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "lambek/algebra.hpp"
#include "lambek/frame.hpp"

namespace lambek {

struct SearchConfig {
  int max_worlds = 3;
  std::uint64_t max_valuations = 0;  // 0: use the workbench budget
  bool dedup_iso = false;
  int formula_universe_depth = 1;
  std::uint64_t max_frames = 0;     // enumeration budget; 0: workbench budget
  std::uint64_t max_universe = 4000;
};

struct EnumStats {
  std::uint64_t emitted = 0;
  bool completed = true;      // false when a budget stopped the stream
  std::string stopped_at;     // progress state at the stop
};

// Every frame on <= max_worlds labeled worlds that passes validation,
// monomodal, in a fixed deterministic order: world count, then order
// relation, then unit set, then ternary relation, then box family, then dia
// family. The sink returns false to stop the stream. With dedup_iso one
// representative per isomorphism class is emitted (the least encoding).
EnumStats enumerate_frames(const SearchConfig& cfg,
                           const std::function<bool(const Frame&)>& sink);

// The modal-free part of the stream: same order, relations fixed, box and
// dia families left empty. Validity of a sequent depends only on the
// relations its connectives mention, so sweeps factor through cores.
EnumStats enumerate_cores(const SearchConfig& cfg,
                          const std::function<bool(const Frame&)>& sink);

// All box successor families valid for the core (antitone in the order and
// compatible with the ternary relation), in a deterministic order; dually
// the dia families (monotone, unconstrained otherwise).
std::vector<std::vector<Mask>> valid_box_families(const Frame& core);
std::vector<std::vector<Mask>> valid_dia_families(const Frame& core);

// Frames are emitted with empty modal relation slots filled in place; this
// assembles a full frame from a core and two families.
Frame assemble_frame(const Frame& core, const std::vector<Mask>& box_family,
                     const std::vector<Mask>& dia_family);

// All distributive lattices with at most max_size elements (one
// representative per isomorphism class), equipped with meet as product, top
// as unit, and identity modalities.
std::vector<Algebra> distributive_lattices_meet_product(int max_size);

// Deterministic encoding of a frame and the least-encoding test used for
// isomorphism deduplication.
std::vector<std::uint64_t> frame_encoding(const Frame& f);
bool is_canonical_representative(const Frame& f);

}  // namespace lambek
