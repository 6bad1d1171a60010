#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "lambek/frame.hpp"

namespace lambek {

struct FrameValidResult {
  bool valid = true;
  // First failing valuation in enumeration order: atoms lexicographically,
  // upsets in ascending bitmask order, first atom most significant.
  std::map<std::string, Mask> countervaluation;
};

// Validity of a sequent on a frame, by exhaustive enumeration of valuations
// of its atoms into the upsets. Throws BudgetError when |Up|^|atoms| exceeds
// the budget. The parallel path chunks the valuation space and reduces to
// the least failing code, so its verdict and witness match the serial
// reference exactly.
FrameValidResult frame_valid(const Frame& f, const Sequent& s,
                             std::uint64_t budget = 0, bool parallel = true);

// Serial reference implementation (kept for testing the parallel kernel).
FrameValidResult frame_valid_serial(const Frame& f, const Sequent& s,
                                    std::uint64_t budget = 0);

}  // namespace lambek
