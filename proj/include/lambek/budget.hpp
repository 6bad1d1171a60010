#pragma once

#include <cstdint>

namespace lambek {

// Default resource budget for the exhaustive kernels (valuation and
// assignment enumeration, saturation universe, frame streams). The
// WORKBENCH_BUDGET environment variable overrides it.
std::uint64_t workbench_budget();

}  // namespace lambek
