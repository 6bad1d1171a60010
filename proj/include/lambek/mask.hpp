#pragma once

#include <bit>
#include <cstdint>

namespace lambek {

// Finite sets of worlds / algebra elements as bitmasks. Everything in this
// workbench is desk-scale; 64 elements is the hard ceiling.
using Mask = std::uint64_t;

constexpr int kMaxElems = 64;

constexpr Mask bit(int i) { return Mask{1} << i; }
constexpr bool has(Mask m, int i) { return (m >> i) & Mask{1}; }
constexpr bool subset(Mask a, Mask b) { return (a & ~b) == 0; }
constexpr int popcount(Mask m) { return std::popcount(m); }

constexpr Mask full_mask(int n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

template <typename F>
inline void for_bits(Mask m, F&& f) {
  while (m) {
    f(std::countr_zero(m));
    m &= m - 1;
  }
}

}  // namespace lambek
