#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "lambek/algebra.hpp"

namespace lambek {

struct IneqResult {
  bool holds = true;
  // First failing assignment in enumeration order: atoms lexicographically,
  // elements in carrier order, first atom most significant.
  std::map<std::string, std::string> counterassignment;
};

// Quantifies the sequent's atoms over the carrier and checks
// eval(lhs) <= eval(rhs). Throws BudgetError when |carrier|^|atoms| exceeds
// the budget. Parallel path reduces to the least failing code and therefore
// agrees with the serial reference bit for bit.
IneqResult check_inequation(const Algebra& a, const Sequent& s,
                            std::uint64_t budget = 0, bool parallel = true);

IneqResult check_inequation_serial(const Algebra& a, const Sequent& s,
                                   std::uint64_t budget = 0);

}  // namespace lambek
