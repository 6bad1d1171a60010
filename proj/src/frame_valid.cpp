#include "lambek/frame_valid.hpp"

#include <omp.h>

#include <cstdlib>
#include <limits>
#include <vector>

#include "lambek/budget.hpp"

namespace lambek {

std::uint64_t workbench_budget() {
  static std::uint64_t value = [] {
    if (const char* env = std::getenv("WORKBENCH_BUDGET")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end && *end == '\0' && v > 0) return static_cast<std::uint64_t>(v);
    }
    return std::uint64_t{50'000'000};
  }();
  return value;
}

namespace {

constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

struct ValuationSpace {
  std::vector<std::string> atom_order;
  std::vector<Mask> ups;
  std::uint64_t total = 1;

  void decode(std::uint64_t code, Mask* slots) const {
    for (int j = static_cast<int>(atom_order.size()) - 1; j >= 0; --j) {
      slots[j] = ups[code % ups.size()];
      code /= ups.size();
    }
  }
};

ValuationSpace make_space(const Frame& f, const Sequent& s,
                          std::uint64_t budget) {
  ValuationSpace sp;
  std::set<std::string> names = atoms_of(s);
  sp.atom_order.assign(names.begin(), names.end());
  sp.ups = upsets(f);
  if (budget == 0) budget = workbench_budget();
  for (std::size_t i = 0; i < sp.atom_order.size(); ++i) {
    if (sp.total > budget / sp.ups.size() + 1)
      throw BudgetError("frame_valid: valuation space exceeds budget of " +
                        std::to_string(budget));
    sp.total *= sp.ups.size();
  }
  if (sp.total > budget)
    throw BudgetError("frame_valid: valuation space " +
                      std::to_string(sp.total) + " exceeds budget of " +
                      std::to_string(budget));
  return sp;
}

FrameValidResult result_from(const Frame& f, const ValuationSpace& sp,
                             std::uint64_t code) {
  FrameValidResult res;
  if (code == kNone) return res;
  res.valid = false;
  std::vector<Mask> slots(sp.atom_order.size());
  sp.decode(code, slots.data());
  for (std::size_t i = 0; i < sp.atom_order.size(); ++i)
    res.countervaluation[sp.atom_order[i]] = slots[i];
  (void)f;
  return res;
}

}  // namespace

FrameValidResult frame_valid_serial(const Frame& f, const Sequent& s,
                                    std::uint64_t budget) {
  ValuationSpace sp = make_space(f, s, budget);
  CompiledFormula lhs = compile_formula(f, sp.atom_order, *s.lhs);
  CompiledFormula rhs = compile_formula(f, sp.atom_order, *s.rhs);
  std::vector<Mask> slots(sp.atom_order.size());
  for (std::uint64_t code = 0; code < sp.total; ++code) {
    sp.decode(code, slots.data());
    if (!subset(eval_compiled(f, lhs, slots.data()),
                eval_compiled(f, rhs, slots.data())))
      return result_from(f, sp, code);
  }
  return result_from(f, sp, kNone);
}

FrameValidResult frame_valid(const Frame& f, const Sequent& s,
                             std::uint64_t budget, bool parallel) {
  if (!parallel) return frame_valid_serial(f, s, budget);
  ValuationSpace sp = make_space(f, s, budget);
  CompiledFormula lhs = compile_formula(f, sp.atom_order, *s.lhs);
  CompiledFormula rhs = compile_formula(f, sp.atom_order, *s.rhs);
  const std::uint64_t chunk = 1 << 14;
  std::uint64_t found = kNone;
  for (std::uint64_t base = 0; base < sp.total && found == kNone;
       base += chunk) {
    std::uint64_t end = std::min(sp.total, base + chunk);
    std::uint64_t local = kNone;
#pragma omp parallel
    {
      std::uint64_t mine = kNone;
      std::vector<Mask> slots(sp.atom_order.size());
#pragma omp for schedule(static) nowait
      for (std::int64_t code = static_cast<std::int64_t>(base);
           code < static_cast<std::int64_t>(end); ++code) {
        if (mine != kNone) continue;
        sp.decode(static_cast<std::uint64_t>(code), slots.data());
        if (!subset(eval_compiled(f, lhs, slots.data()),
                    eval_compiled(f, rhs, slots.data())))
          mine = static_cast<std::uint64_t>(code);
      }
#pragma omp critical
      if (mine < local) local = mine;
    }
    found = local;
  }
  return result_from(f, sp, found);
}

}  // namespace lambek
