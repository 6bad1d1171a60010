#include "lambek/inequation.hpp"

#include <omp.h>

#include <limits>
#include <vector>

#include "lambek/budget.hpp"

namespace lambek {

namespace {

constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

struct AssignmentSpace {
  std::vector<std::string> atom_order;
  int carrier = 0;
  std::uint64_t total = 1;

  void decode(std::uint64_t code, int* slots) const {
    for (int j = static_cast<int>(atom_order.size()) - 1; j >= 0; --j) {
      slots[j] = static_cast<int>(code % carrier);
      code /= carrier;
    }
  }
};

AssignmentSpace make_space(const Algebra& a, const Sequent& s,
                           std::uint64_t budget) {
  if (!a.finalized())
    throw AlgebraError("check_inequation requires a finalized algebra");
  AssignmentSpace sp;
  std::set<std::string> names = atoms_of(s);
  sp.atom_order.assign(names.begin(), names.end());
  sp.carrier = a.size();
  if (budget == 0) budget = workbench_budget();
  for (std::size_t i = 0; i < sp.atom_order.size(); ++i) {
    if (sp.total > budget / sp.carrier + 1)
      throw BudgetError("check_inequation: assignment space exceeds budget");
    sp.total *= sp.carrier;
  }
  if (sp.total > budget)
    throw BudgetError("check_inequation: assignment space " +
                      std::to_string(sp.total) + " exceeds budget of " +
                      std::to_string(budget));
  return sp;
}

IneqResult result_from(const Algebra& a, const AssignmentSpace& sp,
                       std::uint64_t code) {
  IneqResult res;
  if (code == kNone) return res;
  res.holds = false;
  std::vector<int> slots(sp.atom_order.size());
  sp.decode(code, slots.data());
  for (std::size_t i = 0; i < sp.atom_order.size(); ++i)
    res.counterassignment[sp.atom_order[i]] = a.elems[slots[i]];
  return res;
}

}  // namespace

IneqResult check_inequation_serial(const Algebra& a, const Sequent& s,
                                   std::uint64_t budget) {
  AssignmentSpace sp = make_space(a, s, budget);
  CompiledFormula lhs = compile_term(a, sp.atom_order, *s.lhs);
  CompiledFormula rhs = compile_term(a, sp.atom_order, *s.rhs);
  std::vector<int> slots(sp.atom_order.size());
  for (std::uint64_t code = 0; code < sp.total; ++code) {
    sp.decode(code, slots.data());
    if (!a.leq(eval_term_compiled(a, lhs, slots.data()),
               eval_term_compiled(a, rhs, slots.data())))
      return result_from(a, sp, code);
  }
  return result_from(a, sp, kNone);
}

IneqResult check_inequation(const Algebra& a, const Sequent& s,
                            std::uint64_t budget, bool parallel) {
  if (!parallel) return check_inequation_serial(a, s, budget);
  AssignmentSpace sp = make_space(a, s, budget);
  CompiledFormula lhs = compile_term(a, sp.atom_order, *s.lhs);
  CompiledFormula rhs = compile_term(a, sp.atom_order, *s.rhs);
  const std::uint64_t chunk = 1 << 14;
  std::uint64_t found = kNone;
  for (std::uint64_t base = 0; base < sp.total && found == kNone;
       base += chunk) {
    std::uint64_t end = std::min(sp.total, base + chunk);
    std::uint64_t local = kNone;
#pragma omp parallel
    {
      std::uint64_t mine = kNone;
      std::vector<int> slots(sp.atom_order.size());
#pragma omp for schedule(static) nowait
      for (std::int64_t code = static_cast<std::int64_t>(base);
           code < static_cast<std::int64_t>(end); ++code) {
        if (mine != kNone) continue;
        sp.decode(static_cast<std::uint64_t>(code), slots.data());
        if (!a.leq(eval_term_compiled(a, lhs, slots.data()),
                   eval_term_compiled(a, rhs, slots.data())))
          mine = static_cast<std::uint64_t>(code);
      }
#pragma omp critical
      if (mine < local) local = mine;
    }
    found = local;
  }
  return result_from(a, sp, found);
}

}  // namespace lambek
