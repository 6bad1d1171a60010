// Temporary: saturation probe. Replaced by the kernel benchmark.
#include <omp.h>

#include <cstdio>

#include "lambek/parser.hpp"
#include "lambek/saturate.hpp"

using namespace lambek;

int main() {
  auto axioms = base_axioms(Signature::monomodal());
  for (const char* goal :
       {"p |- p", "dia (p | q) |- dia p | dia q",
        "box (p & q) |- box p & box q", "box p * box q |- box (p * q)",
        "p * q |- q * p"}) {
    for (int depth = 0; depth <= 2; ++depth) {
      SearchConfig cfg;
      cfg.formula_universe_depth = depth;
      cfg.max_universe = 20000;
      double t0 = omp_get_wtime();
      auto res = saturate(parse_sequent(goal), axioms, cfg);
      double t1 = omp_get_wtime();
      std::uint64_t mixed = 0;
      for (auto [i, j] : res.derived) {
        bool bx = false, di = false;
        for (const FormulaPtr& f : {res.universe[i], res.universe[j]}) {
          std::set<std::string> idx;
          collect_indices(*f, idx);
          struct S {
            bool *b, *d;
            void go(const Formula& g) {
              if (g.kind == Conn::Box) *b = true;
              if (g.kind == Conn::Dia) *d = true;
              if (g.left) go(*g.left);
              if (g.right) go(*g.right);
            }
          } s{&bx, &di};
          s.go(*f);
        }
        if (bx && di) ++mixed;
      }
      fflush(stdout); std::printf(
          "goal『%s』 depth=%d: universe=%zu derived=%zu mixed=%llu verdict=%s "
          "(%.2fs)\n",
          goal, depth, res.universe.size(), res.derived.size(),
          (unsigned long long)mixed, res.verdict.c_str(), t1 - t0);
    }
  }
  return 0;
}
