#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "lambek/formula.hpp"
#include "lambek/frame.hpp"
#include "lambek/mask.hpp"
#include "lambek/report.hpp"

namespace lambek {

struct AlgebraError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Finite bounded distributive residuated modal algebra, given by order and
// operation tables. Residual tables are always derived from mul and the
// order, never supplied.
struct Algebra {
  std::vector<std::string> elems;
  std::vector<Mask> up;  // up[a] = { b | a <= b }
  std::vector<std::vector<int>> mul;
  int eps = -1;
  std::vector<std::string> modalities = {kDefaultIndex};
  std::vector<std::vector<int>> box_tab, dia_tab;  // [m][a]

  // derived by finalize_lattice / derive_residuals
  std::vector<std::vector<int>> meet_tab, join_tab;
  std::vector<std::vector<int>> ldiv_tab, rdiv_tab;  // ldiv[a][c]=a\c, rdiv[c][b]=c/b
  int bot = -1, top = -1;

  int size() const { return static_cast<int>(elems.size()); }
  bool leq(int a, int b) const { return has(up[a], b); }
  Mask down(int a) const;
  int modality(const std::string& name) const;
  bool finalized() const { return !meet_tab.empty() && !ldiv_tab.empty(); }
};

CheckReport check_lattice(const Algebra& a);
CheckReport check_monoid(const Algebra& a);
CheckReport check_rdma(const Algebra& a);

// Fills meet/join/bot/top; throws AlgebraError if the order is not a bounded
// lattice (the witness is in the message).
void finalize_lattice(Algebra& a);

// Computes a\c = max{ b | a*b <= c } and c/b = max{ a | a*b <= c }, then
// re-verifies the three-way residuation equivalence exhaustively. Throws
// AlgebraError ("not residuated", or a monotonicity witness) on failure.
void derive_residuals(Algebra& a);

// finalize_lattice + derive_residuals.
void finalize_algebra(Algebra& a);

// Umbrella report: lattice, distributivity, monoid laws, residual existence,
// modal laws. Never throws.
CheckReport validate_algebra(const Algebra& a);

// Irreducibles of a finite distributive lattice, in carrier order. An
// element is join irreducible iff it covers exactly one element; meet
// irreducibles dually.
std::vector<int> join_irreducibles(const Algebra& a);
std::vector<int> meet_irreducibles(const Algebra& a);

// kappa(j) = join of the complement of the upset of j; requires j join
// irreducible.
int kappa(const Algebra& a, int j);
// Certifies that kappa is an order isomorphism from the join irreducibles
// onto the meet irreducibles, and that the proper prime filters are exactly
// the principal upsets of join irreducibles.
CheckReport kappa_report(const Algebra& a);

struct Filter {
  Mask elements = 0;
};

bool is_filter(const Algebra& a, Mask s);
bool is_proper_filter(const Algebra& a, Mask s);
bool is_prime_filter(const Algebra& a, Mask s);

// All filters of a finite lattice: the principal upsets, listed by
// generator in carrier order.
std::vector<Filter> filters(const Algebra& a);
std::vector<Filter> prime_filters(const Algebra& a);

// X * Y up-closed; verified to be a filter.
Filter filter_product(const Algebra& a, const Filter& x, const Filter& y);

CheckReport check_filter_lemma(const Algebra& a);

// Homomorphic term evaluation; 1 goes to eps, top/bot to the bounds.
// Throws InputError on a missing atom or unknown modal index.
int eval_term(const Algebra& a, const std::map<std::string, int>& assignment,
              const Formula& f);

CompiledFormula compile_term(const Algebra& a,
                             const std::vector<std::string>& atom_order,
                             const Formula& f);
int eval_term_compiled(const Algebra& a, const CompiledFormula& cf,
                       const int* slots);

}  // namespace lambek
