#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace lambek {

enum class Conn : unsigned char {
  Atom,
  Top,
  Bot,
  Unit,
  Mul,   // l * r
  LDiv,  // l \ r
  RDiv,  // l / r
  And,
  Or,
  Box,  // arg in left, modal index in name
  Dia,
};

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// Immutable syntax tree. Equality is structural; no normalization is ever
// applied (associativity of * is a semantic fact, not a syntactic one).
class Formula {
 public:
  Conn kind;
  std::string name;  // atom name, or modal index for Box/Dia
  FormulaPtr left, right;

  Formula(Conn k, std::string n, FormulaPtr l, FormulaPtr r)
      : kind(k), name(std::move(n)), left(std::move(l)), right(std::move(r)) {}
};

inline const std::string kDefaultIndex = "0";

FormulaPtr atom(const std::string& name);
FormulaPtr top();
FormulaPtr bot();
FormulaPtr unit();
FormulaPtr mul(FormulaPtr l, FormulaPtr r);
FormulaPtr ldiv(FormulaPtr l, FormulaPtr r);
FormulaPtr rdiv(FormulaPtr l, FormulaPtr r);
FormulaPtr conj(FormulaPtr l, FormulaPtr r);
FormulaPtr disj(FormulaPtr l, FormulaPtr r);
FormulaPtr box(FormulaPtr arg, const std::string& index = kDefaultIndex);
FormulaPtr dia(FormulaPtr arg, const std::string& index = kDefaultIndex);

bool equal(const Formula& a, const Formula& b);
inline bool equal(const FormulaPtr& a, const FormulaPtr& b) {
  return equal(*a, *b);
}
std::size_t hash_value(const Formula& f);

// Total order on formulas (structural); used for deterministic sets.
int compare(const Formula& a, const Formula& b);

std::string print_formula(const Formula& f);
inline std::string print_formula(const FormulaPtr& f) {
  return print_formula(*f);
}

FormulaPtr substitute(const FormulaPtr& f, const std::string& var,
                      const FormulaPtr& g);

// Simultaneous substitution: every atom is replaced according to the map in
// one pass, so images are not re-substituted.
FormulaPtr substitute_all(const FormulaPtr& f,
                          const std::map<std::string, FormulaPtr>& sub);

void collect_atoms(const Formula& f, std::set<std::string>& out);
std::set<std::string> atoms_of(const Formula& f);
void collect_indices(const Formula& f, std::set<std::string>& out);

// Immediate and transitive subformulas, including f itself.
void collect_subformulas(const FormulaPtr& f, std::vector<FormulaPtr>& out);

int node_count(const Formula& f);

struct Sequent {
  FormulaPtr lhs, rhs;
};

inline bool equal(const Sequent& a, const Sequent& b) {
  return equal(a.lhs, b.lhs) && equal(a.rhs, b.rhs);
}
std::string print_sequent(const Sequent& s);
std::set<std::string> atoms_of(const Sequent& s);
std::set<std::string> indices_of(const Sequent& s);
Sequent substitute(const Sequent& s, const std::string& var,
                   const FormulaPtr& g);

struct FormulaLess {
  bool operator()(const FormulaPtr& a, const FormulaPtr& b) const {
    return compare(*a, *b) < 0;
  }
};

struct SequentLess {
  bool operator()(const Sequent& a, const Sequent& b) const {
    int c = compare(*a.lhs, *b.lhs);
    if (c != 0) return c < 0;
    return compare(*a.rhs, *b.rhs) < 0;
  }
};

}  // namespace lambek
