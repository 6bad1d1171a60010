#pragma once

#include <map>
#include <string>
#include <vector>

#include "lambek/formula.hpp"
#include "lambek/mask.hpp"
#include "lambek/report.hpp"

namespace lambek {

// Finite ternary Kripke frame. Worlds are indices into `worlds`; the ternary
// relation is stored as rel[u*n+v] = { w | R u v w }, the modal relations as
// successor sets per index.
struct Frame {
  std::vector<std::string> worlds;
  std::vector<Mask> up;   // up[u] = { v | u <= v }, includes u
  std::vector<Mask> rel;  // rel[u*n+v] = { w | R u v w }
  Mask unit_set = 0;      // O
  std::vector<std::string> modalities = {kDefaultIndex};
  std::vector<std::vector<Mask>> box_rel;  // box_rel[m][u] = R_box successors
  std::vector<std::vector<Mask>> dia_rel;

  int size() const { return static_cast<int>(worlds.size()); }
  bool leq(int u, int v) const { return has(up[u], v); }
  Mask r(int u, int v) const { return rel[u * size() + v]; }
  Mask& r(int u, int v) { return rel[u * size() + v]; }
  int modality(const std::string& name) const;
  int world(const std::string& name) const;

  // Blank frame with n worlds, empty relations, one modality.
  static Frame blank(int n);
};

// All upward closed sets, in ascending bitmask order. That order fixes both
// valuation enumeration and the carrier order of the algebra of upsets.
std::vector<Mask> upsets(const Frame& f);
std::vector<Mask> upsets_of_order(const std::vector<Mask>& up);

bool is_upset(const std::vector<Mask>& up, Mask s);

CheckReport validate_frame(const Frame& f);

struct Model {
  Frame frame;
  std::map<std::string, Mask> valuation;
};

CheckReport validate_model(const Model& m);

// Compiled form of a formula against a fixed frame and atom slot order;
// lets the exhaustive kernels evaluate without string lookups.
struct CompiledFormula {
  struct Op {
    Conn kind;
    int arg;  // atom slot, or modality position for Box/Dia
  };
  std::vector<Op> ops;  // postfix
};

CompiledFormula compile_formula(const Frame& f,
                                const std::vector<std::string>& atom_order,
                                const Formula& formula);
Mask eval_compiled(const Frame& f, const CompiledFormula& cf,
                   const Mask* slots);

// Semantic clauses by structural recursion. Unknown atoms evaluate to the
// empty set; unknown modal indices are an error. The result is checked to be
// an upset (persistence) and a violation throws.
Mask truth_set(const Model& m, const Formula& f);

bool holds(const Model& m, const Sequent& s);

}  // namespace lambek
