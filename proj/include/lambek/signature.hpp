#pragma once

#include <string>
#include <vector>

#include "lambek/formula.hpp"
#include "lambek/mask.hpp"
#include "lambek/report.hpp"

namespace lambek {

// Subexponential signature: a preordered index set with upward closed
// weakening / contraction / exchange subsets satisfying W ∩ C ⊆ E.
struct Signature {
  std::vector<std::string> indices;
  std::vector<Mask> preceq;  // preceq[i] = { j | i ⪯ j }; stored as given
  Mask W = 0, C = 0, E = 0;

  int size() const { return static_cast<int>(indices.size()); }
  int find(const std::string& name) const;
  bool prec(int i, int j) const { return has(preceq[i], j); }

  // Single index "0", discrete preorder, empty W/C/E.
  static Signature monomodal();
};

CheckReport validate_signature(const Signature& sig);

// A named axiom schema over the reserved atoms p, q, r. Instantiation is
// plain substitution.
struct Schema {
  std::string name;
  std::vector<Sequent> sequents;
};

// The twelve schemata of the base system, with the modal ones instantiated
// once per index of the signature.
std::vector<Schema> base_axioms(const Signature& sig);

enum class StructuralAxiom {
  Exch,
  Contr,
  WeakContrL,
  WeakContrR,
  Weak,
  Mingle,
  K4Resid,
};

Schema structural_axioms(StructuralAxiom which,
                         const std::string& index = kDefaultIndex);
Schema structural_axioms(const std::string& name,
                         const std::string& index = kDefaultIndex);
std::vector<Schema> all_structural_axioms(
    const std::string& index = kDefaultIndex);

// Polymodal axiom family driven by the signature; throws InputError when the
// signature is invalid, naming the violated invariant. Deduplicated,
// deterministic order.
std::vector<Sequent> subexp_axioms(const Signature& sig);

}  // namespace lambek
