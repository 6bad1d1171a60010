#pragma once

#include <string>
#include <vector>

#include "lambek/algebra.hpp"

namespace lambek {

// Completion of a finite distributive algebra through the polarity between
// its filters and ideals (F related to I iff they intersect). Extension
// elements are the stable pairs; filter and ideal elements are identified
// subsets. On finite input the extension is isomorphic to the base, which
// the certification checks rather than assumes.
struct Completion {
  Algebra base;  // finalized
  std::vector<std::string> ext_names;
  std::vector<Mask> ext_up;    // order on extension elements
  std::vector<Mask> extents;   // per element: filters in the stable pair
  std::vector<Mask> intents;   // per element: ideals in the stable pair
  std::vector<int> embed;      // base index -> extension index
  std::vector<int> filt_elem;  // filter index -> extension element
  std::vector<int> idl_elem;   // ideal index -> extension element
  std::vector<std::vector<int>> ext_meet, ext_join;
  int ext_bot = -1, ext_top = -1;
  // Every report produced from this completion carries this header: at
  // finite scale the extension is the base itself, so canonicity checks
  // certify the extension machinery rather than discover failures.
  std::vector<std::string> header;

  int ext_size() const { return static_cast<int>(ext_names.size()); }
  bool ext_leq(int x, int y) const { return has(ext_up[x], y); }
};

// Principal downsets, by generator in carrier order (every ideal of a
// finite lattice is principal).
std::vector<Filter> ideals(const Algebra& a);

Completion canonical_extension(const Algebra& a);

// Embedding, isomorphism with the base, and the filter/ideal element poset
// identifications.
CheckReport certify_completion(const Completion& c);

CheckReport check_density(const Completion& c);
CheckReport check_compactness(const Completion& c, std::uint64_t budget = 0);

// Order-preserving extensions of maps. Unary tables are indexed by the base
// carrier; results are tables over the extension. Throws AlgebraError when
// the input map is not monotone.
std::vector<int> sigma_extend_unary(const Completion& c,
                                    const std::vector<int>& f);
std::vector<int> pi_extend_unary(const Completion& c,
                                 const std::vector<int>& f);
std::vector<std::vector<int>> sigma_extend_mul(const Completion& c);

struct ExtendedResiduals {
  std::vector<std::vector<int>> ldiv, rdiv;
};
// Residuals extended through the filter/ideal stratification; the extended
// triple is verified to satisfy the residuation equivalence on the whole
// extension.
ExtendedResiduals pi_extend_residuals(const Completion& c);

// Full extension algebra: sigma product, pi residuals, sigma modalities.
// Cross-checked against the transport of the base operations through the
// base/extension isomorphism.
Algebra extension_algebra(const Completion& c);

// Verifies: if the base satisfies the inequation then so does the extension
// with sigma/pi operations. A false premise passes with a note.
CheckReport check_canonicity(const Algebra& a, const Sequent& s);

}  // namespace lambek
