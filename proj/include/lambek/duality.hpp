#pragma once

#include <optional>
#include <vector>

#include "lambek/algebra.hpp"
#include "lambek/frame.hpp"

namespace lambek {

// Algebra of upsets of a validated frame: carrier in ascending bitmask
// order, product through the ternary relation, unit O, residuals by the
// universal clauses (cross-checked against table-derived residuals), box and
// dia as the usual preimage operators. The result is finalized and satisfies
// the modal algebra laws.
Algebra complex_algebra(const Frame& f);

// Frame on the join irreducibles of a finite perfect algebra, carrying the
// reverse of the algebra order. R(j,k,l) iff l <= j*k, the unit set is
// { j | j <= eps }, j R_box k iff box(kappa(k)) <= kappa(j), and
// j R_dia k iff j <= dia(k); all inequalities in the algebra order. The
// result is validated; `report`, when given, receives the validation.
Frame dual_frame(const Algebra& a, CheckReport* report = nullptr);

using FrameIso = std::vector<int>;    // world index map, forward direction
using AlgebraIso = std::vector<int>;  // carrier index map

// Backtracking search over invariant-compatible bijections. Returns a
// certified isomorphism or nothing after exhaustion. Guarded by size.
std::optional<FrameIso> check_frame_iso(const Frame& f1, const Frame& f2,
                                        int world_limit = 16);
std::optional<AlgebraIso> check_algebra_iso(const Algebra& a1,
                                            const Algebra& a2,
                                            int carrier_limit = 24);

CheckReport verify_frame_iso(const Frame& f1, const Frame& f2,
                             const FrameIso& iso);
CheckReport verify_algebra_iso(const Algebra& a1, const Algebra& a2,
                               const AlgebraIso& iso);

// Preimage map of a bounded morphism f : F1 -> F2, as an algebra map from
// the upsets of F2 to the upsets of F1 (indices into the complex algebra
// carriers). Verified to be a homomorphism of the complex algebras; throws
// InputError when f is not a bounded morphism.
std::vector<int> dual_of_frame_morphism(const Frame& f1, const Frame& f2,
                                        const std::vector<int>& f,
                                        CheckReport* report = nullptr);

// Frame of proper prime filters with inclusion order, the filter-product
// relation, unit set { P | eps in P }, and the membership-style modal
// relations. On finite input the topology is discrete, so the clopen upset
// structure coincides with the upset structure; the report notes the
// topological conditions that hold trivially.
Frame prime_filter_space(const Algebra& a, CheckReport* report = nullptr);

// Clopen-upset algebra of a finite frame: built from the relational image
// operations and asserted elementwise equal to complex_algebra.
Algebra clopen_upset_algebra(const Frame& f);

// The representation map eta(x) = { join irreducibles below x }, checked to
// be an isomorphism onto the algebra of upsets of the dual frame, preserving
// the full signature.
CheckReport raney_check(const Algebra& a);

// Agreement of the two modal relation definitions (irreducible style vs
// prime filter style) under j -> up(j), plus frame isomorphism between
// dual_frame and prime_filter_space.
CheckReport check_dual_space_agreement(const Algebra& a);

}  // namespace lambek
