#pragma once

#include <utility>
#include <vector>

#include "sshecke/ssgraph.hpp"

namespace sshecke {

// Short Weierstrass curve y^2 = x^3 + ax + b with its j-invariant, built
// through the same j -> (a, b) rule the locus uses. Nonsingularity is
// checked at construction.
struct CurveModel {
  Fq a, b, j;
  static CurveModel from_j(const Fq& j);
};

// The ell+1 isogenies of degree ell in {2, 3} leaving E, as the multiset of
// quotient j-invariants: (j', multiplicity) pairs, canonically sorted,
// multiplicities summing to ell+1. Kernel generators living in extensions
// are handled inside F[t]/(g) for each irreducible kernel-polynomial factor
// g; such a factor of degree e contributes its quotient j once with
// multiplicity e, and that j must descend to E's own field.
//
// modulus_shift presents each quotient ring on the generator t - shift
// instead of t; the output is invariant under it, which tests exploit.
std::vector<std::pair<Fq, int>> enumerate_isogenies(const CurveModel& E, u64 ell,
                                                    i64 modulus_shift = 0);

// ell-isogeny neighbour counts for the whole locus: entry (i, k) is the
// number of degree-ell isogenies from class i to class k. Computed purely
// from Velu quotients, with no reference to modular polynomials, which
// makes it an independent witness for the Brandt matrix B(ell).
std::vector<std::vector<i64>> velu_neighbour_counts(const SupersingularLocus& locus,
                                                    u64 ell, i64 modulus_shift = 0);

}  // namespace sshecke
