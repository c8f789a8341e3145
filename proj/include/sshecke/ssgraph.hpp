#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "sshecke/arith.hpp"
#include "sshecke/modpoly.hpp"
#include "sshecke/rational.hpp"

namespace sshecke {

// Short Weierstrass model y^2 = x^3 + ax + b attached to a j-invariant:
// j=0 -> (0,1); j=1728 -> (1,0); otherwise a = 3j(1728-j), b = 2j(1728-j)^2.
// Nonsingular for every j when p >= 5.
std::pair<Fq, Fq> weierstrass_from_j(const Fq& j);

// Supersingularity via the Hasse invariant: E_j is supersingular iff the
// coefficient of x^(p-1) in (x^3+ax+b)^((p-1)/2) vanishes. This evaluator
// expands that coefficient as a multinomial sum, O(p) table setup per prime
// and O(p/12) field ops per test.
class HasseTester {
 public:
  explicit HasseTester(u64 p);
  u64 p() const { return p_; }
  bool is_supersingular(const Fq& j) const;

 private:
  u64 p_;
  std::vector<u64> fact_, inv_fact_;
};

// One-shot convenience wrapper around HasseTester.
bool is_supersingular(const Fq& j);

// Reference evaluation of the same coefficient by repeated truncated
// multiplication of (x^3+ax+b). Slower; kept as an independent route for
// cross-checks.
bool is_supersingular_by_powering(const Fq& j);

// Smallest supersingular j in the prime subfield, returned as an element of
// fp2. Every p >= 5 has one; failure to find it means a bug, reported as
// ConsistencyError. The hit is cross-checked against the powering route.
Fq find_starter(const FieldCtx& fp2);

// The supersingular locus in characteristic p: every supersingular
// j-invariant (all lie in F_p^2), each with its automorphism weight
// w = 3 for j=0, 2 for j=1728, 1 otherwise. Canonical order: prime-field
// j's first by residue, then the rest lexicographically by coordinates.
struct SupersingularLocus {
  u64 p = 0;
  FieldCtxPtr field;
  std::vector<Fq> js;
  std::vector<int> weights;

  std::size_t n() const { return js.size(); }
  std::size_t index_of(const Fq& j) const;
  bool contains(const Fq& j) const;
  // Sum of 1/w_i; equals (p-1)/12 for the true locus.
  Rational mass() const;
  // tau with j_tau(i) = j_i^p. An involution fixing prime-field classes.
  std::vector<std::size_t> frobenius_perm() const;

 private:
  friend SupersingularLocus finalize_locus(u64 p, FieldCtxPtr field,
                                           std::vector<Fq> js);
  std::map<std::vector<u64>, std::size_t> index_;
};

// Walk the 2-isogeny graph from find_starter via roots of phi_2(j, Y).
// The mass formula is verified exactly on the result; a shortfall (which
// would mean the walk missed classes) raises ConsistencyError.
SupersingularLocus enumerate_locus(u64 p, const PhiPoly& phi2);
SupersingularLocus enumerate_locus(u64 p);

// Test every j in F_p^2 directly. Quadratic in p; the exhaustive
// cross-check for moderate p.
SupersingularLocus scan_locus(u64 p);

}  // namespace sshecke
