#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "sshecke/brandt.hpp"
#include "sshecke/rational.hpp"

namespace sshecke {

// Number of divisors of m.
u64 divisor_count(u64 m);

// Sum of all divisors of m.
u64 sigma1(u64 m);

// The two integer sequences a_n, b_n attached to the prime p, and the
// q-expansion of the normalized Eisenstein series f0 built from them.
// Away from p both sequences are sigma1; on the p-part they follow the
// prime-power laws a_{p^k} = p^k, b_{p^k} = p+1-p^{k+1}, extended by
// a_{p^k m} = a_{p^k} a_m and b_{p^k m} = -b_{p^k} b_m for p coprime to m.
class EisensteinData {
 public:
  explicit EisensteinData(u64 p);

  u64 p() const { return p_; }
  i64 coeff_a(u64 n) const;
  i64 coeff_b(u64 n) const;

  // m-th coefficient of f0 = 1 + (24/(p^2-1)) * sum (p a_n + b_n) q^n.
  Rational f0_coeff(u64 m) const;

 private:
  u64 p_;
};

// c_m(i, j) = B_{i,j}(m) - 12 (p a_m + b_m) / (w_j (p^2 - 1)): the gap
// between the Brandt entry and its Eisenstein prediction, i.e. a cusp-form
// coefficient. For p coprime to m this is computed both from the general
// formula and from the simplified form B_{i,j}(m) - 12 sigma1(m)/(w_j (p-1));
// the two must agree exactly.
Rational cusp_residual(const BrandtEngine& engine, const EisensteinData& eis,
                       std::size_t i, std::size_t j, u64 m);

// |c_m| / (d(m) sqrt(m)); requires p coprime to m. The residual is exact up
// to the final double-precision quotient.
double deligne_ratio(const BrandtEngine& engine, const EisensteinData& eis,
                     std::size_t i, std::size_t j, u64 m);

// Residuals c_m for one (i, j) pair over a list of m values.
struct CuspResidualTable {
  u64 p = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  std::vector<std::pair<u64, Rational>> values;
};

// Every residual is checked to have denominator dividing w_j (p^2 - 1).
CuspResidualTable cusp_residual_table(const BrandtEngine& engine,
                                      const EisensteinData& eis, std::size_t i,
                                      std::size_t j,
                                      const std::vector<u64>& ms);

}  // namespace sshecke
