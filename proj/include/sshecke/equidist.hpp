#pragma once

#include <cstddef>
#include <vector>

#include "sshecke/brandt.hpp"
#include "sshecke/rational.hpp"

namespace sshecke {

// Probability measure on the classes of a locus: exact weights summing to 1.
struct Measure {
  const SupersingularLocus* locus = nullptr;
  std::vector<Rational> weights;
};

// The invariant measure: weight 12/(w_j (p-1)) on class j. Normalization is
// the mass formula and is asserted.
Measure theta_star(const SupersingularLocus& locus);

// Row i of B(m) normalized by its degree sigma(m)_p: the distribution of the
// m-isogeny orbit of class i.
Measure orbit_measure(const BrandtEngine& engine, std::size_t i, u64 m);

// max_j |B_{i,j}(m)/sigma(m)_p - 12/(w_j (p-1))|, exact.
Rational error_sup(const BrandtEngine& engine, std::size_t i, u64 m);

// Bounded test function on the classes, sup-norm exactly 1 unless all values
// vanish.
struct TestFunction {
  std::vector<Rational> values;

  // Seeded uniform values in [-1, 1] rescaled so max |f| = 1.
  static TestFunction random(std::size_t n, u64 seed = kDefaultSeed);
};

// Integral of f against mu.
Rational measure_integral(const Measure& mu, const TestFunction& f);

// Least-squares fit of log error_sup(i, m) against log m.
struct RateFit {
  double slope = 0.0;
  double intercept = 0.0;
  double rms = 0.0;
  std::size_t used = 0;           // points entering the fit
  std::size_t excluded_zero = 0;  // m dropped because the error was exactly 0
};

// ms must be coprime to p; m with exactly zero error are excluded (log 0).
// Fewer than 10 usable points throws InvalidArgument: exact equidistribution
// is a meaningful outcome and is reported, not fitted.
RateFit rate_fit(const BrandtEngine& engine, std::size_t i,
                 const std::vector<u64>& ms);

// Outcome of testing whether a permutation commutes with B(q).
struct CommuteReport {
  bool commutes = false;
  // First violating entry of P B(q) vs B(q) P, row-major, when !commutes.
  std::size_t bad_row = 0;
  std::size_t bad_col = 0;
  // Checked only when commuting: w_i = w_{tau(i)} and tau preserves theta.
  bool weights_match = false;
  bool preserves_theta = false;
};

// A permutation commuting with a single Hecke operator must preserve the
// invariant measure; concretely its weight classes.
CommuteReport check_commuting(const BrandtEngine& engine,
                              const std::vector<std::size_t>& tau, u64 q);

}  // namespace sshecke
