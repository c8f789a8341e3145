#include "sshecke/equidist.hpp"

#include <algorithm>
#include <cmath>

#include "sshecke/errors.hpp"

namespace sshecke {

namespace {

void check_normalized(const std::vector<Rational>& weights) {
  Rational total(0);
  for (const Rational& w : weights) total += w;
  if (total != Rational(1)) {
    throw ConsistencyError("measure weights do not sum to 1");
  }
}

}  // namespace

Measure theta_star(const SupersingularLocus& locus) {
  Measure mu;
  mu.locus = &locus;
  mu.weights.reserve(locus.n());
  for (std::size_t j = 0; j < locus.n(); ++j) {
    mu.weights.emplace_back(12, i64(locus.weights[j]) * i64(locus.p - 1));
  }
  check_normalized(mu.weights);
  return mu;
}

Measure orbit_measure(const BrandtEngine& engine, std::size_t i, u64 m) {
  const SupersingularLocus& locus = engine.locus();
  if (i >= locus.n()) throw InvalidArgument("orbit_measure index out of range");
  auto B = engine.matrix(m);
  i64 deg = i64(sigma_p(m, locus.p));
  Measure mu;
  mu.locus = &locus;
  mu.weights.reserve(locus.n());
  for (std::size_t j = 0; j < locus.n(); ++j) {
    mu.weights.emplace_back(B->mat.at(i, j), deg);
  }
  check_normalized(mu.weights);
  return mu;
}

Rational error_sup(const BrandtEngine& engine, std::size_t i, u64 m) {
  Measure orbit = orbit_measure(engine, i, m);
  Measure theta = theta_star(engine.locus());
  Rational best(0);
  for (std::size_t j = 0; j < orbit.weights.size(); ++j) {
    Rational gap = (orbit.weights[j] - theta.weights[j]).abs();
    if (gap > best) best = gap;
  }
  return best;
}

TestFunction TestFunction::random(std::size_t n, u64 seed) {
  if (n == 0) throw InvalidArgument("test function needs at least one class");
  SplitMix64 rng(seed);
  TestFunction f;
  f.values.assign(n, Rational(0));
  Rational biggest(0);
  while (biggest == Rational(0)) {
    for (std::size_t i = 0; i < n; ++i) {
      i64 v = i64(rng.next() % 2001) - 1000;
      f.values[i] = Rational(v, 1000);
      if (f.values[i].abs() > biggest) biggest = f.values[i].abs();
    }
  }
  for (Rational& v : f.values) v /= biggest;
  return f;
}

Rational measure_integral(const Measure& mu, const TestFunction& f) {
  if (mu.weights.size() != f.values.size()) {
    throw InvalidArgument("measure and test function sizes differ");
  }
  Rational total(0);
  for (std::size_t i = 0; i < mu.weights.size(); ++i) {
    total += mu.weights[i] * f.values[i];
  }
  return total;
}

RateFit rate_fit(const BrandtEngine& engine, std::size_t i,
                 const std::vector<u64>& ms) {
  u64 p = engine.locus().p;
  std::vector<double> xs, ys;
  RateFit fit;
  for (u64 m : ms) {
    if (m == 0 || m % p == 0) {
      throw InvalidArgument("rate_fit requires m coprime to p");
    }
    Rational err = error_sup(engine, i, m);
    if (err == Rational(0)) {
      ++fit.excluded_zero;
      continue;
    }
    xs.push_back(std::log(double(m)));
    ys.push_back(std::log(err.to_double()));
  }
  if (xs.size() < 10) {
    throw InvalidArgument("rate_fit needs at least 10 nonzero errors, got " +
                          std::to_string(xs.size()));
  }
  fit.used = xs.size();
  double n = double(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    sx += xs[k];
    sy += ys[k];
    sxx += xs[k] * xs[k];
    sxy += xs[k] * ys[k];
  }
  fit.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  fit.intercept = (sy - fit.slope * sx) / n;
  double ss = 0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    double r = ys[k] - (fit.slope * xs[k] + fit.intercept);
    ss += r * r;
  }
  fit.rms = std::sqrt(ss / n);
  return fit;
}

CommuteReport check_commuting(const BrandtEngine& engine,
                              const std::vector<std::size_t>& tau, u64 q) {
  const SupersingularLocus& locus = engine.locus();
  std::size_t n = locus.n();
  if (tau.size() != n) throw InvalidArgument("permutation size mismatch");
  std::vector<bool> seen(n, false);
  for (std::size_t v : tau) {
    if (v >= n || seen[v]) throw InvalidArgument("tau is not a permutation");
    seen[v] = true;
  }
  if (q == locus.p || !is_prime(q)) {
    throw InvalidArgument("check_commuting needs a prime q distinct from p");
  }

  IntMatrix B = engine.prime_matrix(q);
  IntMatrix P = IntMatrix::identity(n);
  {
    std::vector<std::vector<i64>> rows(n, std::vector<i64>(n, 0));
    for (std::size_t i = 0; i < n; ++i) rows[i][tau[i]] = 1;
    P = IntMatrix::from_rows(rows);
  }
  IntMatrix pb = P * B;
  IntMatrix bp = B * P;

  CommuteReport report;
  report.commutes = true;
  for (std::size_t i = 0; i < n && report.commutes; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (pb.at(i, j) != bp.at(i, j)) {
        report.commutes = false;
        report.bad_row = i;
        report.bad_col = j;
        break;
      }
    }
  }
  if (!report.commutes) return report;

  report.weights_match = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (locus.weights[i] != locus.weights[tau[i]]) {
      report.weights_match = false;
      break;
    }
  }
  Measure theta = theta_star(locus);
  report.preserves_theta = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (theta.weights[tau[i]] != theta.weights[i]) {
      report.preserves_theta = false;
      break;
    }
  }
  return report;
}

}  // namespace sshecke
