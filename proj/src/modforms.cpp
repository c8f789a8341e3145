#include "sshecke/modforms.hpp"

#include <cmath>

#include "sshecke/errors.hpp"

namespace sshecke {

namespace {

using i128 = __int128;

i64 checked_mul(i64 a, i64 b) {
  i128 r = i128(a) * i128(b);
  if (r > i128(INT64_MAX) || r < i128(INT64_MIN)) {
    throw OverflowError("64-bit overflow in coefficient arithmetic");
  }
  return i64(r);
}

}  // namespace

u64 divisor_count(u64 m) {
  if (m == 0) throw InvalidArgument("divisor_count requires m >= 1");
  u64 count = 1;
  for (u64 q = 2; q * q <= m; ++q) {
    if (m % q != 0) continue;
    u64 e = 0;
    while (m % q == 0) {
      m /= q;
      ++e;
    }
    count *= e + 1;
  }
  if (m > 1) count *= 2;
  return count;
}

u64 sigma1(u64 m) {
  if (m == 0) throw InvalidArgument("sigma1 requires m >= 1");
  u64 total = 1;
  for (u64 q = 2; q * q <= m; ++q) {
    if (m % q != 0) continue;
    u64 geom = 1, qe = 1;
    while (m % q == 0) {
      m /= q;
      qe *= q;
      geom += qe;
    }
    total *= geom;
  }
  if (m > 1) total *= m + 1;
  return total;
}

EisensteinData::EisensteinData(u64 p) : p_(p) {
  if (p < 5 || !is_prime(p)) {
    throw InvalidArgument("EisensteinData requires a prime p >= 5");
  }
}

i64 EisensteinData::coeff_a(u64 n) const {
  if (n == 0) throw InvalidArgument("coeff_a requires n >= 1");
  i64 ppart = 1;
  while (n % p_ == 0) {
    n /= p_;
    ppart = checked_mul(ppart, i64(p_));
  }
  return checked_mul(ppart, i64(sigma1(n)));
}

i64 EisensteinData::coeff_b(u64 n) const {
  if (n == 0) throw InvalidArgument("coeff_b requires n >= 1");
  u64 k = 0;
  while (n % p_ == 0) {
    n /= p_;
    ++k;
  }
  if (k == 0) return i64(sigma1(n));
  i64 pk1 = 1;
  for (u64 t = 0; t <= k; ++t) pk1 = checked_mul(pk1, i64(p_));
  i64 bp = i64(p_) + 1 - pk1;
  if (n == 1) return bp;
  return checked_mul(-bp, i64(sigma1(n)));
}

Rational EisensteinData::f0_coeff(u64 m) const {
  if (m == 0) return Rational(1);
  i64 num = checked_mul(i64(p_), coeff_a(m)) + coeff_b(m);
  return Rational(24) * Rational(num, i64(p_ * p_ - 1));
}

Rational cusp_residual(const BrandtEngine& engine, const EisensteinData& eis,
                       std::size_t i, std::size_t j, u64 m) {
  const SupersingularLocus& locus = engine.locus();
  u64 p = locus.p;
  if (eis.p() != p) {
    throw InvalidArgument("Eisenstein data is for a different prime");
  }
  if (m == 0) throw InvalidArgument("cusp_residual requires m >= 1");
  if (i >= locus.n() || j >= locus.n()) {
    throw InvalidArgument("cusp_residual index out of range");
  }
  Rational entry(engine.matrix(m)->mat.at(i, j));
  i64 wj = i64(locus.weights[j]);
  i64 num = checked_mul(i64(p), eis.coeff_a(m)) + eis.coeff_b(m);
  Rational general =
      entry - Rational(12) * Rational(num, checked_mul(wj, i64(p * p - 1)));
  if (m % p != 0) {
    Rational simplified =
        entry - Rational(12) * Rational(i64(sigma1(m)),
                                        checked_mul(wj, i64(p - 1)));
    if (general != simplified) {
      throw ConsistencyError("cusp residual formulas disagree at m = " +
                             std::to_string(m));
    }
  }
  return general;
}

double deligne_ratio(const BrandtEngine& engine, const EisensteinData& eis,
                     std::size_t i, std::size_t j, u64 m) {
  if (m % engine.locus().p == 0) {
    throw InvalidArgument("deligne_ratio requires m coprime to p");
  }
  Rational c = cusp_residual(engine, eis, i, j, m).abs();
  return c.to_double() / (double(divisor_count(m)) * std::sqrt(double(m)));
}

CuspResidualTable cusp_residual_table(const BrandtEngine& engine,
                                      const EisensteinData& eis, std::size_t i,
                                      std::size_t j,
                                      const std::vector<u64>& ms) {
  const SupersingularLocus& locus = engine.locus();
  CuspResidualTable table;
  table.p = locus.p;
  table.i = i;
  table.j = j;
  table.values.reserve(ms.size());
  i64 bound = checked_mul(i64(locus.weights[j]),
                          i64(locus.p * locus.p - 1));
  for (u64 m : ms) {
    Rational c = cusp_residual(engine, eis, i, j, m);
    Rational scaled = c * Rational(bound);
    if (scaled.den() != 1) {
      throw ConsistencyError("cusp residual denominator exceeds w_j (p^2-1)");
    }
    table.values.emplace_back(m, c);
  }
  return table;
}

}  // namespace sshecke
