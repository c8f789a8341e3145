#include <doctest.h>

#include <vector>

#include "sshecke/modforms.hpp"

using namespace sshecke;

namespace {

// Reference sigma1 by direct divisor enumeration.
u64 sigma1_naive(u64 m) {
  u64 s = 0;
  for (u64 d = 1; d <= m; ++d) {
    if (m % d == 0) s += d;
  }
  return s;
}

u64 divisor_count_naive(u64 m) {
  u64 c = 0;
  for (u64 d = 1; d <= m; ++d) {
    if (m % d == 0) ++c;
  }
  return c;
}

}  // namespace

TEST_CASE("divisor sums and counts match direct enumeration") {
  for (u64 m = 1; m <= 500; ++m) {
    CHECK(sigma1(m) == sigma1_naive(m));
    CHECK(divisor_count(m) == divisor_count_naive(m));
  }
  CHECK_THROWS_AS(sigma1(0), InvalidArgument);
  CHECK_THROWS_AS(divisor_count(0), InvalidArgument);
}

TEST_CASE("coefficient sequences follow the three rules at p = 5") {
  EisensteinData eis(5);
  CHECK(eis.coeff_a(6) == 12);
  CHECK(eis.coeff_b(6) == 12);
  CHECK(eis.coeff_a(5) == 5);
  CHECK(eis.coeff_b(5) == -19);
  CHECK(eis.coeff_a(10) == 15);
  CHECK(eis.coeff_b(10) == 57);
  CHECK(eis.coeff_a(25) == 25);
  CHECK(eis.coeff_b(25) == 6 - 125);
  CHECK(eis.coeff_a(1) == 1);
  CHECK(eis.coeff_b(1) == 1);
  CHECK_THROWS_AS(eis.coeff_a(0), InvalidArgument);
  CHECK_THROWS_AS(EisensteinData(4), InvalidArgument);
  CHECK_THROWS_AS(EisensteinData(3), InvalidArgument);
}

TEST_CASE("coefficients away from p equal sigma1 for several primes") {
  for (u64 p : {5ull, 11ull, 13ull, 101ull}) {
    EisensteinData eis(p);
    for (u64 n = 1; n <= 200; ++n) {
      if (n % p == 0) continue;
      CHECK(eis.coeff_a(n) == i64(sigma1(n)));
      CHECK(eis.coeff_b(n) == i64(sigma1(n)));
    }
  }
}

TEST_CASE("multiplicativity across the p-part split") {
  EisensteinData eis(7);
  SplitMix64 rng(kDefaultSeed);
  for (int trial = 0; trial < 200; ++trial) {
    u64 k = rng.next() % 4;
    u64 m = 1 + rng.next() % 300;
    while (m % 7 == 0) m = 1 + rng.next() % 300;
    u64 pk = 1;
    for (u64 t = 0; t < k; ++t) pk *= 7;
    u64 n = pk * m;
    CHECK(eis.coeff_a(n) == eis.coeff_a(pk) * eis.coeff_a(m));
    if (k == 0 || m == 1) {
      CHECK(eis.coeff_b(n) == eis.coeff_b(pk) * eis.coeff_b(m));
    } else {
      CHECK(eis.coeff_b(n) == -eis.coeff_b(pk) * eis.coeff_b(m));
    }
  }
}

TEST_CASE("f0 coefficients") {
  EisensteinData e11(11);
  CHECK(e11.f0_coeff(0) == Rational(1));
  CHECK(e11.f0_coeff(1) == Rational(12, 5));
  for (u64 m = 1; m <= 100; ++m) {
    if (m % 11 == 0) continue;
    CHECK(e11.f0_coeff(m) == Rational(24 * i64(sigma1(m)), 10));
  }
  // Pure p-power coefficients collapse to the constant 24/(p-1).
  EisensteinData e13(13);
  CHECK(e13.f0_coeff(13) == Rational(24, 12));
  CHECK(e13.f0_coeff(169) == Rational(2));
}

TEST_CASE("single-class locus has identically zero residuals off p") {
  auto locus = enumerate_locus(13);
  PhiSource phis(13);
  BrandtEngine engine(locus, phis);
  EisensteinData eis(13);
  REQUIRE(locus.n() == 1);
  for (u64 m = 1; m <= 400; ++m) {
    if (m % 13 == 0) continue;
    CHECK(cusp_residual(engine, eis, 0, 0, m) == Rational(0));
    CHECK(deligne_ratio(engine, eis, 0, 0, m) == 0.0);
  }
  // Pure powers of p are exact as well: B(p^k) = [[1]] and the
  // prediction 12/(w (p-1)) = 12/12 = 1.
  CHECK(cusp_residual(engine, eis, 0, 0, 13) == Rational(0));
  CHECK(cusp_residual(engine, eis, 0, 0, 169) == Rational(0));
}

TEST_CASE("frozen residuals at p = 11") {
  auto locus = enumerate_locus(11);
  PhiSource phis(11);
  BrandtEngine engine(locus, phis);
  EisensteinData eis(11);
  REQUIRE(locus.n() == 2);
  // Canonical order is [j=0, j=1728]; 1728 = 1 mod 11.
  std::size_t i1728 = locus.index_of(Fq::from_int(*locus.field, 1));
  CHECK(cusp_residual(engine, eis, i1728, i1728, 1) == Rational(2, 5));
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      Rational c1 = cusp_residual(engine, eis, i, j, 1);
      Rational c2 = cusp_residual(engine, eis, i, j, 2);
      CHECK(c2 == Rational(-2) * c1);
    }
  }
  CHECK(deligne_ratio(engine, eis, i1728, i1728, 1) == doctest::Approx(0.4));
}

TEST_CASE("row sums of residuals vanish off p") {
  for (u64 p : {11ull, 17ull, 19ull, 23ull}) {
    auto locus = enumerate_locus(p);
    PhiSource phis(p);
    BrandtEngine engine(locus, phis);
    EisensteinData eis(p);
    std::vector<u64> ms;
    for (u64 m : {1ull, 2ull, 3ull, 4ull, 6ull, 8ull, 9ull, 12ull, 16ull,
                  24ull, 36ull, 48ull, 96ull, 144ull}) {
      if (m % p != 0) ms.push_back(m);
    }
    for (std::size_t i = 0; i < locus.n(); ++i) {
      for (u64 m : ms) {
        Rational total(0);
        for (std::size_t j = 0; j < locus.n(); ++j) {
          total += cusp_residual(engine, eis, i, j, m);
        }
        CHECK(total == Rational(0));
      }
    }
  }
}

TEST_CASE("residual tables carry the denominator bound") {
  auto locus = enumerate_locus(23);
  PhiSource phis(23);
  BrandtEngine engine(locus, phis);
  EisensteinData eis(23);
  std::vector<u64> ms = {1, 2, 3, 4, 6, 8, 9, 12, 18, 27, 32, 64, 81, 96};
  for (std::size_t i = 0; i < locus.n(); ++i) {
    for (std::size_t j = 0; j < locus.n(); ++j) {
      auto table = cusp_residual_table(engine, eis, i, j, ms);
      CHECK(table.values.size() == ms.size());
      i64 bound = i64(locus.weights[j]) * i64(23 * 23 - 1);
      for (const auto& [m, c] : table.values) {
        CHECK((c * Rational(bound)).den() == 1);
      }
    }
  }
}

TEST_CASE("deligne_ratio rejects multiples of p") {
  auto locus = enumerate_locus(11);
  PhiSource phis(11);
  BrandtEngine engine(locus, phis);
  EisensteinData eis(11);
  CHECK_THROWS_AS(deligne_ratio(engine, eis, 0, 0, 11), InvalidArgument);
  CHECK_THROWS_AS(deligne_ratio(engine, eis, 0, 0, 22), InvalidArgument);
}
