#include "doctest.h"

#include <algorithm>
#include <string>
#include <vector>

#include "sshecke/arith.hpp"

using namespace sshecke;

TEST_CASE("primality by trial division") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(101));
  CHECK(is_prime(104729));
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK_FALSE(is_prime(100000));
}

TEST_CASE("prime field construction validates p") {
  CHECK_NOTHROW(FieldCtx::prime_field(5));
  CHECK_THROWS_WITH_AS(FieldCtx::prime_field(3), doctest::Contains(">= 5"),
                       InvalidArgument);
  CHECK_THROWS_WITH_AS(FieldCtx::prime_field(9), doctest::Contains("composite"),
                       InvalidArgument);
  CHECK_THROWS_WITH_AS(FieldCtx::prime_field(u64(1) << 31),
                       doctest::Contains("2^31"), InvalidArgument);
}

TEST_CASE("prime field arithmetic") {
  FieldCtxPtr F = FieldCtx::prime_field(13);
  Fq a = Fq::from_int(*F, 9);
  Fq b = Fq::from_int(*F, 7);
  CHECK(a + b == Fq::from_int(*F, 3));
  CHECK(a - b == Fq::from_int(*F, 2));
  CHECK(a * b == Fq::from_int(*F, 63));
  CHECK(-a == Fq::from_int(*F, 4));
  CHECK(Fq::from_int(*F, -1) == Fq::from_int(*F, 12));
  for (i64 x = 1; x < 13; ++x) {
    Fq e = Fq::from_int(*F, x);
    CHECK(e * inv(e) == Fq::one(*F));
  }
  CHECK_THROWS_AS(inv(Fq::zero(*F)), MathError);
  CHECK(in_prime_field(a));
  CHECK(frobenius(a) == a);
}

TEST_CASE("quadratic extension uses the smallest nonresidue") {
  // 2 is the smallest nonresidue both mod 11 and mod 13.
  CHECK(make_fp2(11)->quad_nonresidue() == 2);
  CHECK(make_fp2(13)->quad_nonresidue() == 2);
  // Squares mod 7 are {1,2,4}, so the smallest nonresidue is 3.
  CHECK(make_fp2(7)->quad_nonresidue() == 3);
  CHECK(make_fp2(11)->size() == 121);
  CHECK(make_fp2(11)->degree() == 2);
}

TEST_CASE("quadratic extension arithmetic") {
  FieldCtxPtr K = make_fp2(11);
  Fq u = Fq::gen(*K);
  CHECK(u * u == Fq::from_int(*K, 2));
  CHECK(frobenius(u) == -u);
  CHECK(frobenius(Fq::from_int(*K, 7)) == Fq::from_int(*K, 7));
  CHECK(in_prime_field(Fq::from_int(*K, 4)));
  CHECK_FALSE(in_prime_field(u));

  SplitMix64 rng(1);
  for (int t = 0; t < 50; ++t) {
    Fq a = Fq::from_coords(*K, {rng.below(11), rng.below(11)});
    if (a.is_zero()) continue;
    CHECK(a * inv(a) == Fq::one(*K));
    CHECK(pow(a, 120) == Fq::one(*K));
    CHECK(frobenius(frobenius(a)) == a);
  }
}

TEST_CASE("ops reject mismatched contexts") {
  FieldCtxPtr F11 = make_fp2(11);
  FieldCtxPtr F13 = make_fp2(13);
  CHECK_THROWS_AS(Fq::one(*F11) + Fq::one(*F13), MathError);
  // Structurally identical contexts interoperate even as distinct objects.
  FieldCtxPtr F11b = make_fp2(11);
  CHECK(Fq::from_int(*F11, 3) + Fq::from_int(*F11b, 4) == Fq::from_int(*F11, 7));
}

TEST_CASE("element printing") {
  FieldCtxPtr K = make_fp2(11);
  CHECK(to_string(Fq::from_int(*K, 5)) == "5");
  CHECK(to_string(Fq::from_coords(*K, {3, 10})) == "3+10*u");
  FieldCtxPtr F = FieldCtx::prime_field(13);
  CHECK(to_string(Fq::from_int(*F, 12)) == "12");
}

namespace {

PolyFq poly_from_ints(const FieldCtx& K, std::vector<i64> cs) {
  std::vector<Fq> v;
  v.reserve(cs.size());
  for (i64 c : cs) v.push_back(Fq::from_int(K, c));
  return PolyFq::from_coeffs(K, std::move(v));
}

}  // namespace

TEST_CASE("polynomial division satisfies a = qb + r") {
  FieldCtxPtr K = make_fp2(13);
  SplitMix64 rng(7);
  for (int t = 0; t < 40; ++t) {
    std::vector<Fq> ac, bc;
    int da = int(rng.below(8)), db = int(rng.below(5)) + 1;
    for (int i = 0; i <= da; ++i)
      ac.push_back(Fq::from_coords(*K, {rng.below(13), rng.below(13)}));
    for (int i = 0; i <= db; ++i)
      bc.push_back(Fq::from_coords(*K, {rng.below(13), rng.below(13)}));
    PolyFq a = PolyFq::from_coeffs(*K, ac);
    PolyFq b = PolyFq::from_coeffs(*K, bc);
    if (b.is_zero()) {
      CHECK_THROWS_AS(a % b, MathError);
      continue;
    }
    PolyFq q, r;
    poly_divmod(a, b, q, r);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
  }
}

TEST_CASE("polynomial gcd") {
  FieldCtxPtr F = FieldCtx::prime_field(13);
  PolyFq a = poly_from_ints(*F, {2, -3, 1});   // (x-1)(x-2)
  PolyFq b = poly_from_ints(*F, {6, -5, 1});   // (x-2)(x-3)
  CHECK(poly_gcd(a, b) == poly_from_ints(*F, {-2, 1}));
  CHECK(poly_gcd(a, poly_from_ints(*F, {1})).degree() == 0);
}

TEST_CASE("evaluation and shift composition") {
  FieldCtxPtr K = make_fp2(11);
  SplitMix64 rng(3);
  for (int t = 0; t < 20; ++t) {
    std::vector<Fq> cs;
    for (int i = 0; i < 5; ++i)
      cs.push_back(Fq::from_coords(*K, {rng.below(11), rng.below(11)}));
    PolyFq f = PolyFq::from_coeffs(*K, cs);
    Fq s = Fq::from_coords(*K, {rng.below(11), rng.below(11)});
    Fq x = Fq::from_coords(*K, {rng.below(11), rng.below(11)});
    CHECK(f.compose_x_plus(s).eval(x) == f.eval(x + s));
  }
}

TEST_CASE("root finding with multiplicities over F_p and F_p^2") {
  FieldCtxPtr K = make_fp2(11);
  Fq r1 = Fq::from_int(*K, 3);
  Fq r2 = Fq::from_coords(*K, {5, 2});
  Fq r3 = Fq::from_coords(*K, {5, 9});  // conjugate of r2
  PolyFq lin1 = poly_from_ints(*K, {-3, 1});
  PolyFq lin2 = PolyFq::from_coeffs(*K, {-r2, Fq::one(*K)});
  PolyFq lin3 = PolyFq::from_coeffs(*K, {-r3, Fq::one(*K)});
  // x^2 - u is irreducible over F_121 iff u is a nonsquare there; u = gen
  // has norm -2, a residue mod 11, so pick a known irreducible instead.
  PolyFq quad;
  for (u64 c0 = 1;; ++c0) {
    quad = PolyFq::from_coeffs(
        *K, {Fq::from_coords(*K, {c0, 1}), Fq::zero(*K), Fq::one(*K)});
    if (is_irreducible(quad)) break;
  }
  PolyFq f = lin1 * lin1 * lin1 * lin2 * lin3 * lin3 * quad;
  auto roots = roots_with_multiplicity(f);
  REQUIRE(roots.size() == 3);
  // Canonical order: coordinates compared lexicographically.
  CHECK(roots[0].first == r1);
  CHECK(roots[0].second == 3);
  CHECK(roots[1].first == r2);
  CHECK(roots[1].second == 1);
  CHECK(roots[2].first == r3);
  CHECK(roots[2].second == 2);

  // Same output for any seed: the result is canonically sorted.
  auto again = roots_with_multiplicity(f, 987654321);
  CHECK(roots == again);

  CHECK(roots_with_multiplicity(quad).empty());
  CHECK_THROWS_AS(roots_with_multiplicity(PolyFq(*K)), InvalidArgument);
}

TEST_CASE("irreducibility test") {
  FieldCtxPtr F = FieldCtx::prime_field(11);
  // 2 is a nonresidue mod 11, 3 = 5^2 is a residue.
  CHECK(is_irreducible(poly_from_ints(*F, {-2, 0, 1})));
  CHECK_FALSE(is_irreducible(poly_from_ints(*F, {-3, 0, 1})));
  CHECK(is_irreducible(poly_from_ints(*F, {4, 1})));
  CHECK_FALSE(is_irreducible(poly_from_ints(*F, {7})));
  // x^3 - 2 over F_11: 2 is not a cube mod 11? Cubes mod 11 cover everything
  // since gcd(3,10)=1, so x^3-2 has a root and splits off a linear factor.
  CHECK_FALSE(is_irreducible(poly_from_ints(*F, {-2, 0, 0, 1})));
}

TEST_CASE("factorization recomposes and respects multiplicities") {
  FieldCtxPtr K = make_fp2(13);
  SplitMix64 rng(11);
  for (int t = 0; t < 10; ++t) {
    // Plant monic factors: a few linears and an irreducible quadratic.
    std::vector<std::pair<PolyFq, int>> planted;
    PolyFq f = PolyFq::constant(Fq::one(*K));
    int nlin = 1 + int(rng.below(3));
    std::vector<u64> used;
    for (int i = 0; i < nlin; ++i) {
      u64 rv = rng.below(13);
      if (std::find(used.begin(), used.end(), rv) != used.end()) continue;
      used.push_back(rv);
      PolyFq lin = PolyFq::from_coeffs(
          *K, {-Fq::from_int(*K, i64(rv)), Fq::one(*K)});
      int mult = 1 + int(rng.below(3));
      planted.emplace_back(lin, mult);
      for (int m = 0; m < mult; ++m) f = f * lin;
    }
    PolyFq quad;
    for (u64 c0 = rng.below(13);; ++c0) {
      quad = PolyFq::from_coeffs(
          *K, {Fq::from_coords(*K, {c0 % 13, 1}), Fq::zero(*K), Fq::one(*K)});
      if (is_irreducible(quad)) break;
    }
    planted.emplace_back(quad, 1);
    f = f * quad;

    auto factors = factorize(f);
    PolyFq rebuilt = PolyFq::constant(Fq::one(*K));
    int total = 0;
    for (const auto& [g, m] : factors) {
      CHECK(g.is_monic());
      CHECK(is_irreducible(g));
      for (int i = 0; i < m; ++i) rebuilt = rebuilt * g;
      total += m * g.degree();
    }
    CHECK(rebuilt == f.make_monic());
    CHECK(total == f.degree());
    CHECK(factors.size() == planted.size());
  }
}

TEST_CASE("towers above F_p^2") {
  FieldCtxPtr K = make_fp2(11);
  PolyFq quad;
  for (u64 c0 = 1;; ++c0) {
    quad = PolyFq::from_coeffs(
        *K, {Fq::from_coords(*K, {c0, 1}), Fq::zero(*K), Fq::one(*K)});
    if (is_irreducible(quad)) break;
  }
  FieldCtxPtr T = FieldCtx::extension(K, quad);
  CHECK(T->degree() == 4);
  CHECK(T->ext_degree() == 2);
  CHECK(T->size() == 14641);

  Fq t = Fq::gen(*T);
  // t^2 = -c0 where quad = x^2 + c0; verify via the flattening layout.
  Fq c0 = Fq::from_coords(*T, {quad.coeff(0).coords()[0],
                               quad.coeff(0).coords()[1], 0, 0});
  CHECK(t * t == -c0);
  SplitMix64 rng(5);
  for (int i = 0; i < 20; ++i) {
    Fq a = Fq::from_coords(
        *T, {rng.below(11), rng.below(11), rng.below(11), rng.below(11)});
    if (a.is_zero()) continue;
    CHECK(a * inv(a) == Fq::one(*T));
    Fq fr = a;
    for (int k = 0; k < 4; ++k) fr = frobenius(fr);
    CHECK(fr == a);
  }
  CHECK_THROWS_AS(
      FieldCtx::extension(K, poly_from_ints(*K, {-3, 0, 1})),  // 3 = 5^2
      InvalidArgument);
}
