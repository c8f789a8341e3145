#include "doctest.h"

#include <vector>

#include "sshecke/velu.hpp"

using namespace sshecke;

TEST_CASE("the three 2-isogenies at p=11 connect j=0 and j=1728") {
  SupersingularLocus L = enumerate_locus(11);
  auto M = velu_neighbour_counts(L, 2);
  // From j=0, all three 2-isogenies land on j=1728 (=1 mod 11); from
  // j=1728, two go back and one loops to j=0... the counts below are the
  // full picture.
  CHECK(M == std::vector<std::vector<i64>>{{0, 3}, {2, 1}});
}

TEST_CASE("p=13 has a single class with all isogenies looping") {
  SupersingularLocus L = enumerate_locus(13);
  auto M2 = velu_neighbour_counts(L, 2);
  CHECK(M2 == std::vector<std::vector<i64>>{{3}});
  auto M3 = velu_neighbour_counts(L, 3);
  CHECK(M3 == std::vector<std::vector<i64>>{{4}});
}

TEST_CASE("isogeny multisets are invariant under the quotient-ring shift") {
  for (u64 p : {11ull, 13ull, 17ull, 23ull}) {
    SupersingularLocus L = enumerate_locus(p);
    for (u64 ell : {2ull, 3ull}) {
      auto base = velu_neighbour_counts(L, ell, 0);
      for (i64 shift : {1, 2, 7}) {
        CHECK(base == velu_neighbour_counts(L, ell, shift));
      }
    }
  }
}

TEST_CASE("velu quotients match the roots of the modular polynomial") {
  for (u64 p : {11ull, 13ull, 17ull, 19ull, 23ull, 101ull}) {
    SupersingularLocus L = enumerate_locus(p);
    for (u64 ell : {2ull, 3ull}) {
      PhiPoly phi = builtin_phi(ell, p);
      for (std::size_t i = 0; i < L.n(); ++i) {
        CurveModel E = CurveModel::from_j(L.js[i]);
        auto isog = enumerate_isogenies(E, ell);
        auto roots = roots_with_multiplicity(phi_row(phi, L.js[i]));
        REQUIRE(isog.size() == roots.size());
        for (std::size_t k = 0; k < isog.size(); ++k) {
          CHECK(isog[k].first == roots[k].first);
          CHECK(isog[k].second == roots[k].second);
        }
      }
    }
  }
}

TEST_CASE("row sums equal ell+1 and weighted counts are symmetric") {
  for (u64 p : {11ull, 17ull, 101ull}) {
    SupersingularLocus L = enumerate_locus(p);
    for (u64 ell : {2ull, 3ull}) {
      auto M = velu_neighbour_counts(L, ell);
      for (std::size_t i = 0; i < L.n(); ++i) {
        i64 s = 0;
        for (std::size_t k = 0; k < L.n(); ++k) s += M[i][k];
        CHECK(s == i64(ell) + 1);
        for (std::size_t k = 0; k < L.n(); ++k) {
          CHECK(M[i][k] * L.weights[k] == M[k][i] * L.weights[i]);
        }
      }
    }
  }
}

TEST_CASE("unsupported degrees are rejected") {
  SupersingularLocus L = enumerate_locus(11);
  CurveModel E = CurveModel::from_j(L.js[0]);
  CHECK_THROWS_AS(enumerate_isogenies(E, 5), InvalidArgument);
  CHECK_THROWS_AS(enumerate_isogenies(E, 11), InvalidArgument);
}
