#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "sshecke/modpoly.hpp"

using namespace sshecke;

namespace {

// Independent reduction: positional digit * 10^k accumulation, right to left.
u64 oracle_reduce(const std::string& digits, bool negative, u64 p) {
  u64 r = 0, pw = 1;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    r = (r + u64(*it - '0') * pw) % p;
    pw = (pw * 10) % p;
  }
  if (negative && r != 0) r = p - r;
  return r;
}

PhiPoly parse_text(const std::string& text, u64 ell, u64 p) {
  std::istringstream in(text);
  return parse_phi_stream(in, ell, p, "test input");
}

}  // namespace

TEST_CASE("streaming decimal reduction matches positional oracle") {
  CHECK(reduce_decimal_mod("162000", true, 11) == 8);
  CHECK(reduce_decimal_mod("0", true, 13) == 0);
  CHECK(reduce_decimal_mod("1855425871872000000000", false, 101) ==
        oracle_reduce("1855425871872000000000", false, 101));
  SplitMix64 rng(42);
  for (int t = 0; t < 200; ++t) {
    std::string digits;
    std::size_t len = 1 + rng.below(40);
    for (std::size_t i = 0; i < len; ++i)
      digits.push_back(char('0' + rng.below(10)));
    bool neg = rng.below(2) == 1;
    u64 p = (t % 2) ? 11 : 1000003;
    CHECK(reduce_decimal_mod(digits, neg, p) == oracle_reduce(digits, neg, p));
  }
  CHECK_THROWS_AS(reduce_decimal_mod("12x3", false, 11), ParseError);
  CHECK_THROWS_AS(reduce_decimal_mod("", false, 11), ParseError);
}

TEST_CASE("phi parser accepts the documented grammar") {
  PhiPoly phi = parse_text(
      "# a comment\n"
      "\n"
      "[3,0] 1\n"
      "  [2,2]\t-1\r\n"
      "[2,1]  1488\n"
      "[2,0] -162000\n"
      "[1,1] 40773375\n"
      "[1,0] 8748000000\n"
      "[0,0] -157464000000000\n",
      2, 11);
  CHECK(phi.coeff(3, 0) == 1);
  CHECK(phi.coeff(2, 2) == 10);
  CHECK(phi.coeff(2, 0) == 8);  // -162000 mod 11
  CHECK(phi.coeff(1, 2) == phi.coeff(2, 1));
  CHECK(phi.coeff(0, 3) == 1);
  CHECK(phi.coeff(3, 3) == 0);
}

TEST_CASE("phi parser rejects malformed input with line numbers") {
  auto expect_fail = [](const std::string& text, const char* needle) {
    CHECK_THROWS_WITH_AS(parse_text(text, 2, 11), doctest::Contains(needle),
                         ParseError);
  };
  expect_fail("[3,0] 1\nbogus\n", "line 2");
  expect_fail("(3,0) 1\n", "expected '['");
  expect_fail("[3 0] 1\n", "','");
  expect_fail("[4,0] 1\n", "exceeds ell+1");
  expect_fail("[3,0] 1\n[2,0] 12 junk\n", "trailing");
  expect_fail("[3,0] 1\n[2,0] 5\n[2,0] 7\n", "duplicate");
  expect_fail("[3,0] 1\n[1,2] 5\n", "a >= b");
  expect_fail("[3,0] 1\n[2,0]5\n", "whitespace");
  expect_fail("[3,0] 1\n[2,0] \n", "digits");
  // Missing or non-unit leading coefficient fails validation.
  CHECK_THROWS_WITH_AS(parse_text("[2,0] 5\n", 2, 11),
                       doctest::Contains("monic"), ParseError);
  CHECK_THROWS_WITH_AS(parse_text("[3,0] 2\n", 2, 11),
                       doctest::Contains("monic"), ParseError);
  CHECK_THROWS_WITH_AS(parse_text("[3,0] 1\n[3,1] 4\n", 2, 11),
                       doctest::Contains("vanish"), ParseError);
}

TEST_CASE("serialize then parse round-trips") {
  for (u64 p : {11ull, 13ull, 101ull, 1009ull}) {
    for (u64 ell : {2ull, 3ull}) {
      PhiPoly phi = builtin_phi(ell, p);
      PhiPoly back = parse_text(serialize_phi(phi), ell, p);
      CHECK(back == phi);
    }
  }
}

TEST_CASE("built-in tables satisfy the Kronecker congruence") {
  CHECK(kronecker_congruence_holds(2));
  CHECK(kronecker_congruence_holds(3));
  CHECK_FALSE(builtin_phi_available(5));
  CHECK_THROWS_AS(builtin_phi(5, 11), InvalidArgument);
}

TEST_CASE("phi_row specializes X and keeps Y-degree ell+1") {
  FieldCtxPtr K = make_fp2(11);
  PhiPoly phi = builtin_phi(2, 11);
  PolyFq row0 = phi_row(phi, Fq::zero(*K));
  REQUIRE(row0.degree() == 3);
  CHECK(row0.is_monic());
  // Phi_2(0, Y) = Y^3 - 162000 Y^2 + 8748000000 Y - 157464000000000
  CHECK(row0.coeff(2) == Fq::from_int(*K, i64(reduce_decimal_mod("162000", true, 11))));
  CHECK(row0.coeff(1) ==
        Fq::from_int(*K, i64(reduce_decimal_mod("8748000000", false, 11))));
  CHECK(row0.coeff(0) ==
        Fq::from_int(*K, i64(reduce_decimal_mod("157464000000000", true, 11))));

  // Symmetry: y is a root of phi_row(x) iff x is a root of phi_row(y).
  SplitMix64 rng(9);
  for (int t = 0; t < 30; ++t) {
    Fq x = Fq::from_coords(*K, {rng.below(11), rng.below(11)});
    Fq y = Fq::from_coords(*K, {rng.below(11), rng.below(11)});
    CHECK(phi_row(phi, x).eval(y) == phi_row(phi, y).eval(x));
  }
}

TEST_CASE("phi source serves built-ins and user files") {
  PhiSource src(11);
  CHECK(src.available(2));
  CHECK(src.available(3));
  CHECK_FALSE(src.available(5));
  CHECK_FALSE(src.available(4));
  CHECK(src.get(2).coeff(2, 0) == 8);
  CHECK(&src.get(2) == &src.get(2));  // cached
  CHECK_THROWS_WITH_AS(src.get(5), doctest::Contains("ell = 5"), DataError);

  // A registered file overrides the built-in table.
  std::string path = "/tmp/sshecke_test_phi2_override.txt";
  {
    std::ofstream out(path);
    out << "# fake phi_2 for override test\n[3,0] 1\n[0,0] 7\n";
  }
  src.register_file(2, path);
  CHECK(src.get(2).coeff(0, 0) == 7);
  CHECK_THROWS_AS(PhiSource(11).register_file(4, path), InvalidArgument);
  PhiSource missing(11);
  missing.register_file(7, "/tmp/sshecke_no_such_file.txt");
  CHECK_THROWS_AS(missing.get(7), DataError);
  std::remove(path.c_str());
}
