#pragma once

#include <iosfwd>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "sshecke/arith.hpp"

namespace sshecke {

// The classical modular polynomial Phi_ell(X, Y) reduced mod p. Symmetric in
// X and Y; only pairs with a >= b are stored, the rest resolve through the
// symmetric lookup. Coefficients live in [0, p).
struct PhiPoly {
  u64 ell = 0;
  u64 p = 0;
  // key = a * (ell + 2) + b with a >= b
  std::map<u64, u64> coeffs;

  u64 coeff(u64 a, u64 b) const;
  void set(u64 a, u64 b, u64 v);
  bool operator==(const PhiPoly& o) const = default;
};

// Streaming reduction of a signed decimal literal mod p. Digits are folded
// left to right so arbitrarily long integers never materialize.
u64 reduce_decimal_mod(const std::string& digits, bool negative, u64 p);

// Text format: one "[a,b] c" entry per line where c is a signed decimal
// integer; '#' starts a comment line; blank lines are skipped. The file
// carries only a >= b entries. Degrees are validated against ell and the
// leading X^(ell+1) coefficient must reduce to 1 (monic). Errors carry line
// numbers.
PhiPoly parse_phi_stream(std::istream& in, u64 ell, u64 p,
                         const std::string& origin);
PhiPoly parse_phi_file(const std::string& path, u64 ell, u64 p);

// Canonical text for a reduced PhiPoly; parse(serialize(P)) == P.
std::string serialize_phi(const PhiPoly& phi);

// Built-in integer tables for ell = 2 and 3, reduced mod p on demand.
bool builtin_phi_available(u64 ell);
PhiPoly builtin_phi(u64 ell, u64 p);

// Phi_ell(j, Y) as a univariate polynomial in Y over j's field, monic of
// degree ell + 1.
PolyFq phi_row(const PhiPoly& phi, const Fq& j);

// Kronecker congruence: Phi_ell(X,Y) = (X^ell - Y)(X - Y^ell) mod ell.
// Checked for the built-in tables; an independent sanity gate on the
// transcribed coefficients.
bool kronecker_congruence_holds(u64 ell);

// Thread-safe provider of modular polynomials for a fixed p: built-ins for
// ell = 2, 3 plus user-registered database files, parsed once and cached.
// A registered file overrides the built-in for its ell.
class PhiSource {
 public:
  explicit PhiSource(u64 p) : p_(p) {}

  void register_file(u64 ell, std::string path);
  bool available(u64 ell) const;
  // Throws DataError naming ell when no source covers it.
  const PhiPoly& get(u64 ell) const;
  u64 p() const { return p_; }

 private:
  u64 p_;
  std::map<u64, std::string> files_;
  mutable std::mutex mu_;
  mutable std::map<u64, std::unique_ptr<PhiPoly>> cache_;
};

}  // namespace sshecke
