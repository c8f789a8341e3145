#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "sshecke/errors.hpp"

namespace sshecke {

using u64 = std::uint64_t;
using i64 = std::int64_t;

bool is_prime(u64 n);

// Deterministic PRNG used wherever an algorithm needs random choices
// (equal-degree splitting, random test functions). A fixed default seed
// keeps output bit-for-bit reproducible run to run.
class SplitMix64 {
 public:
  explicit SplitMix64(u64 seed) : state_(seed) {}
  u64 next() {
    u64 z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  u64 below(u64 bound) { return next() % bound; }

 private:
  u64 state_;
};

inline constexpr u64 kDefaultSeed = 20260815ull;

class FieldCtx;
using FieldCtxPtr = std::shared_ptr<const FieldCtx>;

// Element of a finite field F_{p^d}. Coordinates are in the power basis of
// the defining extension tower, flattened down to base-p residues, each in
// [0, p). The context pointer is borrowed; the context must outlive the
// element. Ops on elements from structurally different contexts throw
// MathError.
class Fq {
 public:
  Fq() : ctx_(nullptr) {}

  static Fq zero(const FieldCtx& ctx);
  static Fq one(const FieldCtx& ctx);
  static Fq from_int(const FieldCtx& ctx, i64 v);
  static Fq from_coords(const FieldCtx& ctx, std::vector<u64> coords);
  // Class of the generator adjoined by the top extension (the image of x).
  static Fq gen(const FieldCtx& ctx);

  const FieldCtx& ctx() const { return *ctx_; }
  const std::vector<u64>& coords() const { return c_; }
  bool is_zero() const;

  friend Fq operator+(const Fq& a, const Fq& b);
  friend Fq operator-(const Fq& a, const Fq& b);
  friend Fq operator*(const Fq& a, const Fq& b);
  Fq operator-() const;
  friend bool operator==(const Fq& a, const Fq& b);
  friend bool operator!=(const Fq& a, const Fq& b) { return !(a == b); }

 private:
  friend class FieldCtx;
  const FieldCtx* ctx_;
  std::vector<u64> c_;
};

Fq inv(const Fq& a);
Fq pow(const Fq& a, u64 e);
// x -> x^p, the generator of Gal(F_{p^d}/F_p).
Fq frobenius(const Fq& a);
// Membership in the prime field: a^p = a.
bool in_prime_field(const Fq& a);
// Total order on elements of one field, used for canonical sorting:
// lexicographic on the flattened coordinates.
bool canonical_less(const Fq& a, const Fq& b);
// "c0" for prime-field values, "c0+c1*u" when the u-part is nonzero.
std::string to_string(const Fq& a);

// Dense univariate polynomial over a finite field. Coefficients are stored
// low degree first with a nonzero leading coefficient; the zero polynomial
// has an empty coefficient list and degree -1.
class PolyFq {
 public:
  PolyFq() : ctx_(nullptr) {}
  explicit PolyFq(const FieldCtx& ctx) : ctx_(&ctx) {}

  static PolyFq from_coeffs(const FieldCtx& ctx, std::vector<Fq> c);
  static PolyFq constant(const Fq& c);
  static PolyFq x(const FieldCtx& ctx);

  const FieldCtx& ctx() const { return *ctx_; }
  int degree() const { return int(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Fq coeff(std::size_t i) const;
  Fq leading() const;
  bool is_monic() const;
  PolyFq make_monic() const;

  Fq eval(const Fq& x) const;
  PolyFq derivative() const;
  // f(x + shift): substitution used to re-present a quotient ring on a
  // shifted generator.
  PolyFq compose_x_plus(const Fq& shift) const;

  friend PolyFq operator+(const PolyFq& a, const PolyFq& b);
  friend PolyFq operator-(const PolyFq& a, const PolyFq& b);
  friend PolyFq operator*(const PolyFq& a, const PolyFq& b);
  friend PolyFq operator*(const Fq& s, const PolyFq& a);
  friend bool operator==(const PolyFq& a, const PolyFq& b);
  friend bool operator!=(const PolyFq& a, const PolyFq& b) { return !(a == b); }

 private:
  void normalize();
  const FieldCtx* ctx_;
  std::vector<Fq> c_;
};

// q = a*b + r with deg r < deg b. b must be nonzero.
void poly_divmod(const PolyFq& a, const PolyFq& b, PolyFq& q, PolyFq& r);
PolyFq operator/(const PolyFq& a, const PolyFq& b);
PolyFq operator%(const PolyFq& a, const PolyFq& b);
// Monic gcd.
PolyFq poly_gcd(PolyFq a, PolyFq b);
PolyFq poly_mulmod(const PolyFq& a, const PolyFq& b, const PolyFq& f);
PolyFq poly_powmod(const PolyFq& a, u64 e, const PolyFq& f);

// All roots of f in the field of its coefficients, with multiplicities,
// sorted canonically. Distinct roots come from gcd(f, x^q - x); splitting is
// randomized (seeded); multiplicities by repeated division.
std::vector<std::pair<Fq, int>> roots_with_multiplicity(const PolyFq& f,
                                                        u64 seed = kDefaultSeed);

// Full factorization into monic irreducibles with multiplicities, sorted by
// (degree, coefficients). Requires a separable squarefree part, which holds
// whenever deg f < p.
std::vector<std::pair<PolyFq, int>> factorize(const PolyFq& f, u64 seed = kDefaultSeed);

bool is_irreducible(const PolyFq& f);

// Finite fields are built as towers: the prime field F_p, extensions of it
// by monic irreducible polynomials, and extensions of those. Each context
// owns its base context and defining modulus; elements only borrow.
class FieldCtx : public std::enable_shared_from_this<FieldCtx> {
 public:
  // F_p for prime p with 5 <= p < 2^31. Violations throw InvalidArgument
  // with a diagnostic naming the failure.
  static FieldCtxPtr prime_field(u64 p);
  // F_{p^2} presented as F_p[u]/(u^2 - r) where r is the smallest
  // quadratic nonresidue mod p.
  static FieldCtxPtr quadratic_ext(u64 p);
  // Extension of an arbitrary base by a monic irreducible modulus over it.
  static FieldCtxPtr extension(FieldCtxPtr base, PolyFq modulus);

  u64 p() const { return p_; }
  // Absolute degree over F_p.
  std::size_t degree() const { return abs_degree_; }
  // Degree over the immediate base field (1 for the prime field itself).
  std::size_t ext_degree() const { return ext_degree_; }
  const FieldCtx* base() const { return base_.get(); }
  bool is_prime_field() const { return base_ == nullptr; }
  const PolyFq& modulus() const;
  // True when this field is F_p[u]/(u^2 - r), the shape with fast-path ops.
  bool quad_over_prime() const { return quad_fast_; }
  // The r in the defining u^2 - r; only quadratic extensions of F_p have one.
  u64 quad_nonresidue() const;
  // Field size p^degree; throws OverflowError when it does not fit u64.
  u64 size() const;
  bool structurally_equal(const FieldCtx& o) const;
  // Owning handle to this context; valid because construction always goes
  // through the shared_ptr factories.
  FieldCtxPtr shared() const { return shared_from_this(); }

 private:
  friend class Fq;
  FieldCtx() = default;

  u64 p_ = 0;
  std::size_t abs_degree_ = 1;
  std::size_t ext_degree_ = 1;
  FieldCtxPtr base_;
  PolyFq modulus_;       // over base_, monic irreducible; empty for F_p
  bool quad_fast_ = false;  // degree-2 extension of F_p by x^2 - r
  u64 quad_r_ = 0;
};

// Convenience spelling for the field every j-invariant lives in.
FieldCtxPtr make_fp2(u64 p);

}  // namespace sshecke
