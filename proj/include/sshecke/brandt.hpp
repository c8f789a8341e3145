#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "sshecke/modpoly.hpp"
#include "sshecke/rational.hpp"
#include "sshecke/ssgraph.hpp"

namespace sshecke {

// Sum of the divisors of m that are coprime to p.
u64 sigma_p(u64 m, u64 p);

// Dense square matrix of 64-bit integers. Arithmetic accumulates in 128
// bits and throws OverflowError on narrowing instead of wrapping.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), v_(n * n, 0) {}
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<i64>>& rows);

  std::size_t n() const { return n_; }
  i64& at(std::size_t i, std::size_t j) { return v_[i * n_ + j]; }
  i64 at(std::size_t i, std::size_t j) const { return v_[i * n_ + j]; }
  i64 row_sum(std::size_t i) const;
  IntMatrix scaled(i64 s) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  bool operator==(const IntMatrix& o) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<i64> v_;
};

// Formal rational divisor supported on the locus classes.
struct Divisor {
  const SupersingularLocus* locus = nullptr;
  std::vector<Rational> coeffs;

  Rational degree() const;
  static Divisor basis(const SupersingularLocus& locus, std::size_t i);
  // e = sum_i (1/w_i) E_i, the Eisenstein divisor; a simultaneous
  // eigenvector for every Hecke operator.
  static Divisor eisenstein(const SupersingularLocus& locus);
  bool operator==(const Divisor& o) const { return coeffs == o.coeffs; }
};

struct BrandtMatrix {
  u64 m = 0;
  IntMatrix mat;
};

// Brandt matrices over a fixed locus. B(ell) for prime ell != p counts the
// roots of phi_ell(j_i, Y) on the locus; B(p^k) is the Frobenius permutation
// for odd k and the identity for even k; prime powers follow the Hecke
// recursion B(ell^(k+1)) = B(ell) B(ell^k) - ell B(ell^(k-1)); coprime parts
// multiply. Results are memoized; the cache is safe to share across threads.
// The locus and phi source are borrowed and must outlive the engine.
class BrandtEngine {
 public:
  BrandtEngine(const SupersingularLocus& locus, const PhiSource& phis);

  const SupersingularLocus& locus() const { return *locus_; }
  u64 p() const { return locus_->p; }

  // B(m) for m >= 1. Throws DataError naming the first prime factor with no
  // modular polynomial source (the single-class locus needs none: row sums
  // pin every 1x1 matrix).
  std::shared_ptr<const BrandtMatrix> matrix(u64 m) const;
  // B(ell) for prime ell != p, straight from the phi roots.
  IntMatrix prime_matrix(u64 ell) const;
  // B(p^k).
  IntMatrix frobenius_power(u64 k) const;
  const std::vector<std::size_t>& frobenius() const { return tau_; }
  bool can_compute(u64 m) const;

 private:
  std::shared_ptr<const BrandtMatrix> matrix_locked(u64 m) const;

  const SupersingularLocus* locus_;
  const PhiSource* phis_;
  std::vector<std::size_t> tau_;
  mutable std::recursive_mutex mu_;
  mutable std::map<u64, std::shared_ptr<const BrandtMatrix>> memo_;
};

// T_m acting on divisors: the coefficient vector moves through B(m)
// transposed, so deg(T_m D) = sigma(m)_p deg(D).
Divisor hecke_apply(const IntMatrix& B, const Divisor& D);

}  // namespace sshecke
