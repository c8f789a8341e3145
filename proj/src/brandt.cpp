#include "sshecke/brandt.hpp"

namespace sshecke {

namespace {

using i128 = __int128;

i64 narrow(i128 v) {
  if (v > i128(INT64_MAX) || v < i128(INT64_MIN))
    throw OverflowError("matrix arithmetic exceeds 64-bit range");
  return i64(v);
}

std::vector<std::pair<u64, u64>> factor(u64 m) {
  std::vector<std::pair<u64, u64>> fs;
  for (u64 q = 2; q * q <= m; ++q) {
    if (m % q) continue;
    u64 e = 0;
    while (m % q == 0) {
      m /= q;
      ++e;
    }
    fs.emplace_back(q, e);
  }
  if (m > 1) fs.emplace_back(m, 1);
  return fs;
}

}  // namespace

u64 sigma_p(u64 m, u64 p) {
  if (m == 0) throw InvalidArgument("sigma_p is defined for m >= 1");
  u64 s = 1;
  for (auto [q, e] : factor(m)) {
    if (q == p) continue;
    u64 term = 1, qp = 1;
    for (u64 i = 0; i < e; ++i) {
      qp = narrow(i128(qp) * i128(q));
      term = narrow(i128(term) + i128(qp));
    }
    s = narrow(i128(s) * i128(term));
  }
  return s;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<i64>>& rows) {
  IntMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size())
      throw InvalidArgument("matrix rows must form a square");
    for (std::size_t j = 0; j < rows.size(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

i64 IntMatrix::row_sum(std::size_t i) const {
  i128 s = 0;
  for (std::size_t j = 0; j < n_; ++j) s += at(i, j);
  return narrow(s);
}

IntMatrix IntMatrix::scaled(i64 s) const {
  IntMatrix r(n_);
  for (std::size_t i = 0; i < v_.size(); ++i) r.v_[i] = narrow(i128(v_[i]) * s);
  return r;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.n_ != b.n_) throw InvalidArgument("matrix size mismatch");
  IntMatrix r(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i) {
    for (std::size_t j = 0; j < a.n_; ++j) {
      i128 s = 0;
      for (std::size_t k = 0; k < a.n_; ++k) s += i128(a.at(i, k)) * b.at(k, j);
      r.at(i, j) = narrow(s);
    }
  }
  return r;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.n_ != b.n_) throw InvalidArgument("matrix size mismatch");
  IntMatrix r(a.n_);
  for (std::size_t i = 0; i < a.v_.size(); ++i)
    r.v_[i] = narrow(i128(a.v_[i]) + b.v_[i]);
  return r;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.n_ != b.n_) throw InvalidArgument("matrix size mismatch");
  IntMatrix r(a.n_);
  for (std::size_t i = 0; i < a.v_.size(); ++i)
    r.v_[i] = narrow(i128(a.v_[i]) - b.v_[i]);
  return r;
}

Rational Divisor::degree() const {
  Rational d(0);
  for (const Rational& c : coeffs) d += c;
  return d;
}

Divisor Divisor::basis(const SupersingularLocus& locus, std::size_t i) {
  if (i >= locus.n()) throw InvalidArgument("basis index out of range");
  Divisor d;
  d.locus = &locus;
  d.coeffs.assign(locus.n(), Rational(0));
  d.coeffs[i] = Rational(1);
  return d;
}

Divisor Divisor::eisenstein(const SupersingularLocus& locus) {
  Divisor d;
  d.locus = &locus;
  for (int w : locus.weights) d.coeffs.emplace_back(1, w);
  return d;
}

BrandtEngine::BrandtEngine(const SupersingularLocus& locus, const PhiSource& phis)
    : locus_(&locus), phis_(&phis), tau_(locus.frobenius_perm()) {
  if (phis.p() != locus.p)
    throw InvalidArgument("phi source and locus disagree on p");
}

IntMatrix BrandtEngine::prime_matrix(u64 ell) const {
  u64 p = locus_->p;
  if (!is_prime(ell) || ell == p)
    throw InvalidArgument("prime_matrix needs a prime ell != p");
  std::size_t n = locus_->n();
  if (!phis_->available(ell)) {
    if (n == 1) {
      // One class: the row sum sigma(ell)_p = ell + 1 determines B(ell).
      IntMatrix m(1);
      m.at(0, 0) = i64(ell) + 1;
      return m;
    }
    throw DataError("modular polynomial database required for ell = " +
                    std::to_string(ell));
  }
  const PhiPoly& phi = phis_->get(ell);
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    PolyFq row = phi_row(phi, locus_->js[i]);
    int total = 0;
    for (const auto& [root, mult] : roots_with_multiplicity(row)) {
      // Every root must be a supersingular class; index_of enforces it.
      m.at(i, locus_->index_of(root)) += mult;
      total += mult;
    }
    if (total != i64(ell) + 1)
      throw ConsistencyError("phi_" + std::to_string(ell) + "(j_" +
                             std::to_string(i + 1) +
                             ", Y) does not split over F_p^2 with degree ell+1");
  }
  return m;
}

IntMatrix BrandtEngine::frobenius_power(u64 k) const {
  std::size_t n = locus_->n();
  if (k % 2 == 0) return IntMatrix::identity(n);
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, tau_[i]) = 1;
  return m;
}

bool BrandtEngine::can_compute(u64 m) const {
  if (m == 0) return false;
  for (auto [q, e] : factor(m)) {
    (void)e;
    if (q == locus_->p) continue;
    if (!phis_->available(q) && locus_->n() != 1) return false;
  }
  return true;
}

std::shared_ptr<const BrandtMatrix> BrandtEngine::matrix(u64 m) const {
  if (m == 0) throw InvalidArgument("Brandt matrices are indexed by m >= 1");
  std::lock_guard<std::recursive_mutex> lock(mu_);
  return matrix_locked(m);
}

std::shared_ptr<const BrandtMatrix> BrandtEngine::matrix_locked(u64 m) const {
  auto it = memo_.find(m);
  if (it != memo_.end()) return it->second;
  u64 p = locus_->p;
  IntMatrix result;
  auto fs = factor(m);
  if (m == 1) {
    result = IntMatrix::identity(locus_->n());
  } else if (fs.size() > 1) {
    // Coprime multiplicativity.
    u64 q0 = fs[0].first, e0 = fs[0].second;
    u64 head = 1;
    for (u64 i = 0; i < e0; ++i) head *= q0;
    // Resolve the smallest prime first so a missing database is reported
    // deterministically.
    auto left = matrix_locked(head);
    result = left->mat * matrix_locked(m / head)->mat;
  } else {
    u64 q = fs[0].first, e = fs[0].second;
    if (q == p) {
      result = frobenius_power(e);
    } else if (e == 1) {
      result = prime_matrix(q);
    } else {
      // B(q^e) = B(q) B(q^(e-1)) - q B(q^(e-2))
      u64 qe1 = 1;
      for (u64 i = 0; i < e - 1; ++i) qe1 *= q;
      result = matrix_locked(q)->mat * matrix_locked(qe1)->mat -
               matrix_locked(qe1 / q)->mat.scaled(i64(q));
    }
  }
  auto bm = std::make_shared<BrandtMatrix>();
  bm->m = m;
  bm->mat = std::move(result);
  memo_[m] = bm;
  return bm;
}

Divisor hecke_apply(const IntMatrix& B, const Divisor& D) {
  if (!D.locus) throw InvalidArgument("divisor has no locus");
  std::size_t n = D.locus->n();
  if (B.n() != n || D.coeffs.size() != n)
    throw MathError("matrix and divisor sizes disagree");
  Divisor out;
  out.locus = D.locus;
  out.coeffs.assign(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (D.coeffs[i].is_zero()) continue;
    for (std::size_t k = 0; k < n; ++k) {
      if (B.at(i, k) == 0) continue;
      out.coeffs[k] += D.coeffs[i] * Rational(B.at(i, k));
    }
  }
  return out;
}

}  // namespace sshecke
