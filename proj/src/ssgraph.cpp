#include "sshecke/ssgraph.hpp"

#include <algorithm>
#include <array>
#include <deque>

namespace sshecke {

std::pair<Fq, Fq> weierstrass_from_j(const Fq& j) {
  const FieldCtx& K = j.ctx();
  Fq j1728 = Fq::from_int(K, 1728);
  if (j.is_zero()) return {Fq::zero(K), Fq::one(K)};
  if (j == j1728) return {Fq::one(K), Fq::zero(K)};
  Fq d = j1728 - j;
  Fq a = Fq::from_int(K, 3) * j * d;
  Fq b = Fq::from_int(K, 2) * j * d * d;
  return {a, b};
}

HasseTester::HasseTester(u64 p) : p_(p) {
  if (p < 5 || !is_prime(p))
    throw InvalidArgument("HasseTester needs a prime p >= 5 (got " +
                          std::to_string(p) + ")");
  u64 n = (p - 1) / 2;
  fact_.resize(n + 1);
  inv_fact_.resize(n + 1);
  fact_[0] = 1;
  for (u64 i = 1; i <= n; ++i) fact_[i] = (fact_[i - 1] * i) % p;
  // inv_fact[n] by Fermat, then backward recurrence.
  u64 inv = 1, base = fact_[n], e = p - 2;
  while (e) {
    if (e & 1) inv = (inv * base) % p;
    base = (base * base) % p;
    e >>= 1;
  }
  inv_fact_[n] = inv;
  for (u64 i = n; i > 0; --i) inv_fact_[i - 1] = (inv_fact_[i] * i) % p;
}

bool HasseTester::is_supersingular(const Fq& j) const {
  const FieldCtx& K = j.ctx();
  if (K.p() != p_) throw MathError("element characteristic does not match tester");
  // For j = 0 and j = 1728 the multinomial sum collapses to a single
  // binomial term that is automatically a unit mod p, so supersingularity
  // depends only on whether that term exists at x-exponent p-1.
  if (j.is_zero()) return p_ % 3 == 2;
  if (j == Fq::from_int(K, 1728)) return p_ % 4 == 3;
  auto [a, b] = weierstrass_from_j(j);
  // coefficient of x^(p-1) in (x^3 + ax + b)^N with N = (p-1)/2:
  //   sum over i of N! / (i! (2N-3i)! (2i-N)!) * a^(2N-3i) * b^(2i-N)
  // where i counts cubes, running over ceil(N/2) <= i <= floor(2N/3).
  u64 n = (p_ - 1) / 2;
  u64 ilo = (n + 1) / 2, ihi = (2 * n) / 3;
  // a and b are nonzero away from j = 0, 1728, so incremental updates by
  // a^-3 and b^2 are valid.
  Fq apow = pow(a, 2 * n - 3 * ilo);
  Fq bpow = pow(b, 2 * ilo - n);
  Fq ainv3 = pow(inv(a), 3);
  Fq bsq = b * b;
  Fq sum = Fq::zero(K);
  for (u64 i = ilo; i <= ihi; ++i) {
    u64 c = fact_[n];
    c = (c * inv_fact_[i]) % p_;
    c = (c * inv_fact_[2 * n - 3 * i]) % p_;
    c = (c * inv_fact_[2 * i - n]) % p_;
    sum = sum + Fq::from_int(K, i64(c)) * apow * bpow;
    apow = apow * ainv3;
    bpow = bpow * bsq;
  }
  return sum.is_zero();
}

bool is_supersingular(const Fq& j) {
  return HasseTester(j.ctx().p()).is_supersingular(j);
}

bool is_supersingular_by_powering(const Fq& j) {
  const FieldCtx& K = j.ctx();
  u64 p = K.p();
  if (K.degree() > 2)
    throw InvalidArgument("powering route supports fields of degree <= 2");
  // Elements as coordinate pairs; prime-field values ride along with a
  // zero u-part and r never contributes.
  u64 r = K.quad_over_prime() ? K.quad_nonresidue() : 0;
  using P2 = std::array<u64, 2>;
  auto mulp = [&](const P2& x, const P2& y) -> P2 {
    u64 c0 = (x[0] * y[0] + r * ((x[1] * y[1]) % p)) % p;
    u64 c1 = (x[0] * y[1] + x[1] * y[0]) % p;
    return {c0, c1};
  };
  auto addp = [&](const P2& x, const P2& y) -> P2 {
    u64 c0 = x[0] + y[0], c1 = x[1] + y[1];
    return {c0 >= p ? c0 - p : c0, c1 >= p ? c1 - p : c1};
  };
  auto [af, bf] = weierstrass_from_j(j);
  P2 a = {af.coords()[0], K.degree() == 2 ? af.coords()[1] : 0};
  P2 b = {bf.coords()[0], K.degree() == 2 ? bf.coords()[1] : 0};
  std::size_t cap = std::size_t(p);  // keep exponents 0..p-1
  std::vector<P2> res = {{1, 0}};
  u64 n = (p - 1) / 2;
  for (u64 step = 0; step < n; ++step) {
    std::size_t len = std::min(res.size() + 3, cap);
    std::vector<P2> next(len, P2{0, 0});
    for (std::size_t i = 0; i < res.size(); ++i) {
      const P2& c = res[i];
      if (c[0] == 0 && c[1] == 0) continue;
      if (i + 3 < len) next[i + 3] = addp(next[i + 3], c);
      if (i + 1 < len) next[i + 1] = addp(next[i + 1], mulp(c, a));
      if (i < len) next[i] = addp(next[i], mulp(c, b));
    }
    res = std::move(next);
  }
  if (res.size() < std::size_t(p)) return false;
  return res[p - 1][0] == 0 && res[p - 1][1] == 0;
}

Fq find_starter(const FieldCtx& fp2) {
  u64 p = fp2.p();
  HasseTester tester(p);
  for (u64 jv = 0; jv < p; ++jv) {
    Fq j = Fq::from_int(fp2, i64(jv));
    if (tester.is_supersingular(j)) {
      if (!is_supersingular_by_powering(j))
        throw ConsistencyError("supersingularity routes disagree at j = " +
                               std::to_string(jv) + " mod " + std::to_string(p));
      return j;
    }
  }
  throw ConsistencyError("no supersingular j in F_p for p = " + std::to_string(p) +
                         "; impossible for p >= 5");
}

std::size_t SupersingularLocus::index_of(const Fq& j) const {
  auto it = index_.find(j.coords());
  if (it == index_.end())
    throw ConsistencyError("j-invariant " + to_string(j) +
                           " is not in the supersingular locus for p = " +
                           std::to_string(p));
  return it->second;
}

bool SupersingularLocus::contains(const Fq& j) const {
  return index_.count(j.coords()) != 0;
}

Rational SupersingularLocus::mass() const {
  Rational m(0);
  for (int w : weights) m += Rational(1, w);
  return m;
}

std::vector<std::size_t> SupersingularLocus::frobenius_perm() const {
  std::vector<std::size_t> tau(n());
  for (std::size_t i = 0; i < n(); ++i) tau[i] = index_of(frobenius(js[i]));
  return tau;
}

namespace {

bool locus_order(const Fq& a, const Fq& b) {
  bool abase = a.coords()[1] == 0;
  bool bbase = b.coords()[1] == 0;
  if (abase != bbase) return abase;
  return canonical_less(a, b);
}

}  // namespace

SupersingularLocus finalize_locus(u64 p, FieldCtxPtr field, std::vector<Fq> js) {
  std::sort(js.begin(), js.end(), locus_order);
  SupersingularLocus locus;
  locus.p = p;
  locus.field = std::move(field);
  locus.js = std::move(js);
  Fq j1728 = Fq::from_int(*locus.field, 1728);
  for (const Fq& j : locus.js) {
    int w = 1;
    if (j.is_zero()) w = 3;
    else if (j == j1728) w = 2;
    locus.weights.push_back(w);
  }
  for (std::size_t i = 0; i < locus.js.size(); ++i)
    locus.index_[locus.js[i].coords()] = i;
  if (locus.mass() != Rational(i64(p) - 1, 12))
    throw ConsistencyError(
        "mass formula violated: found " + locus.mass().to_string() +
        ", expected " + Rational(i64(p) - 1, 12).to_string() +
        " for p = " + std::to_string(p));
  for (const Fq& j : locus.js) {
    if (!locus.contains(frobenius(j)))
      throw ConsistencyError("locus is not Frobenius stable at j = " + to_string(j));
  }
  return locus;
}

SupersingularLocus enumerate_locus(u64 p, const PhiPoly& phi2) {
  if (phi2.ell != 2)
    throw InvalidArgument("locus enumeration walks the 2-isogeny graph and needs phi_2");
  if (phi2.p != p) throw InvalidArgument("phi table reduced at the wrong p");
  FieldCtxPtr field = make_fp2(p);
  Fq start = find_starter(*field);
  std::map<std::vector<u64>, bool> seen;
  std::vector<Fq> found;
  std::deque<Fq> queue;
  queue.push_back(start);
  seen[start.coords()] = true;
  while (!queue.empty()) {
    Fq j = queue.front();
    queue.pop_front();
    found.push_back(j);
    PolyFq row = phi_row(phi2, j);
    for (const auto& [root, mult] : roots_with_multiplicity(row)) {
      (void)mult;
      if (!seen.count(root.coords())) {
        seen[root.coords()] = true;
        queue.push_back(root);
      }
    }
  }
  return finalize_locus(p, std::move(field), std::move(found));
}

SupersingularLocus enumerate_locus(u64 p) {
  return enumerate_locus(p, builtin_phi(2, p));
}

SupersingularLocus scan_locus(u64 p) {
  FieldCtxPtr field = make_fp2(p);
  HasseTester tester(p);
  std::vector<Fq> found;
  for (u64 c0 = 0; c0 < p; ++c0) {
    for (u64 c1 = 0; c1 < p; ++c1) {
      Fq j = Fq::from_coords(*field, {c0, c1});
      if (tester.is_supersingular(j)) found.push_back(j);
    }
  }
  return finalize_locus(p, std::move(field), std::move(found));
}

}  // namespace sshecke
