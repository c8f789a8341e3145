#include "sshecke/arith.hpp"

#include <algorithm>
#include <utility>

namespace sshecke {

namespace {

u64 addmod(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  return s >= p ? s - p : s;
}

u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + (p - b); }

// p < 2^31, so the product stays below 2^62.
u64 mulmod(u64 a, u64 b, u64 p) { return (a * b) % p; }

u64 powmod_u(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) {
  a %= p;
  if (a == 0) throw MathError("division by zero in F_p");
  i64 t = 0, nt = 1;
  i64 r = i64(p), nr = i64(a);
  while (nr != 0) {
    i64 q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  if (t < 0) t += i64(p);
  return u64(t);
}

void require_ctx(const Fq& a, const Fq& b) {
  if (&a.ctx() == &b.ctx()) return;
  if (!a.ctx().structurally_equal(b.ctx()))
    throw MathError("field elements from mismatched contexts");
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (u64 d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

// ---- Fq ----

Fq Fq::zero(const FieldCtx& ctx) {
  Fq r;
  r.ctx_ = &ctx;
  r.c_.assign(ctx.degree(), 0);
  return r;
}

Fq Fq::one(const FieldCtx& ctx) {
  Fq r = zero(ctx);
  r.c_[0] = 1;
  return r;
}

Fq Fq::from_int(const FieldCtx& ctx, i64 v) {
  Fq r = zero(ctx);
  i64 m = v % i64(ctx.p());
  if (m < 0) m += i64(ctx.p());
  r.c_[0] = u64(m);
  return r;
}

Fq Fq::from_coords(const FieldCtx& ctx, std::vector<u64> coords) {
  if (coords.size() != ctx.degree())
    throw InvalidArgument("coordinate count does not match field degree");
  for (u64& c : coords) c %= ctx.p();
  Fq r;
  r.ctx_ = &ctx;
  r.c_ = std::move(coords);
  return r;
}

Fq Fq::gen(const FieldCtx& ctx) {
  if (ctx.is_prime_field())
    throw InvalidArgument("prime field has no extension generator");
  Fq r = zero(ctx);
  r.c_[ctx.base()->degree()] = 1;
  return r;
}

bool Fq::is_zero() const {
  for (u64 c : c_)
    if (c) return false;
  return true;
}

Fq operator+(const Fq& a, const Fq& b) {
  require_ctx(a, b);
  Fq r = a;
  u64 p = a.ctx().p();
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = addmod(r.c_[i], b.c_[i], p);
  return r;
}

Fq operator-(const Fq& a, const Fq& b) {
  require_ctx(a, b);
  Fq r = a;
  u64 p = a.ctx().p();
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = submod(r.c_[i], b.c_[i], p);
  return r;
}

Fq Fq::operator-() const {
  Fq r = *this;
  u64 p = ctx().p();
  for (u64& c : r.c_) c = c ? p - c : 0;
  return r;
}

namespace {

// Multiplication on flattened coordinates, dispatching on the tower shape.
std::vector<u64> raw_mul(const FieldCtx& K, const std::vector<u64>& a,
                         const std::vector<u64>& b) {
  u64 p = K.p();
  if (K.is_prime_field()) return {mulmod(a[0], b[0], p)};
  if (K.quad_over_prime()) {
    // F_p[u]/(u^2 - r): (a0 + a1 u)(b0 + b1 u) = a0 b0 + r a1 b1 + (a0 b1 + a1 b0) u
    u64 r = K.quad_nonresidue();
    u64 c0 = addmod(mulmod(a[0], b[0], p), mulmod(r, mulmod(a[1], b[1], p), p), p);
    u64 c1 = addmod(mulmod(a[0], b[1], p), mulmod(a[1], b[0], p), p);
    return {c0, c1};
  }
  // Generic tower step: view both inputs as polynomials over the base,
  // multiply schoolbook, reduce by the monic modulus.
  const FieldCtx& base = *K.base();
  std::size_t bd = base.degree();
  std::size_t e = K.ext_degree();
  auto slice = [&](const std::vector<u64>& v, std::size_t i) {
    return Fq::from_coords(base,
                           std::vector<u64>(v.begin() + i * bd, v.begin() + (i + 1) * bd));
  };
  std::vector<Fq> prod(2 * e - 1, Fq::zero(base));
  for (std::size_t i = 0; i < e; ++i) {
    Fq ai = slice(a, i);
    if (ai.is_zero()) continue;
    for (std::size_t j = 0; j < e; ++j) prod[i + j] = prod[i + j] + ai * slice(b, j);
  }
  const PolyFq& mod = K.modulus();
  for (std::size_t i = 2 * e - 2; i + 1 > e; --i) {
    Fq c = prod[i];
    if (c.is_zero()) continue;
    for (std::size_t k = 0; k < e; ++k)
      prod[i - e + k] = prod[i - e + k] - c * mod.coeff(k);
  }
  std::vector<u64> out(K.degree());
  for (std::size_t i = 0; i < e; ++i) {
    const std::vector<u64>& pc = prod[i].coords();
    std::copy(pc.begin(), pc.end(), out.begin() + i * bd);
  }
  return out;
}

}  // namespace

Fq operator*(const Fq& a, const Fq& b) {
  require_ctx(a, b);
  return Fq::from_coords(a.ctx(), raw_mul(a.ctx(), a.coords(), b.coords()));
}

bool operator==(const Fq& a, const Fq& b) {
  require_ctx(a, b);
  return a.coords() == b.coords();
}

Fq inv(const Fq& a) {
  const FieldCtx& K = a.ctx();
  u64 p = K.p();
  if (a.is_zero()) throw MathError("inverse of zero");
  if (K.is_prime_field()) {
    return Fq::from_coords(K, {invmod(a.coords()[0], p)});
  }
  if (K.quad_over_prime()) {
    u64 r = K.quad_nonresidue();
    u64 a0 = a.coords()[0], a1 = a.coords()[1];
    // Norm a0^2 - r a1^2 is nonzero for nonzero elements since u^2 - r is irreducible.
    u64 n = submod(mulmod(a0, a0, p), mulmod(r, mulmod(a1, a1, p), p), p);
    u64 ni = invmod(n, p);
    return Fq::from_coords(K, {mulmod(a0, ni, p), a1 ? mulmod(p - a1, ni, p) : 0});
  }
  // Extended Euclid in base[x] against the defining modulus.
  const FieldCtx& base = *K.base();
  std::size_t bd = base.degree();
  std::size_t e = K.ext_degree();
  std::vector<Fq> ac;
  ac.reserve(e);
  for (std::size_t i = 0; i < e; ++i)
    ac.push_back(Fq::from_coords(
        base, std::vector<u64>(a.coords().begin() + i * bd, a.coords().begin() + (i + 1) * bd)));
  PolyFq ap = PolyFq::from_coeffs(base, std::move(ac));
  PolyFq r0 = K.modulus(), r1 = ap;
  PolyFq s0 = PolyFq(base), s1 = PolyFq::constant(Fq::one(base));
  while (!r1.is_zero()) {
    PolyFq q, rem;
    poly_divmod(r0, r1, q, rem);
    PolyFq snew = s0 - q * s1;
    r0 = r1;
    r1 = rem;
    s0 = s1;
    s1 = snew;
  }
  if (r0.degree() != 0)
    throw MathError("element not invertible: modulus is not irreducible");
  PolyFq invp = inv(r0.coeff(0)) * s0;
  std::vector<u64> out(K.degree(), 0);
  for (int i = 0; i <= invp.degree(); ++i) {
    Fq ci = invp.coeff(std::size_t(i));
    std::copy(ci.coords().begin(), ci.coords().end(),
              out.begin() + std::size_t(i) * bd);
  }
  return Fq::from_coords(K, std::move(out));
}

Fq pow(const Fq& a, u64 e) {
  Fq r = Fq::one(a.ctx());
  Fq b = a;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

Fq frobenius(const Fq& a) {
  const FieldCtx& K = a.ctx();
  if (K.is_prime_field()) return a;
  if (K.quad_over_prime()) {
    // Conjugation: u^p = -u since u^2 = r with r a nonresidue.
    u64 p = K.p();
    u64 a1 = a.coords()[1];
    return Fq::from_coords(K, {a.coords()[0], a1 ? p - a1 : 0});
  }
  return pow(a, K.p());
}

bool in_prime_field(const Fq& a) {
  const FieldCtx& K = a.ctx();
  if (K.is_prime_field()) return true;
  if (K.quad_over_prime()) return a.coords()[1] == 0;
  return frobenius(a) == a;
}

bool canonical_less(const Fq& a, const Fq& b) {
  return std::lexicographical_compare(a.coords().begin(), a.coords().end(),
                                      b.coords().begin(), b.coords().end());
}

std::string to_string(const Fq& a) {
  const std::vector<u64>& c = a.coords();
  if (c.size() == 1) return std::to_string(c[0]);
  if (c.size() == 2) {
    if (c[1] == 0) return std::to_string(c[0]);
    return std::to_string(c[0]) + "+" + std::to_string(c[1]) + "*u";
  }
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c[i]);
  }
  return s + ")";
}

// ---- PolyFq ----

void PolyFq::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

PolyFq PolyFq::from_coeffs(const FieldCtx& ctx, std::vector<Fq> c) {
  PolyFq f(ctx);
  for (const Fq& x : c) {
    if (!x.ctx().structurally_equal(ctx))
      throw MathError("polynomial coefficient from mismatched context");
  }
  f.c_ = std::move(c);
  f.normalize();
  return f;
}

PolyFq PolyFq::constant(const Fq& c) { return from_coeffs(c.ctx(), {c}); }

PolyFq PolyFq::x(const FieldCtx& ctx) {
  return from_coeffs(ctx, {Fq::zero(ctx), Fq::one(ctx)});
}

Fq PolyFq::coeff(std::size_t i) const {
  return i < c_.size() ? c_[i] : Fq::zero(*ctx_);
}

Fq PolyFq::leading() const {
  if (c_.empty()) throw MathError("zero polynomial has no leading coefficient");
  return c_.back();
}

bool PolyFq::is_monic() const {
  return !c_.empty() && c_.back() == Fq::one(*ctx_);
}

PolyFq PolyFq::make_monic() const {
  if (is_zero()) throw MathError("cannot normalize the zero polynomial");
  if (is_monic()) return *this;
  return inv(leading()) * *this;
}

Fq PolyFq::eval(const Fq& x) const {
  Fq r = Fq::zero(*ctx_);
  for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}

PolyFq PolyFq::derivative() const {
  if (c_.size() <= 1) return PolyFq(*ctx_);
  std::vector<Fq> d;
  d.reserve(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i)
    d.push_back(Fq::from_int(*ctx_, i64(i % ctx_->p())) * c_[i]);
  return from_coeffs(*ctx_, std::move(d));
}

PolyFq PolyFq::compose_x_plus(const Fq& shift) const {
  PolyFq r(*ctx_);
  for (std::size_t i = c_.size(); i-- > 0;) {
    // r <- r*(x + shift) + c_i
    std::vector<Fq> nc(std::size_t(r.degree() + 2), Fq::zero(*ctx_));
    for (int k = 0; k <= r.degree(); ++k) {
      nc[std::size_t(k) + 1] = nc[std::size_t(k) + 1] + r.c_[std::size_t(k)];
      nc[std::size_t(k)] = nc[std::size_t(k)] + shift * r.c_[std::size_t(k)];
    }
    nc[0] = nc[0] + c_[i];
    r = from_coeffs(*ctx_, std::move(nc));
  }
  return r;
}

PolyFq operator+(const PolyFq& a, const PolyFq& b) {
  std::vector<Fq> c;
  std::size_t n = std::max(a.c_.size(), b.c_.size());
  c.reserve(n);
  for (std::size_t i = 0; i < n; ++i) c.push_back(a.coeff(i) + b.coeff(i));
  return PolyFq::from_coeffs(a.ctx(), std::move(c));
}

PolyFq operator-(const PolyFq& a, const PolyFq& b) {
  std::vector<Fq> c;
  std::size_t n = std::max(a.c_.size(), b.c_.size());
  c.reserve(n);
  for (std::size_t i = 0; i < n; ++i) c.push_back(a.coeff(i) - b.coeff(i));
  return PolyFq::from_coeffs(a.ctx(), std::move(c));
}

PolyFq operator*(const PolyFq& a, const PolyFq& b) {
  if (a.is_zero() || b.is_zero()) return PolyFq(a.ctx());
  std::vector<Fq> c(a.c_.size() + b.c_.size() - 1, Fq::zero(a.ctx()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
  }
  return PolyFq::from_coeffs(a.ctx(), std::move(c));
}

PolyFq operator*(const Fq& s, const PolyFq& a) {
  std::vector<Fq> c;
  c.reserve(a.c_.size());
  for (const Fq& x : a.c_) c.push_back(s * x);
  return PolyFq::from_coeffs(a.ctx(), std::move(c));
}

bool operator==(const PolyFq& a, const PolyFq& b) {
  if (a.degree() != b.degree()) return false;
  for (int i = 0; i <= a.degree(); ++i)
    if (a.coeff(std::size_t(i)) != b.coeff(std::size_t(i))) return false;
  return true;
}

void poly_divmod(const PolyFq& a, const PolyFq& b, PolyFq& q, PolyFq& r) {
  if (b.is_zero()) throw MathError("polynomial division by zero");
  const FieldCtx& K = a.ctx();
  if (a.degree() < b.degree()) {
    q = PolyFq(K);
    r = a;
    return;
  }
  Fq lead_inv = inv(b.leading());
  std::vector<Fq> rem;
  rem.reserve(std::size_t(a.degree() + 1));
  for (int i = 0; i <= a.degree(); ++i) rem.push_back(a.coeff(std::size_t(i)));
  std::vector<Fq> quo(std::size_t(a.degree() - b.degree() + 1), Fq::zero(K));
  for (int i = a.degree(); i >= b.degree(); --i) {
    Fq c = rem[std::size_t(i)];
    if (c.is_zero()) continue;
    Fq f = c * lead_inv;
    quo[std::size_t(i - b.degree())] = f;
    for (int k = 0; k <= b.degree(); ++k)
      rem[std::size_t(i - b.degree() + k)] =
          rem[std::size_t(i - b.degree() + k)] - f * b.coeff(std::size_t(k));
  }
  q = PolyFq::from_coeffs(K, std::move(quo));
  r = PolyFq::from_coeffs(K, std::move(rem));
}

PolyFq operator/(const PolyFq& a, const PolyFq& b) {
  PolyFq q, r;
  poly_divmod(a, b, q, r);
  return q;
}

PolyFq operator%(const PolyFq& a, const PolyFq& b) {
  PolyFq q, r;
  poly_divmod(a, b, q, r);
  return r;
}

PolyFq poly_gcd(PolyFq a, PolyFq b) {
  while (!b.is_zero()) {
    PolyFq r = a % b;
    a = b;
    b = r;
  }
  if (a.is_zero()) return a;
  return a.make_monic();
}

PolyFq poly_mulmod(const PolyFq& a, const PolyFq& b, const PolyFq& f) {
  return (a * b) % f;
}

PolyFq poly_powmod(const PolyFq& a, u64 e, const PolyFq& f) {
  PolyFq r = PolyFq::constant(Fq::one(a.ctx())) % f;
  PolyFq b = a % f;
  while (e) {
    if (e & 1) r = poly_mulmod(r, b, f);
    b = poly_mulmod(b, b, f);
    e >>= 1;
  }
  return r;
}

namespace {

Fq random_element(const FieldCtx& K, SplitMix64& rng) {
  std::vector<u64> c(K.degree());
  for (u64& x : c) x = rng.below(K.p());
  return Fq::from_coords(K, std::move(c));
}

// g is monic, squarefree, and splits into distinct linear factors. Peels
// roots off by random (x+d)^((q-1)/2) splittings.
void split_linear(const PolyFq& g, u64 q, SplitMix64& rng, std::vector<Fq>& out) {
  if (g.degree() <= 0) return;
  const FieldCtx& K = g.ctx();
  if (g.degree() == 1) {
    out.push_back(-g.coeff(0));
    return;
  }
  for (;;) {
    PolyFq probe =
        PolyFq::from_coeffs(K, {random_element(K, rng), Fq::one(K)});
    PolyFq h = poly_powmod(probe, (q - 1) / 2, g) -
               PolyFq::constant(Fq::one(K));
    PolyFq d = poly_gcd(h, g);
    if (d.degree() > 0 && d.degree() < g.degree()) {
      split_linear(d, q, rng, out);
      split_linear(g / d, q, rng, out);
      return;
    }
  }
}

// g is monic and a product of distinct irreducibles all of degree d.
void split_equal_degree(const PolyFq& g, int d, u64 q, SplitMix64& rng,
                        std::vector<PolyFq>& out) {
  if (g.degree() == d) {
    out.push_back(g);
    return;
  }
  const FieldCtx& K = g.ctx();
  for (;;) {
    std::vector<Fq> rc(std::size_t(g.degree()), Fq::zero(K));
    for (Fq& x : rc) x = random_element(K, rng);
    PolyFq r = PolyFq::from_coeffs(K, std::move(rc));
    if (r.degree() < 1) continue;
    // s = prod_{i<d} r^(q^i) mod g, then s^((q-1)/2); keeps every exponent
    // within u64 even though (q^d - 1)/2 would not fit.
    PolyFq s = r % g, t = r % g;
    for (int i = 1; i < d; ++i) {
      t = poly_powmod(t, q, g);
      s = poly_mulmod(s, t, g);
    }
    PolyFq h = poly_powmod(s, (q - 1) / 2, g) - PolyFq::constant(Fq::one(K));
    PolyFq dd = poly_gcd(h, g);
    if (dd.degree() > 0 && dd.degree() < g.degree()) {
      split_equal_degree(dd, d, q, rng, out);
      split_equal_degree(g / dd, d, q, rng, out);
      return;
    }
  }
}

bool poly_coeff_less(const PolyFq& a, const PolyFq& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    Fq ca = a.coeff(std::size_t(i)), cb = b.coeff(std::size_t(i));
    if (ca != cb) return canonical_less(ca, cb);
  }
  return false;
}

}  // namespace

std::vector<std::pair<Fq, int>> roots_with_multiplicity(const PolyFq& f, u64 seed) {
  if (f.is_zero())
    throw InvalidArgument("the zero polynomial has every element as a root");
  const FieldCtx& K = f.ctx();
  std::vector<std::pair<Fq, int>> res;
  if (f.degree() == 0) return res;
  u64 q = K.size();
  PolyFq fm = f.make_monic();
  PolyFq xq = poly_powmod(PolyFq::x(K), q, fm);
  PolyFq g = poly_gcd(xq - PolyFq::x(K), fm);
  if (g.degree() <= 0) return res;
  SplitMix64 rng(seed);
  std::vector<Fq> roots;
  split_linear(g, q, rng, roots);
  std::sort(roots.begin(), roots.end(), canonical_less);
  for (const Fq& r : roots) {
    PolyFq lin = PolyFq::from_coeffs(K, {-r, Fq::one(K)});
    int mult = 0;
    PolyFq work = fm;
    for (;;) {
      PolyFq quo, rem;
      poly_divmod(work, lin, quo, rem);
      if (!rem.is_zero()) break;
      work = quo;
      ++mult;
    }
    res.emplace_back(r, mult);
  }
  return res;
}

std::vector<std::pair<PolyFq, int>> factorize(const PolyFq& f, u64 seed) {
  if (f.is_zero()) throw InvalidArgument("cannot factor the zero polynomial");
  const FieldCtx& K = f.ctx();
  std::vector<std::pair<PolyFq, int>> res;
  if (f.degree() == 0) return res;
  u64 q = K.size();
  PolyFq fm = f.make_monic();
  PolyFq der = fm.derivative();
  if (der.is_zero())
    throw InvalidArgument("inseparable polynomial: degree >= characteristic unsupported");
  // Product of the distinct irreducible factors, each once.
  PolyFq w = fm / poly_gcd(fm, der);
  // Distinct-degree then equal-degree splitting.
  std::vector<std::pair<PolyFq, int>> groups;
  PolyFq wr = w;
  PolyFq h = PolyFq::x(K) % wr;
  int d = 1;
  while (2 * d <= wr.degree()) {
    h = poly_powmod(h, q, wr);
    PolyFq g = poly_gcd(h - PolyFq::x(K), wr);
    if (g.degree() > 0) {
      groups.emplace_back(g, d);
      wr = wr / g;
      h = h % wr;
    }
    ++d;
  }
  if (wr.degree() > 0) groups.emplace_back(wr, wr.degree());
  SplitMix64 rng(seed);
  std::vector<PolyFq> irr;
  for (const auto& [g, gd] : groups) split_equal_degree(g, gd, q, rng, irr);
  std::sort(irr.begin(), irr.end(), poly_coeff_less);
  PolyFq work = fm;
  for (const PolyFq& g : irr) {
    int mult = 0;
    for (;;) {
      PolyFq quo, rem;
      poly_divmod(work, g, quo, rem);
      if (!rem.is_zero()) break;
      work = quo;
      ++mult;
    }
    res.emplace_back(g, mult);
  }
  if (work.degree() != 0)
    throw InvalidArgument("inseparable polynomial: degree >= characteristic unsupported");
  return res;
}

bool is_irreducible(const PolyFq& f) {
  if (f.is_zero() || f.degree() == 0) return false;
  if (f.degree() == 1) return true;
  const FieldCtx& K = f.ctx();
  u64 q = K.size();
  PolyFq fm = f.make_monic();
  int e = fm.degree();
  PolyFq xm = PolyFq::x(K) % fm;
  // hs[i] = x^(q^i) mod fm
  std::vector<PolyFq> hs;
  hs.push_back(xm);
  for (int i = 1; i <= e; ++i) hs.push_back(poly_powmod(hs.back(), q, fm));
  if (!(hs[std::size_t(e)] == xm)) return false;
  for (int t = 2; t <= e; ++t) {
    if (e % t != 0) continue;
    bool tprime = true;
    for (int dd = 2; dd * dd <= t; ++dd)
      if (t % dd == 0) tprime = false;
    if (!tprime) continue;
    PolyFq g = poly_gcd(hs[std::size_t(e / t)] - xm, fm);
    if (g.degree() != 0) return false;
  }
  return true;
}

// ---- FieldCtx ----

FieldCtxPtr FieldCtx::prime_field(u64 p) {
  if (p >= (u64(1) << 31))
    throw InvalidArgument("p must be below 2^31 (got " + std::to_string(p) + ")");
  if (p < 5)
    throw InvalidArgument("p must be a prime >= 5 (got " + std::to_string(p) + ")");
  if (!is_prime(p))
    throw InvalidArgument("p must be prime (got composite " + std::to_string(p) + ")");
  auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
  ctx->p_ = p;
  return ctx;
}

FieldCtxPtr FieldCtx::extension(FieldCtxPtr base, PolyFq modulus) {
  if (!base) throw InvalidArgument("extension requires a base field");
  if (!modulus.ctx().structurally_equal(*base))
    throw MathError("modulus is not a polynomial over the base field");
  if (modulus.degree() < 2)
    throw InvalidArgument("extension modulus must have degree >= 2");
  if (!modulus.is_monic())
    throw InvalidArgument("extension modulus must be monic");
  if (!is_irreducible(modulus))
    throw InvalidArgument("extension modulus is not irreducible");
  auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
  ctx->p_ = base->p();
  ctx->ext_degree_ = std::size_t(modulus.degree());
  ctx->abs_degree_ = base->degree() * ctx->ext_degree_;
  ctx->base_ = std::move(base);
  ctx->modulus_ = std::move(modulus);
  if (ctx->base_->is_prime_field() && ctx->ext_degree_ == 2 &&
      ctx->modulus_.coeff(1).is_zero()) {
    ctx->quad_fast_ = true;
    u64 c0 = ctx->modulus_.coeff(0).coords()[0];
    ctx->quad_r_ = c0 ? ctx->p_ - c0 : 0;
  }
  return ctx;
}

FieldCtxPtr FieldCtx::quadratic_ext(u64 p) {
  FieldCtxPtr pf = prime_field(p);
  u64 r = 2;
  while (powmod_u(r, (p - 1) / 2, p) != p - 1) ++r;
  PolyFq mod = PolyFq::from_coeffs(
      *pf, {Fq::from_int(*pf, -i64(r)), Fq::zero(*pf), Fq::one(*pf)});
  return extension(pf, std::move(mod));
}

const PolyFq& FieldCtx::modulus() const {
  if (is_prime_field())
    throw InvalidArgument("prime field has no defining modulus");
  return modulus_;
}

u64 FieldCtx::quad_nonresidue() const {
  if (!quad_fast_)
    throw InvalidArgument("field is not a quadratic extension of F_p by u^2 - r");
  return quad_r_;
}

u64 FieldCtx::size() const {
  u64 s = 1;
  for (std::size_t i = 0; i < abs_degree_; ++i) {
    if (s > (u64(1) << 62) / p_)
      throw OverflowError("field size exceeds 64-bit range");
    s *= p_;
  }
  return s;
}

bool FieldCtx::structurally_equal(const FieldCtx& o) const {
  if (this == &o) return true;
  if (p_ != o.p_ || abs_degree_ != o.abs_degree_ || ext_degree_ != o.ext_degree_)
    return false;
  if (is_prime_field()) return o.is_prime_field();
  if (o.is_prime_field()) return false;
  if (!base_->structurally_equal(*o.base_)) return false;
  if (modulus_.degree() != o.modulus_.degree()) return false;
  for (int i = 0; i <= modulus_.degree(); ++i)
    if (modulus_.coeff(std::size_t(i)).coords() !=
        o.modulus_.coeff(std::size_t(i)).coords())
      return false;
  return true;
}

FieldCtxPtr make_fp2(u64 p) { return FieldCtx::quadratic_ext(p); }

}  // namespace sshecke
