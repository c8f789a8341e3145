#include "sshecke/velu.hpp"

#include <algorithm>

namespace sshecke {

namespace {

Fq j_from_ab(const Fq& a, const Fq& b) {
  const FieldCtx& K = a.ctx();
  Fq four_a3 = Fq::from_int(K, 4) * a * a * a;
  Fq disc = four_a3 + Fq::from_int(K, 27) * b * b;
  if (disc.is_zero()) throw ConsistencyError("quotient curve is singular");
  return Fq::from_int(K, 1728) * four_a3 * inv(disc);
}

// Embed an element of T's base field into T by zero-padding coordinates.
Fq lift(const FieldCtx& T, const Fq& x) {
  std::vector<u64> c = x.coords();
  c.resize(T.degree(), 0);
  return Fq::from_coords(T, std::move(c));
}

// Velu's formulas for the quotient by the subgroup generated at x0.
// ell = 2: x0 is a 2-torsion x-coordinate, v = 3x0^2 + a, w = x0 v.
// ell = 3: x0 spans the kernel's x-line, v = 6x0^2 + 2a,
//          w = 4(x0^3 + a x0 + b) + x0 v.
// Either way the quotient is y^2 = x^3 + (a - 5v)x + (b - 7w).
Fq quotient_j(const Fq& a, const Fq& b, const Fq& x0, u64 ell) {
  const FieldCtx& K = a.ctx();
  Fq v, w;
  if (ell == 2) {
    v = Fq::from_int(K, 3) * x0 * x0 + a;
    w = x0 * v;
  } else {
    v = Fq::from_int(K, 6) * x0 * x0 + Fq::from_int(K, 2) * a;
    Fq u = Fq::from_int(K, 4) * ((x0 * x0 + a) * x0 + b);
    w = u + x0 * v;
  }
  Fq a2 = a - Fq::from_int(K, 5) * v;
  Fq b2 = b - Fq::from_int(K, 7) * w;
  return j_from_ab(a2, b2);
}

}  // namespace

CurveModel CurveModel::from_j(const Fq& j) {
  auto [a, b] = weierstrass_from_j(j);
  Fq disc = Fq::from_int(j.ctx(), 4) * a * a * a +
            Fq::from_int(j.ctx(), 27) * b * b;
  if (disc.is_zero())
    throw ConsistencyError("weierstrass model from j is singular");
  return CurveModel{a, b, j};
}

std::vector<std::pair<Fq, int>> enumerate_isogenies(const CurveModel& E, u64 ell,
                                                    i64 modulus_shift) {
  if (ell != 2 && ell != 3)
    throw InvalidArgument("isogeny enumeration supports ell = 2 or 3 (got " +
                          std::to_string(ell) + ")");
  const FieldCtx& K = E.a.ctx();
  if (K.p() == ell)
    throw InvalidArgument("ell must differ from the characteristic");
  PolyFq kernel(K);
  if (ell == 2) {
    // x^3 + ax + b: the 2-torsion x-coordinates.
    kernel = PolyFq::from_coeffs(
        K, {E.b, E.a, Fq::zero(K), Fq::one(K)});
  } else {
    // Division polynomial psi_3 = 3x^4 + 6ax^2 + 12bx - a^2.
    kernel = PolyFq::from_coeffs(
        K, {-(E.a * E.a), Fq::from_int(K, 12) * E.b,
            Fq::from_int(K, 6) * E.a, Fq::zero(K), Fq::from_int(K, 3)});
  }
  std::vector<std::pair<Fq, int>> out;
  for (const auto& [g, mult] : factorize(kernel)) {
    if (mult != 1)
      throw ConsistencyError("kernel polynomial is not separable");
    int e = g.degree();
    Fq jq(Fq::zero(K));
    if (e == 1) {
      Fq x0 = -g.coeff(0);
      if (modulus_shift != 0) {
        // The shift is a no-op for rational kernels; exercise the same
        // translation anyway so the invariance covers this path.
        x0 = x0 + Fq::from_int(K, modulus_shift) - Fq::from_int(K, modulus_shift);
      }
      jq = quotient_j(E.a, E.b, x0, ell);
    } else {
      Fq s = Fq::from_int(K, modulus_shift);
      PolyFq gs = g.compose_x_plus(s);
      FieldCtxPtr T = FieldCtx::extension(K.shared(), gs);
      // gs(t) = g(t + s), so x0 = t + s is a root of g in T.
      Fq x0 = Fq::gen(*T) + lift(*T, s);
      Fq jt = quotient_j(lift(*T, E.a), lift(*T, E.b), x0, ell);
      // A cyclic subgroup and its Galois conjugates give one quotient class;
      // its j-invariant must already live downstairs.
      const std::vector<u64>& c = jt.coords();
      for (std::size_t i = K.degree(); i < c.size(); ++i) {
        if (c[i] != 0)
          throw ConsistencyError(
              "quotient j-invariant does not descend to the base field");
      }
      jq = Fq::from_coords(K, std::vector<u64>(c.begin(), c.begin() + K.degree()));
    }
    bool merged = false;
    for (auto& [jv, m] : out) {
      if (jv == jq) {
        m += e;
        merged = true;
        break;
      }
    }
    if (!merged) out.emplace_back(jq, e);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return canonical_less(x.first, y.first); });
  int total = 0;
  for (const auto& [jv, m] : out) {
    (void)jv;
    total += m;
  }
  if (total != int(ell) + 1)
    throw ConsistencyError("isogeny multiplicities sum to " + std::to_string(total) +
                           ", expected " + std::to_string(ell + 1));
  return out;
}

std::vector<std::vector<i64>> velu_neighbour_counts(const SupersingularLocus& locus,
                                                    u64 ell, i64 modulus_shift) {
  std::size_t n = locus.n();
  std::vector<std::vector<i64>> M(n, std::vector<i64>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    CurveModel E = CurveModel::from_j(locus.js[i]);
    for (const auto& [jq, m] : enumerate_isogenies(E, ell, modulus_shift)) {
      // index_of throws if a quotient leaves the supersingular locus, which
      // would falsify the isogeny-invariance of supersingularity.
      M[i][locus.index_of(jq)] += m;
    }
  }
  return M;
}

}  // namespace sshecke
