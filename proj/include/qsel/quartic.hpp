/* Copyright 2026 The qsel Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License. */

//
// Binary quartic forms f = c0 x^4 + c1 x^3 y + c2 x^2 y^2 + c3 x y^3 + c4 y^4
// over a coefficient ring, the PGL_2 action, the invariants (a, b, disc),
// root-type classification, reduction of stable forms to the Weierstrass
// form y(x^3 + a x y^2 + b y^3), stabilizers, and 2-torsion point counts.
//
// Invariant normalization:
//   a = -1/3  (12 c0 c4 - 3 c1 c3 + c2^2)
//   b = -1/27 (72 c0 c2 c4 + 9 c1 c2 c3 - 27 c0 c3^2 - 27 c1^2 c4 - 2 c2^3)
//   disc = -(4 a^3 + 27 b^2)
// The middle term of b is the classical covariant term 9 c1 c2 c3; a variant
// with 9 c2 c3 c4 circulates in some sources but is not G-invariant and gives
// disc(xy(x-y)^2) != 0, so it is rejected here.
//
// Group action: act(g, f)(x, y) = det(g)^-2 * f((x, y) * g), the row-vector
// substitution. With this convention act(g, act(h, f)) = act(g*h, f), scalar
// matrices act trivially, and invariants are preserved.
//

#ifndef QSEL_QUARTIC_HPP
#define QSEL_QUARTIC_HPP

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>

#include "qsel/rings.hpp"

namespace qsel {

template <class R>
struct Quartic {
  std::array<typename R::E, 5> c;  // c[i] multiplies x^{4-i} y^i
};

template <class R>
struct QuarticInvariants {
  typename R::E a, b, disc;
};

template <class R>
struct Mat2 {
  std::array<typename R::E, 4> m;  // row-major [m0 m1; m2 m3]
};

enum class QType { T1111, T112, T13, T22, T4, Zero };

inline const char* qtype_name(QType t) {
  switch (t) {
    case QType::T1111: return "(1,1,1,1)";
    case QType::T112: return "(1,1,2)";
    case QType::T13: return "(1,3)";
    case QType::T22: return "(2,2)";
    case QType::T4: return "(4)";
    default: return "0";
  }
}

inline bool is_stable_type(QType t) {
  return t == QType::T1111 || t == QType::T112 || t == QType::T13;
}

template <class R>
Quartic<R> quartic_from_ints(const R& K, std::initializer_list<i64> cs) {
  Quartic<R> f{};
  std::size_t i = 0;
  for (i64 c : cs) f.c[i++] = K.from_int(c);
  for (; i < 5; ++i) f.c[i] = K.zero();
  return f;
}

template <class R>
bool quartic_is_zero(const R& K, const Quartic<R>& f) {
  for (auto& c : f.c)
    if (!K.is_zero(c)) return false;
  return true;
}

template <class R>
bool quartic_eq(const R& K, const Quartic<R>& f, const Quartic<R>& g) {
  for (int i = 0; i < 5; ++i)
    if (!K.eq(f.c[i], g.c[i])) return false;
  return true;
}

template <class R>
typename R::E quartic_disc_of_ab(const R& K, typename R::E a, typename R::E b) {
  auto a3 = K.mul(a, K.mul(a, a));
  auto b2 = K.mul(b, b);
  return K.neg(K.add(K.mul(K.from_int(4), a3), K.mul(K.from_int(27), b2)));
}

template <class R>
QuarticInvariants<R> invariants(const R& K, const Quartic<R>& f) {
  const auto& c = f.c;
  auto t12 = K.mul(K.from_int(12), K.mul(c[0], c[4]));
  auto t3 = K.mul(K.from_int(3), K.mul(c[1], c[3]));
  auto t22 = K.mul(c[2], c[2]);
  auto a = K.mul(K.neg(K.inv(K.from_int(3))), K.add(K.sub(t12, t3), t22));

  auto u72 = K.mul(K.from_int(72), K.mul(c[0], K.mul(c[2], c[4])));
  auto u9 = K.mul(K.from_int(9), K.mul(c[1], K.mul(c[2], c[3])));
  auto u27a = K.mul(K.from_int(27), K.mul(c[0], K.mul(c[3], c[3])));
  auto u27b = K.mul(K.from_int(27), K.mul(K.mul(c[1], c[1]), c[4]));
  auto u2 = K.mul(K.from_int(2), K.mul(c[2], K.mul(c[2], c[2])));
  auto sum = K.sub(K.sub(K.sub(K.add(u72, u9), u27a), u27b), u2);
  auto b = K.mul(K.neg(K.inv(K.from_int(27))), sum);

  return {a, b, quartic_disc_of_ab(K, a, b)};
}

// --- 2x2 matrices over the ring ---------------------------------------------

template <class R>
typename R::E mat_det(const R& K, const Mat2<R>& g) {
  return K.sub(K.mul(g.m[0], g.m[3]), K.mul(g.m[1], g.m[2]));
}

template <class R>
Mat2<R> mat_mul(const R& K, const Mat2<R>& g, const Mat2<R>& h) {
  return {{K.add(K.mul(g.m[0], h.m[0]), K.mul(g.m[1], h.m[2])),
           K.add(K.mul(g.m[0], h.m[1]), K.mul(g.m[1], h.m[3])),
           K.add(K.mul(g.m[2], h.m[0]), K.mul(g.m[3], h.m[2])),
           K.add(K.mul(g.m[2], h.m[1]), K.mul(g.m[3], h.m[3]))}};
}

template <class R>
Mat2<R> mat_identity(const R& K) {
  return {{K.one(), K.zero(), K.zero(), K.one()}};
}

/// Scale so the first nonzero entry in row-major order is 1; the canonical
/// representative of the class modulo scalars.
template <class F>
Mat2<F> pgl2_canonical(const F& K, Mat2<F> g) {
  for (int i = 0; i < 4; ++i) {
    if (!K.is_zero(g.m[i])) {
      auto s = K.inv(g.m[i]);
      for (auto& e : g.m) e = K.mul(e, s);
      return g;
    }
  }
  throw DomainError("zero matrix has no PGL_2 representative");
}

template <class R>
bool mat_entries_eq(const R& K, const Mat2<R>& g, const Mat2<R>& h) {
  for (int i = 0; i < 4; ++i)
    if (!K.eq(g.m[i], h.m[i])) return false;
  return true;
}

template <class F>
bool mat_eq_pgl2(const F& K, const Mat2<F>& g, const Mat2<F>& h) {
  return mat_entries_eq(K, pgl2_canonical(K, g), pgl2_canonical(K, h));
}

/// det(g)^-2 f((x,y)g). Throws on non-unit determinant.
template <class R>
Quartic<R> act(const R& K, const Mat2<R>& g, const Quartic<R>& f) {
  auto det = mat_det(K, g);
  auto di = K.inv(det);  // throws for a singular / non-unit matrix
  auto s = K.mul(di, di);
  // X = m0 x + m2 y, Y = m1 x + m3 y; binary forms of degree n stored as
  // n+1 coefficients of x^{n-t} y^t.
  std::array<std::vector<typename R::E>, 5> powX, powY;
  powX[0] = {K.one()};
  powY[0] = {K.one()};
  for (int j = 1; j <= 4; ++j) {
    powX[j].assign(j + 1, K.zero());
    powY[j].assign(j + 1, K.zero());
    for (int t = 0; t < j; ++t) {
      // multiply by (m0 x + m2 y) resp. (m1 x + m3 y)
      powX[j][t] = K.add(powX[j][t], K.mul(powX[j - 1][t], g.m[0]));
      powX[j][t + 1] = K.add(powX[j][t + 1], K.mul(powX[j - 1][t], g.m[2]));
      powY[j][t] = K.add(powY[j][t], K.mul(powY[j - 1][t], g.m[1]));
      powY[j][t + 1] = K.add(powY[j][t + 1], K.mul(powY[j - 1][t], g.m[3]));
    }
  }
  Quartic<R> r{};
  for (auto& c : r.c) c = K.zero();
  for (int i = 0; i <= 4; ++i) {
    if (K.is_zero(f.c[i])) continue;
    const auto& X = powX[4 - i];
    const auto& Y = powY[i];
    for (int t1 = 0; t1 <= 4 - i; ++t1) {
      if (K.is_zero(X[t1])) continue;
      for (int t2 = 0; t2 <= i; ++t2) {
        auto term = K.mul(f.c[i], K.mul(X[t1], Y[t2]));
        r.c[t1 + t2] = K.add(r.c[t1 + t2], term);
      }
    }
  }
  for (auto& c : r.c) c = K.mul(c, s);
  return r;
}

// --- classification ----------------------------------------------------------

/// f(x, 1) as a polynomial in x (coefficient of x^j is c[4-j]).
template <class F>
PV<F> dehomogenize(const F& K, const Quartic<F>& f) {
  PV<F> v(5, K.zero());
  for (int j = 0; j <= 4; ++j) v[j] = f.c[4 - j];
  poly::trim(K, v);
  return v;
}

/// Root multiplicity pattern over the algebraic closure, with the point
/// [1:0] contributing multiplicity 4 - deg f(x,1).
template <class F>
QType classify(const F& K, const Quartic<F>& f) {
  if (quartic_is_zero(K, f)) return QType::Zero;
  PV<F> P = dehomogenize(K, f);
  std::array<int, 5> mult_count{};  // mult_count[m] = number of roots of multiplicity m
  int d = poly::deg<F>(P);
  if (d < 4) mult_count[4 - d] += 1;  // the point at infinity
  if (d >= 1) {
    for (auto& [g, m] : poly::squarefree_decomposition(K, P))
      mult_count[m] += poly::deg<F>(g);
  }
  if (mult_count[1] == 4) return QType::T1111;
  if (mult_count[1] == 2 && mult_count[2] == 1) return QType::T112;
  if (mult_count[1] == 1 && mult_count[3] == 1) return QType::T13;
  if (mult_count[2] == 2) return QType::T22;
  if (mult_count[4] == 1) return QType::T4;
  throw DomainError("impossible multiplicity pattern");  // unreachable
}

template <class F>
bool is_regular_quartic(const F& K, const Quartic<F>& f) {
  return is_stable_type(classify(K, f));
}

// --- infinitesimal stabilizer -------------------------------------------------

/// Dimension of the kernel of sl_2 -> V, X |-> X.f, where for
/// X = [alpha beta; gamma -alpha] the derivation action is
/// (X.f)(x,y) = f_x (alpha x + gamma y) + f_y (beta x - alpha y).
template <class F>
int lie_stabilizer_dim(const F& K, const Quartic<F>& f) {
  const auto& c = f.c;
  auto C = [&](i64 n, typename F::E e) { return K.mul(K.from_int(n), e); };
  // rows: coefficients of x^4, x^3y, x^2y^2, xy^3, y^4; columns alpha, beta, gamma
  typename F::E M[5][3] = {
      {C(4, c[0]), c[1], K.zero()},
      {C(2, c[1]), C(2, c[2]), C(4, c[0])},
      {K.zero(), C(3, c[3]), C(3, c[1])},
      {C(-2, c[3]), C(4, c[4]), C(2, c[2])},
      {C(-4, c[4]), K.zero(), c[3]},
  };
  // Gaussian elimination, exact
  int rank = 0;
  for (int col = 0; col < 3 && rank < 5; ++col) {
    int pivot = -1;
    for (int r = rank; r < 5; ++r)
      if (!K.is_zero(M[r][col])) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    for (int j = 0; j < 3; ++j) std::swap(M[pivot][j], M[rank][j]);
    auto pi = K.inv(M[rank][col]);
    for (int r = 0; r < 5; ++r) {
      if (r == rank || K.is_zero(M[r][col])) continue;
      auto s = K.mul(M[r][col], pi);
      for (int j = 0; j < 3; ++j) M[r][j] = K.sub(M[r][j], K.mul(s, M[rank][j]));
    }
    ++rank;
  }
  return 3 - rank;
}

// --- Weierstrass reduction ----------------------------------------------------

template <class R>
Quartic<R> weierstrass_form(const R& K, typename R::E a, typename R::E b) {
  Quartic<R> f{};
  f.c = {K.zero(), K.one(), K.zero(), a, b};
  return f;
}

/// A point of P^1 over E: finite [r:1] or infinity [1:0].
template <class E>
struct ProjPoint {
  bool infinite;
  E r;
};

template <class F>
struct WeierstrassReduction {
  unsigned m;                       // minimal extension degree
  QuotientField<F> ext;             // F_{q^m} as F[t]/(P)
  Mat2<QuotientField<F>> h;         // act(h, f ext) == y(x^3 + a x y^2 + b y^3)
};

namespace detail {

/// Minimal residue degree of a simple geometric root of a stable quartic.
template <class F>
unsigned minimal_simple_root_degree(const F& K, const Quartic<F>& f) {
  PV<F> P = dehomogenize(K, f);
  bool inf_simple = (poly::deg<F>(P) == 3);
  unsigned best = 0;
  auto fac = poly::factor(K, P);
  for (auto& [g, m] : fac.factors)
    if (m == 1) {
      unsigned e = unsigned(poly::deg<F>(g));
      if (best == 0 || e < best) best = e;
    }
  if (inf_simple && (best == 0 || best > 1)) best = 1;
  if (best == 0) throw DomainError("quartic has no simple root (not stable)");
  return best;
}

}  // namespace detail

/// Reduce a stable quartic to the Weierstrass form of its invariants over
/// the minimal extension containing a simple root. Deterministic: among the
/// simple roots of minimal residue degree the smallest finite one in element
/// order is moved to [1:0]; the point [1:0] itself is used only when no
/// finite simple root exists at that degree.
template <class F>
WeierstrassReduction<F> reduce_to_weierstrass(const F& K, const Quartic<F>& f) {
  QType t = classify(K, f);
  if (!is_stable_type(t)) throw DomainError("reduce_to_weierstrass requires a stable form");
  unsigned e = detail::minimal_simple_root_degree(K, f);
  QuotientField<F> E = QuotientField<F>::make(K, e);
  using QF = QuotientField<F>;

  // lift f coefficientwise
  Quartic<QF> fe{};
  for (int i = 0; i < 5; ++i) fe.c[i] = E.embed(f.c[i]);

  // collect simple roots of residue degree exactly e and pick the smallest
  PV<F> P = dehomogenize(K, f);
  int d = poly::deg<F>(P);
  std::optional<PV<F>> best_root;
  auto fac = poly::factor(K, P);
  for (auto& [g, m] : fac.factors) {
    if (m != 1 || unsigned(poly::deg<F>(g)) != e) continue;
    PV<QF> glift(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) glift[i] = E.embed(g[i]);
    for (auto& r : poly::roots_in_field(E, glift)) {
      if (!best_root || E.cmp(r, *best_root) < 0) best_root = r;
    }
  }
  bool use_infinity = !best_root.has_value();
  if (use_infinity && !(e == 1 && d == 3))
    throw DomainError("internal: no simple root found");  // unreachable

  // g0 moves the chosen root to [1:0]; its first row is the root vector.
  Mat2<QF> g0;
  if (use_infinity) {
    g0 = mat_identity(E);
  } else {
    g0 = {{*best_root, E.one(), E.one(), E.zero()}};  // det = -1
  }
  Quartic<QF> f1 = act(E, g0, fe);
  if (!E.is_zero(f1.c[0])) throw DomainError("internal: root not moved to [1:0]");

  // f1 = y (q0 x^3 + q1 x^2 y + q2 x y^2 + q3 y^3), q0 != 0; clear the x^2 y
  // term of the cubic and normalize the leading coefficient.
  auto q0 = f1.c[1], q1 = f1.c[2];
  auto q0i = E.inv(q0);
  auto Cc = E.neg(E.mul(q1, E.inv(E.mul(E.from_int(3), q0))));
  Mat2<QF> g1 = {{q0i, E.zero(), Cc, E.one()}};
  Mat2<QF> h = pgl2_canonical(E, mat_mul(E, g0, g1));

  auto iv = invariants(K, f);
  Quartic<QF> target = weierstrass_form(E, E.embed(iv.a), E.embed(iv.b));
  if (!quartic_eq(E, act(E, h, fe), target))
    throw DomainError("internal: Weierstrass reduction failed verification");
  return {e, std::move(E), h};
}

// --- stabilizers ----------------------------------------------------------------

template <class F>
struct StabilizerResult {
  QuotientField<F> field;                      // ambient field of the entries
  std::vector<Mat2<QuotientField<F>>> elems;   // canonical representatives
  std::vector<unsigned> def_deg;               // minimal degree of definition over F
  u64 order() const { return elems.size(); }
};

namespace detail {

/// The Moebius transformation sending the projective frame (p1, p2, p3) to
/// (q1, q2, q3), as a matrix acting by v -> v*g on row vectors (so that
/// root r of f maps to r * g^{-1} under act). We need g with p_i * g^{-1}
/// propto q_i, i.e. g maps q_i to p_i: standard frame construction.
template <class E2, class F>
std::optional<Mat2<F>> mat_from_three_points(const F& K, const std::array<E2, 3>& from,
                                             const std::array<E2, 3>& to) {
  // Build M sending the standard frame e1, e2, e1+e2 to (v1, v2, v3):
  // rows lam*v1, mu*v2 with lam*v1 + mu*v2 = v3.
  auto frame = [&](const std::array<E2, 3>& v) -> std::optional<Mat2<F>> {
    // solve [v1; v2]^T (lam, mu)^T = v3
    auto a = v[0].infinite ? K.one() : v[0].r, b = v[0].infinite ? K.zero() : K.one();
    auto c = v[1].infinite ? K.one() : v[1].r, d = v[1].infinite ? K.zero() : K.one();
    auto e = v[2].infinite ? K.one() : v[2].r, f2 = v[2].infinite ? K.zero() : K.one();
    auto det = K.sub(K.mul(a, d), K.mul(b, c));
    if (K.is_zero(det)) return std::nullopt;
    auto di = K.inv(det);
    auto lam = K.mul(di, K.sub(K.mul(e, d), K.mul(f2, c)));
    auto mu = K.mul(di, K.sub(K.mul(a, f2), K.mul(b, e)));
    if (K.is_zero(lam) || K.is_zero(mu)) return std::nullopt;
    return Mat2<F>{{K.mul(lam, a), K.mul(lam, b), K.mul(mu, c), K.mul(mu, d)}};
  };
  auto Mfrom = frame(from);
  auto Mto = frame(to);
  if (!Mfrom || !Mto) return std::nullopt;
  // want g with v*g^{-1}: from_i -> to_i, i.e. to_i * g = from_i:
  // rows of Mto map standard frame to `to`; g = Mto^{-1} Mfrom maps to -> from.
  auto dt = mat_det(K, *Mto);
  auto dti = K.inv(dt);
  Mat2<F> inv_to = {{K.mul(dti, (*Mto).m[3]), K.neg(K.mul(dti, (*Mto).m[1])),
                     K.neg(K.mul(dti, (*Mto).m[2])), K.mul(dti, (*Mto).m[0])}};
  return mat_mul(K, inv_to, *Mfrom);
}

template <class F>
unsigned definition_degree(const QuotientField<F>& E, Mat2<QuotientField<F>> g,
                           unsigned ambient) {
  g = pgl2_canonical(E, g);
  for (unsigned j = 1; j <= ambient; ++j) {
    if (ambient % j != 0) continue;
    bool fixed = true;
    for (auto& entry : g.m) {
      auto fr = entry;
      for (unsigned it = 0; it < j; ++it) fr = E.frobenius_q(fr);
      if (!E.eq(fr, entry)) {
        fixed = false;
        break;
      }
    }
    if (fixed) return j;
  }
  return ambient;
}

}  // namespace detail

/// All geometric roots of f in P^1 over the splitting field, with
/// multiplicities, sorted deterministically (finite roots in element order,
/// then [1:0]).
template <class F>
std::pair<QuotientField<F>, std::vector<std::pair<ProjPoint<PV<F>>, unsigned>>>
quartic_roots_split(const F& K, const Quartic<F>& f) {
  PV<F> P = dehomogenize(K, f);
  int d = poly::deg<F>(P);
  auto fac = poly::factor(K, P);
  unsigned e = 1;
  for (auto& [g, m] : fac.factors) e = unsigned(std::lcm<u64>(e, u64(poly::deg<F>(g))));
  QuotientField<F> E = QuotientField<F>::make(K, e);
  std::vector<std::pair<ProjPoint<PV<F>>, unsigned>> roots;
  for (auto& [g, m] : fac.factors) {
    PV<QuotientField<F>> glift(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) glift[i] = E.embed(g[i]);
    for (auto& r : poly::roots_in_field(E, glift)) roots.push_back({{false, r}, m});
  }
  std::sort(roots.begin(), roots.end(), [&](const auto& x, const auto& y) {
    return E.cmp(x.first.r, y.first.r) < 0;
  });
  if (d < 4) roots.push_back({{true, {}}, unsigned(4 - d)});
  return {std::move(E), std::move(roots)};
}

/// The stabilizer of a stable form inside PGL_2 over F_{q^m}: complete list
/// of canonical representatives plus each element's minimal degree of
/// definition. The candidates are the Moebius maps permuting the root
/// divisor (a stabilizing element must permute roots preserving
/// multiplicities, and a Moebius map is determined by three points); for
/// type (1,3) any stabilizing map fixes two distinct points and acts on the
/// conjugated form c x^3 y through a nontrivial torus character, so only the
/// identity survives.
template <class F>
StabilizerResult<F> stabilizer_stable(const F& K, const Quartic<F>& f, unsigned m) {
  QType t = classify(K, f);
  if (!is_stable_type(t)) throw DomainError("stabilizer_stable requires a stable form");
  auto [E, roots] = quartic_roots_split(K, f);
  using QF = QuotientField<F>;
  using Pt = ProjPoint<PV<F>>;
  unsigned ambient = E.ext_deg();

  Quartic<QF> fe{};
  for (int i = 0; i < 5; ++i) fe.c[i] = E.embed(f.c[i]);

  std::vector<Mat2<QF>> found{mat_identity(E)};
  std::vector<unsigned> degs{1};

  auto try_candidate = [&](const std::array<Pt, 3>& from, const std::array<Pt, 3>& to) {
    auto g = detail::mat_from_three_points<Pt, QF>(E, from, to);
    if (!g) return;
    if (!quartic_eq(E, act(E, *g, fe), fe)) return;
    auto canon = pgl2_canonical(E, *g);
    for (auto& known : found)
      if (mat_entries_eq(E, known, canon)) return;
    found.push_back(canon);
    degs.push_back(detail::definition_degree(E, canon, ambient));
  };

  if (t == QType::T1111) {
    std::array<Pt, 4> pts{roots[0].first, roots[1].first, roots[2].first, roots[3].first};
    std::array<int, 4> perm{0, 1, 2, 3};
    std::sort(perm.begin(), perm.end());
    do {
      if (perm[0] == 0 && perm[1] == 1 && perm[2] == 2) continue;  // identity-fixing prefix
      try_candidate({pts[0], pts[1], pts[2]}, {pts[perm[0]], pts[perm[1]], pts[perm[2]]});
    } while (std::next_permutation(perm.begin(), perm.end()));
  } else if (t == QType::T112) {
    Pt s1, s2, dbl;
    bool have1 = false;
    for (auto& [pt, mult] : roots) {
      if (mult == 2) {
        dbl = pt;
      } else if (!have1) {
        s1 = pt;
        have1 = true;
      } else {
        s2 = pt;
      }
    }
    try_candidate({s1, s2, dbl}, {s2, s1, dbl});
  }
  // T13: identity only

  StabilizerResult<F> out{std::move(E), {}, {}};
  for (std::size_t i = 0; i < found.size(); ++i) {
    if (m % degs[i] == 0) {
      out.elems.push_back(found[i]);
      out.def_deg.push_back(degs[i]);
    }
  }
  // closure under composition
  for (auto& g : out.elems)
    for (auto& h : out.elems) {
      auto gh = pgl2_canonical(out.field, mat_mul(out.field, g, h));
      bool member = false;
      for (auto& k2 : out.elems)
        if (mat_entries_eq(out.field, k2, gh)) member = true;
      if (!member) throw DomainError("internal: stabilizer not closed under composition");
    }
  return out;
}

/// Exhaustive stabilizer over PGL_2(F_{q^m}) by scanning all canonical
/// representatives; enumeration guard q^{3m} - q^m <= 10^8.
template <class F>
StabilizerResult<F> brute_force_stabilizer(const F& K, const Quartic<F>& f, unsigned m,
                                           u64 budget = 100000000ull) {
  if (quartic_is_zero(K, f)) throw DomainError("stabilizer of the zero form is all of PGL_2");
  QuotientField<F> E = QuotientField<F>::make(K, m);
  u64 Q = E.q();
  if (Q > 2000 || Q * Q * Q - Q > budget)
    throw BudgetError("stabilizer enumeration budget exceeded (q^3m - q^m > budget)");
  using QF = QuotientField<F>;
  Quartic<QF> fe{};
  for (int i = 0; i < 5; ++i) fe.c[i] = E.embed(f.c[i]);

  StabilizerResult<F> out{std::move(E), {}, {}};
  const QF& EE = out.field;
  auto consider = [&](Mat2<QF> g) {
    if (EE.is_zero(mat_det(EE, g))) return;
    if (quartic_eq(EE, act(EE, g, fe), fe)) {
      out.elems.push_back(g);
      out.def_deg.push_back(detail::definition_degree(EE, g, m));
    }
  };
  // canonical reps: [1 b; c d] and [0 1; c d] with c != 0
  for (u64 ib = 0; ib < Q; ++ib)
    for (u64 ic = 0; ic < Q; ++ic)
      for (u64 id = 0; id < Q; ++id)
        consider({{EE.one(), EE.elem_at(ib), EE.elem_at(ic), EE.elem_at(id)}});
  for (u64 ic = 1; ic < Q; ++ic)
    for (u64 id = 0; id < Q; ++id)
      consider({{EE.zero(), EE.one(), EE.elem_at(ic), EE.elem_at(id)}});
  return out;
}

/// Stabilizer dispatch per the enumeration policy: stable forms use the
/// complete root-pairing construction (any m), non-stable nonzero forms fall
/// back to exhaustive enumeration under the budget guard.
template <class F>
StabilizerResult<F> stabilizer(const F& K, const Quartic<F>& f, unsigned m) {
  if (quartic_is_zero(K, f)) throw DomainError("stabilizer of the zero form is all of PGL_2");
  if (is_stable_type(classify(K, f))) return stabilizer_stable(K, f, m);
  return brute_force_stabilizer(K, f, m);
}

// --- 2-torsion --------------------------------------------------------------

/// |E_{a,b}[2](F_{q^m})| = 1 + #{roots of x^3 + a x + b in F_{q^m}}, computed
/// from the factor degrees of the cubic over F_q.
template <class F>
u64 two_torsion_count(const F& K, typename F::E a, typename F::E b, unsigned m) {
  auto disc = quartic_disc_of_ab(K, a, b);
  if (K.is_zero(disc))
    throw DomainError("two_torsion_count requires disc != 0 (not an elliptic curve)");
  PV<F> cubic{b, a, K.zero(), K.one()};
  poly::trim(K, cubic);  // never trims below degree 3
  u64 count = 1;
  for (auto& [g, mult] : poly::factor(K, cubic).factors) {
    unsigned e = unsigned(poly::deg<F>(g));
    if (m % e == 0) count += e;
  }
  return count;
}

}  // namespace qsel

#endif  // QSEL_QUARTIC_HPP
