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
// Dense univariate polynomials over a field context.
//
// A polynomial is a std::vector of field elements, coefficient of t^i at
// index i, normalized so the back() is nonzero; the zero polynomial is the
// empty vector. All routines take the field context as the first argument
// and work for any context exposing the small arithmetic surface used here
// (Fq, QuotientField, FracField over Fq, ...).
//
// Factorization is distinct-degree splitting followed by Cantor-Zassenhaus
// equal-degree splitting; the randomness is drawn from a stream keyed by
// (seed, input hash) so output is reproducible, and the factor list is
// sorted by (degree, lexicographic) regardless.
//

#ifndef QSEL_POLY_HPP
#define QSEL_POLY_HPP

#include <algorithm>
#include <utility>
#include <vector>

#include "qsel/common.hpp"
#include "qsel/ff.hpp"

namespace qsel {

template <class F>
using PV = std::vector<typename F::E>;

namespace poly {

template <class F>
void trim(const F& K, PV<F>& v) {
  while (!v.empty() && K.is_zero(v.back())) v.pop_back();
}

template <class F>
int deg(const PV<F>& v) {
  return int(v.size()) - 1;  // -1 for the zero polynomial
}

template <class F>
bool is_zero(const PV<F>& v) {
  return v.empty();
}

template <class F>
PV<F> constant(const F& K, typename F::E e) {
  PV<F> v;
  if (!K.is_zero(e)) v.push_back(e);
  return v;
}

template <class F>
PV<F> from_ints(const F& K, std::initializer_list<i64> cs) {
  PV<F> v;
  for (i64 c : cs) v.push_back(K.from_int(c));
  trim(K, v);
  return v;
}

template <class F>
typename F::E lc(const F& K, const PV<F>& v) {
  return v.empty() ? K.zero() : v.back();
}

template <class F>
bool eq(const F& K, const PV<F>& a, const PV<F>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!K.eq(a[i], b[i])) return false;
  return true;
}

template <class F>
PV<F> add(const F& K, const PV<F>& a, const PV<F>& b) {
  PV<F> r(std::max(a.size(), b.size()), K.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = K.add(r[i], b[i]);
  trim(K, r);
  return r;
}

template <class F>
PV<F> neg(const F& K, const PV<F>& a) {
  PV<F> r(a);
  for (auto& c : r) c = K.neg(c);
  return r;
}

template <class F>
PV<F> sub(const F& K, const PV<F>& a, const PV<F>& b) {
  return add(K, a, neg(K, b));
}

template <class F>
PV<F> scale(const F& K, const PV<F>& a, typename F::E c) {
  if (K.is_zero(c)) return {};
  PV<F> r(a);
  for (auto& x : r) x = K.mul(x, c);
  trim(K, r);
  return r;
}

/// a * t^s
template <class F>
PV<F> shift(const F& K, const PV<F>& a, unsigned s) {
  if (a.empty()) return {};
  PV<F> r(a.size() + s, K.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i + s] = a[i];
  return r;
}

template <class F>
PV<F> mul(const F& K, const PV<F>& a, const PV<F>& b) {
  if (a.empty() || b.empty()) return {};
  PV<F> r(a.size() + b.size() - 1, K.zero());
  if constexpr (std::is_same_v<F, Fq>) {
    // lazy accumulation for small prime fields; dominates the Monte Carlo
    // kernels
    if (K.k() == 1 && (K.p() - 1) * (K.p() - 1) <= (~u64(0)) / std::min(a.size(), b.size())) {
      for (std::size_t i = 0; i < r.size(); ++i) {
        u64 acc = 0;
        std::size_t jlo = i >= b.size() - 1 ? i - (b.size() - 1) : 0;
        std::size_t jhi = std::min(i, a.size() - 1);
        for (std::size_t j = jlo; j <= jhi; ++j) acc += a[j] * b[i - j];
        r[i] = acc % K.p();
      }
      trim(K, r);
      return r;
    }
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (K.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = K.add(r[i + j], K.mul(a[i], b[j]));
  }
  trim(K, r);
  return r;
}

template <class F>
std::pair<PV<F>, PV<F>> divrem(const F& K, PV<F> a, const PV<F>& b) {
  if (b.empty()) throw DomainError("polynomial division by zero");
  if (a.size() < b.size()) return {{}, std::move(a)};
  PV<F> q(a.size() - b.size() + 1, K.zero());
  auto lbi = K.inv(b.back());
  for (std::size_t i = a.size(); i-- >= b.size();) {
    if (!K.is_zero(a[i])) {
      auto c = K.mul(a[i], lbi);
      q[i - (b.size() - 1)] = c;
      std::size_t off = i - (b.size() - 1);
      for (std::size_t j = 0; j < b.size(); ++j) a[off + j] = K.sub(a[off + j], K.mul(c, b[j]));
    }
    if (i == b.size() - 1) break;
  }
  trim(K, a);
  trim(K, q);
  return {std::move(q), std::move(a)};
}

template <class F>
PV<F> rem(const F& K, PV<F> a, const PV<F>& b) {
  return divrem(K, std::move(a), b).second;
}

template <class F>
PV<F> quo(const F& K, PV<F> a, const PV<F>& b) {
  return divrem(K, std::move(a), b).first;
}

/// Exact quotient; throws if the division leaves a remainder.
template <class F>
PV<F> divexact(const F& K, PV<F> a, const PV<F>& b) {
  auto [q, r] = divrem(K, std::move(a), b);
  if (!r.empty()) throw DomainError("inexact polynomial division");
  return q;
}

template <class F>
PV<F> monic(const F& K, PV<F> a) {
  if (a.empty()) return a;
  auto li = K.inv(a.back());
  for (auto& c : a) c = K.mul(c, li);
  return a;
}

template <class F>
PV<F> gcd(const F& K, PV<F> a, PV<F> b) {
  while (!b.empty()) {
    a = rem(K, std::move(a), b);
    std::swap(a, b);
  }
  return monic(K, std::move(a));
}

/// g = gcd(a, b) monic together with u with u*a == g (mod b).
template <class F>
std::pair<PV<F>, PV<F>> half_ext_gcd(const F& K, PV<F> a, PV<F> b) {
  PV<F> u0 = constant(K, K.one()), u1 = {};
  while (!b.empty()) {
    auto [q, r] = divrem(K, std::move(a), b);
    a = std::move(b);
    b = std::move(r);
    PV<F> u2 = sub(K, u0, mul(K, q, u1));
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  if (!a.empty()) {
    auto li = K.inv(a.back());
    for (auto& c : a) c = K.mul(c, li);
    for (auto& c : u0) c = K.mul(c, li);
  }
  return {std::move(a), std::move(u0)};
}

template <class F>
PV<F> derivative(const F& K, const PV<F>& a) {
  if (a.size() <= 1) return {};
  PV<F> r(a.size() - 1, K.zero());
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = K.mul(a[i], K.from_int(i64(i)));
  trim(K, r);
  return r;
}

template <class F>
typename F::E eval(const F& K, const PV<F>& a, typename F::E x) {
  auto r = K.zero();
  for (std::size_t i = a.size(); i-- > 0;) {
    r = K.add(K.mul(r, x), a[i]);
    if (i == 0) break;
  }
  return r;
}

/// t^bound * a(1/t), the chart swap for a section of O(bound).
template <class F>
PV<F> reverse_wrt(const F& K, const PV<F>& a, unsigned bound) {
  if (deg<F>(a) > int(bound)) throw DomainError("degree exceeds line-bundle bound");
  PV<F> r(bound + 1, K.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[bound - i] = a[i];
  trim(K, r);
  return r;
}

template <class F>
PV<F> mulmod(const F& K, const PV<F>& a, const PV<F>& b, const PV<F>& m) {
  return rem(K, mul(K, a, b), m);
}

template <class F>
PV<F> pow_mod(const F& K, PV<F> base, u128 e, const PV<F>& m) {
  PV<F> r = rem(K, constant(K, K.one()), m);
  base = rem(K, std::move(base), m);
  while (e) {
    if (e & 1) r = mulmod(K, r, base, m);
    base = mulmod(K, base, base, m);
    e >>= 1;
  }
  return r;
}

/// Deterministic total order: degree first, then coefficients constant-first.
template <class F>
int cmp(const F& K, const PV<F>& a, const PV<F>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    int c = K.cmp(a[i], b[i]);
    if (c != 0) return c;
  }
  return 0;
}

// --- enumeration ----------------------------------------------------------

/// The monic polynomial of given degree at position `index` in lexicographic
/// (constant-term-first) order over the element enumeration of K.
template <class F>
PV<F> monic_at(const F& K, unsigned degree, u64 index) {
  PV<F> v(degree + 1, K.zero());
  v[degree] = K.one();
  for (unsigned l = degree; l-- > 0;) {
    v[l] = K.elem_at(index % K.q());
    index /= K.q();
  }
  return v;
}

// --- squarefree decomposition (Yun, with p-th power descent) --------------

template <class F>
typename F::E pth_root_elem(const F& K, typename F::E a) {
  return K.pow(a, K.q() / K.p());
}

template <class F>
PV<F> pth_root(const F& K, const PV<F>& f) {
  // valid when f' == 0, i.e. f(t) = g(t)^p
  u64 p = K.p();
  PV<F> g((f.size() - 1) / p + 1, K.zero());
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (K.is_zero(f[i])) continue;
    if (i % p != 0) throw DomainError("pth_root: polynomial not a p-th power");
    g[i / p] = pth_root_elem(K, f[i]);
  }
  trim(K, g);
  return g;
}

namespace detail {
template <class F>
void sqf_rec(const F& K, PV<F> f, unsigned scale,
             std::vector<std::pair<PV<F>, unsigned>>& out) {
  PV<F> fp = derivative(K, f);
  if (fp.empty()) {
    if (deg<F>(f) <= 0) return;
    sqf_rec(K, pth_root(K, f), scale * unsigned(K.p()), out);
    return;
  }
  PV<F> c = gcd(K, f, fp);
  PV<F> w = divexact(K, std::move(f), c);
  unsigned i = 1;
  while (deg<F>(w) > 0) {
    PV<F> y = gcd(K, w, c);
    PV<F> z = divexact(K, std::move(w), y);
    if (deg<F>(z) > 0) out.emplace_back(std::move(z), i * scale);
    ++i;
    c = divexact(K, std::move(c), y);
    w = std::move(y);
  }
  if (deg<F>(c) > 0) sqf_rec(K, pth_root(K, c), scale * unsigned(K.p()), out);
}
}  // namespace detail

/// f = unit * prod g_i^{m_i} with the g_i monic, squarefree, pairwise
/// coprime and the m_i distinct within each branch.
template <class F>
std::vector<std::pair<PV<F>, unsigned>> squarefree_decomposition(const F& K, const PV<F>& f) {
  if (f.empty()) throw DomainError("squarefree decomposition of the zero polynomial");
  std::vector<std::pair<PV<F>, unsigned>> out;
  detail::sqf_rec(K, monic(K, f), 1, out);
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second < b.second;
    return cmp(K, a.first, b.first) < 0;
  });
  return out;
}

// --- factorization ---------------------------------------------------------

template <class F>
struct Factorization {
  typename F::E unit;
  std::vector<std::pair<PV<F>, unsigned>> factors;  // monic irreducible, multiplicity
};

namespace detail {

template <class F>
u64 hash_poly(const F& K, const PV<F>& f) {
  u64 h = 0x9e3779b97f4a7c15ull;
  for (auto& c : f) h = splitmix64(h ^ K.index_hint(c));
  return h;
}

/// x^(q^j) mod f for j = 1..n, each step one q-power.
template <class F>
PV<F> frobenius_step(const F& K, const PV<F>& h, const PV<F>& f) {
  return pow_mod(K, h, K.q(), f);
}

/// a^((q^d - 1)/2) mod f without forming q^d: (q^d-1)/2 = (q-1)/2 * sum q^i.
template <class F>
PV<F> half_norm_pow(const F& K, const PV<F>& a, unsigned d, const PV<F>& f) {
  PV<F> u = rem(K, a, f);
  PV<F> v = u;
  for (unsigned i = 1; i < d; ++i) {
    u = frobenius_step(K, u, f);
    v = mulmod(K, v, u, f);
  }
  return pow_mod(K, v, (K.q() - 1) / 2, f);
}

template <class F>
void edf(const F& K, PV<F> f, unsigned d, Rng& rng, std::vector<PV<F>>& out) {
  if (deg<F>(f) == int(d)) {
    out.push_back(monic(K, std::move(f)));
    return;
  }
  for (;;) {
    // random polynomial of degree < deg f
    PV<F> a(deg<F>(f), K.zero());
    for (auto& c : a) c = K.elem_at(rng.below(K.q()));
    trim(K, a);
    if (a.empty()) continue;
    PV<F> g = gcd(K, a, f);
    if (deg<F>(g) > 0 && deg<F>(g) < deg<F>(f)) {
      edf(K, g, d, rng, out);
      edf(K, divexact(K, std::move(f), g), d, rng, out);
      return;
    }
    PV<F> b = half_norm_pow(K, a, d, f);
    b = sub(K, b, constant(K, K.one()));
    g = gcd(K, b, f);
    if (deg<F>(g) > 0 && deg<F>(g) < deg<F>(f)) {
      edf(K, g, d, rng, out);
      edf(K, divexact(K, std::move(f), g), d, rng, out);
      return;
    }
  }
}

}  // namespace detail

/// Monic irreducible factors with multiplicity; unit * prod = input.
/// Deterministic for fixed seed (and the order is deterministic regardless).
template <class F>
Factorization<F> factor(const F& K, const PV<F>& f, u64 seed = 0) {
  if (f.empty()) throw DomainError("cannot factor the zero polynomial");
  Factorization<F> out;
  out.unit = lc(K, f);
  if (deg<F>(f) == 0) return out;
  Rng rng(stream_key(seed ^ K.seed(), 0xfac70ull, detail::hash_poly(K, f)));
  for (auto& [g, mult] : squarefree_decomposition(K, f)) {
    // distinct-degree splitting of the squarefree g
    PV<F> h = from_ints(K, {0, 1});  // x
    PV<F> g_rem = g;
    h = rem(K, std::move(h), g_rem);
    for (unsigned d = 1; 2 * d <= unsigned(deg<F>(g_rem)); ++d) {
      h = detail::frobenius_step(K, h, g_rem);
      PV<F> hx = sub(K, h, rem(K, from_ints(K, {0, 1}), g_rem));
      PV<F> G = gcd(K, hx, g_rem);
      if (deg<F>(G) > 0) {
        std::vector<PV<F>> irreds;
        detail::edf(K, G, d, rng, irreds);
        for (auto& irr : irreds) out.factors.emplace_back(std::move(irr), mult);
        g_rem = divexact(K, std::move(g_rem), G);
        h = rem(K, std::move(h), g_rem);
      }
      if (deg<F>(g_rem) == 0) break;
    }
    if (deg<F>(g_rem) > 0) out.factors.emplace_back(monic(K, g_rem), mult);
  }
  std::sort(out.factors.begin(), out.factors.end(), [&](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    int c = cmp(K, a.first, b.first);
    if (c != 0) return c < 0;
    return a.second < b.second;
  });
  return out;
}

template <class F>
bool irreducible(const F& K, const PV<F>& f) {
  int n = deg<F>(f);
  if (n <= 0) return false;
  if (n == 1) return true;
  PV<F> x = from_ints(K, {0, 1});
  PV<F> h = rem(K, x, f);
  std::vector<PV<F>> frob_powers;  // x^(q^i) mod f
  for (int i = 0; i < n; ++i) {
    h = detail::frobenius_step(K, h, f);
    frob_powers.push_back(h);
  }
  if (!eq(K, frob_powers.back(), rem(K, x, f))) return false;
  for (u64 l : prime_divisors(u64(n))) {
    PV<F> d = gcd(K, sub(K, frob_powers[n / l - 1], rem(K, x, f)), f);
    if (deg<F>(d) != 0) return false;
  }
  return true;
}

/// Roots of f lying in K, sorted in the element order, with multiplicity
/// collapsed (each root listed once).
template <class F>
std::vector<typename F::E> roots_in_field(const F& K, const PV<F>& f, u64 seed = 0) {
  std::vector<typename F::E> rs;
  auto fac = factor(K, f, seed);
  for (auto& [g, m] : fac.factors)
    if (deg<F>(g) == 1) rs.push_back(K.neg(g[0]));
  std::sort(rs.begin(), rs.end(), [&](auto a, auto b) { return K.cmp(a, b) < 0; });
  return rs;
}

/// Number of monic irreducible polynomials of degree n over F_q
/// (necklace formula).
inline Int irreducible_count(u64 q, int n) {
  if (n <= 0) throw DomainError("irreducible_count requires n >= 1");
  Int s = 0;
  for (u64 d = 1; d <= u64(n); ++d) {
    if (u64(n) % d != 0) continue;
    int mu = moebius(d);
    if (mu == 0) continue;
    s += Int(mu) * ipow_int(q, unsigned(u64(n) / d));
  }
  Int r = s / n;
  if (r * n != s) throw DomainError("necklace count not integral");
  return r;
}

/// All monic irreducibles of degree n, in lexicographic order.
template <class F>
std::vector<PV<F>> irreducibles_of_degree(const F& K, unsigned n, u64 budget = 100000000ull) {
  u64 total = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (total > budget / K.q()) throw BudgetError("irreducible enumeration budget exceeded");
    total *= K.q();
  }
  std::vector<PV<F>> out;
  for (u64 idx = 0; idx < total; ++idx) {
    PV<F> f = monic_at(K, n, idx);
    if (irreducible(K, f)) out.push_back(std::move(f));
  }
  return out;
}

/// Monic divisors of the polynomial with the given factorization, of degree
/// <= max_deg, sorted (degree, lex).
template <class F>
std::vector<PV<F>> monic_divisors_up_to(const F& K, const Factorization<F>& fac, int max_deg,
                                        std::size_t cap = 1u << 20) {
  std::vector<PV<F>> out{constant(K, K.one())};
  for (auto& [g, m] : fac.factors) {
    std::size_t n0 = out.size();
    PV<F> pw = constant(K, K.one());
    for (unsigned e = 1; e <= m; ++e) {
      pw = mul(K, pw, g);
      if (deg<F>(pw) > max_deg) break;
      for (std::size_t i = 0; i < n0; ++i) {
        PV<F> d = mul(K, out[i], pw);
        if (deg<F>(d) <= max_deg) out.push_back(std::move(d));
        if (out.size() > cap) throw BudgetError("divisor enumeration cap exceeded");
      }
    }
  }
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return cmp(K, a, b) < 0;
  });
  return out;
}

/// Resultant via the Euclidean remainder sequence; both inputs nonzero.
template <class F>
typename F::E resultant(const F& K, PV<F> a, PV<F> b) {
  if (a.empty() || b.empty()) throw DomainError("resultant of zero polynomial");
  auto res = K.one();
  bool negate = false;
  for (;;) {
    if (deg<F>(b) == 0) {
      res = K.mul(res, K.pow(b[0], u128(deg<F>(a))));
      break;
    }
    PV<F> r = rem(K, a, b);
    if (r.empty()) return K.zero();
    if ((deg<F>(a) & 1) && (deg<F>(b) & 1)) negate = !negate;
    res = K.mul(res, K.pow(lc(K, b), u128(deg<F>(a) - deg<F>(r))));
    a = std::move(b);
    b = std::move(r);
  }
  return negate ? K.neg(res) : res;
}

}  // namespace poly
}  // namespace qsel

#endif  // QSEL_POLY_HPP
