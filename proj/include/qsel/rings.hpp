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
// Ring contexts layered over a base field:
//
//   DualRing<F>       F[eps]/(eps^2), tangent-level counting
//   PolyRingCtx<F>    F[t] viewed as a coefficient ring (inverses of units only)
//   QuotientField<F>  F[t]/(P) for monic irreducible P, i.e. F_{q^m}
//   FracField<F>      F(t), used to classify generic fibers
//
// Each exposes the same arithmetic surface the generic layers consume.
//

#ifndef QSEL_RINGS_HPP
#define QSEL_RINGS_HPP

#include <map>
#include <mutex>

#include "qsel/poly.hpp"

namespace qsel {

// --- dual numbers -----------------------------------------------------------

template <class F>
class DualRing {
 public:
  struct E {
    typename F::E a, b;  // a + eps*b
    bool operator==(const E&) const = default;
  };

  explicit DualRing(const F& base) : base_(base) {}
  const F& base() const { return base_; }

  E make(typename F::E a, typename F::E b) const { return {a, b}; }
  E zero() const { return {base_.zero(), base_.zero()}; }
  E one() const { return {base_.one(), base_.zero()}; }
  E eps() const { return {base_.zero(), base_.one()}; }
  E from_int(i64 n) const { return {base_.from_int(n), base_.zero()}; }
  bool is_zero(E x) const { return base_.is_zero(x.a) && base_.is_zero(x.b); }
  bool eq(E x, E y) const { return base_.eq(x.a, y.a) && base_.eq(x.b, y.b); }
  bool is_unit(E x) const { return !base_.is_zero(x.a); }

  E add(E x, E y) const { return {base_.add(x.a, y.a), base_.add(x.b, y.b)}; }
  E sub(E x, E y) const { return {base_.sub(x.a, y.a), base_.sub(x.b, y.b)}; }
  E neg(E x) const { return {base_.neg(x.a), base_.neg(x.b)}; }
  E mul(E x, E y) const {
    return {base_.mul(x.a, y.a), base_.add(base_.mul(x.a, y.b), base_.mul(x.b, y.a))};
  }
  E inv(E x) const {
    if (!is_unit(x)) throw DomainError("non-unit in F_q[eps]/(eps^2)");
    auto ia = base_.inv(x.a);
    return {ia, base_.neg(base_.mul(base_.mul(ia, ia), x.b))};
  }
  E pow(E x, u128 e) const {
    E r = one();
    while (e) {
      if (e & 1) r = mul(r, x);
      x = mul(x, x);
      e >>= 1;
    }
    return r;
  }

  int cmp(E x, E y) const {
    int c = base_.cmp(x.a, y.a);
    return c != 0 ? c : base_.cmp(x.b, y.b);
  }
  u64 index_hint(E x) const {
    return splitmix64(base_.index_hint(x.a) * 0x100000001b3ull ^ base_.index_hint(x.b));
  }

  u64 size() const { return base_.q() * base_.q(); }
  E elem_at(u64 i) const { return {base_.elem_at(i / base_.q()), base_.elem_at(i % base_.q())}; }

 private:
  const F& base_;
};

// --- F[t] as a coefficient ring ---------------------------------------------

template <class F>
class PolyRingCtx {
 public:
  using E = PV<F>;

  explicit PolyRingCtx(const F& base) : base_(base) {}
  const F& base() const { return base_; }

  E zero() const { return {}; }
  E one() const { return poly::constant(base_, base_.one()); }
  E from_int(i64 n) const { return poly::constant(base_, base_.from_int(n)); }
  bool is_zero(const E& x) const { return x.empty(); }
  bool eq(const E& x, const E& y) const { return poly::eq(base_, x, y); }

  E add(const E& x, const E& y) const { return poly::add(base_, x, y); }
  E sub(const E& x, const E& y) const { return poly::sub(base_, x, y); }
  E neg(const E& x) const { return poly::neg(base_, x); }
  E mul(const E& x, const E& y) const { return poly::mul(base_, x, y); }
  E inv(const E& x) const {
    if (poly::deg<F>(x) != 0) throw DomainError("non-unit in F_q[t]");
    return poly::constant(base_, base_.inv(x[0]));
  }
  E pow(E x, u128 e) const {
    E r = one();
    while (e) {
      if (e & 1) r = mul(r, x);
      x = mul(x, x);
      e >>= 1;
    }
    return r;
  }

  int cmp(const E& x, const E& y) const { return poly::cmp(base_, x, y); }
  u64 index_hint(const E& x) const {
    u64 h = 0x243f6a8885a308d3ull;
    for (auto& c : x) h = splitmix64(h ^ base_.index_hint(c));
    return h;
  }

 private:
  const F& base_;
};

// --- relative extension F_{q^m} = F[t]/(P) ----------------------------------

template <class F>
class QuotientField {
 public:
  using E = PV<F>;

  QuotientField(const F& base, PV<F> modulus) : base_(base), modulus_(std::move(modulus)) {
    m_ = unsigned(poly::deg<F>(modulus_));
    if (m_ < 1 || !base_.eq(modulus_.back(), base_.one()))
      throw DomainError("extension modulus must be monic of degree >= 1");
    if (m_ > 1 && !poly::irreducible(base_, modulus_))
      throw DomainError("extension modulus is reducible");
    size_ok_ = true;
    q_ = 1;
    for (unsigned i = 0; i < m_; ++i) {
      if (q_ > (u64(1) << 62) / base_.q()) {
        size_ok_ = false;
        break;
      }
      q_ *= base_.q();
    }
  }

  /// F_{q^m} with the lexicographically smallest monic irreducible modulus
  /// of degree m over the base field (cached per base).
  static QuotientField make(const F& base, unsigned m) {
    return QuotientField(base, canonical_modulus(base, m));
  }

  const F& base() const { return base_; }
  const PV<F>& modulus() const { return modulus_; }
  unsigned ext_deg() const { return m_; }
  u64 p() const { return base_.p(); }
  u64 q() const {
    if (!size_ok_) throw DomainError("extension field size exceeds 2^62");
    return q_;
  }
  u64 seed() const { return base_.seed(); }

  E zero() const { return {}; }
  E one() const { return poly::constant(base_, base_.one()); }
  E from_int(i64 n) const { return poly::constant(base_, base_.from_int(n)); }
  E embed(typename F::E c) const { return poly::constant(base_, c); }
  /// The class of t, a root of the modulus.
  E gen() const { return poly::rem(base_, poly::from_ints(base_, {0, 1}), modulus_); }

  bool is_zero(const E& x) const { return x.empty(); }
  bool eq(const E& x, const E& y) const { return poly::eq(base_, x, y); }

  E add(const E& x, const E& y) const { return poly::add(base_, x, y); }
  E sub(const E& x, const E& y) const { return poly::sub(base_, x, y); }
  E neg(const E& x) const { return poly::neg(base_, x); }
  E mul(const E& x, const E& y) const { return poly::mulmod(base_, x, y, modulus_); }
  E inv(const E& x) const {
    if (x.empty()) throw DomainError("division by zero in extension field");
    auto [g, u] = poly::half_ext_gcd(base_, x, modulus_);
    if (poly::deg<F>(g) != 0) throw DomainError("non-invertible element");  // unreachable
    return poly::rem(base_, u, modulus_);
  }
  E pow(E x, u128 e) const {
    E r = one();
    x = poly::rem(base_, std::move(x), modulus_);
    while (e) {
      if (e & 1) r = mul(r, x);
      x = mul(x, x);
      e >>= 1;
    }
    return r;
  }

  /// Relative Frobenius x -> x^q over the base field.
  E frobenius_q(const E& x) const { return pow(x, base_.q()); }

  bool is_square(const E& x) const {
    if (x.empty()) return true;
    return eq(pow(x, (q() - 1) / 2), one());
  }

  int cmp(const E& x, const E& y) const { return poly::cmp(base_, x, y); }
  u64 index_hint(const E& x) const {
    u64 h = 0x452821e638d01377ull;
    for (auto& c : x) h = splitmix64(h ^ base_.index_hint(c));
    return h;
  }

  /// Lexicographic enumeration (constant coefficient first).
  E elem_at(u64 index) const {
    E v(m_, base_.zero());
    for (unsigned l = m_; l-- > 0;) {
      v[l] = base_.elem_at(index % base_.q());
      index /= base_.q();
    }
    poly::trim(base_, v);
    return v;
  }

  u64 index_of(const E& x) const {
    u64 idx = 0;
    for (unsigned l = 0; l < m_; ++l)
      idx = idx * base_.q() + (l < x.size() ? base_.index_of(x[l]) : 0);
    return idx;
  }

 private:
  static PV<F> canonical_modulus(const F& base, unsigned m) {
    if (m == 0) throw DomainError("extension degree must be >= 1");
    static std::mutex mu;
    static std::map<std::tuple<u64, unsigned, u64, unsigned>, std::vector<u64>> cache;
    // cache key: base field identity (p, k, packed modulus hash) + m; values
    // store coefficient indices so they are base-representation independent
    u64 mod_hash = 0;
    for (u64 c : base.modulus()) mod_hash = splitmix64(mod_hash ^ c);
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(base.p(), base.k(), mod_hash, m);
    auto it = cache.find(key);
    if (it == cache.end()) {
      u64 total = 1;
      for (unsigned i = 0; i < m; ++i) {
        if (total > (u64(1) << 40)) throw BudgetError("modulus search space too large");
        total *= base.q();
      }
      std::vector<u64> found;
      for (u64 idx = 0; idx < total; ++idx) {
        PV<F> f = poly::monic_at(base, m, idx);
        if (m == 1 || poly::irreducible(base, f)) {
          found.reserve(f.size());
          for (auto& c : f) found.push_back(base.index_of(c));
          break;
        }
      }
      it = cache.emplace(key, std::move(found)).first;
    }
    PV<F> f;
    f.reserve(it->second.size());
    for (u64 i : it->second) f.push_back(base.elem_at(i));
    return f;
  }

  const F& base_;
  PV<F> modulus_;
  unsigned m_;
  u64 q_ = 0;
  bool size_ok_ = false;
};

// --- rational function field F(t) -------------------------------------------

template <class F>
class FracField {
 public:
  struct E {
    PV<F> num, den;  // den monic, gcd(num, den) = 1; zero is {{}, {1}}
  };

  explicit FracField(const F& base) : base_(base) {}
  const F& base() const { return base_; }
  u64 p() const { return base_.p(); }
  u64 q() const { throw DomainError("F_q(t) is infinite"); }
  u64 seed() const { return base_.seed(); }

  E make(PV<F> num, PV<F> den) const {
    if (den.empty()) throw DomainError("zero denominator");
    return reduce(std::move(num), std::move(den));
  }
  E from_poly(PV<F> num) const { return {std::move(num), one_poly()}; }
  E zero() const { return {{}, one_poly()}; }
  E one() const { return {one_poly(), one_poly()}; }
  E from_int(i64 n) const { return {poly::constant(base_, base_.from_int(n)), one_poly()}; }

  bool is_zero(const E& x) const { return x.num.empty(); }
  bool eq(const E& x, const E& y) const {
    return poly::eq(base_, x.num, y.num) && poly::eq(base_, x.den, y.den);
  }

  E add(const E& x, const E& y) const {
    PV<F> n = poly::add(base_, poly::mul(base_, x.num, y.den), poly::mul(base_, y.num, x.den));
    return reduce(std::move(n), poly::mul(base_, x.den, y.den));
  }
  E neg(const E& x) const { return {poly::neg(base_, x.num), x.den}; }
  E sub(const E& x, const E& y) const { return add(x, neg(y)); }
  E mul(const E& x, const E& y) const {
    return reduce(poly::mul(base_, x.num, y.num), poly::mul(base_, x.den, y.den));
  }
  E inv(const E& x) const {
    if (x.num.empty()) throw DomainError("division by zero in F_q(t)");
    return reduce(x.den, x.num);
  }
  E pow(E x, u128 e) const {
    E r = one();
    while (e) {
      if (e & 1) r = mul(r, x);
      x = mul(x, x);
      e >>= 1;
    }
    return r;
  }

  int cmp(const E& x, const E& y) const {
    int c = poly::cmp(base_, x.num, y.num);
    return c != 0 ? c : poly::cmp(base_, x.den, y.den);
  }
  u64 index_hint(const E& x) const {
    u64 h = 0x13198a2e03707344ull;
    for (auto& c : x.num) h = splitmix64(h ^ base_.index_hint(c));
    for (auto& c : x.den) h = splitmix64(h ^ base_.index_hint(c));
    return h;
  }

 private:
  PV<F> one_poly() const { return poly::constant(base_, base_.one()); }

  E reduce(PV<F> num, PV<F> den) const {
    if (den.empty()) throw DomainError("zero denominator");
    if (num.empty()) return {{}, one_poly()};
    PV<F> g = poly::gcd(base_, num, den);
    if (poly::deg<F>(g) > 0) {
      num = poly::divexact(base_, std::move(num), g);
      den = poly::divexact(base_, std::move(den), g);
    }
    auto li = base_.inv(den.back());
    for (auto& c : den) c = base_.mul(c, li);
    for (auto& c : num) c = base_.mul(c, li);
    return {std::move(num), std::move(den)};
  }

  const F& base_;
};

}  // namespace qsel

#endif  // QSEL_RINGS_HPP
