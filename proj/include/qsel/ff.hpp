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
// Exact arithmetic in F_{p^k}, char > 3.
//
// Elements are stored packed: an element with coefficient vector
// (c_0, ..., c_{k-1}) over F_p (constant term first, w.r.t. the modulus
// root) is the integer sum c_i p^i. Enumeration and all "smallest
// representative" choices use lexicographic order on the coefficient
// vector, constant term first, so serialized data is stable across runs.
//

#ifndef QSEL_FF_HPP
#define QSEL_FF_HPP

#include <array>
#include <map>
#include <mutex>
#include <vector>

#include "qsel/common.hpp"

namespace qsel {

namespace detail {

// Minimal F_p[x] helpers on raw digit vectors, used only for modulus search
// and validation. The general polynomial layer lives in poly.hpp.

inline void fp_trim(std::vector<u64>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

inline std::vector<u64> fp_mulmod(const std::vector<u64>& a, const std::vector<u64>& b,
                                  const std::vector<u64>& mod, u64 p) {
  if (a.empty() || b.empty()) return {};
  std::vector<u64> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] = (acc[i + j] + a[i] * b[j]) % p;
  }
  // mod is monic of degree m
  std::size_t m = mod.size() - 1;
  for (std::size_t i = acc.size(); i-- > m;) {
    u64 c = acc[i] % p;
    if (c == 0) continue;
    u64 nc = p - c;
    for (std::size_t j = 0; j < m; ++j) acc[i - m + j] = (acc[i - m + j] + nc * mod[j]) % p;
    acc[i] = 0;
  }
  acc.resize(m);
  fp_trim(acc);
  return acc;
}

inline std::vector<u64> fp_powmod_x(u128 e, const std::vector<u64>& mod, u64 p) {
  // x^e mod `mod`
  std::vector<u64> result{1}, base{0, 1};
  if (mod.size() <= 2) base = fp_mulmod({1}, base, mod, p);  // reduce if deg mod <= 1
  while (e) {
    if (e & 1) result = fp_mulmod(result, base, mod, p);
    base = fp_mulmod(base, base, mod, p);
    e >>= 1;
  }
  return result;
}

inline std::vector<u64> fp_gcd(std::vector<u64> a, std::vector<u64> b, u64 p) {
  fp_trim(a);
  fp_trim(b);
  while (!b.empty()) {
    // a mod b, with b made monic on the fly
    u64 lc = b.back();
    u64 lci = 1;
    {  // Fermat inverse of lc
      u64 e = p - 2, base = lc % p, r = 1;
      while (e) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
      }
      lci = r;
    }
    while (a.size() >= b.size()) {
      u64 c = a.back() * lci % p;
      if (c != 0) {
        std::size_t off = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j) {
          u64 t = c * b[j] % p;
          a[off + j] = (a[off + j] + p - t) % p;
        }
      }
      a.pop_back();
      fp_trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a;
}

/// Rabin irreducibility test for a monic polynomial of degree k over F_p.
inline bool fp_irreducible(const std::vector<u64>& f, u64 p) {
  std::size_t k = f.size() - 1;
  if (k == 0) return false;
  if (k == 1) return true;
  // x^(p^k) == x mod f
  u128 pk = 1;
  for (std::size_t i = 0; i < k; ++i) pk *= p;
  std::vector<u64> xq = fp_powmod_x(pk, f, p);
  std::vector<u64> x{0, 1};
  fp_trim(x);
  if (xq != x) return false;
  // gcd(x^(p^(k/l)) - x, f) == 1 for each prime l | k
  for (u64 l : prime_divisors(k)) {
    u128 e = 1;
    for (std::size_t i = 0; i < k / l; ++i) e *= p;
    std::vector<u64> g = fp_powmod_x(e, f, p);
    // g - x
    if (g.size() < 2) g.resize(2, 0);
    g[1] = (g[1] + p - 1) % p;
    fp_trim(g);
    std::vector<u64> d = fp_gcd(g, f, p);
    if (!(d.size() == 1)) return false;
  }
  return true;
}

}  // namespace detail

/// The field F_{p^k} with p prime, p > 3, as F_p[x]/(modulus).
///
/// Immutable after construction; safe to share across threads. Elements are
/// plain u64 values, so this class doubles as the ring-context object that
/// the generic layers (poly.hpp, quartic.hpp, ...) are templated over.
class Fq {
 public:
  using E = u64;

  /// F_{p^k} with the lexicographically smallest monic irreducible modulus.
  /// The modulus does not depend on `seed`; the seed only enters randomized
  /// internals downstream (factorization), never the field data.
  static Fq make(u64 p, unsigned k, u64 seed = 0) {
    return Fq(p, smallest_modulus(p, k), seed);
  }

  Fq(u64 p, std::vector<u64> modulus, u64 seed = 0) : p_(p), seed_(seed) {
    if (!is_prime_u64(p_))
      throw DomainError("field characteristic must be prime, got " + std::to_string(p_));
    if (p_ <= 3)
      throw DomainError("characteristic restriction: char k must be > 3 (char 2 and 3 are "
                        "excluded), got " + std::to_string(p_));
    if (p_ >= (u64(1) << 31)) throw DomainError("characteristic too large (>= 2^31)");
    if (modulus.size() < 2 || modulus.back() != 1)
      throw DomainError("modulus must be monic of degree >= 1");
    k_ = unsigned(modulus.size() - 1);
    for (u64 c : modulus)
      if (c >= p_) throw DomainError("modulus coefficients must be reduced mod p");
    if (k_ > 1 && !detail::fp_irreducible(modulus, p_))
      throw DomainError("modulus is reducible over F_p");
    q_ = 1;
    for (unsigned i = 0; i < k_; ++i) {
      if (q_ > (u64(1) << 62) / p_) throw DomainError("field size exceeds 2^62");
      q_ *= p_;
    }
    modulus_ = std::move(modulus);
    pow_p_.resize(k_ + 1);
    pow_p_[0] = 1;
    for (unsigned i = 1; i <= k_; ++i) pow_p_[i] = pow_p_[i - 1] * p_;
    if (k_ > 1) build_reduction_rows();
    if (k_ == 1 && q_ <= (u64(1) << 16)) build_inv_table();
  }

  u64 p() const { return p_; }
  unsigned k() const { return k_; }
  u64 q() const { return q_; }
  u64 seed() const { return seed_; }
  const std::vector<u64>& modulus() const { return modulus_; }

  E zero() const { return 0; }
  E one() const { return 1; }
  bool is_zero(E a) const { return a == 0; }
  bool eq(E a, E b) const { return a == b; }

  /// Canonical image of an integer (lands in the prime subfield).
  E from_int(i64 n) const {
    i64 r = n % i64(p_);
    if (r < 0) r += i64(p_);
    return u64(r);
  }

  E add(E a, E b) const {
    if (k_ == 1) {
      u64 s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    E r = 0;
    for (unsigned i = 0; i < k_; ++i) {
      u64 s = a % p_ + b % p_;
      if (s >= p_) s -= p_;
      r += s * pow_p_[i];
      a /= p_;
      b /= p_;
    }
    return r;
  }

  E neg(E a) const {
    if (k_ == 1) return a == 0 ? 0 : p_ - a;
    E r = 0;
    for (unsigned i = 0; i < k_; ++i) {
      u64 d = a % p_;
      r += (d == 0 ? 0 : p_ - d) * pow_p_[i];
      a /= p_;
    }
    return r;
  }

  E sub(E a, E b) const { return add(a, neg(b)); }

  E mul(E a, E b) const {
    if (k_ == 1) return a * b % p_;
    return mul_ext(a, b);
  }

  E inv(E a) const {
    if (a == 0) throw DomainError("division by zero in F_q");
    if (!inv_table_.empty()) return inv_table_[a];
    return pow(a, q_ - 2);
  }

  E div(E a, E b) const { return mul(a, inv(b)); }

  E pow(E a, u128 e) const {
    E r = 1, b = a;
    while (e) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }

  /// Absolute Frobenius x -> x^p.
  E frobenius(E a) const { return pow(a, p_); }

  /// True iff a is a square in F_q (0 counts).
  bool is_square(E a) const {
    if (a == 0) return true;
    return pow(a, (q_ - 1) / 2) == 1;
  }

  // --- enumeration: lexicographic on (c_0, ..., c_{k-1}) -----------------

  /// index -> element bijection realizing the enumeration order.
  E elem_at(u64 index) const {
    if (k_ == 1) return index;
    E r = 0;
    for (unsigned l = 0; l < k_; ++l) {
      r += (index % p_) * pow_p_[k_ - 1 - l];
      index /= p_;
    }
    return r;
  }

  u64 index_of(E a) const {
    if (k_ == 1) return a;
    u64 idx = 0;
    for (unsigned l = 0; l < k_; ++l) {
      idx += (a % p_) * pow_p_[k_ - 1 - l];
      a /= p_;
    }
    return idx;
  }

  /// Order used everywhere a "smallest" element is picked.
  int cmp(E a, E b) const {
    u64 ia = index_of(a), ib = index_of(b);
    return ia < ib ? -1 : (ia > ib ? 1 : 0);
  }

  /// Deterministic fingerprint for stream keying.
  u64 index_hint(E a) const { return a; }

  std::vector<u64> coeffs(E a) const {
    std::vector<u64> c(k_);
    for (unsigned i = 0; i < k_; ++i) {
      c[i] = a % p_;
      a /= p_;
    }
    return c;
  }

  E from_coeffs(const std::vector<u64>& c) const {
    if (c.size() > k_) throw DomainError("coefficient vector longer than extension degree");
    E r = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= p_) throw DomainError("coefficient not reduced mod p");
      r += c[i] * pow_p_[i];
    }
    return r;
  }

  std::string to_string(E a) const {
    if (k_ == 1) return std::to_string(a);
    std::string s = "[";
    auto c = coeffs(a);
    for (unsigned i = 0; i < k_; ++i) s += (i ? "," : "") + std::to_string(c[i]);
    return s + "]";
  }

 private:
  static std::vector<u64> smallest_modulus(u64 p, unsigned k) {
    if (k == 0) throw DomainError("extension degree must be >= 1");
    if (k == 1) return {0, 1};  // F_p as F_p[x]/(x); the root is 0, unused
    static std::mutex mu;
    static std::map<std::pair<u64, unsigned>, std::vector<u64>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({p, k});
    if (it != cache.end()) return it->second;
    // scan monic degree-k polynomials in lexicographic order, constant first
    std::vector<u64> f(k + 1, 0);
    f[k] = 1;
    u64 total = 1;
    for (unsigned i = 0; i < k; ++i) total *= p;
    for (u64 idx = 0; idx < total; ++idx) {
      // decode idx with c_0 most significant, so the scan is lexicographic
      u64 t = idx;
      for (unsigned l = k; l-- > 0;) {
        f[l] = t % p;
        t /= p;
      }
      if (detail::fp_irreducible(f, p)) {
        cache[{p, k}] = f;
        return f;
      }
    }
    throw DomainError("no irreducible modulus found");  // unreachable for k >= 1
  }

  void build_reduction_rows() {
    // red_[j] = digits of x^{k+j} mod modulus, j = 0..k-2
    red_.assign(k_ - 1, std::vector<u64>(k_, 0));
    std::vector<u64> cur(k_);  // x^k = -modulus[0..k-1]
    for (unsigned j = 0; j < k_; ++j) cur[j] = (modulus_[j] == 0) ? 0 : p_ - modulus_[j];
    red_[0] = cur;
    for (unsigned j = 1; j + 1 < k_; ++j) {
      // multiply cur by x and reduce
      std::vector<u64> nxt(k_, 0);
      u64 top = cur[k_ - 1];
      for (unsigned i = k_ - 1; i >= 1; --i) nxt[i] = cur[i - 1];
      nxt[0] = 0;
      if (top) {
        for (unsigned i = 0; i < k_; ++i) nxt[i] = (nxt[i] + top * red_[0][i]) % p_;
      }
      red_[j] = nxt;
      cur = nxt;
    }
  }

  E mul_ext(E a, E b) const {
    std::array<u64, 128> acc{};
    std::array<u64, 64> da{}, db{};
    for (unsigned i = 0; i < k_; ++i) {
      da[i] = a % p_;
      a /= p_;
      db[i] = b % p_;
      b /= p_;
    }
    const bool lazy = p_ <= (u64(1) << 15);
    for (unsigned i = 0; i < k_; ++i) {
      if (da[i] == 0) continue;
      for (unsigned j = 0; j < k_; ++j) {
        u64 t = da[i] * db[j];
        acc[i + j] = lazy ? acc[i + j] + t : (acc[i + j] + t % p_) % p_;
      }
    }
    for (unsigned i = 2 * k_ - 2; i >= k_; --i) {
      u64 c = acc[i] % p_;
      if (c) {
        const auto& row = red_[i - k_];
        for (unsigned j = 0; j < k_; ++j) acc[j] = (acc[j] + c * row[j]) % p_;
      }
      acc[i] = 0;
      if (i == k_) break;
    }
    E r = 0;
    for (unsigned j = 0; j < k_; ++j) r += (acc[j] % p_) * pow_p_[j];
    return r;
  }

  void build_inv_table() {
    inv_table_.assign(q_, 0);
    for (u64 a = 1; a < q_; ++a) inv_table_[a] = pow(a, q_ - 2);
  }

  u64 p_;
  unsigned k_;
  u64 q_;
  u64 seed_;
  std::vector<u64> modulus_;
  std::vector<u64> pow_p_;
  std::vector<std::vector<u64>> red_;
  std::vector<u64> inv_table_;
};

}  // namespace qsel

#endif  // QSEL_FF_HPP
