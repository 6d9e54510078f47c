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

#ifndef QSEL_COMMON_HPP
#define QSEL_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace qsel {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Bad input (wrong characteristic, reducible modulus, malformed data, ...).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// An exhaustive enumeration would exceed its stated budget.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

inline u64 ipow_u64(u64 base, unsigned e) {
  u64 r = 1;
  while (e--) {
    if (base != 0 && r > ~u64(0) / base) throw DomainError("ipow_u64 overflow");
    r *= base;
  }
  return r;
}

inline Int ipow_int(u64 base, unsigned e) {
  Int r = 1, b = base;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

inline bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 d : {2ull, 3ull, 5ull, 7ull}) {
    if (n == d) return true;
    if (n % d == 0) return false;
  }
  for (u64 d = 11; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

/// Moebius function on small arguments.
inline int moebius(u64 n) {
  int mu = 1;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      mu = -mu;
    }
  }
  if (n > 1) mu = -mu;
  return mu;
}

inline std::vector<u64> prime_divisors(u64 n) {
  std::vector<u64> ps;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      ps.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

// --- deterministic counter-based randomness ------------------------------
//
// Every randomized routine in the library derives its stream from (seed,
// stream tag, item index) so results do not depend on worker count or
// scheduling.

inline u64 splitmix64(u64 x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

class Rng {
 public:
  explicit Rng(u64 seed) : state_(splitmix64(seed ^ 0x6a09e667f3bcc909ull)) {}

  u64 next() {
    state_ += 0x9e3779b97f4a7c15ull;
    u64 x = state_;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  }

  /// Unbiased uniform draw from [0, n).
  u64 below(u64 n) {
    u64 threshold = (~u64(0) - n + 1) % n;  // 2^64 mod n
    for (;;) {
      u64 r = next();
      if (r >= threshold) return r % n;
    }
  }

 private:
  u64 state_;
};

/// Stream key for item `index` of the stream tagged `tag` under `seed`.
inline u64 stream_key(u64 seed, u64 tag, u64 index) {
  return splitmix64(splitmix64(seed ^ splitmix64(tag)) ^ index);
}

inline double rat_to_double(const Rat& r) {
  return r.convert_to<double>();
}

}  // namespace qsel

#endif  // QSEL_COMMON_HPP
