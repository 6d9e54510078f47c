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

#include <catch2/catch_amalgamated.hpp>

#include "qsel/poly.hpp"
#include "qsel/rings.hpp"

using namespace qsel;

namespace {

PV<Fq> random_poly(const Fq& F, Rng& rng, int max_deg) {
  int d = int(rng.below(max_deg + 1));
  PV<Fq> v(d + 1);
  for (auto& c : v) c = F.elem_at(rng.below(F.q()));
  poly::trim(F, v);
  return v;
}

}  // namespace

TEST_CASE("known factorizations", "[poly]") {
  Fq F5 = Fq::make(5, 1);
  // x^2 + 1 = (x+2)(x+3) over F_5
  auto f = poly::from_ints(F5, {1, 0, 1});
  auto fac = poly::factor(F5, f);
  REQUIRE(fac.factors.size() == 2);
  CHECK(fac.factors[0].first == poly::from_ints(F5, {2, 1}));
  CHECK(fac.factors[0].second == 1);
  CHECK(fac.factors[1].first == poly::from_ints(F5, {3, 1}));

  // x^4 + 1 = (x^2+2)(x^2+3) over F_5
  auto g = poly::from_ints(F5, {1, 0, 0, 0, 1});
  auto gfac = poly::factor(F5, g);
  REQUIRE(gfac.factors.size() == 2);
  CHECK(gfac.factors[0].first == poly::from_ints(F5, {2, 0, 1}));
  CHECK(gfac.factors[1].first == poly::from_ints(F5, {3, 0, 1}));

  // (x-1)^2 over F_7
  Fq F7 = Fq::make(7, 1);
  auto h = poly::mul(F7, poly::from_ints(F7, {-1, 1}), poly::from_ints(F7, {-1, 1}));
  auto hfac = poly::factor(F7, h);
  REQUIRE(hfac.factors.size() == 1);
  CHECK(hfac.factors[0].first == poly::from_ints(F7, {6, 1}));
  CHECK(hfac.factors[0].second == 2);

  CHECK_THROWS_AS(poly::factor(F5, PV<Fq>{}), DomainError);
}

TEST_CASE("p-th power factorization", "[poly]") {
  Fq F5 = Fq::make(5, 1);
  // (x+1)^5 = x^5 + 1 in char 5; derivative vanishes identically
  auto f = poly::from_ints(F5, {1, 0, 0, 0, 0, 1});
  auto fac = poly::factor(F5, f);
  REQUIRE(fac.factors.size() == 1);
  CHECK(fac.factors[0].first == poly::from_ints(F5, {1, 1}));
  CHECK(fac.factors[0].second == 5);
}

TEST_CASE("factor round-trip on random polynomials", "[poly]") {
  for (auto [p, k] : {std::pair<u64, unsigned>{5, 1}, {7, 1}, {5, 2}}) {
    Fq F = Fq::make(p, k);
    Rng rng(stream_key(7, 0xfac, p * 10 + k));
    for (int iter = 0; iter < 1000; ++iter) {
      PV<Fq> f = random_poly(F, rng, 12);
      if (poly::is_zero<Fq>(f)) continue;
      auto fac = poly::factor(F, f, iter);
      PV<Fq> prod = poly::constant(F, fac.unit);
      for (auto& [g, m] : fac.factors) {
        REQUIRE(poly::irreducible(F, g));
        for (unsigned i = 0; i < m; ++i) prod = poly::mul(F, prod, g);
      }
      REQUIRE(poly::eq(F, prod, f));
    }
  }
}

TEST_CASE("factorization is deterministic under a fixed seed", "[poly]") {
  Fq F = Fq::make(7, 1);
  Rng rng(99);
  for (int iter = 0; iter < 50; ++iter) {
    PV<Fq> f = random_poly(F, rng, 10);
    if (poly::is_zero<Fq>(f)) continue;
    auto a = poly::factor(F, f, 3);
    auto b = poly::factor(F, f, 3);
    auto c = poly::factor(F, f, 4);  // different seed, same sorted output
    REQUIRE(a.factors.size() == b.factors.size());
    REQUIRE(a.factors.size() == c.factors.size());
    for (std::size_t i = 0; i < a.factors.size(); ++i) {
      CHECK(a.factors[i] == b.factors[i]);
      CHECK(a.factors[i] == c.factors[i]);
    }
  }
}

TEST_CASE("necklace counts", "[poly]") {
  CHECK(poly::irreducible_count(5, 1) == 5);
  CHECK(poly::irreducible_count(5, 2) == 10);
  CHECK(poly::irreducible_count(5, 3) == 40);
  CHECK(poly::irreducible_count(7, 1) == 7);
  CHECK_THROWS_AS(poly::irreducible_count(5, 0), DomainError);

  Fq F = Fq::make(5, 1);
  for (unsigned n = 1; n <= 3; ++n)
    CHECK(Int(poly::irreducibles_of_degree(F, n).size()) == poly::irreducible_count(5, n));
}

TEST_CASE("monic polynomial counts match the multiset generating function", "[poly]") {
  // q^n monic polynomials of degree n = number of multisets of monic
  // irreducibles with total degree n; check by expanding
  // prod_d (1 - x^d)^{-N_d} to degree 6.
  const u64 q = 5;
  const int D = 6;
  std::vector<Int> series(D + 1, 0);
  series[0] = 1;
  for (int d = 1; d <= D; ++d) {
    Int Nd = poly::irreducible_count(q, d);
    // multiply by (1 - x^d)^{-Nd}: coefficients C(Nd - 1 + j, j) at x^{dj}
    std::vector<Int> factor(D + 1, 0);
    Int coef = 1;
    for (int j = 0; d * j <= D; ++j) {
      factor[d * j] = coef;
      coef = coef * (Nd + j) / (j + 1);
    }
    std::vector<Int> next(D + 1, 0);
    for (int i = 0; i <= D; ++i)
      for (int j = 0; i + j <= D; ++j) next[i + j] += series[i] * factor[j];
    series = next;
  }
  for (int n = 0; n <= D; ++n) CHECK(series[n] == ipow_int(q, n));
}

TEST_CASE("resultant and gcd", "[poly]") {
  Fq F = Fq::make(7, 1);
  auto A = poly::from_ints(F, {-1, 0, 1});  // x^2 - 1
  auto B = poly::from_ints(F, {-2, 1});     // x - 2
  CHECK(poly::resultant(F, A, B) == 3);
  CHECK(poly::resultant(F, A, poly::from_ints(F, {-1, 1})) == 0);

  auto g = poly::gcd(F, poly::mul(F, A, B), poly::mul(F, B, B));
  CHECK(poly::eq(F, g, poly::from_ints(F, {5, 1})));  // monic x - 2
}

TEST_CASE("quotient field is a field", "[poly]") {
  Fq F = Fq::make(5, 1);
  QuotientField<Fq> E = QuotientField<Fq>::make(F, 3);
  CHECK(E.q() == 125);
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    auto x = E.elem_at(rng.below(E.q()));
    if (E.is_zero(x)) continue;
    REQUIRE(E.eq(E.mul(x, E.inv(x)), E.one()));
    REQUIRE(E.eq(E.pow(x, E.q() - 1), E.one()));
  }
  // relative Frobenius fixes exactly the base field
  u64 fixed = 0;
  for (u64 i = 0; i < E.q(); ++i) {
    auto x = E.elem_at(i);
    if (E.eq(E.frobenius_q(x), x)) ++fixed;
  }
  CHECK(fixed == 5);
}

TEST_CASE("divisor enumeration", "[poly]") {
  Fq F = Fq::make(5, 1);
  // b = t^2 (t-1): monic divisors of degree <= 2: 1, t, t-1, t^2, t(t-1)
  auto b = poly::mul(F, poly::from_ints(F, {0, 0, 1}), poly::from_ints(F, {-1, 1}));
  auto divs = poly::monic_divisors_up_to(F, poly::factor(F, b), 2);
  CHECK(divs.size() == 5);
}
