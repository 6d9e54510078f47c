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

#include "qsel/quartic.hpp"

using namespace qsel;

namespace {

Quartic<Fq> random_quartic(const Fq& F, Rng& rng) {
  Quartic<Fq> f{};
  for (auto& c : f.c) c = F.elem_at(rng.below(F.q()));
  return f;
}

Mat2<Fq> random_pgl2(const Fq& F, Rng& rng) {
  for (;;) {
    Mat2<Fq> g{{F.elem_at(rng.below(F.q())), F.elem_at(rng.below(F.q())),
                F.elem_at(rng.below(F.q())), F.elem_at(rng.below(F.q()))}};
    if (!F.is_zero(mat_det(F, g))) return g;
  }
}

}  // namespace

TEST_CASE("invariants of reference forms", "[quartic]") {
  Fq F = Fq::make(7, 1);
  // x^3 y + A x y^3 + B y^4 has invariants (A, B)
  for (u64 A = 0; A < 7; ++A)
    for (u64 B = 0; B < 7; ++B) {
      Quartic<Fq> f{{F.zero(), F.one(), F.zero(), A, B}};
      auto iv = invariants(F, f);
      CHECK(iv.a == A);
      CHECK(iv.b == B);
    }
  // c x^2 y^2 has invariants (-c^2/3, 2c^3/27)
  for (u64 c = 1; c < 7; ++c) {
    Quartic<Fq> f{{F.zero(), F.zero(), c, F.zero(), F.zero()}};
    auto iv = invariants(F, f);
    CHECK(iv.a == F.div(F.neg(F.mul(c, c)), F.from_int(3)));
    CHECK(iv.b == F.div(F.mul(F.from_int(2), F.pow(c, 3)), F.from_int(27)));
    CHECK(iv.disc == F.zero());
  }
}

TEST_CASE("discriminant vanishes on xy(x-y)^2", "[quartic]") {
  // forces the classical 9 c1 c2 c3 term in b
  for (u64 p : {5ull, 7ull, 11ull}) {
    Fq F = Fq::make(p, 1);
    auto f = quartic_from_ints(F, {0, 1, -2, 1, 0});
    auto iv = invariants(F, f);
    CHECK(iv.a == F.div(F.from_int(-1), F.from_int(3)));
    CHECK(iv.b == F.div(F.from_int(2), F.from_int(27)));
    CHECK(iv.disc == F.zero());
    CHECK(classify(F, f) == QType::T112);
  }
}

TEST_CASE("action basics", "[quartic]") {
  Fq F = Fq::make(5, 1);
  auto f = quartic_from_ints(F, {1, 2, 3, 4, 0});
  CHECK(quartic_eq(F, act(F, mat_identity(F), f), f));
  // antidiagonal(1,1) maps x^3 y to x y^3 (det = -1, det^-2 = 1)
  Mat2<Fq> w{{F.zero(), F.one(), F.one(), F.zero()}};
  auto x3y = quartic_from_ints(F, {0, 1, 0, 0, 0});
  CHECK(quartic_eq(F, act(F, w, x3y), quartic_from_ints(F, {0, 0, 0, 1, 0})));
  // scalars act trivially
  Mat2<Fq> s{{F.from_int(3), F.zero(), F.zero(), F.from_int(3)}};
  CHECK(quartic_eq(F, act(F, s, f), f));
  // singular matrices are rejected
  Mat2<Fq> sing{{F.one(), F.one(), F.one(), F.one()}};
  CHECK_THROWS_AS(act(F, sing, f), DomainError);
}

TEST_CASE("invariants are G-invariant and types are orbit invariants", "[quartic]") {
  for (auto [p, k] : {std::pair<u64, unsigned>{5, 1}, {7, 1}, {5, 2}}) {
    Fq F = Fq::make(p, k);
    Rng rng(stream_key(11, 0xac7, p * 10 + k));
    for (int i = 0; i < 3400; ++i) {
      auto f = random_quartic(F, rng);
      auto g = random_pgl2(F, rng);
      auto gf = act(F, g, f);
      auto iv = invariants(F, f), giv = invariants(F, gf);
      REQUIRE(iv.a == giv.a);
      REQUIRE(iv.b == giv.b);
      REQUIRE(classify(F, f) == classify(F, gf));
    }
  }
}

TEST_CASE("action composition contract", "[quartic]") {
  Fq F = Fq::make(7, 1);
  Rng rng(23);
  for (int i = 0; i < 500; ++i) {
    auto f = random_quartic(F, rng);
    auto g = random_pgl2(F, rng);
    auto h = random_pgl2(F, rng);
    REQUIRE(quartic_eq(F, act(F, g, act(F, h, f)), act(F, mat_mul(F, g, h), f)));
  }
}

TEST_CASE("classification of reference forms", "[quartic]") {
  Fq F = Fq::make(5, 1);
  CHECK(classify(F, quartic_from_ints(F, {0, 1, 0, 0, 0})) == QType::T13);    // x^3 y
  CHECK(classify(F, quartic_from_ints(F, {0, 0, 0, 1, 0})) == QType::T13);    // x y^3
  CHECK(classify(F, quartic_from_ints(F, {0, 2, -4, 2, 0})) == QType::T112);  // 2xy(x-y)^2
  CHECK(classify(F, quartic_from_ints(F, {1, 0, 0, 0, 1})) == QType::T1111);  // x^4 + y^4
  CHECK(classify(F, quartic_from_ints(F, {0, 0, 1, 0, 0})) == QType::T22);    // x^2 y^2
  CHECK(classify(F, quartic_from_ints(F, {0, 0, 0, 0, 3})) == QType::T4);     // 3 y^4
  CHECK(classify(F, quartic_from_ints(F, {1, 0, 0, 0, 0})) == QType::T4);     // x^4
  CHECK(classify(F, quartic_from_ints(F, {0, 0, 0, 0, 0})) == QType::Zero);
  CHECK(classify(F, quartic_from_ints(F, {1, -2, 1, 0, 0})) == QType::T22);   // x^2(x-y)^2
}

TEST_CASE("weierstrass reduction on reference forms", "[quartic]") {
  Fq F = Fq::make(5, 1);
  auto w = weierstrass_form(F, F.from_int(2), F.from_int(3));
  CHECK(reduce_to_weierstrass(F, w).m == 1);

  // xy(x-y)^2: m = 1; the reduction verifies act(h, f) == y(x^3+axy^2+by^3)
  // with (a, b) = (-1/3, 2/27) internally
  auto f = quartic_from_ints(F, {0, 1, -2, 1, 0});
  CHECK(reduce_to_weierstrass(F, f).m == 1);

  // x^4 + y^4 over F_5 has no rational root; splits over F_25
  auto g = quartic_from_ints(F, {1, 0, 0, 0, 1});
  CHECK(reduce_to_weierstrass(F, g).m == 2);

  CHECK_THROWS_AS(reduce_to_weierstrass(F, quartic_from_ints(F, {0, 0, 1, 0, 0})),
                  DomainError);
}

TEST_CASE("weierstrass reduction round-trips on random stable forms", "[quartic]") {
  Fq F = Fq::make(5, 1);
  Rng rng(31);
  int done = 0;
  while (done < 1000) {
    auto f = random_quartic(F, rng);
    if (!is_stable_type(classify(F, f))) continue;
    auto r = reduce_to_weierstrass(F, f);  // throws if the round trip fails
    REQUIRE(r.m >= 1);
    REQUIRE(r.m <= 4);
    ++done;
  }
}

TEST_CASE("stabilizers of reference forms", "[quartic]") {
  Fq F = Fq::make(5, 1);
  // x^2 y^2: diagonal torus + swap coset, 2(q-1) elements
  CHECK(stabilizer(F, quartic_from_ints(F, {0, 0, 1, 0, 0}), 1).order() == 8);
  // xy(x-y)^2 has stabilizer Z/2 over the base field
  CHECK(stabilizer(F, quartic_from_ints(F, {0, 1, -2, 1, 0}), 1).order() == 2);
  // x^3 y is rigid
  CHECK(stabilizer(F, quartic_from_ints(F, {0, 1, 0, 0, 0}), 1).order() == 1);
  CHECK_THROWS_AS(stabilizer(F, quartic_from_ints(F, {0, 0, 0, 0, 0}), 1), DomainError);
}

TEST_CASE("smart stabilizer agrees with brute force", "[quartic]") {
  Fq F = Fq::make(5, 1);
  Rng rng(17);
  int checked = 0;
  while (checked < 60) {
    auto f = random_quartic(F, rng);
    if (quartic_is_zero(F, f)) continue;
    for (unsigned m = 1; m <= 2; ++m) {
      auto brute = brute_force_stabilizer(F, f, m);
      if (is_stable_type(classify(F, f)))
        REQUIRE(stabilizer_stable(F, f, m).order() == brute.order());
    }
    ++checked;
  }
}

TEST_CASE("stable stabilizer orders by type over the splitting field", "[quartic]") {
  for (u64 p : {5ull, 7ull}) {
    Fq F = Fq::make(p, 1);
    Rng rng(stream_key(3, 0x57ab, p));
    int n1111 = 0, n112 = 0, n13 = 0;
    while (n1111 < 20 || n112 < 20 || n13 < 20) {
      auto f = random_quartic(F, rng);
      QType t = classify(F, f);
      if (!is_stable_type(t)) continue;
      auto split = quartic_roots_split(F, f);
      auto st = stabilizer_stable(F, f, split.first.ext_deg());
      if (t == QType::T1111 && n1111 < 20) {
        REQUIRE(st.order() == 4);
        for (auto& g : st.elems)
          REQUIRE(mat_eq_pgl2(st.field, mat_mul(st.field, g, g), mat_identity(st.field)));
        ++n1111;
      } else if (t == QType::T112 && n112 < 20) {
        REQUIRE(st.order() == 2);
        ++n112;
      } else if (t == QType::T13 && n13 < 20) {
        REQUIRE(st.order() == 1);
        ++n13;
      }
    }
  }
}

TEST_CASE("stabilizer counts match 2-torsion counts", "[quartic]") {
  Fq F = Fq::make(5, 1);
  Rng rng(41);
  int done = 0;
  while (done < 50) {
    auto a = F.elem_at(rng.below(5)), b = F.elem_at(rng.below(5));
    if (F.is_zero(quartic_disc_of_ab(F, a, b))) continue;
    auto w = weierstrass_form(F, a, b);
    for (unsigned m = 1; m <= 4; ++m)
      REQUIRE(stabilizer(F, w, m).order() == two_torsion_count(F, a, b, m));
    ++done;
  }
}

TEST_CASE("two-torsion counts", "[quartic]") {
  Fq F = Fq::make(5, 1);
  CHECK(two_torsion_count(F, F.from_int(-1), F.zero(), 1) == 4);  // x^3 - x
  CHECK(two_torsion_count(F, F.one(), F.one(), 1) == 1);          // x^3 + x + 1
  Rng rng(43);
  for (int i = 0; i < 40; ++i) {
    auto a = F.elem_at(rng.below(5)), b = F.elem_at(rng.below(5));
    if (F.is_zero(quartic_disc_of_ab(F, a, b))) continue;
    PV<Fq> cubic{b, a, F.zero(), F.one()};
    unsigned e = 1;
    for (auto& [g, mm] : poly::factor(F, cubic).factors)
      e = unsigned(std::lcm<u64>(e, u64(poly::deg<Fq>(g))));
    CHECK(two_torsion_count(F, a, b, e) == 4);
  }
  CHECK_THROWS_AS(two_torsion_count(F, F.zero(), F.zero(), 1), DomainError);
}

TEST_CASE("two-torsion count against exhaustive root search", "[quartic]") {
  Fq F = Fq::make(5, 1);
  Rng rng(47);
  int done = 0;
  while (done < 30) {
    auto a = F.elem_at(rng.below(5)), b = F.elem_at(rng.below(5));
    if (F.is_zero(quartic_disc_of_ab(F, a, b))) continue;
    for (unsigned m = 1; m <= 3; ++m) {
      QuotientField<Fq> E = QuotientField<Fq>::make(F, m);
      u64 roots = 0;
      for (u64 i = 0; i < E.q(); ++i) {
        auto x = E.elem_at(i);
        auto v = E.add(E.add(E.mul(E.mul(x, x), x), E.mul(E.embed(a), x)), E.embed(b));
        if (E.is_zero(v)) ++roots;
      }
      REQUIRE(two_torsion_count(F, a, b, m) == roots + 1);
    }
    ++done;
  }
}

TEST_CASE("cubic resolvent degrees match stabilizer definition degrees", "[quartic]") {
  Fq F = Fq::make(5, 1);
  Rng rng(53);
  int done = 0;
  while (done < 200) {
    auto a = F.elem_at(rng.below(5)), b = F.elem_at(rng.below(5));
    if (F.is_zero(quartic_disc_of_ab(F, a, b))) continue;
    PV<Fq> cubic{b, a, F.zero(), F.one()};
    std::vector<unsigned> cubic_degs;
    for (auto& [g, m] : poly::factor(F, cubic).factors)
      cubic_degs.push_back(unsigned(poly::deg<Fq>(g)));
    std::sort(cubic_degs.begin(), cubic_degs.end());

    auto st = stabilizer(F, weierstrass_form(F, a, b), 12);  // lcm(1..4)
    REQUIRE(st.order() == 4);
    std::vector<unsigned> stab_degs;
    for (std::size_t i = 0; i < st.elems.size(); ++i)
      if (!mat_entries_eq(st.field, st.elems[i], mat_identity(st.field)))
        stab_degs.push_back(st.def_deg[i]);
    std::sort(stab_degs.begin(), stab_degs.end());
    REQUIRE(cubic_degs == stab_degs);
    ++done;
  }
}

TEST_CASE("infinitesimal stabilizer dimensions", "[quartic]") {
  Fq F = Fq::make(5, 1);
  CHECK(lie_stabilizer_dim(F, quartic_from_ints(F, {0, 0, 1, 0, 0})) == 1);
  CHECK(lie_stabilizer_dim(F, quartic_from_ints(F, {0, 0, 0, 0, 1})) == 1);
  CHECK(lie_stabilizer_dim(F, quartic_from_ints(F, {0, 0, 0, 0, 0})) == 3);
  CHECK(lie_stabilizer_dim(F, quartic_from_ints(F, {0, 1, 0, 1, 1})) == 0);
}

TEST_CASE("dual numbers square to zero and track first-order data", "[quartic]") {
  Fq F = Fq::make(5, 1);
  DualRing<Fq> R(F);
  auto eps = R.eps();
  CHECK(R.is_zero(R.mul(eps, eps)));
  auto x = R.make(2, 3);
  CHECK(R.eq(R.mul(x, R.inv(x)), R.one()));
  Rng rng(59);
  for (int i = 0; i < 200; ++i) {
    Quartic<DualRing<Fq>> fd{};
    Quartic<Fq> f0{};
    for (int j = 0; j < 5; ++j) {
      f0.c[j] = F.elem_at(rng.below(5));
      fd.c[j] = R.make(f0.c[j], F.elem_at(rng.below(5)));
    }
    auto ivd = invariants(R, fd);
    auto iv0 = invariants(F, f0);
    REQUIRE(ivd.a.a == iv0.a);
    REQUIRE(ivd.b.a == iv0.b);
    REQUIRE(ivd.disc.a == iv0.disc);
  }
}
