/*
   Copyright 2026 The knotfm Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "knotfm/factor.hpp"
#include "support.hpp"

using namespace knotfm;
using knotfm::testing::naive_factor;
using knotfm::testing::naive_irreducible;
using knotfm::testing::random_mod_poly;
using knotfm::testing::sorted_factors;

namespace {

ModPoly P(u64 p, std::vector<u64> c) { return ModPoly(p, std::move(c)); }

std::vector<Factor> expect(std::vector<Factor> v) {
  FactorMultiset m;
  m.factors = std::move(v);
  return sorted_factors(std::move(m));
}

const ModPoly kPhi7Mod2 = P(2, {1, 1, 1, 1, 1, 1, 1});
const ModPoly kDeltaP3Mod2 = P(2, {1, 0, 1, 1, 1, 0, 1});

}  // namespace

TEST_CASE("squarefree decomposition examples") {
  auto s = squarefree_decomposition(P(3, {1, 2, 1}));
  REQUIRE(s.size() == 1);
  CHECK(s[0].poly == P(3, {1, 1}));
  CHECK(s[0].multiplicity == 2);

  s = squarefree_decomposition(P(2, {1, 0, 1}));
  REQUIRE(s.size() == 1);
  CHECK(s[0].poly == P(2, {1, 1}));
  CHECK(s[0].multiplicity == 2);

  // t^3 - 2 over F_3 is (t - 2)^3 = (t + 1)^3
  s = squarefree_decomposition(ModPoly::from_signed(3, {-2, 0, 0, 1}));
  REQUIRE(s.size() == 1);
  CHECK(s[0].poly == P(3, {1, 1}));
  CHECK(s[0].multiplicity == 3);

  s = squarefree_decomposition(kPhi7Mod2);
  REQUIRE(s.size() == 1);
  CHECK(s[0].poly == kPhi7Mod2);
  CHECK(s[0].multiplicity == 1);
}

TEST_CASE("squarefree decomposition reconstructs the input") {
  CounterRng rng(11);
  for (u64 p : {2ull, 3ull, 5ull}) {
    for (int i = 0; i < 200; ++i) {
      ModPoly a = random_mod_poly(rng, p, 5), b = random_mod_poly(rng, p, 3);
      if (a.degree() < 1 || b.degree() < 1) continue;
      const ModPoly f = (a * a * b * b * b * a * P(p, {1, 1})).monic();
      ModPoly prod = P(p, {1});
      for (const auto& part : squarefree_decomposition(f)) {
        CHECK(part.poly.is_monic());
        CHECK(gcd(part.poly, part.poly.derivative()).degree() == 0);
        for (unsigned k = 0; k < part.multiplicity; ++k) prod = prod * part.poly;
      }
      CHECK(prod == f);
    }
  }
}

TEST_CASE("distinct degree examples") {
  auto d = distinct_degree(kPhi7Mod2);
  REQUIRE(d.size() == 1);
  CHECK(d[0].degree == 3);
  CHECK(d[0].product == kPhi7Mod2);

  d = distinct_degree(P(2, {0, 1, 1}));
  REQUIRE(d.size() == 1);
  CHECK(d[0].degree == 1);
  CHECK(d[0].product == P(2, {0, 1, 1}));

  // t^4 + t + 2 is irreducible over F_3
  const ModPoly q = P(3, {2, 1, 0, 0, 1});
  REQUIRE(naive_irreducible(q));
  d = distinct_degree(q);
  REQUIRE(d.size() == 1);
  CHECK(d[0].degree == 4);
  CHECK(d[0].product == q);
}

TEST_CASE("equal degree split examples") {
  auto m = equal_degree_split(kPhi7Mod2, 3);
  CHECK(sorted_factors(m) == expect({{P(2, {1, 0, 1, 1}), 1}, {P(2, {1, 1, 0, 1}), 1}}));

  const ModPoly q = P(3, {2, 1, 0, 0, 1});
  m = equal_degree_split(q, 4);
  CHECK(sorted_factors(m) == expect({{q, 1}}));

  const ModPoly phi15 = P(2, {1, 1, 0, 1, 1, 1, 0, 1, 1});
  m = equal_degree_split(phi15, 4);
  CHECK(sorted_factors(m) == expect({{P(2, {1, 0, 0, 1, 1}), 1}, {P(2, {1, 1, 0, 0, 1}), 1}}));
  CHECK(m.product() == phi15);
}

TEST_CASE("factor examples") {
  auto m = factor(kDeltaP3Mod2);
  CHECK(sorted_factors(m) == expect({{P(2, {1, 1, 1}), 1}, {P(2, {1, 1, 1, 1, 1}), 1}}));
  CHECK(m.product() == kDeltaP3Mod2);

  m = factor(P(7, {5}));
  CHECK(m.factors.empty());
  CHECK(m.scalar == 5);

  m = factor(P(2, {1, 0, 1, 0, 1}));
  CHECK(sorted_factors(m) == expect({{P(2, {1, 1, 1}), 2}}));
  CHECK(m.count() == 2);

  CHECK_THROWS_AS(factor(ModPoly(5)), std::domain_error);
}

TEST_CASE("is_irreducible examples") {
  CHECK(is_irreducible(P(2, {1, 1, 1})));
  CHECK_FALSE(is_irreducible(P(2, {1, 0, 1})));
  CHECK(is_irreducible(P(2, {1, 0, 0, 1, 0, 0, 1})));
  CHECK_THROWS_AS(is_irreducible(P(2, {1})), std::invalid_argument);
}

TEST_CASE("is_irreducible agrees with trial division") {
  for (u64 p : {2ull, 3ull, 5ull}) {
    const unsigned max_k = p == 2 ? 10 : (p == 3 ? 6 : 4);
    for (unsigned k = 1; k <= max_k; ++k) {
      const u64 n = knotfm::testing::ipow(p, k);
      for (u64 i = 0; i < n; ++i) {
        const ModPoly g = knotfm::testing::monic_from_index(p, k, i);
        CHECK(is_irreducible(g) == naive_irreducible(g));
      }
    }
  }
}

TEST_CASE("factor agrees with trial division for small p") {
  CounterRng rng(12);
  for (u64 p : {2ull, 3ull}) {
    for (int i = 0; i < 1500; ++i) {
      ModPoly f = random_mod_poly(rng, p, 12);
      if (f.degree() < 1) continue;
      const FactorMultiset got = factor(f);
      const FactorMultiset want = naive_factor(f);
      CHECK(sorted_factors(got) == want.factors);
      CHECK(got.scalar == want.scalar);
    }
  }
}

TEST_CASE("factor reconstructs random inputs") {
  CounterRng rng(13);
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 13ull, 65537ull, 4294967311ull, 4611686018427387847ull}) {
    for (int i = 0; i < 60; ++i) {
      ModPoly f = random_mod_poly(rng, p, 40);
      if (f.is_zero()) continue;
      const FactorMultiset m = factor(f, rng.next());
      CHECK(m.product() == f);
      for (const auto& fac : m.factors) {
        CHECK(fac.poly.is_monic());
        CHECK(is_irreducible(fac.poly));
      }
    }
  }
}

TEST_CASE("factor handles repeated and structured inputs") {
  CounterRng rng(14);
  for (u64 p : {2ull, 3ull, 5ull, 101ull}) {
    for (int i = 0; i < 40; ++i) {
      ModPoly a = random_mod_poly(rng, p, 8), b = random_mod_poly(rng, p, 8);
      if (a.degree() < 1 || b.degree() < 1) continue;
      ModPoly f = a * a * b;
      for (unsigned j = 0; j < p && j < 3; ++j) f = f * a;
      const FactorMultiset m = factor(f);
      CHECK(m.product() == f);
    }
  }
  // t^(p^2) - t is the product of all monic irreducibles of degree 1 and 2
  for (u64 p : {2ull, 3ull, 5ull, 7ull}) {
    std::vector<u64> c(p * p + 1, 0);
    c[p * p] = 1;
    c[1] = p - 1;
    const FactorMultiset m = factor(P(p, c));
    std::size_t deg1 = 0, deg2 = 0;
    for (const auto& f : m.factors) {
      CHECK(f.multiplicity == 1);
      (f.poly.degree() == 1 ? deg1 : deg2)++;
    }
    CHECK(deg1 == p);
    CHECK(deg2 == (p * p - p) / 2);
  }
}

TEST_CASE("factor is deterministic for a fixed seed and seed-independent in result") {
  CounterRng rng(15);
  for (int i = 0; i < 50; ++i) {
    ModPoly f = random_mod_poly(rng, 1000003, 30);
    if (f.is_zero()) continue;
    const FactorMultiset a = factor(f, 7), b = factor(f, 7), c = factor(f, 8);
    CHECK(a == b);
    CHECK(sorted_factors(a) == sorted_factors(c));
  }
}

TEST_CASE("fox_milnor_mod_p examples") {
  auto r = fox_milnor_mod_p(kDeltaP3Mod2);
  CHECK(r.verdict == FoxMilnorVerdict::Obstructed);
  REQUIRE_FALSE(r.offending.empty());
  CHECK(r.offending[0].poly == P(2, {1, 1, 1}));
  CHECK(r.offending[0].multiplicity == 1);

  r = fox_milnor_mod_p(P(2, {1, 0, 1, 0, 1}));
  CHECK(r.verdict == FoxMilnorVerdict::Admits);
  REQUIRE(r.self_reciprocal.size() == 1);
  CHECK(r.self_reciprocal[0].multiplicity == 2);

  CHECK_THROWS_AS(fox_milnor_mod_p(P(2, {1, 1, 0, 1})), std::invalid_argument);
}

TEST_CASE("f times its reverse admits a Fox-Milnor factorization") {
  CounterRng rng(16);
  int tested = 0;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 13ull}) {
    for (int i = 0; i < 200; ++i) {
      ModPoly f = random_mod_poly(rng, p, 10);
      if (f.degree() < 1 || f.coeff(0) == 0) continue;
      if (gcd(f, reverse(f)).degree() > 0) continue;
      ++tested;
      CHECK(fox_milnor_mod_p(f * reverse(f)).verdict == FoxMilnorVerdict::Admits);
    }
  }
  CHECK(tested > 300);
}

TEST_CASE("fox_milnor_mod_p matches a direct multiplicity count") {
  CounterRng rng(17);
  for (u64 p : {2ull, 3ull}) {
    for (int i = 0; i < 300; ++i) {
      ModPoly f = random_mod_poly(rng, p, 6);
      if (f.degree() < 1 || f.coeff(0) == 0) continue;
      ModPoly g = f * reverse(f);
      // sometimes add one odd self-reciprocal factor
      if (rng.below(2)) g = g * P(p, {1, 1, 1});
      bool odd_sr = false;
      for (const auto& fac : naive_factor(g).factors)
        if (is_self_reciprocal_factor(fac.poly) && fac.multiplicity % 2) odd_sr = true;
      CHECK((fox_milnor_mod_p(g).verdict == FoxMilnorVerdict::Obstructed) == odd_sr);
    }
  }
}
