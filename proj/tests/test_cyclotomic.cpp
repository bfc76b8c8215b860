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

#include <set>

#include "knotfm/cyclotomic.hpp"
#include "knotfm/numth.hpp"
#include "support.hpp"

using namespace knotfm;
using knotfm::testing::naive_factor;
using knotfm::testing::sorted_factors;

namespace {

ModPoly P(u64 p, std::vector<u64> c) { return ModPoly(p, std::move(c)); }

IntPoly t_pow_minus_one(std::size_t n) { return IntPoly::monomial(1, n) - IntPoly{1}; }

}  // namespace

TEST_CASE("cyclotomic polynomial examples") {
  CHECK(cyclotomic_poly(1) == IntPoly{-1, 1});
  CHECK(cyclotomic_poly(2) == IntPoly{1, 1});
  CHECK(cyclotomic_poly(6) == IntPoly{1, -1, 1});
  CHECK(cyclotomic_poly(7) == IntPoly{1, 1, 1, 1, 1, 1, 1});
  CHECK(cyclotomic_poly(9) == IntPoly{1, 0, 0, 1, 0, 0, 1});
  CHECK(cyclotomic_poly(15) == IntPoly{1, -1, 0, 1, -1, 1, 0, -1, 1});
  CHECK_THROWS_AS(cyclotomic_poly(0), std::invalid_argument);
  // first cyclotomic polynomial with a coefficient outside {-1, 0, 1}
  CHECK(cyclotomic_poly(105).coeff(7) == -2);
}

TEST_CASE("prime cyclotomic polynomials are geometric sums") {
  for (u64 p = 3; p < 400; p += 2) {
    if (!is_prime(p)) continue;
    CHECK(cyclotomic_poly(p) == IntPoly(std::vector<mpz_class>(p, 1)));
  }
}

TEST_CASE("product of Phi_e over divisors of n is t^n - 1") {
  for (u64 n = 1; n <= 200; ++n) {
    IntPoly prod{1};
    for (u64 e = 1; e <= n; ++e)
      if (n % e == 0) prod = prod * cyclotomic_poly(e);
    CHECK(prod == t_pow_minus_one(n));
  }
}

TEST_CASE("cyclotomic degree is the totient and polynomials are palindromic") {
  for (u64 d = 2; d <= 2000; ++d) {
    const IntPoly& f = cyclotomic_poly(d);
    CHECK(static_cast<u64>(f.degree()) == totient(d));
    CHECK(reverse(f) == f);
  }
}

TEST_CASE("query validation") {
  CHECK_NOTHROW(CyclotomicQuery::make(7, 2));
  CHECK_THROWS_AS(CyclotomicQuery::make(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(CyclotomicQuery::make(7, 4), std::invalid_argument);
  CHECK_THROWS_AS(CyclotomicQuery::make(9, 3), std::domain_error);
  CHECK_THROWS_AS(count_irreducible_factors({9, 3}), std::domain_error);
  CHECK_THROWS_AS(has_self_reciprocal_factor({10, 5}), std::domain_error);
}

TEST_CASE("count_irreducible_factors examples") {
  auto r = count_irreducible_factors(CyclotomicQuery::make(7, 2));
  CHECK(r.count == 2);
  CHECK(r.phi == 6);
  CHECK(r.degree_each == 3);
  CHECK(r.parity == Parity::Even);
  CHECK(r.legendre_check == 1);

  r = count_irreducible_factors(CyclotomicQuery::make(3, 2));
  CHECK(r.count == 1);
  CHECK(r.parity == Parity::Odd);
  CHECK(r.legendre_check == -1);

  r = count_irreducible_factors(CyclotomicQuery::make(5, 3));
  CHECK(r.count == 1);
  CHECK(r.phi == 4);
  CHECK(r.degree_each == 4);
  CHECK(r.parity == Parity::Odd);
  CHECK(r.legendre_check == -1);

  r = count_irreducible_factors(CyclotomicQuery::make(15, 2));
  CHECK(r.count == 2);
  CHECK_FALSE(r.legendre_check.has_value());
}

TEST_CASE("parity_via_legendre") {
  CHECK(parity_via_legendre(2, 7) == Parity::Even);
  CHECK(parity_via_legendre(2, 3) == Parity::Odd);
  CHECK(parity_via_legendre(3, 5) == Parity::Odd);
  CHECK_THROWS_AS(parity_via_legendre(2, 9), std::invalid_argument);
  CHECK_THROWS_AS(parity_via_legendre(3, 2), std::invalid_argument);
  CHECK_THROWS_AS(parity_via_legendre(7, 7), std::invalid_argument);
  CHECK_THROWS_AS(parity_via_legendre(4, 7), std::invalid_argument);
}

TEST_CASE("factor-count parity matches the Legendre symbol on a small grid") {
  for (u64 d = 3; d < 200; d += 2) {
    if (!is_prime(d)) continue;
    for (u64 p = 2; p < 60; ++p) {
      if (!is_prime(p) || p == d) continue;
      const auto q = CyclotomicQuery::make(d, p);
      const auto m = factor_cyclotomic_oracle(q);
      const bool even = m.factors.size() % 2 == 0;
      CHECK(even == (parity_via_legendre(p, d) == Parity::Even));
      CHECK(count_irreducible_factors(q).count == m.factors.size());
    }
  }
}

TEST_CASE("has_self_reciprocal_factor examples") {
  auto e = has_self_reciprocal_factor(CyclotomicQuery::make(3, 2));
  CHECK(e.has_factor);
  CHECK(e.w == 1);

  e = has_self_reciprocal_factor(CyclotomicQuery::make(7, 2));
  CHECK_FALSE(e.has_factor);
  CHECK_FALSE(e.w.has_value());
  CHECK(e.u == 3);
  CHECK(e.p_pow_u == 1);

  e = has_self_reciprocal_factor(CyclotomicQuery::make(9, 2), {OracleLevel::Always, 1024, kDefaultSeed});
  CHECK(e.has_factor);
  CHECK(e.w == 3);
  CHECK(e.oracle == true);
}

TEST_CASE("self-reciprocal criteria agree with the oracle for prime and composite d") {
  const OracleOptions always{OracleLevel::Always, 4096, kDefaultSeed};
  for (u64 d = 3; d <= 400; ++d) {
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
      if (d % p == 0) continue;
      const auto q = CyclotomicQuery::make(d, p);
      const auto e = has_self_reciprocal_factor(q, always);
      REQUIRE(e.oracle.has_value());
      CHECK(e.has_factor == *e.oracle);
      CHECK(e.has_factor == e.w.has_value());
      if (is_prime(d)) CHECK(*e.oracle == (e.p_pow_u != 1));
    }
  }
}

TEST_CASE("factor_cyclotomic_oracle examples") {
  auto m = factor_cyclotomic_oracle(CyclotomicQuery::make(7, 2));
  CHECK(sorted_factors(m).size() == 2);
  std::set<std::vector<u64>> got;
  for (const auto& f : m.factors) got.insert(f.poly.coeffs());
  CHECK(got == std::set<std::vector<u64>>{{1, 1, 0, 1}, {1, 0, 1, 1}});

  m = factor_cyclotomic_oracle(CyclotomicQuery::make(3, 2));
  REQUIRE(m.factors.size() == 1);
  CHECK(m.factors[0].poly == P(2, {1, 1, 1}));

  m = factor_cyclotomic_oracle(CyclotomicQuery::make(5, 3));
  REQUIRE(m.factors.size() == 1);
  CHECK(m.factors[0].poly == P(3, {1, 1, 1, 1, 1}));
}

TEST_CASE("cyclotomic factorizations: squarefree, equal degree, closed under reversal") {
  for (u64 d = 3; d <= 300; ++d) {
    for (u64 p : {2ull, 3ull, 5ull, 31ull}) {
      if (d % p == 0) continue;
      const auto q = CyclotomicQuery::make(d, p);
      for (bool neg : {false, true}) {
        const auto m = factor_cyclotomic_oracle(q, kDefaultSeed, neg);
        std::set<std::vector<u64>> polys;
        for (const auto& f : m.factors) {
          CHECK(f.multiplicity == 1);
          CHECK(static_cast<u64>(f.poly.degree()) == mult_order(p, d));
          polys.insert(f.poly.coeffs());
        }
        CHECK(polys.size() == m.factors.size());
        for (const auto& f : m.factors) CHECK(polys.count(reverse(f.poly).coeffs()) == 1);
      }
    }
  }
}

TEST_CASE("cyclotomic oracle agrees with trial division on small degrees") {
  for (u64 d = 3; d <= 60; ++d) {
    for (u64 p : {2ull, 3ull}) {
      if (d % p == 0 || totient(d) > 12) continue;
      const auto q = CyclotomicQuery::make(d, p);
      const ModPoly f = reduce_mod(cyclotomic_poly(d), p);
      CHECK(sorted_factors(factor_cyclotomic_oracle(q)) == naive_factor(f).factors);
    }
  }
}
