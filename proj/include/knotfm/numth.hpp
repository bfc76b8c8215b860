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

#ifndef KNOTFM_NUMTH_HPP
#define KNOTFM_NUMTH_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace knotfm {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

/// Prime factorization as (prime, exponent) pairs in ascending prime order.
/// Empty for 1.
struct Factorization {
  std::vector<std::pair<u64, unsigned>> terms;

  u64 value() const;
  std::vector<u64> primes() const;
  bool operator==(const Factorization&) const = default;
};

/// n = q^v * u with q not dividing u.
struct Valuation {
  unsigned v = 0;
  i64 u = 1;
  bool operator==(const Valuation&) const = default;
};

inline u64 mul_mod(u64 a, u64 b, u64 m) {
  if (((a | b | m) >> 32) == 0) return a * b % m;
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m);

/// Inverse of a modulo m; throws std::domain_error when gcd(a, m) != 1.
u64 inv_mod(u64 a, u64 m);

u64 gcd(u64 a, u64 b);

/// Deterministic for every 64-bit input.
bool is_prime(u64 n);

/// Trial division up to 10^6, Pollard-Brent rho beyond. n >= 1.
Factorization factorize(u64 n);

u64 totient(const Factorization& f);
inline u64 totient(u64 n) { return totient(factorize(n)); }

/// All positive divisors in ascending order.
std::vector<u64> divisors(const Factorization& f);

/// Least r >= 1 with p^r = 1 (mod d). Requires gcd(p, d) = 1 and d >= 2.
/// Starts at phi(d) and strips prime factors while the power stays 1.
u64 mult_order(u64 p, u64 d);

/// Legendre symbol by Euler's criterion n^((d-1)/2) mod d.
int legendre_euler(i64 n, u64 d);

/// Legendre symbol by the reciprocity rules: periodicity, multiplicativity,
/// the supplements for -1 and 2, and the flip (p/d) = (-1)^((p-1)(d-1)/4) (d/p).
int legendre_reciprocity(i64 n, u64 d);

/// Both routes, required to agree. d must be an odd prime.
int legendre(i64 n, u64 d);

/// q-adic valuation; the sign of n stays on u. Throws for n = 0.
Valuation valuation(i64 n, u64 q);

/// Odd part u_2(n).
inline u64 odd_part(u64 n) {
  while (n != 0 && n % 2 == 0) n /= 2;
  return n;
}

/// Evaluates n^(d^(l-1)) mod d^l == 1 for n = 1 (mod d). The lifting lemma
/// says this is always true; exposed so the tests can exercise it.
bool prime_power_lift_check(i64 n, u64 d, unsigned l);

}  // namespace knotfm

#endif  // KNOTFM_NUMTH_HPP
