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

#include "knotfm/numth.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>
#include <vector>

namespace knotfm {

namespace {

constexpr u64 kTrialLimit = 1000000;
constexpr u64 kSieveLimit = u64{1} << 22;

// Eratosthenes table for the hot small-argument case (legendre checks its
// modulus on every call).
const std::vector<bool>& small_primes() {
  static const std::vector<bool> table = [] {
    std::vector<bool> t(kSieveLimit, true);
    t[0] = t[1] = false;
    for (u64 i = 2; i * i < kSieveLimit; ++i)
      if (t[i])
        for (u64 j = i * i; j < kSieveLimit; j += i) t[j] = false;
    return t;
  }();
  return table;
}

bool miller_rabin_witness(u64 n, u64 a, u64 d, unsigned s) {
  a %= n;
  if (a == 0) return false;
  u64 x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

// Brent's cycle detection with batched gcds. Deterministic: the constant c
// walks 1, 2, 3, ... until a proper factor appears.
u64 pollard_brent(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    auto f = [&](u64 x) { return (mul_mod(x, x, n) + c) % n; };
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    const u64 batch = 128;
    for (u64 r = 1; g == 1; r <<= 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      for (u64 k = 0; k < r && g == 1; k += batch) {
        ys = y;
        for (u64 i = 0; i < std::min(batch, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = gcd(q, n);
      }
    }
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(u64 n, std::map<u64, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  u64 g = pollard_brent(n);
  factor_into(g, out);
  factor_into(n / g, out);
}

void require_odd_prime(u64 d) {
  if (d < 3 || d % 2 == 0 || !is_prime(d))
    throw std::invalid_argument("Legendre symbol needs an odd prime modulus");
}

u64 reduce_signed(i64 n, u64 m) {
  if (n >= 0) return static_cast<u64>(n) % m;
  u64 r = static_cast<u64>(-(n + 1)) % m;  // avoids overflow at INT64_MIN
  return m - 1 - r;
}

}  // namespace

u64 Factorization::value() const {
  u64 v = 1;
  for (auto [q, e] : terms)
    for (unsigned i = 0; i < e; ++i) v *= q;
  return v;
}

std::vector<u64> Factorization::primes() const {
  std::vector<u64> out;
  out.reserve(terms.size());
  for (auto [q, e] : terms) out.push_back(q);
  return out;
}

u64 pow_mod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

u64 gcd(u64 a, u64 b) {
  while (b != 0) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u64 inv_mod(u64 a, u64 m) {
  // extended Euclid on signed 128-bit to stay exact for m < 2^64
  __int128 old_r = a % m, r = m, old_s = 1, s = 0;
  while (r != 0) {
    __int128 q = old_r / r;
    __int128 t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw std::domain_error("inv_mod: not invertible");
  if (old_s < 0) old_s += m;
  return static_cast<u64>(old_s);
}

bool is_prime(u64 n) {
  if (n < kSieveLimit) return small_primes()[n];
  for (u64 q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0) return n == q;
  }
  if (n < 41 * 41) return true;
  u64 d = n - 1;
  unsigned s = static_cast<unsigned>(std::countr_zero(d));
  d >>= s;
  if (n < 4759123141ULL) {
    // bases 2, 7, 61 are deterministic below this bound
    for (u64 a : {2ULL, 7ULL, 61ULL})
      if (miller_rabin_witness(n, a, d, s)) return false;
    return true;
  }
  // Witness set of Jim Sinclair, deterministic below 2^64.
  for (u64 a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
    if (miller_rabin_witness(n, a, d, s)) return false;
  }
  return true;
}

Factorization factorize(u64 n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  Factorization f;
  u64 q = 2;
  for (; q <= kTrialLimit && q * q <= n; q += (q == 2 ? 1 : 2)) {
    if (n % q != 0) continue;
    unsigned e = 0;
    do {
      n /= q;
      ++e;
    } while (n % q == 0);
    f.terms.emplace_back(q, e);
  }
  if (n == 1) return f;
  if (q * q > n) {
    // trial division passed sqrt(n), so what is left is prime
    f.terms.emplace_back(n, 1);
    return f;
  }
  std::map<u64, unsigned> acc;
  factor_into(n, acc);
  f.terms.insert(f.terms.end(), acc.begin(), acc.end());
  return f;
}

u64 totient(const Factorization& f) {
  u64 phi = 1;
  for (auto [q, e] : f.terms) {
    phi *= q - 1;
    for (unsigned i = 1; i < e; ++i) phi *= q;
  }
  return phi;
}

std::vector<u64> divisors(const Factorization& f) {
  std::vector<u64> out{1};
  for (auto [q, e] : f.terms) {
    const std::size_t n = out.size();
    u64 pw = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pw *= q;
      for (std::size_t j = 0; j < n; ++j) out.push_back(out[j] * pw);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

u64 mult_order(u64 p, u64 d) {
  if (d < 2) throw std::invalid_argument("mult_order: modulus must be at least 2");
  if (gcd(p % d, d) != 1) throw std::domain_error("mult_order: gcd(p, d) != 1");
  const Factorization fd = factorize(d);
  // phi(d) = prod q^(e-1) (q-1); factor it from the pieces.
  std::map<u64, unsigned> phi_terms;
  u64 order = 1;
  for (auto [q, e] : fd.terms) {
    if (e > 1) phi_terms[q] += e - 1;
    for (auto [r, k] : factorize(q - 1).terms) phi_terms[r] += k;
    order *= q - 1;
    for (unsigned i = 1; i < e; ++i) order *= q;
  }
  for (auto [r, k] : phi_terms) {
    for (unsigned i = 0; i < k && order % r == 0; ++i) {
      if (pow_mod(p, order / r, d) != 1) break;
      order /= r;
    }
  }
  return order;
}

int legendre_euler(i64 n, u64 d) {
  require_odd_prime(d);
  const u64 r = pow_mod(reduce_signed(n, d), (d - 1) / 2, d);
  if (r == 0) return 0;
  return r == 1 ? 1 : -1;
}

namespace {

// (n / d) for 0 <= n < d, d odd prime, using only the prime-argument rules.
int legendre_rules(u64 n, u64 d) {
  if (n == 0) return 0;
  if (n == 1) return 1;
  int sign = 1;
  auto odd_power_of = [&](u64 q) {
    if (q == 2) {
      const u64 r = d % 8;
      if (r == 3 || r == 5) sign = -sign;
    } else {
      // flip: (q/d) = (-1)^((q-1)(d-1)/4) (d/q), then reduce d mod q
      if (q % 4 == 3 && d % 4 == 3) sign = -sign;
      sign *= legendre_rules(d % q, q);
    }
  };
  if (n >= kTrialLimit) {
    for (auto [q, e] : factorize(n).terms)
      if (e % 2 == 1) odd_power_of(q);  // squares contribute 1
    return sign;
  }
  // Small n: trial division in place.
  for (u64 q = 2; q * q <= n; q += (q == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (n % q == 0) {
      n /= q;
      ++e;
    }
    if (e % 2 == 1) odd_power_of(q);
  }
  if (n > 1) odd_power_of(n);
  return sign;
}

}  // namespace

int legendre_reciprocity(i64 n, u64 d) {
  require_odd_prime(d);
  int sign = 1;
  if (n < 0) {
    // (-1/d) = (-1)^((d-1)/2)
    if (d % 4 == 3) sign = -1;
  }
  const u64 mag = n < 0 ? (d - reduce_signed(n, d)) % d : static_cast<u64>(n) % d;
  return sign * legendre_rules(mag, d);
}

int legendre(i64 n, u64 d) {
  const int a = legendre_reciprocity(n, d);
  const int b = legendre_euler(n, d);
  if (a != b) throw std::logic_error("legendre: reciprocity and Euler's criterion disagree");
  return a;
}

Valuation valuation(i64 n, u64 q) {
  if (n == 0) throw std::domain_error("valuation: n must be nonzero");
  if (q < 2) throw std::invalid_argument("valuation: q must be prime");
  Valuation out;
  const bool neg = n < 0;
  u64 m = neg ? static_cast<u64>(-(n + 1)) + 1 : static_cast<u64>(n);
  while (m % q == 0) {
    m /= q;
    ++out.v;
  }
  out.u = neg ? -static_cast<i64>(m) : static_cast<i64>(m);
  return out;
}

bool prime_power_lift_check(i64 n, u64 d, unsigned l) {
  if (l == 0) throw std::invalid_argument("lift check: l must be positive");
  if (!is_prime(d)) throw std::invalid_argument("lift check: d must be prime");
  if (reduce_signed(n, d) != 1 % d) throw std::invalid_argument("lift check: n must be 1 mod d");
  u64 modulus = 1, exponent = 1;
  for (unsigned i = 0; i < l; ++i) {
    if (modulus > UINT64_MAX / d) throw std::overflow_error("lift check: d^l exceeds 64 bits");
    modulus *= d;
    if (i + 1 < l) exponent *= d;
  }
  return pow_mod(reduce_signed(n, modulus), exponent, modulus) == 1 % modulus;
}

}  // namespace knotfm
