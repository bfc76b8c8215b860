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

// Coefficient-vector kernels over F_p shared by ModPoly and the factoring
// engine. Vectors are little-endian coefficient lists, trimmed, with every
// entry reduced into [0, p) on input and on output.
//
// For p < 2^32 the inner loops accumulate unreduced products in 64 bits and
// reduce in batches (Barrett); `lazy_terms` is how many (p-1)^2 products a
// reduced value can absorb before it could overflow.

#ifndef KNOTFM_SRC_FP_KERNELS_HPP
#define KNOTFM_SRC_FP_KERNELS_HPP

#include <cstdint>
#include <vector>

#include "knotfm/numth.hpp"

namespace knotfm::detail {

using Coeffs = std::vector<u64>;

struct PrimeField {
  explicit PrimeField(u64 modulus);

  u64 p;
  bool small;       // p < 2^32
  u64 barrett;      // floor((2^64 - 1) / p)
  u64 lazy_terms;   // 0 when !small

  u64 reduce(u64 x) const {
    if (!small) return x % p;
    u64 q = static_cast<u64>((static_cast<u128>(x) * barrett) >> 64);
    u64 r = x - q * p;
    while (r >= p) r -= p;
    return r;
  }
  u64 mul(u64 a, u64 b) const { return small ? reduce(a * b) : mul_mod(a, b, p); }
  u64 add(u64 a, u64 b) const {
    u64 s = a + b;
    return (s >= p || s < a) ? s - p : s;
  }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + (p - b); }
  u64 neg(u64 a) const { return a == 0 ? 0 : p - a; }
  u64 inv(u64 a) const { return inv_mod(a, p); }
};

void trim(Coeffs& a);
inline long deg(const Coeffs& a) { return static_cast<long>(a.size()) - 1; }

Coeffs add(const PrimeField& F, const Coeffs& a, const Coeffs& b);
Coeffs sub(const PrimeField& F, const Coeffs& a, const Coeffs& b);
Coeffs mul(const PrimeField& F, const Coeffs& a, const Coeffs& b);
Coeffs scale(const PrimeField& F, const Coeffs& a, u64 c);
Coeffs make_monic(const PrimeField& F, const Coeffs& a);
Coeffs derivative(const PrimeField& F, const Coeffs& a);

/// a <- a mod b, b nonzero. When `quotient` is non-null it receives a div b.
void divrem_inplace(const PrimeField& F, Coeffs& a, const Coeffs& b, Coeffs* quotient = nullptr);

inline Coeffs rem(const PrimeField& F, Coeffs a, const Coeffs& b) {
  divrem_inplace(F, a, b);
  return a;
}

/// Monic gcd; gcd(0, 0) = 0.
Coeffs gcd(const PrimeField& F, Coeffs a, Coeffs b);

Coeffs mulmod(const PrimeField& F, const Coeffs& a, const Coeffs& b, const Coeffs& f);
Coeffs powmod(const PrimeField& F, Coeffs base, u64 exp, const Coeffs& f);

/// Exact quotient a / b; the caller guarantees divisibility.
Coeffs divexact(const PrimeField& F, Coeffs a, const Coeffs& b);

/// Frobenius h -> h^p mod f as a matrix: row i holds t^(i p) mod f.
class FrobeniusMatrix {
 public:
  FrobeniusMatrix(const PrimeField& F, const Coeffs& f);
  /// h^p mod f for deg h < deg f.
  Coeffs apply(const Coeffs& h) const;
  std::size_t dim() const { return n_; }

 private:
  PrimeField F_;
  std::size_t n_;
  std::vector<u64> rows_;         // n_ x n_, row-major; large p only
  std::vector<std::uint32_t> rows32_;  // same layout when p < 2^32
};

}  // namespace knotfm::detail

#endif  // KNOTFM_SRC_FP_KERNELS_HPP
