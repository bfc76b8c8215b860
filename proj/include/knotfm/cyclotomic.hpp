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

#ifndef KNOTFM_CYCLOTOMIC_HPP
#define KNOTFM_CYCLOTOMIC_HPP

#include <optional>

#include "knotfm/factor.hpp"
#include "knotfm/int_poly.hpp"
#include "knotfm/mod_poly.hpp"

namespace knotfm {

/// How often closed-form cyclotomic decisions are re-derived by factoring.
enum class OracleLevel { Off, CompositeOnly, Always };

struct OracleOptions {
  OracleLevel level = OracleLevel::CompositeOnly;
  /// Polynomials above this degree are never handed to the factoring oracle.
  u64 max_degree = 1024;
  u64 seed = kDefaultSeed;
};

/// Index d >= 2 and prime p with p not dividing d.
struct CyclotomicQuery {
  u64 d;
  u64 p;

  /// Validates; throws std::invalid_argument or std::domain_error.
  static CyclotomicQuery make(u64 d, u64 p);
};

enum class Parity { Even, Odd };

struct FactorCountReport {
  u64 count;        // number of irreducible factors of Phi_d mod p
  u64 degree_each;  // ord_d(p)
  u64 phi;
  Parity parity;
  std::optional<int> legendre_check;  // (p/d) when d is an odd prime
};

struct SelfReciprocalEvidence {
  bool has_factor = false;
  u64 order = 0;                 // ord_d(p)
  std::optional<u64> w;          // ord/2 when p^w = -1 (mod d)
  u64 u = 0;                     // odd part of phi(d)
  u64 p_pow_u = 0;               // p^u mod d
  bool d_prime = false;
  std::optional<bool> oracle;    // set when the factoring oracle ran
};

/// Phi_d over Z, memoized. The returned reference stays valid for the life
/// of the process.
const IntPoly& cyclotomic_poly(u64 d);

FactorCountReport count_irreducible_factors(const CyclotomicQuery& q);

/// Parity of the factor count read off the Legendre symbol (p/d).
/// d must be an odd prime and p a prime different from d.
Parity parity_via_legendre(u64 p, u64 d);

/// Whether Phi_d mod p has a self-reciprocal irreducible factor, decided by
/// "p^w = -1 (mod d) for some w" (ord even and p^(ord/2) = -1). For prime d
/// the criterion p^u != 1 (u the odd part of phi(d)) must agree. Composite
/// d, or every d under OracleLevel::Always, is re-decided by factoring when
/// phi(d) <= max_degree, and the factorization is authoritative.
SelfReciprocalEvidence has_self_reciprocal_factor(const CyclotomicQuery& q, const OracleOptions& opts = {});

/// Full factorization of Phi_d mod p (of Phi_d(-t) mod p when `negated`),
/// checked against the expected shape: phi(d)/ord factors of degree ord,
/// all of multiplicity one.
FactorMultiset factor_cyclotomic_oracle(const CyclotomicQuery& q, u64 seed = kDefaultSeed, bool negated = false);

/// True if some factor in the multiset is self-reciprocal.
bool has_self_reciprocal_member(const FactorMultiset& m);

}  // namespace knotfm

#endif  // KNOTFM_CYCLOTOMIC_HPP
