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

#ifndef KNOTFM_PRETZEL_HPP
#define KNOTFM_PRETZEL_HPP

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "knotfm/cyclotomic.hpp"
#include "knotfm/factor.hpp"
#include "knotfm/int_poly.hpp"
#include "knotfm/mod_poly.hpp"

namespace knotfm {

inline constexpr u64 kDefaultMaxA = 200000;

/// The family member P(a, -a-2, -(a+1)^2/2), a odd and at least 3.
struct PretzelParam {
  u64 a;

  /// Throws std::invalid_argument for even a, a < 3 or a > max_a.
  static PretzelParam make(u64 a, u64 max_a = kDefaultMaxA);

  std::array<i64, 3> strands() const;
  u64 half_plus_one() const { return (a + 1) / 2; }
  /// Divisors d > 1 of a, then of a + 2, each list ascending.
  std::vector<u64> cyclotomic_indices() const;
};

/// (t^(a+2)+1)(t^a+1)/(t+1)^2 - ((a+1)^2/4) t^(a-1) (t-1)^2, canonical.
IntPoly alexander_closed_form(const PretzelParam& a);

/// prod_{d | a, d > 1} Phi_d(-t) * prod_{d | a+2, d > 1} Phi_d(-t)
/// - ((a+1)^2/4) t^(a-1) (t-1)^2, canonical.
IntPoly alexander_cyclotomic_form(const PretzelParam& a);

/// Both closed forms; throws std::logic_error if they disagree.
IntPoly alexander_poly(const PretzelParam& a);

/// Product of the reductions of Phi_d(-t) mod p over the cyclotomic indices.
/// p must be a prime dividing (a+1)/2. With `check` the result is compared
/// against the reduction of alexander_poly(a) (std::logic_error on mismatch).
ModPoly alexander_mod_p(const PretzelParam& a, u64 p, bool check = true);

struct AlexanderPair {
  IntPoly delta;
  std::map<u64, ModPoly> reductions;  // keyed by the primes of (a+1)/2
};

AlexanderPair alexander_pair(const PretzelParam& a);

/// How the mod-p Fox-Milnor test saw one cyclotomic piece Phi_d(-t) mod p.
struct FoxMilnorPiece {
  u64 d = 0;
  u64 factor_count = 0;
  u64 factor_degree = 0;
  bool self_reciprocal = false;
  bool via_oracle = false;
};

struct FoxMilnorStatus {
  enum class Route { Whole, PerPiece };

  u64 a = 0;
  u64 p = 0;
  FoxMilnorVerdict verdict = FoxMilnorVerdict::Admits;
  Route route = Route::Whole;
  /// Self-reciprocal factors of odd multiplicity that were written out.
  std::vector<Factor> offending;
  /// PerPiece: indices d whose piece carries a self-reciprocal factor. Pieces
  /// above the oracle bound contribute no entry to `offending`.
  std::vector<u64> offending_pieces;
  std::vector<FoxMilnorPiece> pieces;  // PerPiece only
  std::optional<FactorMultiset> factorization;  // Whole only
};

/// Fox-Milnor test for the mod-p reduction of the Alexander polynomial.
///
/// When 2a <= opts.max_degree the whole reduction is factored. Otherwise
/// each Phi_d(-t) mod p is factored separately if phi(d) <= opts.max_degree,
/// and read off the closed form (phi/ord factors of degree ord, self-
/// reciprocal iff -1 is a power of p mod d) above that. Every piece divides
/// t^(2m) - 1 with m = a(a+2) odd, which is separable for odd p; for p = 2
/// the pieces are Phi_d(t) and divide t^m - 1. So all multiplicities are
/// one. Factors from different oracle runs are still checked for collisions.
FoxMilnorStatus fox_milnor_status(const PretzelParam& a, u64 p, const OracleOptions& opts = {});

}  // namespace knotfm

#endif  // KNOTFM_PRETZEL_HPP
