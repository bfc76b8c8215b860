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

#ifndef KNOTFM_FACTOR_HPP
#define KNOTFM_FACTOR_HPP

#include <vector>

#include "knotfm/mod_poly.hpp"
#include "knotfm/rng.hpp"

namespace knotfm {

struct Factor {
  ModPoly poly;  // monic irreducible
  unsigned multiplicity = 1;
  bool operator==(const Factor&) const = default;
};

/// scalar * prod poly_i^multiplicity_i. Factors are pairwise distinct and
/// listed in the canonical order (degree, then coefficients from the top).
struct FactorMultiset {
  u64 modulus = 2;
  u64 scalar = 1;
  std::vector<Factor> factors;

  ModPoly product() const;
  std::size_t count() const;  // with multiplicity
  bool operator==(const FactorMultiset&) const = default;
};

struct SquarefreePart {
  ModPoly poly;  // monic, squarefree
  unsigned multiplicity;
};

struct DegreeClass {
  ModPoly product;  // product of all irreducible factors of this degree
  unsigned degree;
};

/// f = lc(f) * prod part^multiplicity, parts squarefree and pairwise coprime,
/// ordered by multiplicity. Throws on zero.
std::vector<SquarefreePart> squarefree_decomposition(const ModPoly& f);

/// Splits a squarefree monic f into products of equal-degree irreducibles.
/// Throws std::invalid_argument when f is not monic or not squarefree.
std::vector<DegreeClass> distinct_degree(const ModPoly& f);

/// Splits f (squarefree, monic, every irreducible factor of degree k) into
/// its deg(f)/k factors. Randomized; deterministic for a fixed seed.
FactorMultiset equal_degree_split(const ModPoly& f, unsigned k, u64 seed = kDefaultSeed);

/// Complete factorization. Throws on zero.
FactorMultiset factor(const ModPoly& f, u64 seed = kDefaultSeed);

/// Rabin's test. Throws std::invalid_argument on constants.
bool is_irreducible(const ModPoly& f);

enum class FoxMilnorVerdict { Admits, Obstructed };

struct FoxMilnorResult {
  FoxMilnorVerdict verdict;
  FactorMultiset factorization;
  /// The self-reciprocal irreducible factors with their multiplicities.
  std::vector<Factor> self_reciprocal;
  /// Self-reciprocal factors with odd multiplicity; empty iff Admits.
  std::vector<Factor> offending;
};

/// A self-reciprocal polynomial over F_p is f(t) f(1/t) up to a unit exactly
/// when each self-reciprocal irreducible factor has even multiplicity.
/// Throws std::invalid_argument if f is zero or not self-reciprocal.
FoxMilnorResult fox_milnor_mod_p(const ModPoly& f, u64 seed = kDefaultSeed);

/// Monic g with t^deg g * g(1/t) equal to g up to a scalar.
bool is_self_reciprocal_factor(const ModPoly& g);

}  // namespace knotfm

#endif  // KNOTFM_FACTOR_HPP
