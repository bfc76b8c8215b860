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

#ifndef KNOTFM_OBSTRUCTION_HPP
#define KNOTFM_OBSTRUCTION_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "knotfm/cyclotomic.hpp"
#include "knotfm/pretzel.hpp"

namespace knotfm {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kInconclusiveNote =
    "Inconclusive means only that these mod-p obstructions are silent; it is not a sliceness claim.";

/// p a prime factor of (a+1)/2, d > 1 a divisor of a or of a+2.
struct WitnessPair {
  u64 p = 0;
  u64 d = 0;
  bool d_is_prime = false;
  bool operator==(const WitnessPair&) const = default;
};

/// Every witness pair of a. Prime d come before composite d; within each
/// group the order is by p, then by d.
std::vector<WitnessPair> witness_pairs(const PretzelParam& a);

enum class PairOutcome { ParityFailure, SelfReciprocalFailure, ConditionsHold };

struct PairCheck {
  WitnessPair pair;
  PairOutcome outcome = PairOutcome::ConditionsHold;
  FactorCountReport count{};
  SelfReciprocalEvidence sr{};
  bool parity_fails = false;  // factor count odd
  bool sr_fails = false;      // a self-reciprocal factor exists
  bool oracle_confirmed = false;
};

/// Evaluates both conditions on one pair; `outcome` is the first failing one
/// (parity before self-reciprocal). Composite d, or every d under
/// OracleLevel::Always, is re-decided by factoring when phi(d) fits the
/// oracle bound.
PairCheck check_pair(const PretzelParam& a, const WitnessPair& w, const OracleOptions& opts = {});

enum class Verdict { ObstructedParity, ObstructedSelfReciprocal, ObstructedModP, Inconclusive };

std::string to_string(Verdict v);
/// Throws std::invalid_argument on unknown names.
Verdict verdict_from_string(const std::string& s);
inline bool is_obstructed(Verdict v) { return v != Verdict::Inconclusive; }

/// The numbers a certificate can be re-verified from. Which fields are set
/// depends on the verdict.
struct Evidence {
  // parity: N = phi / order must be odd
  std::optional<u64> factor_count;
  std::optional<u64> factor_degree;
  std::optional<u64> phi;
  std::optional<int> legendre;
  // self-reciprocal: p^w = -1 (mod d), and p^u mod d with u the odd part of phi(d)
  std::optional<u64> w;
  std::optional<u64> u;
  std::optional<u64> p_pow_u;
  std::optional<bool> oracle_confirmed;
  // Fox-Milnor mod p: a self-reciprocal irreducible factor of odd multiplicity
  std::optional<ModPoly> factor;
  std::optional<unsigned> multiplicity;
  // inconclusive: how many pairs held, and the primes where Fox-Milnor admits
  std::optional<u64> pairs_checked;
  std::vector<u64> fox_milnor_admits;
};

struct Certificate {
  u64 a = 0;
  Verdict verdict = Verdict::Inconclusive;
  std::optional<WitnessPair> witness;
  Evidence evidence;
  std::vector<std::string> theorem_tags;
  /// Every failing pair, in enumeration order, when requested.
  std::vector<WitnessPair> all_witnesses;
  std::vector<PairCheck> checked;
  std::vector<FoxMilnorStatus> fox_milnor;
  u64 seed = kDefaultSeed;
  std::string version = kVersion;
  std::string note;
};

struct DecideOptions {
  OracleOptions oracle{};
  bool collect_all = false;
  u64 max_a = kDefaultMaxA;
};

/// Residue-class tags under which a proven case split guarantees an
/// obstruction: "legendre-parity" for a = 3, 5 (mod 8) or 5 (mod 12), and
/// "self-reciprocal" for a = 3 (mod 4).
std::vector<std::string> theorem_tags(u64 a);

/// Pairs in enumeration order; the first failure decides. If every pair
/// holds, the mod-p Fox-Milnor test runs for each prime of (a+1)/2. Throws
/// std::logic_error if a theorem tag applies and the verdict is Inconclusive.
Certificate decide(u64 a, const DecideOptions& opts = {});

struct TheoremWitness {
  WitnessPair pair;
  unsigned branch = 0;  // which case of the construction produced it
};

/// Branch 1: a = 3 (mod 8), p = 2, prime d | a with d = 3, 5 (mod 8).
/// Branch 2: a = 5 (mod 12), p = 3, prime d | a with d = 5, 7 (mod 12).
/// Branch 3: a = 5 (mod 8), p = 3 (mod 4) prime dividing (a+1)/2, prime
/// d | a with (p/d) = -1. Every branch ends with (p/d) = -1.
/// Throws std::invalid_argument outside these classes.
TheoremWitness parity_witness(u64 a);

/// a = 3 (mod 4), u the odd part of phi(a(a+2)), h = (a+1)/2.
/// Branch 1: h^u = 1 (mod a(a+2)); p = 2 and d the least prime of a+2.
/// Branch 2: the least prime p | h with p^u != 1, and the first prime power
/// d^l exactly dividing a(a+2) with p^u != 1 (mod d^l); lifting gives
/// p^(odd part of d-1) != 1 (mod d).
/// Throws std::invalid_argument unless a = 3 (mod 4).
TheoremWitness self_reciprocal_witness(u64 a);

struct ResidueFilter {
  u64 modulus = 1;
  std::vector<u64> residues;
};

struct ScanRequest {
  u64 min_a = 3;
  u64 max_a = 3;
  std::optional<ResidueFilter> filter;
};

/// Throws std::invalid_argument for an empty or inverted range, a zero
/// modulus, residues not below the modulus, or even residues under an even
/// modulus (no odd a could match).
void validate(const ScanRequest& r);

/// Odd a in range passing the filter, ascending.
std::vector<u64> scan_values(const ScanRequest& r);

struct ScanReport {
  ScanRequest request;
  u64 total = 0;
  u64 parity = 0;
  u64 self_reciprocal = 0;
  u64 mod_p = 0;
  u64 inconclusive_count = 0;
  std::vector<u64> inconclusive;
  /// a decided only by a composite d: checking prime d alone would differ.
  std::vector<u64> prime_only_differs;
  /// a where the full mod-p Fox-Milnor test was the deciding step.
  std::vector<u64> modp_fired;
};

/// Runs decide on every matching a with `jobs` workers. `sink` is called from
/// a single writer thread, strictly in ascending a.
ScanReport scan(const ScanRequest& r, const DecideOptions& opts, unsigned jobs,
                const std::function<void(const Certificate&)>& sink = {});

}  // namespace knotfm

#endif  // KNOTFM_OBSTRUCTION_HPP
