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

#include "knotfm/pretzel.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace knotfm {

namespace {

// (a+1)^2/4 t^(a-1) (t-1)^2, the term both closed forms subtract.
IntPoly twist_term(u64 a) {
  const mpz_class h = mpz_class(static_cast<unsigned long>((a + 1) / 2));
  const mpz_class c = h * h;
  return IntPoly(std::vector<mpz_class>{c, -2 * c, c}) * IntPoly::monomial(1, a - 1);
}

// f(-t) without renormalizing the sign.
IntPoly negate_variable(const IntPoly& f) {
  std::vector<mpz_class> c = f.coeffs();
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return IntPoly(std::move(c));
}

}  // namespace

PretzelParam PretzelParam::make(u64 a, u64 max_a) {
  if (a % 2 == 0) throw std::invalid_argument("a must be odd, got " + std::to_string(a));
  if (a < 3) throw std::invalid_argument("a must be at least 3, got " + std::to_string(a));
  if (a > max_a)
    throw std::invalid_argument("a = " + std::to_string(a) + " exceeds the configured bound " + std::to_string(max_a));
  return PretzelParam{a};
}

std::array<i64, 3> PretzelParam::strands() const {
  const i64 s = static_cast<i64>(a);
  return {s, -s - 2, -((s + 1) * (s + 1) / 2)};
}

std::vector<u64> PretzelParam::cyclotomic_indices() const {
  std::vector<u64> out;
  for (u64 n : {a, a + 2})
    for (u64 d : divisors(factorize(n)))
      if (d > 1) out.push_back(d);
  return out;
}

IntPoly alexander_closed_form(const PretzelParam& P) {
  const u64 a = P.a;
  const IntPoly num = (IntPoly::monomial(1, a + 2) + IntPoly{1}) * (IntPoly::monomial(1, a) + IntPoly{1});
  const IntPoly q = exact_div(num, IntPoly{1, 2, 1});
  return canonicalize(q - twist_term(a));
}

IntPoly alexander_cyclotomic_form(const PretzelParam& P) {
  std::vector<IntPoly> pieces;
  for (u64 d : P.cyclotomic_indices()) pieces.push_back(negate_variable(cyclotomic_poly(d)));
  // Multiply small pieces first so the running product grows late.
  std::sort(pieces.begin(), pieces.end(), [](const IntPoly& x, const IntPoly& y) { return x.degree() < y.degree(); });
  IntPoly prod{1};
  for (const auto& f : pieces) prod = prod * f;
  return canonicalize(prod - twist_term(P.a));
}

IntPoly alexander_poly(const PretzelParam& P) {
  IntPoly x = alexander_closed_form(P);
  if (x != alexander_cyclotomic_form(P))
    throw std::logic_error("Alexander polynomial closed forms disagree for a = " + std::to_string(P.a));
  return x;
}

ModPoly alexander_mod_p(const PretzelParam& P, u64 p, bool check) {
  if (!is_prime(p) || P.half_plus_one() % p != 0)
    throw std::invalid_argument("p = " + std::to_string(p) + " is not a prime dividing (a+1)/2 for a = " +
                                std::to_string(P.a));
  ModPoly prod(p, {1});
  for (u64 d : P.cyclotomic_indices()) prod = prod * substitute_neg(reduce_mod(cyclotomic_poly(d), p));
  prod = canonicalize(prod);
  if (check && prod != reduce_mod(alexander_poly(P), p))
    throw std::logic_error("mod-p product form disagrees with the reduction for a = " + std::to_string(P.a) +
                           ", p = " + std::to_string(p));
  return prod;
}

AlexanderPair alexander_pair(const PretzelParam& P) {
  AlexanderPair out{alexander_poly(P), {}};
  for (u64 p : factorize(P.half_plus_one()).primes()) {
    ModPoly direct = reduce_mod(out.delta, p);
    if (direct != alexander_mod_p(P, p, false))
      throw std::logic_error("mod-p product form disagrees with the reduction for a = " + std::to_string(P.a));
    out.reductions.emplace(p, std::move(direct));
  }
  return out;
}

FoxMilnorStatus fox_milnor_status(const PretzelParam& P, u64 p, const OracleOptions& opts) {
  if (!is_prime(p) || P.half_plus_one() % p != 0)
    throw std::invalid_argument("p = " + std::to_string(p) + " is not a prime dividing (a+1)/2 for a = " +
                                std::to_string(P.a));
  FoxMilnorStatus st;
  st.a = P.a;
  st.p = p;

  if (2 * P.a <= opts.max_degree) {
    FoxMilnorResult r = fox_milnor_mod_p(alexander_mod_p(P, p), opts.seed);
    st.route = FoxMilnorStatus::Route::Whole;
    st.verdict = r.verdict;
    st.offending = std::move(r.offending);
    st.factorization = std::move(r.factorization);
    return st;
  }

  st.route = FoxMilnorStatus::Route::PerPiece;
  std::set<ModPoly> seen;
  OracleOptions closed = opts;
  closed.level = OracleLevel::Off;
  for (u64 d : P.cyclotomic_indices()) {
    const CyclotomicQuery q = CyclotomicQuery::make(d, p);
    FoxMilnorPiece piece;
    piece.d = d;
    const u64 phi = totient(d);
    if (phi <= opts.max_degree) {
      const FactorMultiset m = factor_cyclotomic_oracle(q, opts.seed, true);
      piece.via_oracle = true;
      piece.factor_count = m.factors.size();
      piece.factor_degree = static_cast<u64>(m.factors.front().poly.degree());
      for (const Factor& f : m.factors) {
        if (!seen.insert(f.poly).second)
          throw std::logic_error("cyclotomic pieces share a factor mod " + std::to_string(p));
        if (is_self_reciprocal_factor(f.poly)) {
          piece.self_reciprocal = true;
          st.offending.push_back(f);
        }
      }
    } else {
      const FactorCountReport c = count_irreducible_factors(q);
      piece.factor_count = c.count;
      piece.factor_degree = c.degree_each;
      piece.self_reciprocal = has_self_reciprocal_factor(q, closed).has_factor;
    }
    if (piece.self_reciprocal) st.offending_pieces.push_back(d);
    st.pieces.push_back(piece);
  }
  st.verdict = st.offending_pieces.empty() ? FoxMilnorVerdict::Admits : FoxMilnorVerdict::Obstructed;
  return st;
}

}  // namespace knotfm
