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

#ifndef KNOTFM_TESTS_SUPPORT_HPP
#define KNOTFM_TESTS_SUPPORT_HPP

#include <algorithm>
#include <vector>

#include "knotfm/factor.hpp"
#include "knotfm/mod_poly.hpp"
#include "knotfm/rng.hpp"

namespace knotfm::testing {

inline ModPoly random_mod_poly(CounterRng& rng, u64 p, unsigned max_deg) {
  std::vector<u64> c(1 + rng.below(max_deg + 1));
  for (auto& x : c) x = rng.below(p);
  return ModPoly(p, std::move(c));
}

// Monic polynomial of degree k whose lower coefficients are the base-p digits of idx.
inline ModPoly monic_from_index(u64 p, unsigned k, u64 idx) {
  std::vector<u64> c(k + 1, 0);
  for (unsigned i = 0; i < k; ++i, idx /= p) c[i] = idx % p;
  c[k] = 1;
  return ModPoly(p, std::move(c));
}

inline u64 ipow(u64 b, unsigned e) {
  u64 r = 1;
  while (e--) r *= b;
  return r;
}

// Trial division by every monic polynomial in increasing degree.
inline FactorMultiset naive_factor(const ModPoly& f) {
  const u64 p = f.modulus();
  FactorMultiset out;
  out.modulus = p;
  out.scalar = f.leading();
  ModPoly rem = f.monic();
  for (unsigned k = 1; 2 * k <= static_cast<unsigned>(std::max(rem.degree(), 0L)); ++k) {
    const u64 n = ipow(p, k);
    for (u64 i = 0; i < n && 2 * static_cast<long>(k) <= rem.degree(); ++i) {
      const ModPoly g = monic_from_index(p, k, i);
      unsigned m = 0;
      for (;;) {
        auto [q, r] = divrem(rem, g);
        if (!r.is_zero()) break;
        rem = q;
        ++m;
      }
      if (m) out.factors.push_back({g, m});
    }
  }
  if (rem.degree() >= 1) {
    auto it = std::find_if(out.factors.begin(), out.factors.end(), [&](const Factor& x) { return x.poly == rem; });
    if (it != out.factors.end()) ++it->multiplicity;
    else out.factors.push_back({rem, 1});
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const Factor& a, const Factor& b) { return a.poly < b.poly; });
  return out;
}

inline bool naive_irreducible(const ModPoly& f) {
  if (f.degree() < 1) return false;
  const FactorMultiset m = naive_factor(f);
  return m.factors.size() == 1 && m.factors[0].multiplicity == 1;
}

inline std::vector<Factor> sorted_factors(FactorMultiset m) {
  std::sort(m.factors.begin(), m.factors.end(), [](const Factor& a, const Factor& b) { return a.poly < b.poly; });
  return m.factors;
}

}  // namespace knotfm::testing

#endif  // KNOTFM_TESTS_SUPPORT_HPP
