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

#include "knotfm/cyclotomic.hpp"

#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace knotfm {

namespace {

class CyclotomicCache {
 public:
  const IntPoly& get(u64 d) {
    {
      std::shared_lock lock(mu_);
      auto it = table_.find(d);
      if (it != table_.end()) return *it->second;
    }
    auto fresh = std::make_shared<const IntPoly>(compute(d));
    std::unique_lock lock(mu_);
    auto [it, inserted] = table_.emplace(d, std::move(fresh));
    return *it->second;
  }

 private:
  // Phi_d = prod_{e | d} (t^e - 1)^mu(d/e): multiply by the mu = +1 binomials,
  // then divide exactly by the mu = -1 ones. Both steps are linear time.
  static IntPoly compute(u64 d) {
    const Factorization fd = factorize(d);
    std::vector<u64> up, down;
    for (u64 e : divisors(fd)) {
      u64 m = d / e;
      int mu = 1;
      for (auto [q, k] : factorize(m).terms) {
        if (k > 1) {
          mu = 0;
          break;
        }
        mu = -mu;
      }
      if (mu == 1) up.push_back(e);
      if (mu == -1) down.push_back(e);
    }
    std::vector<mpz_class> c{1};
    for (u64 e : up) {
      std::vector<mpz_class> next(c.size() + e);
      for (std::size_t i = 0; i < c.size(); ++i) {
        next[i + e] += c[i];
        next[i] -= c[i];
      }
      c = std::move(next);
    }
    for (u64 e : down) {
      // c = q * (t^e - 1)  =>  q_i = q_{i-e} - c_i
      if (c.size() <= e) throw InexactDivisionError("cyclotomic: binomial division");
      std::vector<mpz_class> q(c.size() - e);
      for (std::size_t i = 0; i < q.size(); ++i) {
        q[i] = -c[i];
        if (i >= e) q[i] += q[i - e];
      }
      for (std::size_t i = q.size(); i < c.size(); ++i) {
        const mpz_class expect = i >= e ? q[i - e] : mpz_class(0);
        if (c[i] != expect) throw InexactDivisionError("cyclotomic: binomial division");
      }
      c = std::move(q);
    }
    return IntPoly(std::move(c));
  }

  std::shared_mutex mu_;
  std::unordered_map<u64, std::shared_ptr<const IntPoly>> table_;
};

CyclotomicCache& cache() {
  static CyclotomicCache c;
  return c;
}

}  // namespace

CyclotomicQuery CyclotomicQuery::make(u64 d, u64 p) {
  if (d < 2) throw std::invalid_argument("cyclotomic query: d must be at least 2");
  if (!is_prime(p)) throw std::invalid_argument("cyclotomic query: p must be prime");
  if (d % p == 0) throw std::domain_error("cyclotomic query: p divides d");
  return {d, p};
}

const IntPoly& cyclotomic_poly(u64 d) {
  if (d == 0) throw std::invalid_argument("cyclotomic_poly: d must be positive");
  return cache().get(d);
}

FactorCountReport count_irreducible_factors(const CyclotomicQuery& q) {
  if (gcd(q.p, q.d) != 1) throw std::domain_error("count_irreducible_factors: gcd(p, d) != 1");
  FactorCountReport r{};
  r.phi = totient(q.d);
  r.degree_each = mult_order(q.p, q.d);
  r.count = r.phi / r.degree_each;
  r.parity = r.count % 2 == 0 ? Parity::Even : Parity::Odd;
  if (q.d % 2 == 1 && is_prime(q.d)) {
    r.legendre_check = legendre(static_cast<i64>(q.p), q.d);
    const bool even = r.parity == Parity::Even;
    if (even != (*r.legendre_check == 1))
      throw std::logic_error("factor-count parity disagrees with the Legendre symbol for d=" + std::to_string(q.d) +
                             ", p=" + std::to_string(q.p));
  }
  return r;
}

Parity parity_via_legendre(u64 p, u64 d) {
  if (d % 2 == 0 || !is_prime(d)) throw std::invalid_argument("parity_via_legendre: d must be an odd prime");
  if (!is_prime(p)) throw std::invalid_argument("parity_via_legendre: p must be prime");
  if (p == d) throw std::invalid_argument("parity_via_legendre: p and d must differ");
  return legendre(static_cast<i64>(p), d) == 1 ? Parity::Even : Parity::Odd;
}

bool has_self_reciprocal_member(const FactorMultiset& m) {
  for (const auto& f : m.factors)
    if (is_self_reciprocal_factor(f.poly)) return true;
  return false;
}

SelfReciprocalEvidence has_self_reciprocal_factor(const CyclotomicQuery& q, const OracleOptions& opts) {
  if (gcd(q.p, q.d) != 1) throw std::domain_error("has_self_reciprocal_factor: gcd(p, d) != 1");
  SelfReciprocalEvidence ev;
  ev.d_prime = is_prime(q.d);
  ev.order = mult_order(q.p, q.d);
  if (ev.order % 2 == 0 && pow_mod(q.p, ev.order / 2, q.d) == q.d - 1) ev.w = ev.order / 2;
  ev.has_factor = ev.w.has_value();
  const u64 phi = totient(q.d);
  ev.u = odd_part(phi);
  ev.p_pow_u = pow_mod(q.p, ev.u, q.d);
  if (ev.d_prime && q.d % 2 == 1 && (ev.p_pow_u != 1) != ev.has_factor)
    throw std::logic_error("self-reciprocal criteria disagree for d=" + std::to_string(q.d));

  const bool want_oracle = opts.level == OracleLevel::Always || (opts.level == OracleLevel::CompositeOnly && !ev.d_prime);
  if (want_oracle && phi <= opts.max_degree) {
    const bool found = has_self_reciprocal_member(factor_cyclotomic_oracle(q, opts.seed));
    ev.oracle = found;
    if (found != ev.has_factor)
      throw std::logic_error("closed-form self-reciprocal decision contradicted by factorization for d=" +
                             std::to_string(q.d) + ", p=" + std::to_string(q.p));
    ev.has_factor = found;
  }
  return ev;
}

FactorMultiset factor_cyclotomic_oracle(const CyclotomicQuery& q, u64 seed, bool negated) {
  ModPoly f = reduce_mod(cyclotomic_poly(q.d), q.p);
  if (negated) f = substitute_neg(f);
  FactorMultiset m = factor(f, seed);
  const u64 ord = mult_order(q.p, q.d);
  const u64 phi = totient(q.d);
  if (m.factors.size() != phi / ord)
    throw std::logic_error("cyclotomic oracle: factor count differs from phi(d)/ord_d(p) for d=" + std::to_string(q.d));
  for (const auto& fac : m.factors) {
    if (fac.multiplicity != 1 || static_cast<u64>(fac.poly.degree()) != ord)
      throw std::logic_error("cyclotomic oracle: unexpected factor shape for d=" + std::to_string(q.d));
  }
  return m;
}

}  // namespace knotfm
