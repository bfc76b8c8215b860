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

#include "knotfm/obstruction.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <deque>
#include <exception>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace knotfm {

namespace {

std::string num(u64 x) { return std::to_string(x); }

bool wants_oracle(const OracleOptions& o, bool d_prime) {
  return o.level == OracleLevel::Always || (o.level == OracleLevel::CompositeOnly && !d_prime);
}

void fill_from_pair(Certificate& c, const PairCheck& pc) {
  Evidence& e = c.evidence;
  e.factor_count = pc.count.count;
  e.factor_degree = pc.count.degree_each;
  e.phi = pc.count.phi;
  e.legendre = pc.count.legendre_check;
  e.u = pc.sr.u;
  e.p_pow_u = pc.sr.p_pow_u;
  e.w = pc.sr.w;
  if (pc.oracle_confirmed) e.oracle_confirmed = true;
}

// Index d whose piece Phi_d(-t) mod p is divisible by g.
u64 piece_of(const PretzelParam& P, const ModPoly& g) {
  for (u64 d : P.cyclotomic_indices()) {
    ModPoly f = substitute_neg(reduce_mod(cyclotomic_poly(d), g.modulus()));
    if (divrem(f, g).second.is_zero()) return d;
  }
  throw std::logic_error("offending factor divides no cyclotomic piece");
}

}  // namespace

std::vector<WitnessPair> witness_pairs(const PretzelParam& P) {
  std::vector<u64> ds = P.cyclotomic_indices();
  std::sort(ds.begin(), ds.end());
  std::vector<WitnessPair> out;
  for (bool want_prime : {true, false})
    for (u64 p : factorize(P.half_plus_one()).primes())
      for (u64 d : ds) {
        const bool prime = is_prime(d);
        if (prime != want_prime) continue;
        if (gcd(p, d) != 1) throw std::logic_error("witness pair with gcd(p, d) != 1");
        out.push_back({p, d, prime});
      }
  return out;
}

PairCheck check_pair(const PretzelParam& P, const WitnessPair& w, const OracleOptions& opts) {
  if (!is_prime(w.p) || P.half_plus_one() % w.p != 0)
    throw std::invalid_argument("witness p = " + num(w.p) + " is not a prime factor of (a+1)/2");
  if (w.d < 2 || (P.a % w.d != 0 && (P.a + 2) % w.d != 0))
    throw std::invalid_argument("witness d = " + num(w.d) + " divides neither a nor a+2");
  if (w.d_is_prime != is_prime(w.d)) throw std::invalid_argument("witness primality flag is wrong");

  const CyclotomicQuery q = CyclotomicQuery::make(w.d, w.p);
  OracleOptions closed = opts;
  closed.level = OracleLevel::Off;

  PairCheck pc;
  pc.pair = w;
  pc.count = count_irreducible_factors(q);
  pc.sr = has_self_reciprocal_factor(q, closed);
  if (wants_oracle(opts, w.d_is_prime) && pc.count.phi <= opts.max_degree) {
    // The oracle checks the factor count and degrees itself.
    const bool found = has_self_reciprocal_member(factor_cyclotomic_oracle(q, opts.seed));
    if (found != pc.sr.has_factor)
      throw std::logic_error("self-reciprocal closed form contradicted by factoring, d = " + num(w.d) +
                             ", p = " + num(w.p));
    pc.sr.oracle = found;
    pc.oracle_confirmed = true;
  }
  pc.parity_fails = pc.count.parity == Parity::Odd;
  pc.sr_fails = pc.sr.has_factor;
  pc.outcome = pc.parity_fails ? PairOutcome::ParityFailure
               : pc.sr_fails   ? PairOutcome::SelfReciprocalFailure
                               : PairOutcome::ConditionsHold;
  return pc;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::ObstructedParity: return "ObstructedParity";
    case Verdict::ObstructedSelfReciprocal: return "ObstructedSelfReciprocal";
    case Verdict::ObstructedModP: return "ObstructedModP";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  throw std::logic_error("unknown verdict");
}

Verdict verdict_from_string(const std::string& s) {
  for (Verdict v : {Verdict::ObstructedParity, Verdict::ObstructedSelfReciprocal, Verdict::ObstructedModP,
                    Verdict::Inconclusive})
    if (to_string(v) == s) return v;
  throw std::invalid_argument("unknown verdict '" + s + "'");
}

std::vector<std::string> theorem_tags(u64 a) {
  std::vector<std::string> tags;
  if (a % 8 == 3 || a % 8 == 5 || a % 12 == 5) tags.emplace_back("legendre-parity");
  if (a % 4 == 3) tags.emplace_back("self-reciprocal");
  return tags;
}

Certificate decide(u64 a, const DecideOptions& opts) {
  const PretzelParam P = PretzelParam::make(a, opts.max_a);
  Certificate c;
  c.a = a;
  c.seed = opts.oracle.seed;
  c.theorem_tags = theorem_tags(a);

  std::optional<PairCheck> first;
  for (const WitnessPair& w : witness_pairs(P)) {
    PairCheck pc = check_pair(P, w, opts.oracle);
    c.checked.push_back(pc);
    if (pc.outcome == PairOutcome::ConditionsHold) continue;
    if (!first) first = pc;
    if (!opts.collect_all) break;
    c.all_witnesses.push_back(w);
  }

  if (first) {
    c.verdict = first->outcome == PairOutcome::ParityFailure ? Verdict::ObstructedParity
                                                             : Verdict::ObstructedSelfReciprocal;
    c.witness = first->pair;
    fill_from_pair(c, *first);
    return c;
  }

  for (u64 p : factorize(P.half_plus_one()).primes()) {
    FoxMilnorStatus st = fox_milnor_status(P, p, opts.oracle);
    c.fox_milnor.push_back(st);
    if (st.verdict == FoxMilnorVerdict::Admits) {
      c.evidence.fox_milnor_admits.push_back(p);
      continue;
    }
    if (st.offending.empty())
      throw std::logic_error("mod-p obstruction for a = " + num(a) + " has no explicit factor");
    const Factor& f = st.offending.front();
    const u64 d = piece_of(P, f.poly);
    c.verdict = Verdict::ObstructedModP;
    c.witness = WitnessPair{p, d, is_prime(d)};
    c.evidence = Evidence{};
    c.evidence.factor = f.poly;
    c.evidence.multiplicity = f.multiplicity;
    return c;
  }

  c.verdict = Verdict::Inconclusive;
  c.evidence.pairs_checked = c.checked.size();
  c.note = kInconclusiveNote;
  if (!c.theorem_tags.empty())
    throw std::logic_error("a = " + num(a) + " is covered by a proven case split but no obstruction was found");
  return c;
}

TheoremWitness parity_witness(u64 a) {
  const PretzelParam P = PretzelParam::make(a, ~u64{0});
  const auto primes_a = factorize(a).primes();
  auto pick_d = [&](u64 p, auto accept) -> u64 {
    for (u64 d : primes_a)
      if (accept(d)) {
        if (legendre(static_cast<i64>(p), d) != -1)
          throw std::logic_error("parity witness with (p/d) != -1 for a = " + num(a));
        return d;
      }
    throw std::logic_error("no parity witness found for a = " + num(a));
  };
  if (a % 8 == 3) return {{2, pick_d(2, [](u64 d) { return d % 8 == 3 || d % 8 == 5; }), true}, 1};
  if (a % 12 == 5) return {{3, pick_d(3, [](u64 d) { return d % 12 == 5 || d % 12 == 7; }), true}, 2};
  if (a % 8 == 5) {
    for (u64 p : factorize(P.half_plus_one()).primes()) {
      if (p % 4 != 3) continue;
      return {{p, pick_d(p, [p](u64 d) { return legendre(static_cast<i64>(p), d) == -1; }), true}, 3};
    }
    throw std::logic_error("(a+1)/2 has no prime factor = 3 (mod 4) for a = " + num(a));
  }
  throw std::invalid_argument("a = " + num(a) + " is not 3, 5 (mod 8) or 5 (mod 12)");
}

TheoremWitness self_reciprocal_witness(u64 a) {
  if (a % 4 != 3) throw std::invalid_argument("a = " + num(a) + " is not 3 (mod 4)");
  const PretzelParam P = PretzelParam::make(a, ~u64{0});
  const u64 m = a * (a + 2);
  const u64 u = odd_part(totient(a) * totient(a + 2));
  const u64 h = P.half_plus_one();
  if (pow_mod(h, u, m) == 1) {
    const u64 d = factorize(a + 2).primes().front();
    if (pow_mod(2, u, d) != d - 1) throw std::logic_error("2^u != -1 (mod d) in the first branch, a = " + num(a));
    return {{2, d, true}, 1};
  }
  for (u64 p : factorize(h).primes()) {
    if (pow_mod(p, u, m) == 1) continue;
    for (auto [d, l] : factorize(m).terms) {
      u64 dl = 1;
      for (unsigned i = 0; i < l; ++i) dl *= d;
      if (pow_mod(p, u, dl) == 1) continue;
      if (pow_mod(p, odd_part(d - 1), d) == 1)
        throw std::logic_error("lifting step failed for a = " + num(a) + ", d = " + num(d));
      return {{p, d, true}, 2};
    }
    throw std::logic_error("no prime power separates p^u from 1 for a = " + num(a));
  }
  throw std::logic_error("every prime of (a+1)/2 has p^u = 1 but h^u != 1, a = " + num(a));
}

void validate(const ScanRequest& r) {
  if (r.min_a < 3) throw std::invalid_argument("scan: min must be at least 3");
  if (r.min_a > r.max_a) throw std::invalid_argument("scan: min exceeds max");
  if (!r.filter) return;
  const ResidueFilter& f = *r.filter;
  if (f.modulus == 0) throw std::invalid_argument("scan: modulus must be positive");
  if (f.residues.empty()) throw std::invalid_argument("scan: empty residue list");
  for (u64 x : f.residues) {
    if (x >= f.modulus) throw std::invalid_argument("scan: residue " + num(x) + " is not below the modulus");
    if (f.modulus % 2 == 0 && x % 2 == 0)
      throw std::invalid_argument("scan: residue " + num(x) + " is even, so no odd a matches it");
  }
}

std::vector<u64> scan_values(const ScanRequest& r) {
  validate(r);
  std::vector<u64> out;
  for (u64 a = r.min_a | 1; a <= r.max_a; a += 2) {
    if (r.filter) {
      const u64 res = a % r.filter->modulus;
      if (std::find(r.filter->residues.begin(), r.filter->residues.end(), res) == r.filter->residues.end()) continue;
    }
    out.push_back(a);
  }
  return out;
}

namespace {

// Bounded multi-producer queue feeding the single writer.
template <class T>
class BoundedQueue {
 public:
  explicit BoundedQueue(std::size_t cap) : cap_(cap) {}
  void push(T x) {
    std::unique_lock lock(mu_);
    not_full_.wait(lock, [&] { return q_.size() < cap_; });
    q_.push_back(std::move(x));
    not_empty_.notify_one();
  }
  T pop() {
    std::unique_lock lock(mu_);
    not_empty_.wait(lock, [&] { return !q_.empty(); });
    T x = std::move(q_.front());
    q_.pop_front();
    not_full_.notify_one();
    return x;
  }

 private:
  std::size_t cap_;
  std::deque<T> q_;
  std::mutex mu_;
  std::condition_variable not_full_, not_empty_;
};

struct Slot {
  std::size_t index;
  std::optional<Certificate> cert;
  std::exception_ptr error;
};

void tally(ScanReport& rep, const Certificate& c) {
  ++rep.total;
  switch (c.verdict) {
    case Verdict::ObstructedParity: ++rep.parity; break;
    case Verdict::ObstructedSelfReciprocal: ++rep.self_reciprocal; break;
    case Verdict::ObstructedModP:
      ++rep.mod_p;
      rep.modp_fired.push_back(c.a);
      break;
    case Verdict::Inconclusive:
      ++rep.inconclusive_count;
      rep.inconclusive.push_back(c.a);
      break;
  }
  if (c.witness && !c.witness->d_is_prime && c.verdict != Verdict::ObstructedModP) rep.prime_only_differs.push_back(c.a);
}

}  // namespace

ScanReport scan(const ScanRequest& r, const DecideOptions& opts, unsigned jobs,
                const std::function<void(const Certificate&)>& sink) {
  if (jobs == 0) throw std::invalid_argument("scan: jobs must be at least 1");
  const std::vector<u64> values = scan_values(r);
  ScanReport rep;
  rep.request = r;
  if (values.empty()) return rep;

  BoundedQueue<Slot> queue(4 * static_cast<std::size_t>(jobs) + 4);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr failure;

  // Output is written in ascending a: out-of-order results wait in `pending`.
  std::thread writer([&] {
    std::map<std::size_t, Slot> pending;
    std::size_t emitted = 0;
    while (emitted < values.size()) {
      Slot s = queue.pop();
      pending.emplace(s.index, std::move(s));
      for (auto it = pending.find(emitted); it != pending.end(); it = pending.find(emitted)) {
        Slot& cur = it->second;
        if (cur.error) {
          if (!failure) failure = cur.error;
          stop = true;
        } else if (!failure) {
          try {
            tally(rep, *cur.cert);
            if (sink) sink(*cur.cert);
          } catch (...) {
            failure = std::current_exception();
            stop = true;
          }
        }
        pending.erase(it);
        ++emitted;
      }
    }
  });

  std::vector<std::jthread> workers;
  for (unsigned j = 0; j < jobs; ++j) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < values.size(); i = next++) {
        Slot s{i, std::nullopt, nullptr};
        if (!stop) {
          try {
            s.cert = decide(values[i], opts);
          } catch (...) {
            s.error = std::current_exception();
          }
        } else {
          s.error = std::make_exception_ptr(std::runtime_error("scan aborted"));
        }
        queue.push(std::move(s));
      }
    });
  }
  workers.clear();
  writer.join();
  if (failure) std::rethrow_exception(failure);
  return rep;
}

}  // namespace knotfm
