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

#include "knotfm/certificate.hpp"

#include <charconv>
#include <stdexcept>

#include "knotfm/factor.hpp"

namespace knotfm {

using json = nlohmann::ordered_json;

namespace {

std::string num(u64 x) { return std::to_string(x); }

u64 parse_u64(const json& v, const std::string& what) {
  if (!v.is_string()) throw std::invalid_argument(what + ": expected a decimal string");
  const std::string& s = v.get_ref<const std::string&>();
  u64 x = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw std::invalid_argument(what + ": '" + s + "' is not a decimal integer");
  return x;
}

int parse_int(const json& v, const std::string& what) {
  if (!v.is_string()) throw std::invalid_argument(what + ": expected a decimal string");
  const std::string& s = v.get_ref<const std::string&>();
  int x = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw std::invalid_argument(what + ": '" + s + "' is not a decimal integer");
  return x;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
  return j.at(key);
}

json pair_json(const WitnessPair& w) { return {{"p", num(w.p)}, {"d", num(w.d)}, {"d_is_prime", w.d_is_prime}}; }

WitnessPair pair_from(const json& j) {
  const json& flag = field(j, "d_is_prime");
  if (!flag.is_boolean()) throw std::invalid_argument("d_is_prime: expected a boolean");
  return {parse_u64(field(j, "p"), "p"), parse_u64(field(j, "d"), "d"), flag.get<bool>()};
}

json poly_json(const ModPoly& f) {
  json c = json::array();
  for (u64 x : f.coeffs()) c.push_back(num(x));
  return {{"modulus", num(f.modulus())}, {"coeffs", c}};
}

ModPoly poly_from(const json& j) {
  const u64 p = parse_u64(field(j, "modulus"), "factor.modulus");
  if (!is_prime(p)) throw std::invalid_argument("factor.modulus is not prime");
  const json& c = field(j, "coeffs");
  if (!c.is_array()) throw std::invalid_argument("factor.coeffs: expected an array");
  std::vector<u64> v;
  for (const json& x : c) {
    const u64 y = parse_u64(x, "factor.coeffs");
    if (y >= p) throw std::invalid_argument("factor.coeffs: coefficient not reduced");
    v.push_back(y);
  }
  return ModPoly(p, std::move(v));
}

template <class T, class F>
void put(json& j, const char* key, const std::optional<T>& v, F conv) {
  if (v) j[key] = conv(*v);
}

}  // namespace

json to_json(const Certificate& c) {
  json j;
  j["a"] = num(c.a);
  j["verdict"] = to_string(c.verdict);
  j["witness"] = c.witness ? pair_json(*c.witness) : json(nullptr);

  const Evidence& e = c.evidence;
  json ev = json::object();
  put(ev, "factor_count", e.factor_count, num);
  put(ev, "factor_degree", e.factor_degree, num);
  put(ev, "phi", e.phi, num);
  put(ev, "legendre", e.legendre, [](int x) { return std::to_string(x); });
  put(ev, "w", e.w, num);
  put(ev, "u", e.u, num);
  put(ev, "p_pow_u", e.p_pow_u, num);
  put(ev, "oracle_confirmed", e.oracle_confirmed, [](bool x) { return x; });
  put(ev, "factor", e.factor, poly_json);
  put(ev, "multiplicity", e.multiplicity, [](unsigned x) { return num(x); });
  if (c.verdict == Verdict::Inconclusive) {
    put(ev, "pairs_checked", e.pairs_checked, num);
    json pairs = json::array();
    for (const PairCheck& pc : c.checked) {
      json x = pair_json(pc.pair);
      x["factor_count"] = num(pc.count.count);
      x["self_reciprocal"] = pc.sr.has_factor;
      pairs.push_back(std::move(x));
    }
    ev["pairs"] = std::move(pairs);
    json fm = json::array();
    for (u64 p : e.fox_milnor_admits) fm.push_back(num(p));
    ev["fox_milnor_admits"] = std::move(fm);
  }
  j["evidence"] = std::move(ev);

  j["theorem_tags"] = c.theorem_tags;
  if (!c.all_witnesses.empty()) {
    json all = json::array();
    for (const auto& w : c.all_witnesses) all.push_back(pair_json(w));
    j["all_witnesses"] = std::move(all);
  }
  j["seed"] = num(c.seed);
  j["version"] = c.version;
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

Certificate certificate_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("certificate: expected a JSON object");
  Certificate c;
  c.a = parse_u64(field(j, "a"), "a");
  const json& v = field(j, "verdict");
  if (!v.is_string()) throw std::invalid_argument("verdict: expected a string");
  c.verdict = verdict_from_string(v.get<std::string>());
  const json& w = field(j, "witness");
  if (!w.is_null()) c.witness = pair_from(w);

  const json& ev = field(j, "evidence");
  if (!ev.is_object()) throw std::invalid_argument("evidence: expected an object");
  Evidence& e = c.evidence;
  auto opt_u64 = [&](const char* key, std::optional<u64>& out) {
    if (ev.contains(key)) out = parse_u64(ev.at(key), key);
  };
  opt_u64("factor_count", e.factor_count);
  opt_u64("factor_degree", e.factor_degree);
  opt_u64("phi", e.phi);
  opt_u64("w", e.w);
  opt_u64("u", e.u);
  opt_u64("p_pow_u", e.p_pow_u);
  opt_u64("pairs_checked", e.pairs_checked);
  if (ev.contains("legendre")) e.legendre = parse_int(ev.at("legendre"), "legendre");
  if (ev.contains("oracle_confirmed")) {
    if (!ev.at("oracle_confirmed").is_boolean()) throw std::invalid_argument("oracle_confirmed: expected a boolean");
    e.oracle_confirmed = ev.at("oracle_confirmed").get<bool>();
  }
  if (ev.contains("factor")) e.factor = poly_from(ev.at("factor"));
  if (ev.contains("multiplicity"))
    e.multiplicity = static_cast<unsigned>(parse_u64(ev.at("multiplicity"), "multiplicity"));
  if (ev.contains("pairs")) {
    if (!ev.at("pairs").is_array()) throw std::invalid_argument("pairs: expected an array");
    for (const json& x : ev.at("pairs")) {
      PairCheck pc;
      pc.pair = pair_from(x);
      pc.count.count = parse_u64(field(x, "factor_count"), "pairs.factor_count");
      const json& sr = field(x, "self_reciprocal");
      if (!sr.is_boolean()) throw std::invalid_argument("pairs.self_reciprocal: expected a boolean");
      pc.sr.has_factor = sr.get<bool>();
      c.checked.push_back(pc);
    }
  }
  if (ev.contains("fox_milnor_admits")) {
    if (!ev.at("fox_milnor_admits").is_array()) throw std::invalid_argument("fox_milnor_admits: expected an array");
    for (const json& x : ev.at("fox_milnor_admits")) e.fox_milnor_admits.push_back(parse_u64(x, "fox_milnor_admits"));
  }

  const json& tags = field(j, "theorem_tags");
  if (!tags.is_array()) throw std::invalid_argument("theorem_tags: expected an array");
  for (const json& t : tags) {
    if (!t.is_string()) throw std::invalid_argument("theorem_tags: expected strings");
    c.theorem_tags.push_back(t.get<std::string>());
  }
  if (j.contains("all_witnesses"))
    for (const json& x : j.at("all_witnesses")) c.all_witnesses.push_back(pair_from(x));
  c.seed = parse_u64(field(j, "seed"), "seed");
  const json& ver = field(j, "version");
  if (!ver.is_string()) throw std::invalid_argument("version: expected a string");
  c.version = ver.get<std::string>();
  if (j.contains("note") && j.at("note").is_string()) c.note = j.at("note").get<std::string>();
  return c;
}

VerifyResult verify_certificate(const Certificate& c) {
  VerifyResult r;
  auto fail = [&](std::string msg) {
    r.ok = false;
    r.problems.push_back(std::move(msg));
  };
  auto expect = [&](const char* what, auto have, auto want) {
    if (have != want) fail(std::string(what) + ": certificate has " + std::to_string(have) + ", recomputed " +
                           std::to_string(want));
  };

  std::optional<PretzelParam> P;
  try {
    P = PretzelParam::make(c.a, ~u64{0});
  } catch (const std::exception& ex) {
    fail(ex.what());
    return r;
  }
  if (c.theorem_tags != theorem_tags(c.a)) fail("theorem_tags do not match the residue classes of a");

  const Evidence& e = c.evidence;
  if (is_obstructed(c.verdict)) {
    if (!c.witness) {
      fail("obstructed certificate without a witness");
      return r;
    }
    const WitnessPair& w = *c.witness;
    if (!is_prime(w.p) || P->half_plus_one() % w.p != 0) fail("witness p is not a prime factor of (a+1)/2");
    if (w.d < 2 || (c.a % w.d != 0 && (c.a + 2) % w.d != 0)) fail("witness d divides neither a nor a+2");
    if (w.d_is_prime != is_prime(w.d)) fail("witness primality flag is wrong");
    if (!r.ok) return r;
  }

  switch (c.verdict) {
    case Verdict::ObstructedParity: {
      const WitnessPair& w = *c.witness;
      if (!e.factor_count || !e.factor_degree || !e.phi) {
        fail("parity evidence needs factor_count, factor_degree and phi");
        break;
      }
      const u64 phi = totient(w.d);
      const u64 ord = mult_order(w.p, w.d);
      expect("phi", *e.phi, phi);
      expect("factor_degree", *e.factor_degree, ord);
      expect("factor_count", *e.factor_count, phi / ord);
      if (*e.factor_count % 2 == 0) fail("factor_count is even, which is no parity obstruction");
      if (w.d_is_prime && w.d % 2 == 1) {
        const int l = legendre(static_cast<i64>(w.p), w.d);
        if (e.legendre) expect("legendre", *e.legendre, l);
        if (l != -1) fail("(p/d) is not -1");
      }
      break;
    }
    case Verdict::ObstructedSelfReciprocal: {
      const WitnessPair& w = *c.witness;
      if (!e.w) {
        fail("self-reciprocal evidence needs w");
        break;
      }
      const u64 pw = pow_mod(w.p, *e.w, w.d);
      if (pw != w.d - 1) fail("p^w mod d is " + num(pw) + ", not d - 1");
      const u64 u = odd_part(totient(w.d));
      if (e.u) expect("u", *e.u, u);
      if (e.p_pow_u) expect("p_pow_u", *e.p_pow_u, pow_mod(w.p, u, w.d));
      if (e.factor_count && e.factor_degree && e.phi) {
        expect("phi", *e.phi, totient(w.d));
        expect("factor_degree", *e.factor_degree, mult_order(w.p, w.d));
        expect("factor_count", *e.factor_count, totient(w.d) / mult_order(w.p, w.d));
      }
      break;
    }
    case Verdict::ObstructedModP: {
      const WitnessPair& w = *c.witness;
      if (!e.factor || !e.multiplicity) {
        fail("mod-p evidence needs factor and multiplicity");
        break;
      }
      const ModPoly& g = *e.factor;
      if (g.modulus() != w.p) fail("factor modulus differs from witness p");
      if (g.degree() < 1 || !g.is_monic()) fail("factor is not monic of positive degree");
      if (!r.ok) break;
      if (!is_irreducible(g)) fail("factor is reducible");
      if (!is_self_reciprocal_factor(g)) fail("factor is not self-reciprocal");
      if (*e.multiplicity % 2 == 0) fail("multiplicity is even");
      ModPoly f = alexander_mod_p(*P, w.p, false);
      unsigned m = 0;
      for (;;) {
        auto [q, rem] = divrem(f, g);
        if (!rem.is_zero()) break;
        f = std::move(q);
        ++m;
      }
      expect("multiplicity", *e.multiplicity, m);
      break;
    }
    case Verdict::Inconclusive: {
      if (c.witness) fail("inconclusive certificate carries a witness");
      const auto pairs = witness_pairs(*P);
      if (pairs.size() != c.checked.size()) {
        fail("pair list is not the full enumeration: " + num(c.checked.size()) + " of " + num(pairs.size()));
        break;
      }
      if (e.pairs_checked) expect("pairs_checked", *e.pairs_checked, static_cast<u64>(pairs.size()));
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        const PairCheck& pc = c.checked[i];
        if (!(pc.pair == pairs[i])) {
          fail("pair " + num(i) + " differs from the enumeration");
          continue;
        }
        const CyclotomicQuery q = CyclotomicQuery::make(pc.pair.d, pc.pair.p);
        const u64 n = totient(q.d) / mult_order(q.p, q.d);
        expect("factor_count", pc.count.count, n);
        if (n % 2 == 1) fail("pair (" + num(q.p) + ", " + num(q.d) + ") has an odd factor count");
        OracleOptions off;
        off.level = OracleLevel::Off;
        if (pc.sr.has_factor || has_self_reciprocal_factor(q, off).has_factor)
          fail("pair (" + num(q.p) + ", " + num(q.d) + ") has a self-reciprocal factor");
      }
      if (e.fox_milnor_admits != factorize(P->half_plus_one()).primes())
        fail("Fox-Milnor record does not cover every prime of (a+1)/2");
      if (c.note.empty()) fail("inconclusive certificate lacks its disclaimer");
      break;
    }
  }
  return r;
}

std::string reason(const Certificate& c) {
  const Evidence& e = c.evidence;
  switch (c.verdict) {
    case Verdict::ObstructedParity: {
      std::string s = "N=" + num(e.factor_count.value_or(0)) + " odd";
      if (e.legendre) s += "; (p/d)=" + std::to_string(*e.legendre);
      return s;
    }
    case Verdict::ObstructedSelfReciprocal:
      return "p^w=-1 mod d; w=" + num(e.w.value_or(0));
    case Verdict::ObstructedModP:
      return "self-reciprocal factor of degree " + num(e.factor ? static_cast<u64>(e.factor->degree()) : 0) +
             " with multiplicity " + num(e.multiplicity.value_or(0));
    case Verdict::Inconclusive:
      return "all " + num(e.pairs_checked.value_or(0)) + " pairs hold; Fox-Milnor admits mod every p";
  }
  return {};
}

std::string csv_header() { return "a,verdict,p,d,reason"; }

std::string csv_row(const Certificate& c) {
  std::string s = num(c.a) + "," + to_string(c.verdict) + ",";
  if (c.witness) s += num(c.witness->p) + "," + num(c.witness->d);
  else s += ",";
  return s + "," + reason(c);
}

json to_json(const ScanReport& r) {
  auto list = [](const std::vector<u64>& v) {
    json a = json::array();
    for (u64 x : v) a.push_back(num(x));
    return a;
  };
  json j;
  j["min"] = num(r.request.min_a);
  j["max"] = num(r.request.max_a);
  if (r.request.filter) {
    j["modulus"] = num(r.request.filter->modulus);
    j["residues"] = list(r.request.filter->residues);
  }
  j["total"] = num(r.total);
  j["obstructed_parity"] = num(r.parity);
  j["obstructed_self_reciprocal"] = num(r.self_reciprocal);
  j["obstructed_mod_p"] = num(r.mod_p);
  j["inconclusive_count"] = num(r.inconclusive_count);
  j["inconclusive"] = list(r.inconclusive);
  j["prime_only_differs"] = list(r.prime_only_differs);
  j["modp_fired"] = list(r.modp_fired);
  return j;
}

}  // namespace knotfm
