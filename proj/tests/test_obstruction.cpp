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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "knotfm/certificate.hpp"
#include "knotfm/numth.hpp"
#include "knotfm/obstruction.hpp"

using namespace knotfm;

namespace {

std::set<std::pair<u64, u64>> as_set(const std::vector<WitnessPair>& v) {
  std::set<std::pair<u64, u64>> s;
  for (const auto& w : v) s.insert({w.p, w.d});
  return s;
}

bool tagged(u64 a) { return a % 8 == 3 || a % 8 == 5 || a % 12 == 5 || a % 4 == 3; }

const std::vector<u64> kInconclusiveBelow18000{1081, 3577, 11257, 12457, 12841, 14617, 17521, 17881};

}  // namespace

TEST_CASE("witness_pairs examples") {
  CHECK(as_set(witness_pairs(PretzelParam::make(3))) == std::set<std::pair<u64, u64>>{{2, 3}, {2, 5}});
  CHECK(as_set(witness_pairs(PretzelParam::make(7))) == std::set<std::pair<u64, u64>>{{2, 7}, {2, 3}, {2, 9}});
  CHECK(as_set(witness_pairs(PretzelParam::make(49))) ==
        std::set<std::pair<u64, u64>>{{5, 7}, {5, 49}, {5, 3}, {5, 17}, {5, 51}});
}

TEST_CASE("witness_pairs order: prime d first, then by p and d") {
  const auto v = witness_pairs(PretzelParam::make(49));
  std::vector<u64> ds;
  for (const auto& w : v) ds.push_back(w.d);
  CHECK(ds == std::vector<u64>{3, 7, 17, 49, 51});
  for (u64 a = 3; a < 3000; a += 2) {
    const auto pairs = witness_pairs(PretzelParam::make(a));
    CHECK(std::is_sorted(pairs.begin(), pairs.end(), [](const WitnessPair& x, const WitnessPair& y) {
      return std::tuple(!x.d_is_prime, x.p, x.d) < std::tuple(!y.d_is_prime, y.p, y.d);
    }));
    for (const auto& w : pairs) {
      CHECK(is_prime(w.p));
      CHECK(((a + 1) / 2) % w.p == 0);
      CHECK((a % w.d == 0 || (a + 2) % w.d == 0));
      CHECK(w.d_is_prime == is_prime(w.d));
    }
  }
}

TEST_CASE("check_pair examples") {
  auto c = check_pair(PretzelParam::make(3), {2, 3, true});
  CHECK(c.outcome == PairOutcome::ParityFailure);
  CHECK(c.count.count == 1);
  CHECK(c.parity_fails);

  // Phi_3 mod 2 fails both conditions; parity is evaluated first
  c = check_pair(PretzelParam::make(7), {2, 3, true});
  CHECK(c.sr_fails);
  CHECK(c.sr.w == 1);
  CHECK(c.outcome == PairOutcome::ParityFailure);

  c = check_pair(PretzelParam::make(7), {2, 7, true});
  CHECK(c.outcome == PairOutcome::ConditionsHold);

  CHECK_THROWS_AS(check_pair(PretzelParam::make(7), {3, 7, true}), std::invalid_argument);
  CHECK_THROWS_AS(check_pair(PretzelParam::make(7), {2, 5, true}), std::invalid_argument);
}

TEST_CASE("check_pair on composite d is confirmed by the oracle") {
  const auto c = check_pair(PretzelParam::make(49), {5, 49, false});
  CHECK(c.oracle_confirmed);
  const auto off = check_pair(PretzelParam::make(49), {5, 49, false}, {OracleLevel::Off, 1024, kDefaultSeed});
  CHECK_FALSE(off.oracle_confirmed);
  CHECK(off.outcome == c.outcome);
}

TEST_CASE("decide examples") {
  auto c = decide(3);
  CHECK(c.verdict == Verdict::ObstructedParity);
  REQUIRE(c.witness.has_value());
  CHECK(c.witness->p == 2);
  CHECK(c.witness->d == 3);
  CHECK(c.theorem_tags == std::vector<std::string>{"legendre-parity", "self-reciprocal"});

  c = decide(5);
  CHECK(c.verdict == Verdict::ObstructedParity);
  REQUIRE(c.witness.has_value());
  CHECK(c.witness->p == 3);
  CHECK(c.witness->d == 5);
  CHECK(c.evidence.legendre == -1);

  c = decide(1081);
  CHECK(c.verdict == Verdict::Inconclusive);
  CHECK_FALSE(c.witness.has_value());
  CHECK(c.note == kInconclusiveNote);
  CHECK(c.evidence.fox_milnor_admits == std::vector<u64>{541});

  CHECK_THROWS_AS(decide(4), std::invalid_argument);
  CHECK_THROWS_AS(decide(1), std::invalid_argument);
}

TEST_CASE("theorem tags") {
  CHECK(theorem_tags(3) == std::vector<std::string>{"legendre-parity", "self-reciprocal"});
  CHECK(theorem_tags(5) == std::vector<std::string>{"legendre-parity"});
  CHECK(theorem_tags(7) == std::vector<std::string>{"self-reciprocal"});
  CHECK(theorem_tags(17) == std::vector<std::string>{"legendre-parity"});  // 17 = 5 mod 12
  CHECK(theorem_tags(1).empty());
  CHECK(theorem_tags(1081).empty());
}

TEST_CASE("verdict names round-trip") {
  for (Verdict v : {Verdict::ObstructedParity, Verdict::ObstructedSelfReciprocal, Verdict::ObstructedModP,
                    Verdict::Inconclusive})
    CHECK(verdict_from_string(to_string(v)) == v);
  CHECK_THROWS_AS(verdict_from_string("Obstructed"), std::invalid_argument);
}

TEST_CASE("parity_witness examples and branches") {
  auto w = parity_witness(3);
  CHECK(w.branch == 1);
  CHECK(w.pair.p == 2);
  CHECK(w.pair.d == 3);
  w = parity_witness(5);
  CHECK(w.pair.p == 3);
  CHECK(w.pair.d == 5);
  CHECK_THROWS_AS(parity_witness(7), std::invalid_argument);
  CHECK_THROWS_AS(parity_witness(1), std::invalid_argument);
}

TEST_CASE("parity_witness yields an odd factor count for every a <= 5000 in its classes") {
  int n = 0;
  for (u64 a = 3; a <= 5000; a += 2) {
    if (!(a % 8 == 3 || a % 8 == 5 || a % 12 == 5)) continue;
    const auto w = parity_witness(a);
    ++n;
    CHECK(legendre(static_cast<i64>(w.pair.p), w.pair.d) == -1);
    CHECK(is_prime(w.pair.d));
    CHECK(((a + 1) / 2) % w.pair.p == 0);
    CHECK((a % w.pair.d == 0 || (a + 2) % w.pair.d == 0));
    CHECK(count_irreducible_factors(CyclotomicQuery::make(w.pair.d, w.pair.p)).count % 2 == 1);
  }
  // 7 of the 12 odd classes mod 24
  CHECK(n == 1458);
}

TEST_CASE("self_reciprocal_witness examples") {
  auto w = self_reciprocal_witness(7);
  CHECK(w.branch == 1);
  CHECK(w.pair.p == 2);
  CHECK(w.pair.d == 3);
  w = self_reciprocal_witness(3);
  CHECK(w.branch == 2);
  CHECK(w.pair.p == 2);
  CHECK(w.pair.d == 3);
  CHECK_THROWS_AS(self_reciprocal_witness(5), std::invalid_argument);
}

TEST_CASE("self_reciprocal_witness yields a self-reciprocal factor for a = 3 mod 4") {
  for (u64 a = 3; a <= 3000; a += 4) {
    const auto w = self_reciprocal_witness(a);
    CHECK(((a + 1) / 2) % w.pair.p == 0);
    CHECK((a % w.pair.d == 0 || (a + 2) % w.pair.d == 0));
    const auto e = has_self_reciprocal_factor(CyclotomicQuery::make(w.pair.d, w.pair.p));
    CHECK(e.has_factor);
  }
}

TEST_CASE("decide obstructs every tagged a and certificates verify") {
  for (u64 a = 3; a <= 1500; a += 2) {
    const Certificate c = decide(a);
    if (tagged(a)) CHECK(is_obstructed(c.verdict));
    const auto v = verify_certificate(c);
    CHECK_MESSAGE(v.ok, "a=" << a);
    const auto back = certificate_from_json(to_json(c));
    CHECK(to_json(back) == to_json(c));
    CHECK(verify_certificate(back).ok);
  }
}

TEST_CASE("collect_all lists every failing pair") {
  DecideOptions o;
  o.collect_all = true;
  const Certificate c = decide(105, o);
  REQUIRE(c.witness.has_value());
  REQUIRE_FALSE(c.all_witnesses.empty());
  CHECK(c.all_witnesses.front() == *c.witness);
  for (const auto& w : c.all_witnesses)
    CHECK(check_pair(PretzelParam::make(105), w).outcome != PairOutcome::ConditionsHold);
}

TEST_CASE("verification rejects tampered certificates") {
  auto j = to_json(decide(3));
  j["evidence"]["factor_count"] = "2";
  CHECK_FALSE(verify_certificate(certificate_from_json(j)).ok);

  j = to_json(decide(3));
  j["witness"]["d"] = "5";
  CHECK_FALSE(verify_certificate(certificate_from_json(j)).ok);

  j = to_json(decide(3));
  j["theorem_tags"] = nlohmann::ordered_json::array();
  CHECK_FALSE(verify_certificate(certificate_from_json(j)).ok);

  j = to_json(decide(1081));
  j["verdict"] = "ObstructedParity";
  CHECK_FALSE(verify_certificate(certificate_from_json(j)).ok);

  u64 sr_a = 3;
  while (decide(sr_a).verdict != Verdict::ObstructedSelfReciprocal) sr_a += 2;
  j = to_json(decide(sr_a));
  REQUIRE(verify_certificate(certificate_from_json(j)).ok);
  j["evidence"]["w"] = std::to_string(std::stoull(j["evidence"]["w"].get<std::string>()) + 1);
  CHECK_FALSE(verify_certificate(certificate_from_json(j)).ok);

  j = to_json(decide(3));
  j["a"] = 3;
  CHECK_THROWS_AS(certificate_from_json(j), std::invalid_argument);
  j = to_json(decide(3));
  j.erase("verdict");
  CHECK_THROWS_AS(certificate_from_json(j), std::invalid_argument);
}

TEST_CASE("csv rows") {
  CHECK(csv_header() == "a,verdict,p,d,reason");
  CHECK(csv_row(decide(3)).rfind("3,ObstructedParity,2,3,", 0) == 0);
  CHECK(csv_row(decide(1081)).rfind("1081,Inconclusive,,,", 0) == 0);
  for (u64 a : {3, 7, 1081}) {
    const std::string r = reason(decide(a));
    CHECK(r.find(',') == std::string::npos);
  }
}

TEST_CASE("scan request validation") {
  CHECK_THROWS_AS(validate({10, 5, std::nullopt}), std::invalid_argument);
  CHECK_THROWS_AS(validate({3, 9, ResidueFilter{0, {}}}), std::invalid_argument);
  CHECK_THROWS_AS(validate({3, 9, ResidueFilter{4, {5}}}), std::invalid_argument);
  CHECK_THROWS_AS(validate({3, 9, ResidueFilter{4, {2}}}), std::invalid_argument);
  CHECK_NOTHROW(validate({3, 9, ResidueFilter{3, {0}}}));
  CHECK(scan_values({3, 20, ResidueFilter{4, {3}}}) == std::vector<u64>{3, 7, 11, 15, 19});
  CHECK(scan_values({3, 9, std::nullopt}) == std::vector<u64>{3, 5, 7, 9});
  CHECK_THROWS_AS(validate({2, 9, std::nullopt}), std::invalid_argument);
  CHECK(scan_values({3, 17999, ResidueFilter{120, {1, 97}}}).size() == 299);
}

TEST_CASE("scan is deterministic across worker counts and emits in order") {
  const ScanRequest r{3, 4001, ResidueFilter{120, {1, 97}}};
  std::vector<std::string> one, three;
  const auto rep1 = scan(r, {}, 1, [&](const Certificate& c) { one.push_back(to_json(c).dump()); });
  u64 last = 0;
  const auto rep3 = scan(r, {}, 3, [&](const Certificate& c) {
    CHECK(c.a > last);
    last = c.a;
    three.push_back(to_json(c).dump());
  });
  CHECK(one == three);
  CHECK(to_json(rep1) == to_json(rep3));
  CHECK(rep1.inconclusive == std::vector<u64>{1081, 3577});
  CHECK(rep1.total == one.size());
  CHECK(rep1.parity + rep1.self_reciprocal + rep1.mod_p + rep1.inconclusive_count == rep1.total);
}

TEST_CASE("scan propagates sink errors") {
  const ScanRequest r{3, 200, std::nullopt};
  CHECK_THROWS_AS(scan(r, {}, 2, [](const Certificate& c) {
                    if (c.a == 101) throw std::runtime_error("sink failure");
                  }),
                  std::runtime_error);
}

TEST_CASE("scan reproduces the inconclusive set up to 17999") {
  const auto rep = scan({3, 17999, ResidueFilter{120, {1, 97}}}, {}, 1);
  CHECK(rep.inconclusive == kInconclusiveBelow18000);
  CHECK(rep.modp_fired.empty());
}
