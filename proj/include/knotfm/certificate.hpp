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

#ifndef KNOTFM_CERTIFICATE_HPP
#define KNOTFM_CERTIFICATE_HPP

#include <json.hpp>

#include <string>
#include <vector>

#include "knotfm/obstruction.hpp"

namespace knotfm {

/// Stable schema. Every number is a decimal string.
nlohmann::ordered_json to_json(const Certificate& c);

/// Inverse of to_json for the fields verification needs. Throws
/// std::invalid_argument on a missing field or a malformed number.
Certificate certificate_from_json(const nlohmann::ordered_json& j);

struct VerifyResult {
  bool ok = true;
  std::vector<std::string> problems;
};

/// Re-checks a certificate from its own fields without repeating the search:
/// parity evidence recomputes phi, the order and the count; self-reciprocal
/// evidence recomputes p^w mod d; a mod-p factor is re-tested for
/// irreducibility, self-reciprocity and its multiplicity; an Inconclusive
/// record re-evaluates every listed pair.
VerifyResult verify_certificate(const Certificate& c);

/// One CSV line: a,verdict,p,d,reason (no trailing newline).
std::string csv_header();
std::string csv_row(const Certificate& c);
/// Short human reason, free of commas.
std::string reason(const Certificate& c);

nlohmann::ordered_json to_json(const ScanReport& r);

}  // namespace knotfm

#endif  // KNOTFM_CERTIFICATE_HPP
