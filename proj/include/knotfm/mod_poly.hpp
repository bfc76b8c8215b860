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

#ifndef KNOTFM_MOD_POLY_HPP
#define KNOTFM_MOD_POLY_HPP

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "knotfm/int_poly.hpp"
#include "knotfm/numth.hpp"

namespace knotfm {

class ModulusMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense polynomial over F_p, p prime and below 2^63. Coefficients are kept
/// reduced into [0, p). As with IntPoly, arithmetic results stay raw and
/// canonicalize() picks the monic associate with nonzero constant term.
class ModPoly {
 public:
  explicit ModPoly(u64 modulus);
  ModPoly(u64 modulus, std::vector<u64> coeffs);
  /// Coefficients given as signed integers, reduced mod p.
  static ModPoly from_signed(u64 modulus, std::initializer_list<i64> coeffs);
  static ModPoly from_signed(u64 modulus, const std::vector<i64>& coeffs);

  u64 modulus() const noexcept { return p_; }
  const std::vector<u64>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  u64 coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
  u64 leading() const;
  bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }

  ModPoly monic() const;
  ModPoly derivative() const;
  u64 eval(u64 x) const;

  ModPoly operator-() const;
  friend ModPoly operator+(const ModPoly& a, const ModPoly& b);
  friend ModPoly operator-(const ModPoly& a, const ModPoly& b);
  friend ModPoly operator*(const ModPoly& a, const ModPoly& b);
  friend bool operator==(const ModPoly& a, const ModPoly& b) {
    return a.p_ == b.p_ && a.coeffs_ == b.coeffs_;
  }
  /// Canonical total order: modulus, degree, then coefficients from the top.
  friend bool operator<(const ModPoly& a, const ModPoly& b);

 private:
  u64 p_;
  std::vector<u64> coeffs_;
};

/// Euclidean division a = q*b + r with deg r < deg b.
std::pair<ModPoly, ModPoly> divrem(const ModPoly& a, const ModPoly& b);

/// Monic gcd.
ModPoly gcd(const ModPoly& a, const ModPoly& b);

/// base^exp mod f.
ModPoly powmod(const ModPoly& base, u64 exp, const ModPoly& f);

/// Monic associate with nonzero constant term (strips c*t^k).
ModPoly canonicalize(const ModPoly& f);
bool is_canonical(const ModPoly& f);

ModPoly reverse(const ModPoly& f);
bool is_self_reciprocal(const ModPoly& f);
ModPoly substitute_neg(const ModPoly& f);

/// Coefficientwise reduction followed by canonicalization. p must be prime.
ModPoly reduce_mod(const IntPoly& f, u64 p);

/// Same as reduce_mod but keeps the raw associate (no t^k strip, no monic).
ModPoly reduce_coeffs(const IntPoly& f, u64 p);

std::string to_string(const ModPoly& f);

}  // namespace knotfm

#endif  // KNOTFM_MOD_POLY_HPP
