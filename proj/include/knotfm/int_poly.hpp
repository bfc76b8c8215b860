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

#ifndef KNOTFM_INT_POLY_HPP
#define KNOTFM_INT_POLY_HPP

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace knotfm {

/// Raised when a division that must be exact leaves a remainder. Inside this
/// library that always means a formula was implemented wrong.
class InexactDivisionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Dense polynomial over Z. Index i holds the coefficient of t^i.
///
/// Arithmetic keeps the raw form (only trailing zeros are trimmed). The
/// canonical associate under multiplication by +-t^k is a separate call,
/// see canonicalize().
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly monomial(const mpz_class& c, std::size_t exponent);

  const std::vector<mpz_class>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  mpz_class coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : mpz_class(0); }
  const mpz_class& leading() const;

  mpz_class eval(const mpz_class& x) const;

  IntPoly operator-() const;
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

/// Unique associate of raw_coeffs * t^lowest_exponent under +-t^k: nonzero
/// constant term and positive leading coefficient. Zero maps to zero.
IntPoly canonicalize(std::span<const mpz_class> raw_coeffs, long lowest_exponent = 0);
IntPoly canonicalize(const IntPoly& f);
bool is_canonical(const IntPoly& f);

/// Quotient of an exact division over Z; throws InexactDivisionError otherwise.
IntPoly exact_div(const IntPoly& num, const IntPoly& den);

/// t^k * f.
IntPoly shift(const IntPoly& f, std::size_t k);

/// canonicalize(t^deg f * f(1/t)). Throws std::domain_error on zero.
IntPoly reverse(const IntPoly& f);

/// True when f and its reverse are the same associate. Throws on zero.
bool is_self_reciprocal(const IntPoly& f);

/// canonicalize(f(-t)).
IntPoly substitute_neg(const IntPoly& f);

/// Ascending sparse text, e.g. "1 - 2*t + t^6".
std::string to_string(const IntPoly& f);

}  // namespace knotfm

#endif  // KNOTFM_INT_POLY_HPP
