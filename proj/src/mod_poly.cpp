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

#include "knotfm/mod_poly.hpp"

#include <algorithm>
#include <sstream>

#include "fp_kernels.hpp"

namespace knotfm {

namespace {

void require_same(const ModPoly& a, const ModPoly& b) {
  if (a.modulus() != b.modulus()) throw ModulusMismatchError("ModPoly operands have different moduli");
}

u64 reduce_i64(i64 v, u64 p) {
  if (v >= 0) return static_cast<u64>(v) % p;
  const u64 r = static_cast<u64>(-(v + 1)) % p;
  return p - 1 - r;
}

}  // namespace

ModPoly::ModPoly(u64 modulus) : p_(modulus) {
  if (p_ < 2 || p_ >= (u64{1} << 63)) throw std::invalid_argument("ModPoly: modulus out of range");
}

ModPoly::ModPoly(u64 modulus, std::vector<u64> coeffs) : ModPoly(modulus) {
  coeffs_ = std::move(coeffs);
  for (auto& c : coeffs_) c %= p_;
  detail::trim(coeffs_);
}

ModPoly ModPoly::from_signed(u64 modulus, std::initializer_list<i64> coeffs) {
  return from_signed(modulus, std::vector<i64>(coeffs));
}

ModPoly ModPoly::from_signed(u64 modulus, const std::vector<i64>& coeffs) {
  ModPoly r(modulus);
  r.coeffs_.reserve(coeffs.size());
  for (i64 c : coeffs) r.coeffs_.push_back(reduce_i64(c, modulus));
  detail::trim(r.coeffs_);
  return r;
}

u64 ModPoly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return coeffs_.back();
}

ModPoly ModPoly::monic() const {
  if (is_zero()) throw std::domain_error("monic: zero polynomial");
  return ModPoly(p_, detail::make_monic(detail::PrimeField(p_), coeffs_));
}

ModPoly ModPoly::derivative() const { return ModPoly(p_, detail::derivative(detail::PrimeField(p_), coeffs_)); }

u64 ModPoly::eval(u64 x) const {
  u64 acc = 0;
  x %= p_;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = (mul_mod(acc, x, p_) + *it) % p_;
  return acc;
}

ModPoly ModPoly::operator-() const {
  ModPoly r = *this;
  for (auto& c : r.coeffs_) c = c == 0 ? 0 : p_ - c;
  return r;
}

ModPoly operator+(const ModPoly& a, const ModPoly& b) {
  require_same(a, b);
  return ModPoly(a.p_, detail::add(detail::PrimeField(a.p_), a.coeffs_, b.coeffs_));
}

ModPoly operator-(const ModPoly& a, const ModPoly& b) {
  require_same(a, b);
  return ModPoly(a.p_, detail::sub(detail::PrimeField(a.p_), a.coeffs_, b.coeffs_));
}

ModPoly operator*(const ModPoly& a, const ModPoly& b) {
  require_same(a, b);
  return ModPoly(a.p_, detail::mul(detail::PrimeField(a.p_), a.coeffs_, b.coeffs_));
}

bool operator<(const ModPoly& a, const ModPoly& b) {
  if (a.p_ != b.p_) return a.p_ < b.p_;
  if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() < b.coeffs_.size();
  return std::lexicographical_compare(a.coeffs_.rbegin(), a.coeffs_.rend(), b.coeffs_.rbegin(), b.coeffs_.rend());
}

std::pair<ModPoly, ModPoly> divrem(const ModPoly& a, const ModPoly& b) {
  require_same(a, b);
  if (b.is_zero()) throw std::domain_error("divrem: division by zero");
  std::vector<u64> r = a.coeffs(), q;
  detail::divrem_inplace(detail::PrimeField(a.modulus()), r, b.coeffs(), &q);
  return {ModPoly(a.modulus(), std::move(q)), ModPoly(a.modulus(), std::move(r))};
}

ModPoly gcd(const ModPoly& a, const ModPoly& b) {
  require_same(a, b);
  return ModPoly(a.modulus(), detail::gcd(detail::PrimeField(a.modulus()), a.coeffs(), b.coeffs()));
}

ModPoly powmod(const ModPoly& base, u64 exp, const ModPoly& f) {
  require_same(base, f);
  if (f.is_zero()) throw std::domain_error("powmod: zero modulus polynomial");
  return ModPoly(f.modulus(), detail::powmod(detail::PrimeField(f.modulus()), base.coeffs(), exp, f.coeffs()));
}

ModPoly canonicalize(const ModPoly& f) {
  if (f.is_zero()) return f;
  const auto& c = f.coeffs();
  std::size_t lo = 0;
  while (c[lo] == 0) ++lo;
  ModPoly stripped(f.modulus(), std::vector<u64>(c.begin() + static_cast<std::ptrdiff_t>(lo), c.end()));
  return stripped.monic();
}

bool is_canonical(const ModPoly& f) { return f.is_zero() || (f.coeff(0) != 0 && f.is_monic()); }

ModPoly reverse(const ModPoly& f) {
  if (f.is_zero()) throw std::domain_error("reverse: zero polynomial");
  std::vector<u64> c(f.coeffs().rbegin(), f.coeffs().rend());
  return canonicalize(ModPoly(f.modulus(), std::move(c)));
}

bool is_self_reciprocal(const ModPoly& f) {
  if (f.is_zero()) throw std::domain_error("is_self_reciprocal: zero polynomial");
  return reverse(f) == canonicalize(f);
}

ModPoly substitute_neg(const ModPoly& f) {
  std::vector<u64> c = f.coeffs();
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = c[i] == 0 ? 0 : f.modulus() - c[i];
  return canonicalize(ModPoly(f.modulus(), std::move(c)));
}

ModPoly reduce_coeffs(const IntPoly& f, u64 p) {
  if (!is_prime(p)) throw std::invalid_argument("reduce_mod: modulus must be prime");
  std::vector<u64> c;
  c.reserve(f.coeffs().size());
  mpz_class r;
  for (const auto& x : f.coeffs()) {
    r = x % mpz_class(static_cast<unsigned long>(p));  // truncated toward zero
    if (r < 0) r += static_cast<unsigned long>(p);
    c.push_back(r.get_ui());
  }
  return ModPoly(p, std::move(c));
}

ModPoly reduce_mod(const IntPoly& f, u64 p) { return canonicalize(reduce_coeffs(f, p)); }

std::string to_string(const ModPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    const u64 c = f.coeffs()[i];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << '*';
    os << 't';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

}  // namespace knotfm
