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

#include "knotfm/int_poly.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <sstream>

namespace knotfm {

namespace {

using i128 = __int128;

std::optional<std::vector<std::int64_t>> as_small(const std::vector<mpz_class>& c, unsigned& max_bits) {
  std::vector<std::int64_t> out;
  out.reserve(c.size());
  max_bits = 0;
  for (const auto& x : c) {
    if (!mpz_fits_slong_p(x.get_mpz_t())) return std::nullopt;
    const long v = x.get_si();
    out.push_back(v);
    const std::uint64_t mag = v < 0 ? static_cast<std::uint64_t>(-(v + 1)) + 1 : static_cast<std::uint64_t>(v);
    max_bits = std::max<unsigned>(max_bits, static_cast<unsigned>(std::bit_width(mag)));
  }
  return out;
}

mpz_class from_i128(i128 v) {
  const bool neg = v < 0;
  unsigned __int128 mag = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  mpz_class hi(static_cast<unsigned long>(mag >> 64));
  mpz_class out = hi << 64;
  out += static_cast<unsigned long>(mag & UINT64_MAX);
  return neg ? mpz_class(-out) : out;
}

}  // namespace

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::monomial(const mpz_class& c, std::size_t exponent) {
  std::vector<mpz_class> v(exponent + 1);
  v[exponent] = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const mpz_class& IntPoly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return coeffs_.back();
}

mpz_class IntPoly::eval(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<mpz_class> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const std::size_t n = a.coeffs_.size(), m = b.coeffs_.size();
  // Schoolbook. When both operands fit in 64 bits and no partial sum can
  // exceed 126 bits, accumulate in __int128 and convert once per coefficient.
  // A subquadratic product would slot in here for larger scans.
  unsigned abits = 0, bbits = 0;
  auto sa = as_small(a.coeffs_, abits);
  auto sb = sa ? as_small(b.coeffs_, bbits) : std::nullopt;
  const unsigned len_bits = static_cast<unsigned>(std::bit_width(std::min(n, m)));
  if (sa && sb && abits + bbits + len_bits <= 126) {
    std::vector<i128> acc(n + m - 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
      const i128 x = (*sa)[i];
      if (x == 0) continue;
      i128* dst = acc.data() + i;
      for (std::size_t j = 0; j < m; ++j) dst[j] += x * (*sb)[j];
    }
    std::vector<mpz_class> c;
    c.reserve(acc.size());
    for (i128 v : acc) c.push_back(from_i128(v));
    return IntPoly(std::move(c));
  }
  std::vector<mpz_class> c(n + m - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < m; ++j)
      mpz_addmul(c[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
  }
  return IntPoly(std::move(c));
}

IntPoly canonicalize(std::span<const mpz_class> raw_coeffs, long /*lowest_exponent*/) {
  // The exponent offset is a unit t^k and drops out of the canonical form.
  std::size_t lo = 0, hi = raw_coeffs.size();
  while (lo < hi && raw_coeffs[lo] == 0) ++lo;
  while (hi > lo && raw_coeffs[hi - 1] == 0) --hi;
  if (lo == hi) return {};
  std::vector<mpz_class> c(raw_coeffs.begin() + static_cast<std::ptrdiff_t>(lo),
                           raw_coeffs.begin() + static_cast<std::ptrdiff_t>(hi));
  if (c.back() < 0)
    for (auto& x : c) x = -x;
  return IntPoly(std::move(c));
}

IntPoly canonicalize(const IntPoly& f) { return canonicalize(std::span<const mpz_class>(f.coeffs())); }

bool is_canonical(const IntPoly& f) {
  return f.is_zero() || (f.coeffs().front() != 0 && f.leading() > 0);
}

IntPoly exact_div(const IntPoly& num, const IntPoly& den) {
  if (den.is_zero()) throw std::domain_error("exact_div: division by zero");
  if (num.is_zero()) return {};
  if (num.degree() < den.degree()) throw InexactDivisionError("exact_div: divisor has larger degree");
  std::vector<mpz_class> r = num.coeffs();
  const auto& d = den.coeffs();
  const std::size_t dn = d.size() - 1;
  const mpz_class& lead = d.back();
  std::vector<mpz_class> q(r.size() - dn);
  mpz_class rem;
  for (std::size_t k = q.size(); k-- > 0;) {
    mpz_class& top = r[k + dn];
    if (top == 0) continue;
    mpz_fdiv_qr(q[k].get_mpz_t(), rem.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    if (rem != 0) throw InexactDivisionError("exact_div: leading coefficient does not divide");
    for (std::size_t j = 0; j < dn; ++j) {
      if (d[j] != 0) mpz_submul(r[k + j].get_mpz_t(), q[k].get_mpz_t(), d[j].get_mpz_t());
    }
    top = 0;
  }
  for (std::size_t j = 0; j < dn; ++j)
    if (r[j] != 0) throw InexactDivisionError("exact_div: nonzero remainder");
  return IntPoly(std::move(q));
}

IntPoly shift(const IntPoly& f, std::size_t k) {
  if (f.is_zero()) return {};
  std::vector<mpz_class> c(k);
  c.insert(c.end(), f.coeffs().begin(), f.coeffs().end());
  return IntPoly(std::move(c));
}

IntPoly reverse(const IntPoly& f) {
  if (f.is_zero()) throw std::domain_error("reverse: zero polynomial");
  std::vector<mpz_class> c(f.coeffs().rbegin(), f.coeffs().rend());
  return canonicalize(std::span<const mpz_class>(c));
}

bool is_self_reciprocal(const IntPoly& f) {
  if (f.is_zero()) throw std::domain_error("is_self_reciprocal: zero polynomial");
  return reverse(f) == canonicalize(f);
}

IntPoly substitute_neg(const IntPoly& f) {
  std::vector<mpz_class> c = f.coeffs();
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return canonicalize(std::span<const mpz_class>(c));
}

std::string to_string(const IntPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    const mpz_class& c = f.coeffs()[i];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << 't';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

}  // namespace knotfm
