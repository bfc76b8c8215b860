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

#include "gf2_poly.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>

namespace knotfm::detail {

namespace {

using Word = Gf2Poly::Word;

// dst ^= src << shift, growing dst as needed
void xor_shifted(std::vector<Word>& dst, const std::vector<Word>& src, std::size_t shift) {
  if (src.empty()) return;
  const std::size_t q = shift / 64, r = shift % 64;
  const std::size_t need = src.size() + q + (r != 0 ? 1 : 0);
  if (dst.size() < need) dst.resize(need, 0);
  Word* d = dst.data() + q;
  if (r == 0) {
    for (std::size_t i = 0; i < src.size(); ++i) d[i] ^= src[i];
  } else {
    Word carry = 0;
    for (std::size_t i = 0; i < src.size(); ++i) {
      d[i] ^= (src[i] << r) | carry;
      carry = src[i] >> (64 - r);
    }
    d[src.size()] ^= carry;
  }
}

Word spread32(Word x) {
  x &= 0xffffffffULL;
  x = (x | (x << 16)) & 0x0000ffff0000ffffULL;
  x = (x | (x << 8)) & 0x00ff00ff00ff00ffULL;
  x = (x | (x << 4)) & 0x0f0f0f0f0f0f0f0fULL;
  x = (x | (x << 2)) & 0x3333333333333333ULL;
  x = (x | (x << 1)) & 0x5555555555555555ULL;
  return x;
}

Word compress_even(Word x) {
  x &= 0x5555555555555555ULL;
  x = (x | (x >> 1)) & 0x3333333333333333ULL;
  x = (x | (x >> 2)) & 0x0f0f0f0f0f0f0f0fULL;
  x = (x | (x >> 4)) & 0x00ff00ff00ff00ffULL;
  x = (x | (x >> 8)) & 0x0000ffff0000ffffULL;
  x = (x | (x >> 16)) & 0x00000000ffffffffULL;
  return x;
}

long top_bit_from(const std::vector<Word>& w, long from) {
  if (from < 0) return -1;
  long wi = from / 64;
  Word mask = (from % 64 == 63) ? ~Word{0} : ((Word{1} << (from % 64 + 1)) - 1);
  Word x = w[static_cast<std::size_t>(wi)] & mask;
  while (x == 0) {
    if (--wi < 0) return -1;
    x = w[static_cast<std::size_t>(wi)];
  }
  return wi * 64 + 63 - std::countl_zero(x);
}

}  // namespace

Gf2Poly Gf2Poly::monomial(std::size_t k) {
  Gf2Poly r;
  r.w_.assign(k / 64 + 1, 0);
  r.w_[k / 64] = Word{1} << (k % 64);
  return r;
}

Gf2Poly Gf2Poly::from_bits(const std::vector<std::uint64_t>& coeffs) {
  Gf2Poly r;
  r.w_.assign((coeffs.size() + 63) / 64, 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] & 1) r.w_[i / 64] |= Word{1} << (i % 64);
  r.trim();
  return r;
}

std::vector<std::uint64_t> Gf2Poly::to_coeffs() const {
  const long d = degree();
  std::vector<std::uint64_t> c(static_cast<std::size_t>(d + 1));
  for (long i = 0; i <= d; ++i) c[static_cast<std::size_t>(i)] = bit(static_cast<std::size_t>(i)) ? 1 : 0;
  return c;
}

long Gf2Poly::degree() const {
  if (w_.empty()) return -1;
  return static_cast<long>(w_.size() - 1) * 64 + 63 - std::countl_zero(w_.back());
}

void Gf2Poly::flip(std::size_t i) {
  if (i / 64 >= w_.size()) w_.resize(i / 64 + 1, 0);
  w_[i / 64] ^= Word{1} << (i % 64);
  trim();
}

void Gf2Poly::trim() {
  while (!w_.empty() && w_.back() == 0) w_.pop_back();
}

Gf2Poly& Gf2Poly::operator^=(const Gf2Poly& o) {
  if (w_.size() < o.w_.size()) w_.resize(o.w_.size(), 0);
  for (std::size_t i = 0; i < o.w_.size(); ++i) w_[i] ^= o.w_[i];
  trim();
  return *this;
}

Gf2Poly mul(const Gf2Poly& a, const Gf2Poly& b) {
  Gf2Poly out;
  if (a.is_zero() || b.is_zero()) return out;
  const Gf2Poly& x = a.words().size() <= b.words().size() ? a : b;
  const Gf2Poly& y = &x == &a ? b : a;
  auto& w = out.words();
  w.assign(x.words().size() + y.words().size() + 1, 0);
  for (std::size_t i = 0; i < x.words().size(); ++i) {
    Word bits = x.words()[i];
    while (bits != 0) {
      const int s = std::countr_zero(bits);
      bits &= bits - 1;
      xor_shifted(w, y.words(), i * 64 + static_cast<std::size_t>(s));
    }
  }
  out.trim();
  return out;
}

Gf2Poly square(const Gf2Poly& a) {
  Gf2Poly out;
  auto& w = out.words();
  w.resize(a.words().size() * 2);
  for (std::size_t i = 0; i < a.words().size(); ++i) {
    w[2 * i] = spread32(a.words()[i]);
    w[2 * i + 1] = spread32(a.words()[i] >> 32);
  }
  out.trim();
  return out;
}

void divrem_inplace(Gf2Poly& a, const Gf2Poly& f, Gf2Poly* quotient) {
  const long n = f.degree();
  if (n < 0) throw std::domain_error("Gf2Poly division by zero");
  if (quotient) *quotient = Gf2Poly();
  long da = a.degree();
  if (da < n) return;
  if (quotient) quotient->words().assign(static_cast<std::size_t>(da - n) / 64 + 1, 0);
  auto& w = a.words();
  while (da >= n) {
    const std::size_t s = static_cast<std::size_t>(da - n);
    xor_shifted(w, f.words(), s);
    if (quotient) quotient->words()[s / 64] ^= Word{1} << (s % 64);
    da = top_bit_from(w, da - 1);
  }
  a.trim();
  if (quotient) quotient->trim();
}

Gf2Poly gcd(Gf2Poly a, Gf2Poly b) {
  while (!b.is_zero()) {
    divrem_inplace(a, b);
    std::swap(a, b);
  }
  return a;
}

Gf2Poly divexact(Gf2Poly a, const Gf2Poly& b) {
  Gf2Poly q;
  divrem_inplace(a, b, &q);
  if (!a.is_zero()) throw std::logic_error("Gf2Poly divexact: nonzero remainder");
  return q;
}

Gf2Poly derivative(const Gf2Poly& a) {
  // d/dt t^i = i t^(i-1); keeps the odd-index bits shifted down by one
  Gf2Poly out;
  auto& w = out.words();
  w.resize(a.words().size(), 0);
  for (std::size_t i = 0; i < a.words().size(); ++i) {
    w[i] = (a.words()[i] & 0xaaaaaaaaaaaaaaaaULL) >> 1;
  }
  out.trim();
  return out;
}

Gf2Poly sqrt(const Gf2Poly& a) {
  Gf2Poly out;
  auto& w = out.words();
  w.assign((a.words().size() + 1) / 2, 0);
  for (std::size_t i = 0; i < a.words().size(); ++i) {
    const Word half = compress_even(a.words()[i]);
    w[i / 2] |= half << (32 * (i % 2));
  }
  out.trim();
  return out;
}

Gf2Poly mulmod(const Gf2Poly& a, const Gf2Poly& b, const Gf2Poly& f) { return rem(mul(a, b), f); }

Gf2Frobenius::Gf2Frobenius(const Gf2Poly& f) {
  const long n = f.degree();
  if (n < 1) throw std::invalid_argument("Gf2Frobenius: modulus must be nonconstant");
  n_ = static_cast<std::size_t>(n);
  words_ = (n_ + 63) / 64;
  rows_.assign(n_ * words_, 0);
  Gf2Poly r = Gf2Poly::one();
  r = rem(r, f);
  const Gf2Poly t2 = Gf2Poly::monomial(2);
  for (std::size_t i = 0; i < n_; ++i) {
    std::copy(r.words().begin(), r.words().end(), rows_.begin() + static_cast<std::ptrdiff_t>(i * words_));
    if (i + 1 < n_) r = rem(mul(r, t2), f);
  }
}

Gf2Poly Gf2Frobenius::apply(const Gf2Poly& h) const {
  Gf2Poly out;
  auto& w = out.words();
  w.assign(words_, 0);
  const auto& hw = h.words();
  for (std::size_t i = 0; i < hw.size(); ++i) {
    Word bits = hw[i];
    while (bits != 0) {
      const std::size_t k = i * 64 + static_cast<std::size_t>(std::countr_zero(bits));
      bits &= bits - 1;
      if (k >= n_) break;
      const Word* row = rows_.data() + k * words_;
      for (std::size_t j = 0; j < words_; ++j) w[j] ^= row[j];
    }
  }
  out.trim();
  return out;
}

}  // namespace knotfm::detail
