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

// Bit-packed polynomials over F_2 (bit i of the word vector is the
// coefficient of t^i). Internal to the factoring engine; the public surface
// stays ModPoly with modulus 2.

#ifndef KNOTFM_SRC_GF2_POLY_HPP
#define KNOTFM_SRC_GF2_POLY_HPP

#include <cstdint>
#include <vector>

namespace knotfm::detail {

class Gf2Poly {
 public:
  using Word = std::uint64_t;

  Gf2Poly() = default;
  static Gf2Poly one() { return monomial(0); }
  static Gf2Poly monomial(std::size_t k);
  static Gf2Poly from_bits(const std::vector<std::uint64_t>& coeffs);  // entries 0/1

  std::vector<std::uint64_t> to_coeffs() const;

  bool is_zero() const { return w_.empty(); }
  bool is_one() const { return w_.size() == 1 && w_[0] == 1; }
  long degree() const;
  bool bit(std::size_t i) const { return i / 64 < w_.size() && ((w_[i / 64] >> (i % 64)) & 1); }
  void flip(std::size_t i);

  const std::vector<Word>& words() const { return w_; }
  std::vector<Word>& words() { return w_; }
  void trim();

  Gf2Poly& operator^=(const Gf2Poly& o);
  friend Gf2Poly operator^(Gf2Poly a, const Gf2Poly& b) { return a ^= b; }
  friend bool operator==(const Gf2Poly&, const Gf2Poly&) = default;

 private:
  std::vector<Word> w_;
};

Gf2Poly mul(const Gf2Poly& a, const Gf2Poly& b);
Gf2Poly square(const Gf2Poly& a);
/// a <- a mod f; quotient optional.
void divrem_inplace(Gf2Poly& a, const Gf2Poly& f, Gf2Poly* quotient = nullptr);
inline Gf2Poly rem(Gf2Poly a, const Gf2Poly& f) {
  divrem_inplace(a, f);
  return a;
}
Gf2Poly gcd(Gf2Poly a, Gf2Poly b);
Gf2Poly divexact(Gf2Poly a, const Gf2Poly& b);
Gf2Poly derivative(const Gf2Poly& a);
/// g with g^2 = a; requires derivative(a) == 0.
Gf2Poly sqrt(const Gf2Poly& a);
Gf2Poly mulmod(const Gf2Poly& a, const Gf2Poly& b, const Gf2Poly& f);

/// Squaring mod f as a bit matrix; row i holds t^(2i) mod f.
class Gf2Frobenius {
 public:
  explicit Gf2Frobenius(const Gf2Poly& f);
  Gf2Poly apply(const Gf2Poly& h) const;
  std::size_t dim() const { return n_; }

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<Gf2Poly::Word> rows_;
};

}  // namespace knotfm::detail

#endif  // KNOTFM_SRC_GF2_POLY_HPP
