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

#include "knotfm/factor.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

#include "fp_kernels.hpp"
#include "gf2_poly.hpp"

namespace knotfm {

namespace {

using detail::Coeffs;
using detail::Gf2Poly;

// The factoring stages are written once against these two backends: generic
// F_p on coefficient vectors, and bit-packed F_2.

struct FpBackend {
  using Poly = Coeffs;
  using Frob = detail::FrobeniusMatrix;

  detail::PrimeField F;

  explicit FpBackend(u64 p) : F(p) {}
  u64 p() const { return F.p; }

  Poly from(const ModPoly& f) const { return f.coeffs(); }
  ModPoly to(const Poly& f) const { return ModPoly(F.p, f); }

  Poly one() const { return {1}; }
  Poly constant(u64 c) const { return c % F.p == 0 ? Poly{} : Poly{c % F.p}; }
  Poly t() const { return {0, 1}; }
  bool is_one(const Poly& a) const { return a.size() == 1 && a[0] == 1; }
  long degree(const Poly& a) const { return detail::deg(a); }
  Poly add(const Poly& a, const Poly& b) const { return detail::add(F, a, b); }
  Poly sub(const Poly& a, const Poly& b) const { return detail::sub(F, a, b); }
  Poly rem(const Poly& a, const Poly& f) const { return detail::rem(F, a, f); }
  Poly mul(const Poly& a, const Poly& b) const { return detail::mul(F, a, b); }
  Poly mulmod(const Poly& a, const Poly& b, const Poly& f) const { return detail::mulmod(F, a, b, f); }
  Poly powmod(const Poly& a, u64 e, const Poly& f) const { return detail::powmod(F, a, e, f); }
  Poly gcd(const Poly& a, const Poly& b) const { return detail::gcd(F, a, b); }
  Poly divexact(const Poly& a, const Poly& b) const { return detail::divexact(F, a, b); }
  Poly derivative(const Poly& a) const { return detail::derivative(F, a); }
  Poly monic(const Poly& a) const { return detail::make_monic(F, a); }

  // In F_p every coefficient is its own p-th root.
  Poly pth_root(const Poly& a) const {
    Poly r((a.size() + F.p - 1) / F.p, 0);
    for (std::size_t i = 0; i < a.size(); i += F.p) r[i / F.p] = a[i];
    detail::trim(r);
    return r;
  }

  Frob frobenius(const Poly& f) const { return Frob(F, f); }
  Poly frob_apply(const Frob& m, const Poly& h) const { return m.apply(h); }

  Poly random_below(long n, CounterRng& rng) const {
    Poly r(static_cast<std::size_t>(n));
    for (auto& c : r) c = rng.below(F.p);
    detail::trim(r);
    return r;
  }
};

struct Gf2Backend {
  using Poly = Gf2Poly;
  using Frob = detail::Gf2Frobenius;

  u64 p() const { return 2; }

  Poly from(const ModPoly& f) const { return Gf2Poly::from_bits(f.coeffs()); }
  ModPoly to(const Poly& f) const { return ModPoly(2, f.to_coeffs()); }

  Poly one() const { return Gf2Poly::one(); }
  Poly constant(u64 c) const { return (c & 1) != 0 ? one() : Poly{}; }
  Poly t() const { return Gf2Poly::monomial(1); }
  bool is_one(const Poly& a) const { return a.is_one(); }
  long degree(const Poly& a) const { return a.degree(); }
  Poly add(const Poly& a, const Poly& b) const { return a ^ b; }
  Poly sub(const Poly& a, const Poly& b) const { return a ^ b; }
  Poly rem(const Poly& a, const Poly& f) const { return detail::rem(a, f); }
  Poly mul(const Poly& a, const Poly& b) const { return detail::mul(a, b); }
  Poly mulmod(const Poly& a, const Poly& b, const Poly& f) const { return detail::mulmod(a, b, f); }
  Poly powmod(Poly a, u64 e, const Poly& f) const {
    Poly r = rem(one(), f);
    a = rem(a, f);
    for (; e != 0; e >>= 1) {
      if (e & 1) r = mulmod(r, a, f);
      if (e > 1) a = mulmod(a, a, f);
    }
    return r;
  }
  Poly gcd(const Poly& a, const Poly& b) const { return detail::gcd(a, b); }
  Poly divexact(const Poly& a, const Poly& b) const { return detail::divexact(a, b); }
  Poly derivative(const Poly& a) const { return detail::derivative(a); }
  Poly monic(const Poly& a) const { return a; }
  Poly pth_root(const Poly& a) const { return detail::sqrt(a); }

  Frob frobenius(const Poly& f) const { return Frob(f); }
  Poly frob_apply(const Frob& m, const Poly& h) const { return m.apply(h); }

  Poly random_below(long n, CounterRng& rng) const {
    Poly r;
    auto& w = r.words();
    w.resize((static_cast<std::size_t>(n) + 63) / 64);
    for (auto& x : w) x = rng.next();
    if (n % 64 != 0 && !w.empty()) w.back() &= (Gf2Poly::Word{1} << (n % 64)) - 1;
    r.trim();
    return r;
  }
};

template <class B>
using PolyList = std::vector<std::pair<typename B::Poly, unsigned>>;

// Yun-style loop; the part left over is a p-th power and is handled by
// taking the p-th root and scaling multiplicities by p.
template <class B>
PolyList<B> sff(const B& b, const typename B::Poly& f) {
  using Poly = typename B::Poly;
  std::map<unsigned, Poly> acc;
  auto put = [&](const Poly& g, unsigned m) {
    auto it = acc.find(m);
    if (it == acc.end())
      acc.emplace(m, g);
    else
      it->second = b.monic(b.mul(it->second, g));
  };
  Poly c = b.gcd(f, b.derivative(f));
  Poly w = b.divexact(f, c);
  unsigned i = 1;
  while (!b.is_one(w)) {
    Poly y = b.gcd(w, c);
    Poly fac = b.divexact(w, y);
    if (!b.is_one(fac)) put(fac, i);
    w = std::move(y);
    c = b.divexact(c, w);
    ++i;
  }
  if (b.degree(c) > 0) {
    for (auto& [g, m] : sff(b, b.pth_root(c))) put(g, static_cast<unsigned>(m * b.p()));
  }
  PolyList<B> out;
  for (auto& [m, g] : acc) out.emplace_back(std::move(g), m);
  return out;
}

template <class B>
PolyList<B> ddf(const B& b, const typename B::Poly& f) {
  using Poly = typename B::Poly;
  PolyList<B> out;
  Poly g = f;
  if (b.degree(g) < 1) return out;
  auto frob = b.frobenius(g);
  long frob_dim = b.degree(g);
  Poly h = b.rem(b.t(), g);
  for (unsigned k = 1; 2 * static_cast<long>(k) <= b.degree(g); ++k) {
    h = b.frob_apply(frob, h);
    Poly d = b.gcd(g, b.sub(h, b.t()));
    if (!b.is_one(d)) {
      g = b.divexact(g, d);
      out.emplace_back(std::move(d), k);
      if (b.degree(g) >= 1 && 2 * b.degree(g) <= frob_dim) {
        frob = b.frobenius(g);
        frob_dim = b.degree(g);
        h = b.rem(h, g);
      }
    }
  }
  if (b.degree(g) > 0) out.emplace_back(g, static_cast<unsigned>(b.degree(g)));
  return out;
}

constexpr u64 kValueSplitMax = 128;

// Trace a + a^p + ... + a^(p^(k-1)) mod fm; F_p-valued on every component.
template <class B>
typename B::Poly trace(const B& b, const typename B::Frob& frob, typename B::Poly a, unsigned k) {
  typename B::Poly s = a;
  for (unsigned j = 1; j < k; ++j) {
    a = b.frob_apply(frob, a);
    s = b.add(s, a);
  }
  return s;
}

// One splitting attempt on g: pieces whose product is g, each a product of
// degree-k irreducibles. A single piece means the attempt failed.
template <class B>
std::vector<typename B::Poly> split_once(const B& b, const typename B::Poly& g, const typename B::Poly& tr,
                                         unsigned k) {
  using Poly = typename B::Poly;
  std::vector<Poly> out;
  auto keep = [&](Poly d) {
    if (b.degree(d) % static_cast<long>(k) != 0)
      throw std::invalid_argument("equal_degree_split: input is not a product of degree-k irreducibles");
    out.push_back(std::move(d));
  };
  Poly t = b.rem(tr, g);
  if (b.degree(t) < 1) return {g};
  if (b.p() != 2 && b.p() <= kValueSplitMax) {
    // Separate components by the value of the trace.
    Poly rest = g;
    for (u64 c = 0; c < b.p() && b.degree(rest) > static_cast<long>(k); ++c) {
      Poly d = b.gcd(rest, b.sub(t, b.constant(c)));
      if (b.degree(d) < 1) continue;
      if (b.degree(d) == b.degree(rest)) break;
      rest = b.divexact(rest, d);
      t = b.rem(t, rest);
      keep(std::move(d));
    }
    keep(std::move(rest));
    return out;
  }
  // p = 2: the trace is 0 or 1 per component. Larger p: quadratic character.
  Poly s = b.p() == 2 ? t : b.sub(b.powmod(t, (b.p() - 1) / 2, g), b.one());
  Poly d = b.gcd(g, s);
  if (b.degree(d) < 1 || b.degree(d) == b.degree(g)) return {g};
  Poly other = b.divexact(g, d);
  keep(std::move(d));
  keep(std::move(other));
  return out;
}

// Recursive equal-degree splitting. `frob` belongs to the modulus fm, a
// multiple of g; a part gets its own smaller matrix once building one costs
// less than a single trace over fm.
template <class B>
void edf_rec(const B& b, const typename B::Poly& g, unsigned k, CounterRng& rng, const typename B::Frob* frob,
             const typename B::Poly* fm, std::vector<typename B::Poly>& out) {
  using Poly = typename B::Poly;
  const long m = b.degree(g);
  if (m == static_cast<long>(k)) {
    out.push_back(g);
    return;
  }
  std::optional<typename B::Frob> own;
  if (frob == nullptr) {
    own.emplace(b.frobenius(g));
  } else {
    const double fdeg = static_cast<double>(b.degree(*fm));
    const double build = std::min<double>(static_cast<double>(b.p()), 2.0 * m) * m * m;
    if (m < b.degree(*fm) && build <= k * fdeg * fdeg) own.emplace(b.frobenius(g));
  }
  if (own) {
    frob = &*own;
    fm = &g;
  }
  const long n = b.degree(*fm);
  const std::size_t max_trials = 64 + 40 * static_cast<std::size_t>(m / k);
  for (std::size_t trial = 0; trial < max_trials; ++trial) {
    Poly a = b.random_below(n, rng);
    if (b.degree(a) < 1) continue;
    std::vector<Poly> pieces = split_once(b, g, trace(b, *frob, std::move(a), k), k);
    if (pieces.size() < 2) continue;
    for (const Poly& piece : pieces) edf_rec(b, piece, k, rng, frob, fm, out);
    return;
  }
  throw std::invalid_argument("equal_degree_split: input is not a product of degree-k irreducibles");
}

template <class B>
std::vector<typename B::Poly> edf(const B& b, const typename B::Poly& f, unsigned k, CounterRng& rng) {
  if (b.degree(f) % static_cast<long>(k) != 0)
    throw std::invalid_argument("equal_degree_split: degree is not a multiple of k");
  std::vector<typename B::Poly> out;
  edf_rec<B>(b, f, k, rng, nullptr, nullptr, out);
  return out;
}

template <class B>
bool rabin(const B& b, const typename B::Poly& f) {
  using Poly = typename B::Poly;
  const long n = b.degree(f);
  if (n == 1) return true;
  const auto primes = factorize(static_cast<u64>(n)).primes();
  auto frob = b.frobenius(f);
  const Poly tt = b.rem(b.t(), f);
  Poly h = tt;
  for (long j = 1; j <= n; ++j) {
    h = b.frob_apply(frob, h);
    for (u64 q : primes) {
      if (static_cast<u64>(j) * q == static_cast<u64>(n)) {
        if (!b.is_one(b.gcd(f, b.sub(h, tt)))) return false;
      }
    }
  }
  return h == tt;
}

void sort_factors(std::vector<Factor>& v) {
  std::sort(v.begin(), v.end(), [](const Factor& x, const Factor& y) { return x.poly < y.poly; });
}

template <class B>
FactorMultiset factor_with(const B& b, const ModPoly& f, u64 seed) {
  FactorMultiset out;
  out.modulus = f.modulus();
  out.scalar = f.leading();
  if (f.degree() == 0) return out;
  CounterRng rng(seed);
  const auto monic = b.from(f.monic());
  for (auto& [part, m] : sff(b, monic)) {
    for (auto& [cls, k] : ddf(b, part)) {
      for (auto& g : edf(b, cls, k, rng)) out.factors.push_back({b.to(g), m});
    }
  }
  sort_factors(out.factors);
  return out;
}

template <class F>
decltype(auto) dispatch(u64 p, F&& fn) {
  if (p == 2) return fn(Gf2Backend{});
  return fn(FpBackend(p));
}

void require_prime_modulus(const ModPoly& f) {
  if (!is_prime(f.modulus())) throw std::invalid_argument("factoring needs a prime modulus");
}

}  // namespace

ModPoly FactorMultiset::product() const {
  ModPoly acc(modulus, {scalar});
  for (const auto& f : factors)
    for (unsigned i = 0; i < f.multiplicity; ++i) acc = acc * f.poly;
  return acc;
}

std::size_t FactorMultiset::count() const {
  std::size_t n = 0;
  for (const auto& f : factors) n += f.multiplicity;
  return n;
}

std::vector<SquarefreePart> squarefree_decomposition(const ModPoly& f) {
  if (f.is_zero()) throw std::domain_error("squarefree_decomposition: zero polynomial");
  require_prime_modulus(f);
  std::vector<SquarefreePart> out;
  if (f.degree() == 0) return out;
  dispatch(f.modulus(), [&](const auto& b) {
    for (auto& [g, m] : sff(b, b.from(f.monic()))) out.push_back({b.to(g), m});
    return 0;
  });
  return out;
}

std::vector<DegreeClass> distinct_degree(const ModPoly& f) {
  require_prime_modulus(f);
  if (!f.is_monic()) throw std::invalid_argument("distinct_degree: input must be monic");
  if (f.degree() >= 1 && gcd(f, f.derivative()).degree() != 0)
    throw std::invalid_argument("distinct_degree: input must be squarefree");
  std::vector<DegreeClass> out;
  dispatch(f.modulus(), [&](const auto& b) {
    for (auto& [g, k] : ddf(b, b.from(f))) out.push_back({b.to(g), k});
    return 0;
  });
  return out;
}

FactorMultiset equal_degree_split(const ModPoly& f, unsigned k, u64 seed) {
  require_prime_modulus(f);
  if (k == 0 || f.degree() < 1 || f.degree() % static_cast<long>(k) != 0)
    throw std::invalid_argument("equal_degree_split: k must divide deg f");
  if (!f.is_monic()) throw std::invalid_argument("equal_degree_split: input must be monic");
  FactorMultiset out;
  out.modulus = f.modulus();
  CounterRng rng(seed);
  dispatch(f.modulus(), [&](const auto& b) {
    for (auto& g : edf(b, b.from(f), k, rng)) out.factors.push_back({b.to(g), 1});
    return 0;
  });
  sort_factors(out.factors);
  return out;
}

FactorMultiset factor(const ModPoly& f, u64 seed) {
  if (f.is_zero()) throw std::domain_error("factor: zero polynomial");
  require_prime_modulus(f);
  return dispatch(f.modulus(), [&](const auto& b) { return factor_with(b, f, seed); });
}

bool is_irreducible(const ModPoly& f) {
  if (f.degree() < 1) throw std::invalid_argument("is_irreducible: constant input");
  require_prime_modulus(f);
  const ModPoly g = f.monic();
  return dispatch(f.modulus(), [&](const auto& b) { return rabin(b, b.from(g)); });
}

bool is_self_reciprocal_factor(const ModPoly& g) {
  if (g.is_zero() || g.coeff(0) == 0) return false;
  return reverse(g) == g.monic();
}

FoxMilnorResult fox_milnor_mod_p(const ModPoly& f, u64 seed) {
  if (f.is_zero()) throw std::invalid_argument("fox_milnor_mod_p: zero polynomial");
  const ModPoly g = canonicalize(f);
  if (!is_self_reciprocal(g)) throw std::invalid_argument("fox_milnor_mod_p: input is not self-reciprocal");
  FoxMilnorResult r{FoxMilnorVerdict::Admits, factor(g, seed), {}, {}};
  for (const auto& fac : r.factorization.factors) {
    if (!is_self_reciprocal_factor(fac.poly)) continue;
    r.self_reciprocal.push_back(fac);
    if (fac.multiplicity % 2 == 1) r.offending.push_back(fac);
  }
  if (!r.offending.empty()) r.verdict = FoxMilnorVerdict::Obstructed;
  return r;
}

}  // namespace knotfm
