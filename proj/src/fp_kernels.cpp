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

#include "fp_kernels.hpp"

#include <algorithm>
#include <stdexcept>

namespace knotfm::detail {

PrimeField::PrimeField(u64 modulus) : p(modulus) {
  if (p < 2) throw std::invalid_argument("PrimeField: modulus must be at least 2");
  small = p < (u64{1} << 32);
  barrett = UINT64_MAX / p;
  if (small) {
    const u64 sq = (p - 1) * (p - 1);
    lazy_terms = sq == 0 ? UINT64_MAX : (UINT64_MAX - (p - 1)) / sq;
  } else {
    lazy_terms = 0;
  }
}

void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Coeffs add(const PrimeField& F, const Coeffs& a, const Coeffs& b) {
  Coeffs c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const u64 x = i < a.size() ? a[i] : 0;
    const u64 y = i < b.size() ? b[i] : 0;
    c[i] = F.add(x, y);
  }
  trim(c);
  return c;
}

Coeffs sub(const PrimeField& F, const Coeffs& a, const Coeffs& b) {
  Coeffs c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const u64 x = i < a.size() ? a[i] : 0;
    const u64 y = i < b.size() ? b[i] : 0;
    c[i] = F.sub(x, y);
  }
  trim(c);
  return c;
}

Coeffs scale(const PrimeField& F, const Coeffs& a, u64 c) {
  Coeffs out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = F.mul(a[i], c);
  trim(out);
  return out;
}

Coeffs make_monic(const PrimeField& F, const Coeffs& a) {
  if (a.empty() || a.back() == 1) return a;
  return scale(F, a, F.inv(a.back()));
}

Coeffs derivative(const PrimeField& F, const Coeffs& a) {
  if (a.size() <= 1) return {};
  Coeffs d(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = F.mul(a[i], i % F.p);
  trim(d);
  return d;
}

Coeffs mul(const PrimeField& F, const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t n = a.size(), m = b.size();
  Coeffs c(n + m - 1, 0);
  if (F.small) {
    u64 budget = F.lazy_terms;
    for (std::size_t i = 0; i < n; ++i) {
      const u64 x = a[i];
      if (x == 0) continue;
      if (budget == 0) {
        for (auto& v : c) v = F.reduce(v);
        budget = F.lazy_terms - 1;
      }
      --budget;
      u64* dst = c.data() + i;
      const u64* src = b.data();
      for (std::size_t j = 0; j < m; ++j) dst[j] += x * src[j];
    }
    for (auto& v : c) v = F.reduce(v);
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) c[i + j] = F.add(c[i + j], F.mul(a[i], b[j]));
    }
  }
  trim(c);
  return c;
}

void divrem_inplace(const PrimeField& F, Coeffs& a, const Coeffs& b, Coeffs* quotient) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  const std::size_t db = b.size() - 1;
  if (quotient) quotient->clear();
  if (a.size() <= db) return;
  if (quotient) quotient->assign(a.size() - db, 0);
  const u64 lead_inv = F.inv(b.back());
  if (db == 0) {
    if (quotient)
      for (std::size_t k = 0; k < a.size(); ++k) (*quotient)[k] = F.mul(a[k], lead_inv);
    a.clear();
    return;
  }
  if (F.small) {
    // entries start reduced; each elimination step adds at most one product
    u64 budget = F.lazy_terms - 1;
    for (std::size_t k = a.size(); k-- > db;) {
      const u64 top = F.reduce(a[k]);
      a[k] = 0;
      if (top == 0) continue;
      const u64 c = F.mul(top, lead_inv);
      if (quotient) (*quotient)[k - db] = c;
      if (budget == 0) {
        for (std::size_t j = 0; j < k; ++j) a[j] = F.reduce(a[j]);
        budget = F.lazy_terms - 1;
      }
      --budget;
      const u64 nc = F.neg(c);
      u64* dst = a.data() + (k - db);
      const u64* src = b.data();
      for (std::size_t j = 0; j < db; ++j) dst[j] += nc * src[j];
    }
    a.resize(db);
    for (auto& v : a) v = F.reduce(v);
  } else {
    for (std::size_t k = a.size(); k-- > db;) {
      const u64 top = a[k];
      a[k] = 0;
      if (top == 0) continue;
      const u64 c = F.mul(top, lead_inv);
      if (quotient) (*quotient)[k - db] = c;
      for (std::size_t j = 0; j < db; ++j) a[k - db + j] = F.sub(a[k - db + j], F.mul(c, b[j]));
    }
    a.resize(db);
  }
  trim(a);
  if (quotient) trim(*quotient);
}

Coeffs gcd(const PrimeField& F, Coeffs a, Coeffs b) {
  while (!b.empty()) {
    divrem_inplace(F, a, b);
    std::swap(a, b);
  }
  return make_monic(F, a);
}

Coeffs mulmod(const PrimeField& F, const Coeffs& a, const Coeffs& b, const Coeffs& f) {
  Coeffs c = mul(F, a, b);
  divrem_inplace(F, c, f);
  return c;
}

Coeffs powmod(const PrimeField& F, Coeffs base, u64 exp, const Coeffs& f) {
  divrem_inplace(F, base, f);
  Coeffs result{1};
  divrem_inplace(F, result, f);
  while (exp != 0) {
    if (exp & 1) result = mulmod(F, result, base, f);
    exp >>= 1;
    if (exp != 0) base = mulmod(F, base, base, f);
  }
  return result;
}

Coeffs divexact(const PrimeField& F, Coeffs a, const Coeffs& b) {
  Coeffs q;
  divrem_inplace(F, a, b, &q);
  if (!a.empty()) throw std::logic_error("divexact: nonzero remainder");
  return q;
}

FrobeniusMatrix::FrobeniusMatrix(const PrimeField& F, const Coeffs& f) : F_(F) {
  if (f.size() < 2 || f.back() != 1) throw std::invalid_argument("FrobeniusMatrix: modulus must be monic, nonconstant");
  n_ = f.size() - 1;
  if (F.small)
    rows32_.assign(n_ * n_, 0);
  else
    rows_.assign(n_ * n_, 0);
  // Row i is t^(ip) mod f. For small p, shift the previous row by p and
  // reduce (cost ~ p n per row); otherwise multiply by t^p mod f (~ 2 n^2).
  const bool by_shift = F.p < 2 * n_;
  const Coeffs tp = by_shift ? Coeffs{} : powmod(F, Coeffs{0, 1}, F.p, f);
  Coeffs r{1};
  for (std::size_t i = 0; i < n_; ++i) {
    if (F.small)
      std::copy(r.begin(), r.end(), rows32_.begin() + static_cast<std::ptrdiff_t>(i * n_));
    else
      std::copy(r.begin(), r.end(), rows_.begin() + static_cast<std::ptrdiff_t>(i * n_));
    if (i + 1 == n_) break;
    if (by_shift) {
      r.insert(r.begin(), static_cast<std::size_t>(F.p), 0);
      divrem_inplace(F, r, f);
    } else {
      r = mulmod(F, r, tp, f);
    }
  }
}

namespace {

// o += x * row with 32x32->64 products, which vectorize; cloned for wider
// vector units when the CPU has them.
__attribute__((target_clones("avx512f", "avx2", "default"))) void axpy32(u64* o, const std::uint32_t* row,
                                                                         std::uint32_t x, std::size_t n) {
  for (std::size_t j = 0; j < n; ++j) o[j] += static_cast<u64>(x) * row[j];
}

}  // namespace

Coeffs FrobeniusMatrix::apply(const Coeffs& h) const {
  Coeffs out(n_, 0);
  if (F_.small) {
    u64 budget = F_.lazy_terms;
    for (std::size_t i = 0; i < h.size() && i < n_; ++i) {
      const u64 x = h[i];
      if (x == 0) continue;
      if (budget == 0) {
        for (auto& v : out) v = F_.reduce(v);
        budget = F_.lazy_terms - 1;
      }
      --budget;
      axpy32(out.data(), rows32_.data() + i * n_, static_cast<std::uint32_t>(x), n_);
    }
    for (auto& v : out) v = F_.reduce(v);
  } else {
    for (std::size_t i = 0; i < h.size() && i < n_; ++i) {
      if (h[i] == 0) continue;
      const u64* row = rows_.data() + i * n_;
      for (std::size_t j = 0; j < n_; ++j) out[j] = F_.add(out[j], F_.mul(h[i], row[j]));
    }
  }
  trim(out);
  return out;
}

}  // namespace knotfm::detail
