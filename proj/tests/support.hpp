// Copyright 2026 The carlitz-jets Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Shared test helpers: reference computations written independently of the
// library code paths they check, plus seeded random generators.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "carlitz/finite_field.hpp"
#include "carlitz/power_series.hpp"

namespace carlitz::testing {

inline const std::vector<unsigned> kBuiltinOrders = {2, 3, 4, 5, 7,  8,
                                                     9, 11, 16, 25, 27};

/// F_p[x]/(f) on plain coefficient vectors; no tables, no packing.
class OracleField {
 public:
  OracleField(unsigned p, std::vector<unsigned> poly)
      : p_(p), poly_(std::move(poly)), e_(poly_.size() - 1) {}

  std::vector<unsigned> unpack(unsigned raw) const {
    std::vector<unsigned> c(e_);
    for (auto& v : c) {
      v = raw % p_;
      raw /= p_;
    }
    return c;
  }
  unsigned pack(const std::vector<unsigned>& c) const {
    unsigned raw = 0;
    for (std::size_t i = c.size(); i-- > 0;) raw = raw * p_ + c[i];
    return raw;
  }
  unsigned add(unsigned a, unsigned b) const {
    auto x = unpack(a), y = unpack(b);
    for (unsigned i = 0; i < e_; ++i) x[i] = (x[i] + y[i]) % p_;
    return pack(x);
  }
  unsigned mul(unsigned a, unsigned b) const {
    auto x = unpack(a), y = unpack(b);
    std::vector<unsigned> prod(2 * e_, 0);
    for (unsigned i = 0; i < e_; ++i)
      for (unsigned j = 0; j < e_; ++j)
        prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
    // Reduce from the top using x^e = -(f_0 + ... + f_{e-1} x^{e-1}).
    for (std::size_t d = prod.size(); d-- > e_;) {
      const unsigned c = prod[d];
      if (!c) continue;
      prod[d] = 0;
      for (unsigned i = 0; i < e_; ++i)
        prod[d - e_ + i] =
            (prod[d - e_ + i] + (p_ - poly_[i] % p_) * c) % p_;
    }
    prod.resize(e_);
    return pack(prod);
  }

 private:
  unsigned p_;
  std::vector<unsigned> poly_;
  unsigned e_;
};

/// Exact C(n, j) for n <= 62.
inline std::uint64_t exact_binom(unsigned n, unsigned j) {
  if (j > n) return 0;
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= j; ++i) r = r * (n - j + i) / i;
  return r;
}

inline std::vector<FqRaw> random_raw(std::mt19937_64& rng, unsigned q,
                                     std::size_t n) {
  std::vector<FqRaw> c(n);
  for (auto& v : c) v = static_cast<FqRaw>(rng() % q);
  return c;
}

inline TruncSeries random_series(std::mt19937_64& rng, const FqSpecPtr& spec,
                                 std::size_t prec) {
  return TruncSeries(spec, random_raw(rng, spec->order(), prec));
}

inline TruncSeries random_unit(std::mt19937_64& rng, const FqSpecPtr& spec,
                               std::size_t prec) {
  auto c = random_raw(rng, spec->order(), prec);
  c[0] = static_cast<FqRaw>(1 + rng() % (spec->order() - 1));
  return TruncSeries(spec, std::move(c));
}

}  // namespace carlitz::testing
