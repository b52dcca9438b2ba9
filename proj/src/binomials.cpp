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

#include "carlitz/binomials.hpp"

#include <string>

#include "carlitz/errors.hpp"
#include "carlitz/finite_field.hpp"

namespace carlitz {

namespace {

void require_prime(unsigned p) {
  if (!is_prime(p))
    throw InvalidCharacteristic(std::to_string(p) + " is not prime");
}

// Digit binomial C(a, b) mod p for a, b < p, via the multiplicative formula
// with a modular inverse of b!.
unsigned small_binom(unsigned a, unsigned b, unsigned p) {
  if (b > a) return 0;
  std::uint64_t num = 1;
  std::uint64_t den = 1;
  for (unsigned i = 0; i < b; ++i) {
    num = num * (a - i) % p;
    den = den * (i + 1) % p;
  }
  // den is a product of integers < p, hence invertible; Fermat inverse.
  std::uint64_t inv = 1;
  std::uint64_t base = den;
  for (unsigned e = p - 2; e; e >>= 1) {
    if (e & 1) inv = inv * base % p;
    base = base * base % p;
  }
  return static_cast<unsigned>(num * inv % p);
}

}  // namespace

unsigned binom_mod_p(std::uint64_t l, std::uint64_t j, unsigned p) {
  require_prime(p);
  if (j > l) return 0;
  std::uint64_t result = 1;
  while (j > 0 || l > 0) {
    const unsigned ld = static_cast<unsigned>(l % p);
    const unsigned jd = static_cast<unsigned>(j % p);
    if (jd > ld) return 0;
    result = result * small_binom(ld, jd, p) % p;
    l /= p;
    j /= p;
  }
  return static_cast<unsigned>(result);
}

unsigned binom_pascal_oracle(std::uint64_t l, std::uint64_t j, unsigned p) {
  require_prime(p);
  if (j > l) return 0;
  // row[i] holds C(r, i) mod p for the current row r, for i <= j.
  std::vector<unsigned> row(j + 1, 0);
  row[0] = 1;
  for (std::uint64_t r = 1; r <= l; ++r) {
    const std::uint64_t top = r < j ? r : j;
    for (std::uint64_t i = top; i >= 1; --i) row[i] = (row[i] + row[i - 1]) % p;
  }
  return row[j];
}

std::vector<std::vector<unsigned>> pascal_triangle_mod_p(unsigned max_l,
                                                         unsigned p) {
  require_prime(p);
  std::vector<std::vector<unsigned>> rows(max_l + 1);
  for (unsigned l = 0; l <= max_l; ++l) {
    rows[l].assign(l + 1, 1);
    for (unsigned i = 1; i < l; ++i)
      rows[l][i] = (rows[l - 1][i - 1] + rows[l - 1][i]) % p;
  }
  return rows;
}

}  // namespace carlitz
