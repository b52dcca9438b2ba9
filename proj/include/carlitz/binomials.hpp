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

#pragma once

#include <cstdint>
#include <vector>

namespace carlitz {

/// C(l, j) mod p by Lucas' theorem: the product of the base-p digit
/// binomials. Zero when j > l. Throws InvalidCharacteristic unless p is prime.
unsigned binom_mod_p(std::uint64_t l, std::uint64_t j, unsigned p);

/// C(l, j) mod p by the additive recurrence C(l,j) = C(l-1,j-1) + C(l-1,j),
/// reduced mod p at every step. O(l * j); intended as an oracle.
unsigned binom_pascal_oracle(std::uint64_t l, std::uint64_t j, unsigned p);

/// Rows 0..max_l of Pascal's triangle mod p (row l has l+1 entries).
std::vector<std::vector<unsigned>> pascal_triangle_mod_p(unsigned max_l,
                                                         unsigned p);

}  // namespace carlitz
