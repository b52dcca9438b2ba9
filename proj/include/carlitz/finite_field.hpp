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

/**
 * @file finite_field.hpp
 * @brief Small finite fields F_q, q = p^e, in the polynomial basis.
 *
 * An element of F_q = F_p[x]/(f) is the coefficient vector (c_0, ..., c_{e-1})
 * of its reduced representative. Internally the vector is packed into the
 * integer sum c_i p^i (an FqRaw), and FqSpec precomputes addition and
 * multiplication tables at construction. The tables are filled by the
 * schoolbook polynomial product reduced modulo f, which stays available as
 * FqSpec::mul_poly.
 *
 * Hot loops (series arithmetic, enumeration) work with FqRaw values and an
 * FqSpec reference; FqElem is the checked value type used at API boundaries.
 */

#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace carlitz {

/// Packed polynomial-basis coefficients: sum of c_i * p^i.
using FqRaw = std::uint16_t;

bool is_prime(std::uint64_t n);

/// True iff the monic polynomial `poly` (low-to-high, over F_p) has no monic
/// factor of degree 1..deg/2. Exhaustive trial division; small degrees only.
bool is_irreducible(unsigned p, std::span<const unsigned> poly);

class FqSpec {
 public:
  static constexpr unsigned kDefaultMaxOrder = 256;
  /// Hard ceiling imposed by the table representation.
  static constexpr unsigned kMaxSupportedOrder = 1024;

  /// Validates p, the defining polynomial and the order bound.
  /// Throws InvalidCharacteristic or InvalidSpec.
  static std::shared_ptr<const FqSpec> make(
      unsigned p, std::vector<unsigned> defining_poly,
      unsigned max_order = kDefaultMaxOrder);

  /// F_p with defining polynomial x.
  static std::shared_ptr<const FqSpec> prime(unsigned p);

  unsigned p() const { return p_; }
  unsigned degree() const { return e_; }
  unsigned order() const { return q_; }
  const std::vector<unsigned>& defining_poly() const { return poly_; }

  /// Stable textual identity, e.g. "p=2;poly=1,1,1".
  const std::string& id() const { return id_; }

  bool same_field(const FqSpec& other) const {
    return this == &other || (p_ == other.p_ && poly_ == other.poly_);
  }

  FqRaw add(FqRaw a, FqRaw b) const { return add_[a * q_ + b]; }
  FqRaw neg(FqRaw a) const { return neg_[a]; }
  FqRaw sub(FqRaw a, FqRaw b) const { return add_[a * q_ + neg_[b]]; }
  FqRaw mul(FqRaw a, FqRaw b) const { return mul_[a * q_ + b]; }
  /// Throws DivisionByZero on 0.
  FqRaw inv(FqRaw a) const;
  FqRaw pow(FqRaw a, std::uint64_t n) const;

  /// Image of an integer under Z -> F_p -> F_q.
  FqRaw from_int(std::int64_t n) const;
  FqRaw from_coeffs(std::span<const unsigned> coeffs) const;
  std::vector<unsigned> coeffs(FqRaw a) const;

  /// Reference product by polynomial multiplication and reduction mod f.
  FqRaw mul_poly(FqRaw a, FqRaw b) const;

  /// Renders an element as an integer (prime field) or "[c0,...,c_{e-1}]".
  std::string format(FqRaw a) const;

 private:
  FqSpec(unsigned p, std::vector<unsigned> poly);

  unsigned p_;
  unsigned e_;
  unsigned q_;
  std::vector<unsigned> poly_;
  std::string id_;
  std::vector<FqRaw> add_;
  std::vector<FqRaw> neg_;
  std::vector<FqRaw> mul_;
  std::vector<FqRaw> inv_;
};

using FqSpecPtr = std::shared_ptr<const FqSpec>;

/// Throws SpecMismatch unless both pointers describe the same field.
void require_same_field(const FqSpec& a, const FqSpec& b);

class FqElem {
 public:
  FqElem(FqSpecPtr spec, FqRaw raw);

  static FqElem zero(const FqSpecPtr& spec) { return {spec, 0}; }
  static FqElem one(const FqSpecPtr& spec) { return {spec, 1}; }
  static FqElem from_int(const FqSpecPtr& spec, std::int64_t n);
  static FqElem from_coeffs(const FqSpecPtr& spec,
                            std::span<const unsigned> coeffs);

  const FqSpecPtr& spec() const { return spec_; }
  FqRaw raw() const { return raw_; }
  std::vector<unsigned> coeffs() const { return spec_->coeffs(raw_); }
  bool is_zero() const { return raw_ == 0; }

  FqElem inv() const;
  FqElem pow(std::uint64_t n) const;

  FqElem operator-() const;
  FqElem& operator+=(const FqElem& rhs);
  FqElem& operator-=(const FqElem& rhs);
  FqElem& operator*=(const FqElem& rhs);
  FqElem& operator/=(const FqElem& rhs);

  friend FqElem operator+(FqElem a, const FqElem& b) { return a += b; }
  friend FqElem operator-(FqElem a, const FqElem& b) { return a -= b; }
  friend FqElem operator*(FqElem a, const FqElem& b) { return a *= b; }
  friend FqElem operator/(FqElem a, const FqElem& b) { return a /= b; }

  friend bool operator==(const FqElem& a, const FqElem& b) {
    return a.spec_->same_field(*b.spec_) && a.raw_ == b.raw_;
  }

  std::string to_string() const { return spec_->format(raw_); }

 private:
  FqSpecPtr spec_;
  FqRaw raw_;
};

std::ostream& operator<<(std::ostream& os, const FqElem& a);

/// All q elements, lexicographic in the coefficient vector (c_0 first).
/// The first element is 0.
std::vector<FqElem> fq_enumerate(const FqSpecPtr& spec);

/// Raw values in fq_enumerate order.
std::vector<FqRaw> fq_enumerate_raw(const FqSpec& spec);

// ---------------------------------------------------------------------------
// Field resolution: built-in defining polynomials plus a key/value config.

struct FieldConfigEntry {
  unsigned q;
  std::vector<unsigned> poly;
};

/// Parses lines of the form `q=<int> poly=<c0,c1,...,ce>`. Blank lines and
/// lines starting with '#' are ignored. Throws ParseError.
std::vector<FieldConfigEntry> parse_field_config(std::istream& in);
std::vector<FieldConfigEntry> load_field_config(const std::string& path);

/// Defining polynomial for q when q is prime or one of 4, 8, 9, 16, 25, 27.
bool has_builtin_field(unsigned q);

/// Resolves q against the config entries first, then the built-ins.
/// Throws InvalidSpec when q is not resolvable.
FqSpecPtr resolve_field(unsigned q,
                        const std::vector<FieldConfigEntry>& config = {},
                        unsigned max_order = FqSpec::kDefaultMaxOrder);

}  // namespace carlitz
