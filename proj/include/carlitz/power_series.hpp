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
 * @file power_series.hpp
 * @brief The truncated power series ring F_q[t]/(t^T) and its unit group.
 *
 * A TruncSeries is exact modulo t^T: coefficients are field elements and
 * the precision T records how many of them are known. Binary operations
 * return a result at the smaller of the two operand precisions.
 */

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "carlitz/finite_field.hpp"

namespace carlitz {

class TruncSeries {
 public:
  /// The zero series at precision `prec` (>= 1).
  TruncSeries(FqSpecPtr spec, std::size_t prec);
  /// Precision is coeffs.size() (>= 1).
  TruncSeries(FqSpecPtr spec, std::vector<FqRaw> coeffs);

  static TruncSeries zero(const FqSpecPtr& spec, std::size_t prec) {
    return {spec, prec};
  }
  static TruncSeries one(const FqSpecPtr& spec, std::size_t prec);
  static TruncSeries constant(const FqElem& c, std::size_t prec);
  /// c * t^deg, which is zero when deg >= prec.
  static TruncSeries monomial(const FqElem& c, std::size_t deg,
                              std::size_t prec);
  /// Integer coefficients mapped through Z -> F_p; padded with zeros to prec.
  static TruncSeries from_ints(const FqSpecPtr& spec,
                               const std::vector<std::int64_t>& coeffs,
                               std::size_t prec);

  const FqSpecPtr& spec() const { return spec_; }
  const FqSpec& field() const { return *spec_; }
  std::size_t prec() const { return coeffs_.size(); }

  FqElem coeff(std::size_t i) const;
  void set_coeff(std::size_t i, const FqElem& c);
  std::span<const FqRaw> raw() const { return coeffs_; }
  FqRaw raw(std::size_t i) const { return coeffs_[i]; }

  bool is_zero() const;
  bool is_unit() const { return coeffs_[0] != 0; }

  /// Reduction to a smaller precision; throws InsufficientPrecision when
  /// prec exceeds the current one.
  TruncSeries truncated(std::size_t prec) const;

  TruncSeries operator-() const;
  TruncSeries& operator+=(const TruncSeries& rhs);
  TruncSeries& operator-=(const TruncSeries& rhs);
  TruncSeries& operator*=(const TruncSeries& rhs);
  TruncSeries& operator*=(const FqElem& scalar);

  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) {
    return a += b;
  }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) {
    return a -= b;
  }
  friend TruncSeries operator*(TruncSeries a, const TruncSeries& b) {
    return a *= b;
  }
  friend TruncSeries operator*(TruncSeries a, const FqElem& c) {
    return a *= c;
  }
  friend TruncSeries operator*(const FqElem& c, TruncSeries a) {
    return a *= c;
  }

  /// Same field, same precision, same coefficients.
  friend bool operator==(const TruncSeries& a, const TruncSeries& b);

  /// Canonical byte key: field id, precision, then the coefficient bytes.
  std::string key() const;

  /// Literal of the form `c0+c1*t+c2*t^2` (zero terms omitted).
  std::string to_string() const;

 private:
  FqSpecPtr spec_;
  std::vector<FqRaw> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const TruncSeries& f);

/// A series with a nonzero constant term; a unit of F_q[t]/(t^T).
class UnitClass {
 public:
  /// Throws NonUnit when the constant term vanishes.
  explicit UnitClass(TruncSeries series);
  const TruncSeries& series() const { return series_; }

 private:
  TruncSeries series_;
};

/// Multiplicative inverse mod t^prec. Throws NonUnit.
TruncSeries ts_inv(const TruncSeries& f);

/// Constant coefficient, i.e. the value of the series at t = 0.
FqElem ts_eval0(const TruncSeries& f);

/// f^n mod t^prec by square-and-multiply.
TruncSeries ts_pow(const TruncSeries& f, std::uint64_t n);

/// Parses `c0+c1*t+c2*t^2+...`; terms may repeat and appear in any order,
/// `-` is accepted as a sign. Coefficients are integers (reduced into F_p)
/// or `[c0,...,c_{e-1}]` for extension fields. Terms of degree >= prec are
/// dropped. Throws ParseError.
TruncSeries parse_series(const FqSpecPtr& spec, std::string_view literal,
                         std::size_t prec);

// ---------------------------------------------------------------------------
// Unit group enumeration.

inline constexpr std::uint64_t kDefaultEnumerationBudget = 100'000'000;

/// (q-1) * q^(T-1), saturating at UINT64_MAX.
std::uint64_t unit_count(unsigned q, std::size_t prec);

/// Splits the units mod t^T into disjoint, jointly exhaustive parts by their
/// leading coefficient prefix; part i of n receives the prefixes whose
/// lexicographic index is congruent to i mod n.
struct UnitPartition {
  std::size_t index = 0;
  std::size_t count = 1;
};

/// Calls `visit` with the raw coefficients of every unit mod t^prec in the
/// given partition, in lexicographic order (coefficient of t^0 most
/// significant, each coefficient in fq_enumerate order). Throws
/// BudgetExceeded when the total unit count exceeds `budget`.
void for_each_unit(const FqSpec& spec, std::size_t prec,
                   const std::function<void(std::span<const FqRaw>)>& visit,
                   UnitPartition part = {},
                   std::uint64_t budget = kDefaultEnumerationBudget);

/// Materialized enumeration, in the same order as for_each_unit.
std::vector<UnitClass> unit_enumerate(
    const FqSpecPtr& spec, std::size_t prec,
    std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace carlitz
