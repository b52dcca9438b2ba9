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
 * @file hyperderivatives.hpp
 * @brief Hyperdifferential operators D^(n) on F_q[t]/(t^T) and jet matrices.
 *
 * D^(n) sends sum x_i t^i to sum C(i, n) x_i t^(i-n) with the binomial taken
 * mod p. The jet of order k of f is the upper-triangular Toeplitz matrix whose
 * j-th superdiagonal is D^(j) f; the map f -> jet(k, f) is a ring
 * homomorphism, so jets multiply by the Cauchy product of their rows.
 *
 * Jets are precision-homogeneous: jet(k, f) reads f at precision T + k and
 * emits every row at precision T, because the coefficient of t^i in D^(j) f
 * is a multiple of the coefficient of t^(i+j) in f.
 */

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "carlitz/power_series.hpp"

namespace carlitz {

/// D^(n) f at precision prec(f) - n. When n >= prec(f) nothing is known:
/// the zero series at precision 1 is returned and `*exhausted` (if given)
/// is set. The flag is cleared otherwise.
TruncSeries hyperderivative(std::size_t n, const TruncSeries& f,
                            bool* exhausted = nullptr);

class JetMatrix {
 public:
  /// rows[j] is the j-th superdiagonal; all rows must share field and
  /// precision (ShapeMismatch otherwise). Requires at least one row.
  explicit JetMatrix(std::vector<TruncSeries> rows);

  static JetMatrix identity(const FqSpecPtr& spec, std::size_t k,
                            std::size_t prec);

  std::size_t k() const { return rows_.size() - 1; }
  std::size_t dim() const { return rows_.size(); }
  std::size_t prec() const { return rows_.front().prec(); }
  const FqSpecPtr& spec() const { return rows_.front().spec(); }

  const TruncSeries& row(std::size_t j) const { return rows_.at(j); }
  const std::vector<TruncSeries>& rows() const { return rows_; }

  /// Matrix entry (i, c): rows[c - i] on or above the diagonal, else zero.
  TruncSeries entry(std::size_t i, std::size_t c) const;

  bool is_invertible() const { return rows_.front().is_unit(); }

  friend bool operator==(const JetMatrix& a, const JetMatrix& b) {
    return a.rows_ == b.rows_;
  }

  /// Canonical byte key of the row tuple.
  std::string key() const;
  std::string to_string() const;

 private:
  std::vector<TruncSeries> rows_;
};

/// Jet of order k with output precision prec(f) - k.
/// Throws InsufficientPrecision when prec(f) <= k.
JetMatrix jet(std::size_t k, const TruncSeries& f);

/// Jet of order k with rows at precision out_prec.
/// Throws InsufficientPrecision when prec(f) < out_prec + k.
JetMatrix jet(std::size_t k, const TruncSeries& f, std::size_t out_prec);

/// Toeplitz product: c_j = sum_{i<=j} a_i b_{j-i}. ShapeMismatch unless the
/// operands agree in field, order and precision.
JetMatrix jet_mul(const JetMatrix& a, const JetMatrix& b);

/// Inverse inside the Toeplitz group. Throws NonUnit when a_0 is not a unit.
JetMatrix jet_inv(const JetMatrix& a);

/// D^(n)(fg) == sum_i D^(i) f * D^(n-i) g, compared at precision
/// min(prec f, prec g) - n. InsufficientPrecision when n >= that minimum.
bool verify_leibniz(std::size_t n, const TruncSeries& f, const TruncSeries& g);

/// D^(n) D^(m) f == C(n+m, n) D^(n+m) f at precision prec(f) - n - m.
/// InsufficientPrecision when n + m >= prec(f).
bool verify_iteration(std::size_t n, std::size_t m, const TruncSeries& f);

/// f == sum_i (D^(i) f)(0) t^i over all known coefficients.
bool verify_taylor(const TruncSeries& f);

}  // namespace carlitz
