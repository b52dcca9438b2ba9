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
 * @file cinfty.hpp
 * @brief A finite-precision slice of C_infinity and the Anderson-Thakur
 * function.
 *
 * Fix zeta with zeta^(q-1) = -theta and put u = 1/zeta. Then
 * theta = -u^-(q-1), and K_infinity(zeta) is the Laurent series field
 * F_q((u)). A UInftyElem is an element of F_q((u)) known modulo u^U: the
 * coefficients below `val` are zero, those in [val, U) are stored, and
 * nothing is known from U on. Exact elements (monomials such as theta)
 * carry U = kExactPrecision.
 *
 * Products follow the rule: x known on [vx, A) and y on [vy, B) give x*y
 * known on [vx+vy, min(A+vy, B+vx)). The q-power Frobenius maps
 * sum a_i u^i to sum a_i u^(iq), known on [q*vx, q*A).
 *
 * Series in t with coefficients in this model (TateSeries) carry the
 * Anderson-Thakur function omega and its hyperderivatives. All checks below
 * are exact comparisons on the common known window.
 */

#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "carlitz/finite_field.hpp"

namespace carlitz {

inline constexpr std::int64_t kExactPrecision =
    std::numeric_limits<std::int64_t>::max() / 4;

class UInftyElem {
 public:
  /// Zero modulo u^uprec (exact zero by default).
  static UInftyElem zero(const FqSpecPtr& spec,
                         std::int64_t uprec = kExactPrecision);
  /// c * u^exp, known up to uprec.
  static UInftyElem monomial(const FqElem& c, std::int64_t exp,
                             std::int64_t uprec = kExactPrecision);
  /// sum coeffs[i] u^(val+i), known up to uprec. Coefficients at exponents
  /// >= uprec are discarded; the result is normalized.
  static UInftyElem from_coeffs(const FqSpecPtr& spec, std::int64_t val,
                                std::vector<FqRaw> coeffs, std::int64_t uprec);

  /// theta = -u^-(q-1), exact.
  static UInftyElem theta(const FqSpecPtr& spec);
  /// zeta = u^-1, the fixed (q-1)-st root of -theta.
  static UInftyElem zeta(const FqSpecPtr& spec);

  const FqSpecPtr& spec() const { return spec_; }
  /// Lowest exponent with a nonzero coefficient; equals uprec() for zero.
  std::int64_t val() const { return val_; }
  /// Exclusive bound on the known exponents.
  std::int64_t uprec() const { return uprec_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_exact() const { return uprec_ >= kExactPrecision; }

  /// Coefficient of u^exp; InsufficientPrecision when exp >= uprec.
  FqElem coeff(std::int64_t exp) const;
  FqRaw raw_coeff(std::int64_t exp) const;

  /// Copy with the coefficient of u^exp replaced (exp < uprec).
  UInftyElem with_coeff(std::int64_t exp, const FqElem& c) const;

  /// Forget everything from exponent `uprec` on (never raises precision).
  UInftyElem truncated(std::int64_t uprec) const;

  UInftyElem operator-() const;
  friend UInftyElem operator+(const UInftyElem& x, const UInftyElem& y);
  friend UInftyElem operator-(const UInftyElem& x, const UInftyElem& y);
  friend UInftyElem operator*(const UInftyElem& x, const UInftyElem& y);
  friend UInftyElem operator*(const FqElem& c, const UInftyElem& x);

  /// Inverse. DivisionByZero for zero; InsufficientPrecision for an exact
  /// element with more than one term (its inverse is an infinite series).
  UInftyElem inv() const;

  /// The q-power Frobenius x -> x^q.
  UInftyElem frobenius_q() const;

  /// Exact equality on the common known window [min val, min uprec).
  /// Exact elements are compared outright and two zeros always agree.
  /// Throws WindowEmpty when a nonzero operand starts at or beyond the
  /// coarser precision.
  bool agrees_with(const UInftyElem& other) const;

  std::string to_string() const;

 private:
  UInftyElem(FqSpecPtr spec, std::int64_t val, std::vector<FqRaw> coeffs,
             std::int64_t uprec);
  void normalize();

  FqSpecPtr spec_;
  std::int64_t val_;
  std::int64_t uprec_;
  std::vector<FqRaw> coeffs_;  // exponents val_ .. val_ + size - 1
};

/// Power series in t over the C_infinity model; entry n is the coefficient
/// of t^n and the t-precision is the entry count.
using TateSeries = std::vector<UInftyElem>;

/// D^(j) on a TateSeries: entry n is C(n+j, j) h_{n+j}. Result t-precision
/// is size - j; InsufficientPrecision when j >= size.
TateSeries tate_hyperderivative(std::size_t j, const TateSeries& h);

/// tau applied coefficientwise.
TateSeries tate_frobenius(const TateSeries& h);

/// (t - theta) * h at the same t-precision.
TateSeries tate_times_t_minus_theta(const TateSeries& h);

/// Entrywise agreement of two t-series over their common t-precision.
bool tate_agrees(const TateSeries& a, const TateSeries& b);

/// The Anderson-Thakur function truncated mod t^T.
struct OmegaSeries {
  FqSpecPtr spec;
  /// Relative u-window: entry n is known on [val_n, val_n + uspan).
  std::int64_t uspan = 0;
  TateSeries entries;

  std::size_t tprec() const { return entries.size(); }
};

/// omega = zeta * prod_{i>=0} (1 - t / theta^(q^i))^-1 modulo t^T, each
/// t-coefficient known on a u-window of length U above its valuation
/// -1 + n(q-1). InsufficientPrecision unless T >= 1 and U >= 1.
OmegaSeries compute_omega(const FqSpecPtr& spec, std::size_t tprec,
                          std::int64_t uspan);

/// Factors of the product that can reach the u-window of length U:
/// those i with (q-1)(q^i - 1) < U.
std::size_t omega_factor_count(unsigned q, std::int64_t uspan);

/// tau(omega) == (t - theta) omega, coefficientwise in t.
bool verify_carlitz_equation(const OmegaSeries& omega);

/// tau(D^(j) omega) == D^(j)((t - theta) omega) for all j <= k.
/// InsufficientPrecision when the t-precision is <= k.
bool verify_prolongation_trivialization(const OmegaSeries& omega,
                                        std::size_t k);

/// The t-action of the k-th prolongation of the Carlitz module on a point
/// e = (e_0, ..., e_k): (Theta_k e)_r = theta e_r - e_{r+1} plus the
/// Frobenius part tau(e_r). Theta_k - theta*Id is the negated superdiagonal
/// shift, nilpotent of order k+1.
struct ProlongationAction {
  std::size_t k = 0;

  std::vector<UInftyElem> apply_linear(const std::vector<UInftyElem>& e) const;
  /// (Theta_k - theta Id) e, i.e. the shifted vector -(e_1, ..., e_k, 0).
  std::vector<UInftyElem> apply_nilpotent(const std::vector<UInftyElem>& e) const;
  std::vector<UInftyElem> apply(const std::vector<UInftyElem>& e) const;
};

/// Column c of the jet matrix of omega: D^(c-r) omega in row r <= c, exact
/// zeros below. Row t-precisions are T - (c - r).
std::vector<TateSeries> omega_jet_column(const OmegaSeries& omega,
                                         std::size_t k, std::size_t c);

/// Membership in the Tate-module series space of the k-th prolongation:
/// Theta_k h(t) + tau(h)(t) == t h(t), row by row, over every t-coefficient
/// where the rows involved are known. ShapeMismatch unless h has k+1 rows.
bool verify_hhat_membership(std::size_t k, const std::vector<TateSeries>& h);

/// Table of C(i+j, j) (D^(i+j) omega)(0) for i <= n, j <= k, indexed
/// [i][j]. InsufficientPrecision unless the t-precision exceeds n + k.
std::vector<std::vector<UInftyElem>> torsion_generators(
    const OmegaSeries& omega, std::size_t n, std::size_t k);

/// JSON document {q, p, e, tprec, uspan, entries: [{n, val, uprec, coeffs}]}
/// where coeffs lists the window [val, uprec) in order.
std::string omega_to_json(const OmegaSeries& omega);

}  // namespace carlitz
