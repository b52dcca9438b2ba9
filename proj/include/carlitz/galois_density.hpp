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
 * @file galois_density.hpp
 * @brief Images of the t-adic representations of Carlitz prolongations and
 * Carlitz tensor powers, and their densities.
 *
 * The Galois group acts on the t-adic Tate module of the Carlitz module
 * through a surjection onto F_q[[t]]^x, so the image of the representation
 * attached to the k-th prolongation is the set of jets jet(k, a) over all
 * units a, and the image for the d-th tensor power is the set of d-th powers.
 * D(N) is the size of the image reduced mod t^N.
 *
 * Every D(N) here has the shape unit * q^E with unit = q-1 (prolongations)
 * or the number of d'-th powers in F_q^x (tensor powers). It is stored in
 * that shape; log_q(D(N)) only becomes a real number when rendered.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "carlitz/hyperderivatives.hpp"
#include "carlitz/power_series.hpp"

namespace carlitz {

/// unit * q^exponent.
struct ImageOrder {
  std::uint64_t unit = 1;
  std::uint64_t exponent = 0;

  /// Exact decimal rendering for the given q.
  std::string to_decimal(unsigned q) const;
  friend bool operator==(const ImageOrder&, const ImageOrder&) = default;
};

/// Writes count as unit * q^E; MalformedOrder when that is impossible.
ImageOrder as_image_order(std::uint64_t count, std::uint64_t unit, unsigned q);

struct Ratio {
  std::int64_t num = 0;
  std::int64_t den = 1;
  double value() const { return static_cast<double>(num) / den; }
};

struct BruteOptions {
  std::size_t threads = 1;
  std::uint64_t budget = kDefaultEnumerationBudget;
  /// Enumerate units at precision N + k + extra_precision instead of N + k.
  std::size_t extra_precision = 0;
};

// --- prolongations ----------------------------------------------------------

/// The image of a unit a: jet(k, a) at uniform precision N. Requires a known
/// mod t^(N+k) (InsufficientPrecision otherwise).
JetMatrix galois_rep(const UnitClass& a, std::size_t k, std::size_t N);

/// Number of distinct galois_rep(a, k, N) over all units a mod t^(N+k).
std::uint64_t image_order_brute(const FqSpecPtr& spec, std::size_t k,
                                std::size_t N, const BruteOptions& opts = {});

/// Indices l in [N, N+k-1] such that C(l, j) != 0 mod p for some j with
/// l-N+1 <= j <= k: coefficients of a beyond t^(N-1) that the jet mod t^N
/// still sees.
std::vector<std::size_t> extra_indices(unsigned p, std::size_t k,
                                       std::size_t N);

/// (q-1) * q^(N-1+|extra_indices|).
ImageOrder image_order_formula(const FqSpec& spec, std::size_t k,
                               std::size_t N);

/// The largest l <= n+k such that C(l, j) != 0 mod p for some j with
/// max(0, l-n) <= j <= min(k, l). Also checks that every l <= m has such a
/// j; throws SegmentViolation if not.
std::size_t torsion_level_m(unsigned p, std::size_t n, std::size_t k);

/// Finite-N density estimate log_q(D(N)) / (N * dim) carried as
/// (exponent + log_q(unit)) / denominator.
struct DensityEstimate {
  std::uint64_t exponent = 0;
  std::uint64_t unit = 1;
  std::uint64_t denominator = 1;

  /// exponent / denominator, the part of the estimate that is rational.
  Ratio rational_part() const;
  double value(unsigned q) const;
};

DensityEstimate density_estimate(const ImageOrder& order, std::size_t N,
                                 std::size_t dim);

/// Sandwich (q-1) q^(N-1) <= D(N) <= (q-1) q^(N+k-1) divided through:
/// lower = (N-1 + log_q(q-1)) / (N(k+1)), upper = (N+k-1 + log_q(q-1)) / (N(k+1)).
struct DensityBounds {
  Ratio lower;  ///< rational part of the lower bound
  Ratio upper;  ///< rational part of the upper bound
  double lower_value = 0;
  double upper_value = 0;
};

DensityBounds density_bounds(std::size_t k, std::size_t N, unsigned q);

// --- tensor powers ----------------------------------------------------------

/// d = p^e * d' with d' prime to p.
struct PowerSplit {
  std::uint64_t p_power = 1;  ///< p^e
  std::uint64_t e = 0;
  std::uint64_t d_prime = 1;
};

PowerSplit split_power(std::uint64_t d, unsigned p);

/// Number of d'-th powers in F_q^x: (q-1) / gcd(d', q-1).
std::uint64_t tensor_unit_part(unsigned q, std::uint64_t d);

/// Number of distinct a^d mod t^N over the units a mod t^N.
std::uint64_t tensor_image_order_brute(const FqSpecPtr& spec, std::uint64_t d,
                                       std::size_t N,
                                       const BruteOptions& opts = {});

/// w * q^floor((N-1) / p^e).
ImageOrder tensor_image_order_formula(const FqSpec& spec, std::uint64_t d,
                                      std::size_t N);

// --- tables -----------------------------------------------------------------

enum class Mode { kBrute, kFormula, kBoth };
enum class Family { kProlongation, kTensorPower };

std::string to_string(Mode mode);
/// "brute", "formula" or "both"; ParseError otherwise.
Mode parse_mode(const std::string& text);

struct DensityProblem {
  FqSpecPtr spec;
  Family family = Family::kProlongation;
  /// Jet order k (prolongations) or tensor exponent d (tensor powers).
  std::uint64_t parameter = 0;
  std::size_t n_max = 1;
  Mode mode = Mode::kBoth;
  std::uint64_t seed = 0;
  BruteOptions brute;

  /// dim of the Zariski closure of the image: k+1, or 1 for tensor powers.
  std::size_t group_dim() const;
};

struct ImageRow {
  std::size_t N = 0;
  std::optional<std::uint64_t> d_brute;
  std::optional<ImageOrder> d_formula;
  std::optional<std::size_t> extra_m;
  DensityEstimate delta;
  bool matched = true;
};

struct ImageTable {
  DensityProblem problem;
  std::vector<ImageRow> rows;

  bool all_matched() const;
  /// First row whose brute and formula counts disagree.
  std::optional<std::size_t> first_mismatch() const;
};

/// Rows N = 1..n_max. BudgetExceeded propagates from brute enumeration.
ImageTable density_table(const DensityProblem& problem);

/// Tensor-power table for d over N = 1..n_max.
ImageTable tensor_density(const FqSpecPtr& spec, std::uint64_t d,
                          std::size_t n_max, Mode mode = Mode::kFormula,
                          const BruteOptions& brute = {});

inline constexpr const char* kCsvHeader =
    "N,D_brute,D_formula,extra_m,delta_hat_num,delta_hat_den,delta_hat_real";

std::string to_csv(const ImageTable& table);
std::string to_json(const ImageTable& table);

// --- motivic group and Zariski density --------------------------------------

/// Dimension of the Toeplitz group of order k: k+1 free row parameters.
inline std::size_t motivic_group_dim(std::size_t k) { return k + 1; }

/// Samples `samples` jets with unit diagonal mod t^prec and checks that
/// products and inverses stay in the group, that inverses are two-sided and
/// that products are associative on consecutive triples.
bool motivic_group_check(const FqSpecPtr& spec, std::size_t k,
                         std::size_t prec, std::size_t samples,
                         std::uint64_t seed);

struct ZariskiOptions {
  std::uint64_t seed = 20210204;
  /// Use every unit mod t^(N+k) when there are at most this many.
  std::uint64_t exhaustive_limit = 100'000;
  /// Otherwise draw this many units.
  std::size_t samples = 20'000;
  /// Ceiling on (evaluation rows) x (columns).
  std::uint64_t budget = kDefaultEnumerationBudget;
};

struct RankCertificate {
  bool full_rank = false;
  std::size_t rank = 0;
  std::size_t columns = 0;
  std::size_t rows = 0;
  std::size_t units = 0;
  bool exhaustive = false;
};

/// Exponent vectors in k+1 variables of total degree <= deg_bound, by degree
/// and then lexicographically (descending in X_0).
std::vector<std::vector<unsigned>> monomials_up_to(std::size_t vars,
                                                   unsigned deg_bound);

/// Builds the linear map taking the coefficients c_{m,s} of a candidate
/// relation P = sum c_{m,s} t^s X^m (deg m <= deg_bound, s <= tdeg_bound) to
/// the t-coefficients mod t^N of P(a, D^(1)a, ..., D^(k)a) for every unit a
/// in the evaluation set, and returns its rank over F_q.
RankCertificate zariski_rank_certificate(const FqSpecPtr& spec, std::size_t k,
                                         unsigned deg_bound,
                                         unsigned tdeg_bound, std::size_t N,
                                         const ZariskiOptions& opts = {});

/// Same map over an explicit evaluation set (units known mod t^(N+k)).
RankCertificate zariski_rank_certificate(const FqSpecPtr& spec, std::size_t k,
                                         unsigned deg_bound,
                                         unsigned tdeg_bound, std::size_t N,
                                         const std::vector<UnitClass>& units,
                                         std::uint64_t budget =
                                             kDefaultEnumerationBudget);

}  // namespace carlitz
