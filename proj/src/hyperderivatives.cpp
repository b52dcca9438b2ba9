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

#include "carlitz/hyperderivatives.hpp"

#include "carlitz/binomials.hpp"
#include "carlitz/errors.hpp"

namespace carlitz {

namespace {

// D^(n) f restricted to its first `out_prec` coefficients; caller guarantees
// out_prec + n <= prec(f).
TruncSeries hyperderivative_to(std::size_t n, const TruncSeries& f,
                               std::size_t out_prec) {
  const FqSpec& k = f.field();
  std::vector<FqRaw> out(out_prec, 0);
  for (std::size_t i = 0; i < out_prec; ++i) {
    const FqRaw x = f.raw(i + n);
    if (x == 0) continue;
    const unsigned c = binom_mod_p(i + n, n, k.p());
    if (c != 0) out[i] = k.mul(k.from_int(c), x);
  }
  return {f.spec(), std::move(out)};
}

}  // namespace

TruncSeries hyperderivative(std::size_t n, const TruncSeries& f,
                            bool* exhausted) {
  const bool gone = n >= f.prec();
  if (exhausted) *exhausted = gone;
  if (gone) return TruncSeries::zero(f.spec(), 1);
  return hyperderivative_to(n, f, f.prec() - n);
}

// --- JetMatrix ---------------------------------------------------------------

JetMatrix::JetMatrix(std::vector<TruncSeries> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw ShapeMismatch("a jet needs at least one row");
  for (const auto& r : rows_) {
    if (!r.field().same_field(rows_.front().field()))
      throw ShapeMismatch("jet rows over different fields");
    if (r.prec() != rows_.front().prec())
      throw ShapeMismatch("jet rows at different precisions");
  }
}

JetMatrix JetMatrix::identity(const FqSpecPtr& spec, std::size_t k,
                              std::size_t prec) {
  std::vector<TruncSeries> rows(k + 1, TruncSeries::zero(spec, prec));
  rows[0] = TruncSeries::one(spec, prec);
  return JetMatrix(std::move(rows));
}

TruncSeries JetMatrix::entry(std::size_t i, std::size_t c) const {
  if (i > k() || c > k()) throw ShapeMismatch("entry outside the matrix");
  if (c < i) return TruncSeries::zero(spec(), prec());
  return rows_[c - i];
}

std::string JetMatrix::key() const {
  std::string out;
  for (const auto& r : rows_) out += r.key();
  return out;
}

std::string JetMatrix::to_string() const {
  std::string s = "(";
  for (std::size_t j = 0; j < rows_.size(); ++j) {
    if (j) s += ", ";
    s += rows_[j].to_string();
  }
  return s + ")";
}

JetMatrix jet(std::size_t k, const TruncSeries& f) {
  if (f.prec() <= k)
    throw InsufficientPrecision("jet of order " + std::to_string(k) +
                                " needs precision > " + std::to_string(k));
  return jet(k, f, f.prec() - k);
}

JetMatrix jet(std::size_t k, const TruncSeries& f, std::size_t out_prec) {
  if (out_prec == 0) throw InsufficientPrecision("output precision is 0");
  if (f.prec() < out_prec + k)
    throw InsufficientPrecision(
        "jet of order " + std::to_string(k) + " at precision " +
        std::to_string(out_prec) + " needs input precision " +
        std::to_string(out_prec + k) + ", got " + std::to_string(f.prec()));
  std::vector<TruncSeries> rows;
  rows.reserve(k + 1);
  for (std::size_t j = 0; j <= k; ++j)
    rows.push_back(hyperderivative_to(j, f, out_prec));
  return JetMatrix(std::move(rows));
}

JetMatrix jet_mul(const JetMatrix& a, const JetMatrix& b) {
  if (a.k() != b.k() || a.prec() != b.prec() ||
      !a.spec()->same_field(*b.spec()))
    throw ShapeMismatch("jet_mul operands differ in field, order or precision");
  std::vector<TruncSeries> rows;
  rows.reserve(a.dim());
  for (std::size_t j = 0; j <= a.k(); ++j) {
    TruncSeries c = TruncSeries::zero(a.spec(), a.prec());
    for (std::size_t i = 0; i <= j; ++i) c += a.row(i) * b.row(j - i);
    rows.push_back(std::move(c));
  }
  return JetMatrix(std::move(rows));
}

JetMatrix jet_inv(const JetMatrix& a) {
  if (!a.is_invertible()) throw NonUnit("diagonal entry is not a unit");
  const TruncSeries a0inv = ts_inv(a.row(0));
  std::vector<TruncSeries> rows;
  rows.reserve(a.dim());
  rows.push_back(a0inv);
  // b_j = -a_0^{-1} sum_{i=1..j} a_i b_{j-i}
  for (std::size_t j = 1; j <= a.k(); ++j) {
    TruncSeries acc = TruncSeries::zero(a.spec(), a.prec());
    for (std::size_t i = 1; i <= j; ++i) acc += a.row(i) * rows[j - i];
    rows.push_back(-(a0inv * acc));
  }
  return JetMatrix(std::move(rows));
}

// --- identities --------------------------------------------------------------

bool verify_leibniz(std::size_t n, const TruncSeries& f, const TruncSeries& g) {
  require_same_field(f.field(), g.field());
  const std::size_t base = std::min(f.prec(), g.prec());
  if (n >= base)
    throw InsufficientPrecision("Leibniz check of order " + std::to_string(n) +
                                " at precision " + std::to_string(base));
  const std::size_t out = base - n;
  const TruncSeries lhs = hyperderivative(n, (f * g)).truncated(out);
  TruncSeries rhs = TruncSeries::zero(f.spec(), out);
  for (std::size_t i = 0; i <= n; ++i)
    rhs += hyperderivative(i, f).truncated(out) *
           hyperderivative(n - i, g).truncated(out);
  return lhs == rhs;
}

bool verify_iteration(std::size_t n, std::size_t m, const TruncSeries& f) {
  if (n + m >= f.prec())
    throw InsufficientPrecision("iteration check of order " +
                                std::to_string(n + m) + " at precision " +
                                std::to_string(f.prec()));
  const TruncSeries lhs = hyperderivative(n, hyperderivative(m, f));
  const FqElem c = FqElem::from_int(f.spec(), binom_mod_p(n + m, n, f.field().p()));
  const TruncSeries rhs = c * hyperderivative(n + m, f);
  return lhs == rhs;
}

bool verify_taylor(const TruncSeries& f) {
  TruncSeries sum = TruncSeries::zero(f.spec(), f.prec());
  for (std::size_t i = 0; i < f.prec(); ++i)
    sum += TruncSeries::monomial(ts_eval0(hyperderivative(i, f)), i, f.prec());
  return sum == f;
}

}  // namespace carlitz
