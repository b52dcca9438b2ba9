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

#include "carlitz/cinfty.hpp"

#include <algorithm>

#include "carlitz/binomials.hpp"
#include "carlitz/errors.hpp"
#include "json.hpp"

namespace carlitz {

namespace {

std::int64_t sat_add(std::int64_t a, std::int64_t b) {
  if (a >= kExactPrecision || b >= kExactPrecision) return kExactPrecision;
  return std::min(a + b, kExactPrecision);
}

std::int64_t sat_scale(std::int64_t a, std::int64_t q) {
  if (a >= kExactPrecision) return kExactPrecision;
  return std::min(a * q, kExactPrecision);
}

}  // namespace

UInftyElem::UInftyElem(FqSpecPtr spec, std::int64_t val,
                       std::vector<FqRaw> coeffs, std::int64_t uprec)
    : spec_(std::move(spec)), val_(val), uprec_(uprec),
      coeffs_(std::move(coeffs)) {
  normalize();
}

void UInftyElem::normalize() {
  if (!is_exact()) {
    const std::int64_t room = uprec_ - val_;
    if (room <= 0) {
      coeffs_.clear();
    } else if (static_cast<std::int64_t>(coeffs_.size()) > room) {
      coeffs_.resize(static_cast<std::size_t>(room));
    }
  }
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  const auto lead = std::find_if(coeffs_.begin(), coeffs_.end(),
                                 [](FqRaw c) { return c != 0; });
  val_ += lead - coeffs_.begin();
  coeffs_.erase(coeffs_.begin(), lead);
  if (coeffs_.empty()) val_ = uprec_;
}

UInftyElem UInftyElem::zero(const FqSpecPtr& spec, std::int64_t uprec) {
  return UInftyElem(spec, uprec, {}, uprec);
}

UInftyElem UInftyElem::monomial(const FqElem& c, std::int64_t exp,
                                std::int64_t uprec) {
  return UInftyElem(c.spec(), exp, {c.raw()}, uprec);
}

UInftyElem UInftyElem::from_coeffs(const FqSpecPtr& spec, std::int64_t val,
                                   std::vector<FqRaw> coeffs,
                                   std::int64_t uprec) {
  for (FqRaw c : coeffs)
    if (c >= spec->order()) throw InvalidSpec("raw value out of range");
  return UInftyElem(spec, val, std::move(coeffs), uprec);
}

UInftyElem UInftyElem::theta(const FqSpecPtr& spec) {
  const auto q = static_cast<std::int64_t>(spec->order());
  return monomial(FqElem::from_int(spec, -1), -(q - 1));
}

UInftyElem UInftyElem::zeta(const FqSpecPtr& spec) {
  return monomial(FqElem::one(spec), -1);
}

FqRaw UInftyElem::raw_coeff(std::int64_t exp) const {
  if (exp >= uprec_)
    throw InsufficientPrecision("u^" + std::to_string(exp) +
                                " is beyond the known window ending at " +
                                std::to_string(uprec_));
  if (exp < val_) return 0;
  const auto idx = static_cast<std::size_t>(exp - val_);
  return idx < coeffs_.size() ? coeffs_[idx] : 0;
}

FqElem UInftyElem::coeff(std::int64_t exp) const {
  return {spec_, raw_coeff(exp)};
}

UInftyElem UInftyElem::with_coeff(std::int64_t exp, const FqElem& c) const {
  require_same_field(*spec_, *c.spec());
  if (exp >= uprec_)
    throw InsufficientPrecision("cannot set a coefficient beyond the window");
  const std::int64_t lo = std::min(val_, exp);
  const std::int64_t hi =
      std::max(val_ + static_cast<std::int64_t>(coeffs_.size()), exp + 1);
  std::vector<FqRaw> out(static_cast<std::size_t>(hi - lo), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    out[static_cast<std::size_t>(val_ - lo) + i] = coeffs_[i];
  out[static_cast<std::size_t>(exp - lo)] = c.raw();
  return UInftyElem(spec_, lo, std::move(out), uprec_);
}

UInftyElem UInftyElem::truncated(std::int64_t uprec) const {
  return UInftyElem(spec_, val_, coeffs_, std::min(uprec, uprec_));
}

UInftyElem UInftyElem::operator-() const {
  std::vector<FqRaw> out(coeffs_);
  for (auto& c : out) c = spec_->neg(c);
  return UInftyElem(spec_, val_, std::move(out), uprec_);
}

UInftyElem operator+(const UInftyElem& x, const UInftyElem& y) {
  require_same_field(*x.spec_, *y.spec_);
  const std::int64_t hi = std::min(x.uprec_, y.uprec_);
  const std::int64_t lo = std::min(x.val_, y.val_);
  if (lo >= hi) return UInftyElem::zero(x.spec_, hi);
  const std::int64_t end = std::min(
      hi, std::max(x.val_ + static_cast<std::int64_t>(x.coeffs_.size()),
                   y.val_ + static_cast<std::int64_t>(y.coeffs_.size())));
  std::vector<FqRaw> out(static_cast<std::size_t>(std::max<std::int64_t>(end - lo, 0)), 0);
  const FqSpec& k = *x.spec_;
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
    const std::int64_t e = x.val_ + static_cast<std::int64_t>(i);
    if (e >= end) break;
    out[static_cast<std::size_t>(e - lo)] = x.coeffs_[i];
  }
  for (std::size_t i = 0; i < y.coeffs_.size(); ++i) {
    const std::int64_t e = y.val_ + static_cast<std::int64_t>(i);
    if (e >= end) break;
    auto& slot = out[static_cast<std::size_t>(e - lo)];
    slot = k.add(slot, y.coeffs_[i]);
  }
  return UInftyElem(x.spec_, lo, std::move(out), hi);
}

UInftyElem operator-(const UInftyElem& x, const UInftyElem& y) {
  return x + (-y);
}

UInftyElem operator*(const UInftyElem& x, const UInftyElem& y) {
  require_same_field(*x.spec_, *y.spec_);
  const std::int64_t hi =
      std::min(sat_add(x.uprec_, y.val_), sat_add(y.uprec_, x.val_));
  if (x.is_zero() || y.is_zero()) return UInftyElem::zero(x.spec_, hi);
  const std::int64_t lo = x.val_ + y.val_;
  std::size_t len = x.coeffs_.size() + y.coeffs_.size() - 1;
  if (hi < kExactPrecision)
    len = std::min<std::size_t>(len, static_cast<std::size_t>(std::max<std::int64_t>(hi - lo, 0)));
  std::vector<FqRaw> out(len, 0);
  const FqSpec& k = *x.spec_;
  for (std::size_t i = 0; i < x.coeffs_.size() && i < len; ++i) {
    if (x.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < y.coeffs_.size() && i + j < len; ++j)
      out[i + j] = k.add(out[i + j], k.mul(x.coeffs_[i], y.coeffs_[j]));
  }
  return UInftyElem(x.spec_, lo, std::move(out), hi);
}

UInftyElem operator*(const FqElem& c, const UInftyElem& x) {
  require_same_field(*c.spec(), *x.spec_);
  std::vector<FqRaw> out(x.coeffs_);
  for (auto& v : out) v = x.spec_->mul(v, c.raw());
  return UInftyElem(x.spec_, x.val_, std::move(out), x.uprec_);
}

UInftyElem UInftyElem::inv() const {
  if (is_zero()) throw DivisionByZero("inverse of a zero element");
  const FqSpec& k = *spec_;
  const FqRaw c0inv = k.inv(coeffs_[0]);
  if (is_exact()) {
    if (coeffs_.size() != 1)
      throw InsufficientPrecision(
          "inverse of an exact non-monomial needs a finite window");
    return UInftyElem(spec_, -val_, {c0inv}, kExactPrecision);
  }
  const auto rel = static_cast<std::size_t>(uprec_ - val_);
  std::vector<FqRaw> g(rel, 0);
  g[0] = c0inv;
  for (std::size_t m = 1; m < rel; ++m) {
    FqRaw acc = 0;
    for (std::size_t i = 1; i <= m && i < coeffs_.size(); ++i)
      acc = k.add(acc, k.mul(coeffs_[i], g[m - i]));
    g[m] = k.neg(k.mul(c0inv, acc));
  }
  return UInftyElem(spec_, -val_, std::move(g),
                    -val_ + static_cast<std::int64_t>(rel));
}

UInftyElem UInftyElem::frobenius_q() const {
  const std::int64_t q = spec_->order();
  const std::int64_t up = sat_scale(uprec_, q);
  if (is_zero()) return zero(spec_, up);
  std::vector<FqRaw> out((coeffs_.size() - 1) * static_cast<std::size_t>(q) + 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    out[i * static_cast<std::size_t>(q)] =
        spec_->pow(coeffs_[i], static_cast<std::uint64_t>(q));
  return UInftyElem(spec_, val_ * q, std::move(out), up);
}

bool UInftyElem::agrees_with(const UInftyElem& other) const {
  require_same_field(*spec_, *other.spec_);
  if (is_exact() && other.is_exact())
    return val_ == other.val_ && coeffs_ == other.coeffs_;
  const std::int64_t lo = std::min(val_, other.val_);
  const std::int64_t hi = std::min(uprec_, other.uprec_);
  // Two zeros agree modulo the coarser precision.
  if (is_zero() && other.is_zero()) return true;
  if (hi <= lo)
    throw WindowEmpty("no comparable u-exponents (window [" +
                      std::to_string(lo) + ", " + std::to_string(hi) + "))");
  const std::int64_t end = std::min(
      hi, std::max(val_ + static_cast<std::int64_t>(coeffs_.size()),
                   other.val_ + static_cast<std::int64_t>(other.coeffs_.size())));
  for (std::int64_t e = lo; e < end; ++e)
    if (raw_coeff(e) != other.raw_coeff(e)) return false;
  return true;
}

std::string UInftyElem::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!s.empty()) s += " + ";
    s += spec_->format(coeffs_[i]) + "*u^" +
         std::to_string(val_ + static_cast<std::int64_t>(i));
  }
  if (s.empty()) s = "0";
  if (!is_exact()) s += " + O(u^" + std::to_string(uprec_) + ")";
  return s;
}

// --- t-series over the model ---------------------------------------------------

TateSeries tate_hyperderivative(std::size_t j, const TateSeries& h) {
  if (j >= h.size())
    throw InsufficientPrecision("D^(" + std::to_string(j) +
                                ") of a t-series known to t^" +
                                std::to_string(h.size()));
  const FqSpecPtr& spec = h.front().spec();
  TateSeries out;
  out.reserve(h.size() - j);
  for (std::size_t n = 0; n + j < h.size(); ++n) {
    const FqElem c = FqElem::from_int(spec, binom_mod_p(n + j, j, spec->p()));
    out.push_back(c * h[n + j]);
  }
  return out;
}

TateSeries tate_frobenius(const TateSeries& h) {
  TateSeries out;
  out.reserve(h.size());
  for (const auto& x : h) out.push_back(x.frobenius_q());
  return out;
}

TateSeries tate_times_t_minus_theta(const TateSeries& h) {
  TateSeries out;
  out.reserve(h.size());
  if (h.empty()) return out;
  const UInftyElem theta = UInftyElem::theta(h.front().spec());
  for (std::size_t n = 0; n < h.size(); ++n) {
    const UInftyElem shifted =
        n ? h[n - 1] : UInftyElem::zero(h.front().spec());
    out.push_back(shifted - theta * h[n]);
  }
  return out;
}

bool tate_agrees(const TateSeries& a, const TateSeries& b) {
  const std::size_t n = std::min(a.size(), b.size());
  if (n == 0) throw WindowEmpty("no common t-coefficients");
  for (std::size_t i = 0; i < n; ++i)
    if (!a[i].agrees_with(b[i])) return false;
  return true;
}

// --- omega ------------------------------------------------------------------

std::size_t omega_factor_count(unsigned q, std::int64_t uspan) {
  std::size_t count = 0;
  std::int64_t qi = 1;
  while ((static_cast<std::int64_t>(q) - 1) * (qi - 1) < uspan) {
    ++count;
    if (qi > kExactPrecision / q) break;
    qi *= q;
  }
  return count;
}

OmegaSeries compute_omega(const FqSpecPtr& spec, std::size_t tprec,
                          std::int64_t uspan) {
  if (tprec == 0) throw InsufficientPrecision("t-precision must be >= 1");
  if (uspan < 1) throw InsufficientPrecision("u-precision must be >= 1");
  const FqSpec& k = *spec;
  const std::int64_t q = k.order();
  const auto width = static_cast<std::size_t>(uspan);

  // g[n][r]: coefficient of t^n u^(n(q-1) + r) in prod_i 1/(1 - y_i t), where
  // y_i = u^((q-1) q^i); factor i lifts the u-degree by (q-1)(q^i - 1) over
  // the leading factor.
  std::vector<std::vector<FqRaw>> g(tprec, std::vector<FqRaw>(width, 0));
  g[0][0] = 1;
  const std::size_t factors = omega_factor_count(k.order(), uspan);
  std::int64_t qi = 1;
  for (std::size_t i = 0; i < factors; ++i, qi *= q) {
    const auto shift = static_cast<std::size_t>((q - 1) * (qi - 1));
    for (std::size_t n = 1; n < tprec; ++n)
      for (std::size_t r = shift; r < width; ++r)
        g[n][r] = k.add(g[n][r], g[n - 1][r - shift]);
  }

  // 1 - t/theta^(q^i) = 1 + t u^((q-1) q^i), so the geometric series picks up
  // (-1)^n on t^n; zeta = u^-1 shifts every exponent down by one.
  OmegaSeries omega{spec, uspan, {}};
  omega.entries.reserve(tprec);
  for (std::size_t n = 0; n < tprec; ++n) {
    const std::int64_t val = -1 + static_cast<std::int64_t>(n) * (q - 1);
    std::vector<FqRaw> coeffs = std::move(g[n]);
    if (n % 2 == 1)
      for (auto& c : coeffs) c = k.neg(c);
    omega.entries.push_back(
        UInftyElem::from_coeffs(spec, val, std::move(coeffs), val + uspan));
  }
  return omega;
}

bool verify_carlitz_equation(const OmegaSeries& omega) {
  return tate_agrees(tate_frobenius(omega.entries),
                     tate_times_t_minus_theta(omega.entries));
}

bool verify_prolongation_trivialization(const OmegaSeries& omega,
                                        std::size_t k) {
  if (omega.tprec() <= k)
    throw InsufficientPrecision("t-precision " + std::to_string(omega.tprec()) +
                                " cannot carry a jet of order " +
                                std::to_string(k));
  const TateSeries twisted = tate_times_t_minus_theta(omega.entries);
  for (std::size_t j = 0; j <= k; ++j) {
    const TateSeries lhs =
        tate_frobenius(tate_hyperderivative(j, omega.entries));
    const TateSeries rhs = tate_hyperderivative(j, twisted);
    if (!tate_agrees(lhs, rhs)) return false;
  }
  return true;
}

// --- prolongation -----------------------------------------------------------

std::vector<UInftyElem> ProlongationAction::apply_nilpotent(
    const std::vector<UInftyElem>& e) const {
  if (e.size() != k + 1) throw ShapeMismatch("point has the wrong dimension");
  std::vector<UInftyElem> out;
  out.reserve(e.size());
  for (std::size_t r = 0; r <= k; ++r)
    out.push_back(r < k ? -e[r + 1] : UInftyElem::zero(e[r].spec()));
  return out;
}

std::vector<UInftyElem> ProlongationAction::apply_linear(
    const std::vector<UInftyElem>& e) const {
  auto out = apply_nilpotent(e);
  const UInftyElem theta = UInftyElem::theta(e.front().spec());
  for (std::size_t r = 0; r <= k; ++r) out[r] = theta * e[r] + out[r];
  return out;
}

std::vector<UInftyElem> ProlongationAction::apply(
    const std::vector<UInftyElem>& e) const {
  auto out = apply_linear(e);
  for (std::size_t r = 0; r <= k; ++r) out[r] = out[r] + e[r].frobenius_q();
  return out;
}

std::vector<TateSeries> omega_jet_column(const OmegaSeries& omega,
                                         std::size_t k, std::size_t c) {
  if (c > k) throw ShapeMismatch("column index exceeds the jet order");
  std::vector<TateSeries> column;
  column.reserve(k + 1);
  for (std::size_t r = 0; r <= k; ++r) {
    if (r <= c)
      column.push_back(tate_hyperderivative(c - r, omega.entries));
    else
      column.emplace_back(omega.tprec(), UInftyElem::zero(omega.spec));
  }
  return column;
}

bool verify_hhat_membership(std::size_t k, const std::vector<TateSeries>& h) {
  if (h.size() != k + 1)
    throw ShapeMismatch("expected " + std::to_string(k + 1) + " rows, got " +
                        std::to_string(h.size()));
  const ProlongationAction action{k};
  // The identity is checked per t-coefficient n on the rows whose
  // coefficient n is known; rows are grouped by how far they reach.
  std::size_t reach = 0;
  for (const auto& row : h) reach = std::max(reach, row.size());
  if (reach == 0) throw WindowEmpty("empty column");
  const FqSpecPtr& spec = [&]() -> const FqSpecPtr& {
    for (const auto& row : h)
      if (!row.empty()) return row.front().spec();
    throw WindowEmpty("empty column");
  }();

  for (std::size_t n = 0; n < reach; ++n) {
    std::vector<UInftyElem> point;
    std::vector<bool> known(k + 1);
    point.reserve(k + 1);
    for (std::size_t r = 0; r <= k; ++r) {
      known[r] = n < h[r].size();
      point.push_back(known[r] ? h[r][n] : UInftyElem::zero(spec));
    }
    const auto image = action.apply(point);
    for (std::size_t r = 0; r <= k; ++r) {
      // Row r involves h_r and h_{r+1} at t^n, and h_r at t^(n-1).
      if (!known[r] || (r < k && !known[r + 1])) continue;
      const UInftyElem rhs = n ? h[r][n - 1] : UInftyElem::zero(spec);
      if (!image[r].agrees_with(rhs)) return false;
    }
  }
  return true;
}

std::vector<std::vector<UInftyElem>> torsion_generators(
    const OmegaSeries& omega, std::size_t n, std::size_t k) {
  if (omega.tprec() <= n + k)
    throw InsufficientPrecision("torsion generators up to D^(" +
                                std::to_string(n + k) + ") need t-precision > " +
                                std::to_string(n + k));
  const unsigned p = omega.spec->p();
  std::vector<std::vector<UInftyElem>> table(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    table[i].reserve(k + 1);
    for (std::size_t j = 0; j <= k; ++j) {
      // (D^(l) omega)(0) is the t^l coefficient of omega.
      const FqElem c = FqElem::from_int(omega.spec, binom_mod_p(i + j, j, p));
      table[i].push_back(c * omega.entries[i + j]);
    }
  }
  return table;
}

std::string omega_to_json(const OmegaSeries& omega) {
  using nlohmann::ordered_json;
  const FqSpec& k = *omega.spec;
  auto render = [&](FqRaw c) -> ordered_json {
    if (k.degree() == 1) return c;
    return k.coeffs(c);
  };
  ordered_json doc;
  doc["q"] = k.order();
  doc["p"] = k.p();
  doc["e"] = k.degree();
  doc["tprec"] = omega.tprec();
  doc["uspan"] = omega.uspan;
  doc["entries"] = ordered_json::array();
  for (std::size_t n = 0; n < omega.tprec(); ++n) {
    const UInftyElem& x = omega.entries[n];
    const std::int64_t lo =
        x.is_zero() ? x.uprec() : x.val();
    ordered_json coeffs = ordered_json::array();
    for (std::int64_t e = lo; e < x.uprec(); ++e)
      coeffs.push_back(render(x.raw_coeff(e)));
    doc["entries"].push_back(
        {{"n", n}, {"val", lo}, {"uprec", x.uprec()}, {"coeffs", coeffs}});
  }
  return doc.dump() + "\n";
}

}  // namespace carlitz
