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

#include "carlitz/power_series.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <limits>
#include <ostream>

#include "carlitz/errors.hpp"

namespace carlitz {

TruncSeries::TruncSeries(FqSpecPtr spec, std::size_t prec)
    : spec_(std::move(spec)), coeffs_(prec, 0) {
  if (prec == 0) throw InsufficientPrecision("series precision must be >= 1");
}

TruncSeries::TruncSeries(FqSpecPtr spec, std::vector<FqRaw> coeffs)
    : spec_(std::move(spec)), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty())
    throw InsufficientPrecision("series precision must be >= 1");
  for (FqRaw c : coeffs_)
    if (c >= spec_->order()) throw InvalidSpec("raw value out of range");
}

TruncSeries TruncSeries::one(const FqSpecPtr& spec, std::size_t prec) {
  TruncSeries s(spec, prec);
  s.coeffs_[0] = 1;
  return s;
}

TruncSeries TruncSeries::constant(const FqElem& c, std::size_t prec) {
  TruncSeries s(c.spec(), prec);
  s.coeffs_[0] = c.raw();
  return s;
}

TruncSeries TruncSeries::monomial(const FqElem& c, std::size_t deg,
                                  std::size_t prec) {
  TruncSeries s(c.spec(), prec);
  if (deg < prec) s.coeffs_[deg] = c.raw();
  return s;
}

TruncSeries TruncSeries::from_ints(const FqSpecPtr& spec,
                                   const std::vector<std::int64_t>& coeffs,
                                   std::size_t prec) {
  TruncSeries s(spec, prec);
  for (std::size_t i = 0; i < std::min(prec, coeffs.size()); ++i)
    s.coeffs_[i] = spec->from_int(coeffs[i]);
  return s;
}

FqElem TruncSeries::coeff(std::size_t i) const {
  if (i >= coeffs_.size())
    throw InsufficientPrecision("coefficient " + std::to_string(i) +
                                " beyond precision " +
                                std::to_string(coeffs_.size()));
  return {spec_, coeffs_[i]};
}

void TruncSeries::set_coeff(std::size_t i, const FqElem& c) {
  require_same_field(*spec_, *c.spec());
  if (i >= coeffs_.size())
    throw InsufficientPrecision("coefficient " + std::to_string(i) +
                                " beyond precision " +
                                std::to_string(coeffs_.size()));
  coeffs_[i] = c.raw();
}

bool TruncSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](FqRaw c) { return c == 0; });
}

TruncSeries TruncSeries::truncated(std::size_t prec) const {
  if (prec > coeffs_.size())
    throw InsufficientPrecision("cannot raise precision " +
                                std::to_string(coeffs_.size()) + " to " +
                                std::to_string(prec));
  return {spec_, std::vector<FqRaw>(coeffs_.begin(), coeffs_.begin() + prec)};
}

TruncSeries TruncSeries::operator-() const {
  TruncSeries r = *this;
  for (auto& c : r.coeffs_) c = spec_->neg(c);
  return r;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& rhs) {
  require_same_field(*spec_, *rhs.spec_);
  coeffs_.resize(std::min(prec(), rhs.prec()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    coeffs_[i] = spec_->add(coeffs_[i], rhs.coeffs_[i]);
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& rhs) {
  require_same_field(*spec_, *rhs.spec_);
  coeffs_.resize(std::min(prec(), rhs.prec()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    coeffs_[i] = spec_->sub(coeffs_[i], rhs.coeffs_[i]);
  return *this;
}

TruncSeries& TruncSeries::operator*=(const TruncSeries& rhs) {
  require_same_field(*spec_, *rhs.spec_);
  const std::size_t n = std::min(prec(), rhs.prec());
  std::vector<FqRaw> out(n, 0);
  const FqSpec& f = *spec_;
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j)
      out[i + j] = f.add(out[i + j], f.mul(coeffs_[i], rhs.coeffs_[j]));
  }
  coeffs_ = std::move(out);
  return *this;
}

TruncSeries& TruncSeries::operator*=(const FqElem& scalar) {
  require_same_field(*spec_, *scalar.spec());
  for (auto& c : coeffs_) c = spec_->mul(c, scalar.raw());
  return *this;
}

bool operator==(const TruncSeries& a, const TruncSeries& b) {
  return a.spec_->same_field(*b.spec_) && a.coeffs_ == b.coeffs_;
}

std::string TruncSeries::key() const {
  std::string k = spec_->id();
  k.push_back('|');
  const std::uint64_t n = coeffs_.size();
  for (int s = 0; s < 64; s += 8) k.push_back(static_cast<char>(n >> s));
  for (FqRaw c : coeffs_) {
    k.push_back(static_cast<char>(c & 0xff));
    k.push_back(static_cast<char>(c >> 8));
  }
  return k;
}

std::string TruncSeries::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!s.empty()) s += '+';
    const bool unit_coeff = coeffs_[i] == 1;
    if (i == 0 || !unit_coeff) s += spec_->format(coeffs_[i]);
    if (i == 0) continue;
    if (!unit_coeff) s += '*';
    s += 't';
    if (i > 1) s += '^' + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

std::ostream& operator<<(std::ostream& os, const TruncSeries& f) {
  return os << f.to_string();
}

UnitClass::UnitClass(TruncSeries series) : series_(std::move(series)) {
  if (!series_.is_unit()) throw NonUnit("constant term is zero");
}

TruncSeries ts_inv(const TruncSeries& f) {
  if (!f.is_unit()) throw NonUnit("constant term is zero");
  const FqSpec& k = f.field();
  const std::size_t n = f.prec();
  std::vector<FqRaw> g(n, 0);
  const FqRaw c0inv = k.inv(f.raw(0));
  g[0] = c0inv;
  // g_m = -c0^{-1} * sum_{i=1..m} f_i g_{m-i}
  for (std::size_t m = 1; m < n; ++m) {
    FqRaw acc = 0;
    for (std::size_t i = 1; i <= m; ++i)
      acc = k.add(acc, k.mul(f.raw(i), g[m - i]));
    g[m] = k.neg(k.mul(c0inv, acc));
  }
  return {f.spec(), std::move(g)};
}

FqElem ts_eval0(const TruncSeries& f) { return f.coeff(0); }

TruncSeries ts_pow(const TruncSeries& f, std::uint64_t n) {
  TruncSeries result = TruncSeries::one(f.spec(), f.prec());
  TruncSeries base = f;
  while (n) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return result;
}

// --- literal parsing ---------------------------------------------------------

namespace {

class SeriesParser {
 public:
  SeriesParser(const FqSpecPtr& spec, std::string_view text, std::size_t prec)
      : spec_(spec), prec_(prec) {
    // Blanks may surround operators but never split or join operands.
    auto is_op = [](char c) { return std::strchr("+-*^,", c) != nullptr; };
    bool gap = false;
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c))) {
        gap = !text_.empty();
        continue;
      }
      if (gap && !is_op(c) && !is_op(text_.back()))
        throw ParseError("series literal '" + std::string(text) +
                         "': blank between operands");
      gap = false;
      text_.push_back(c);
    }
  }

  TruncSeries parse() {
    if (text_.empty()) fail("empty literal");
    TruncSeries out(spec_, prec_);
    bool first = true;
    while (pos_ < text_.size() || first) {
      bool negate = false;
      if (!first || peek() == '+' || peek() == '-') {
        if (peek() == '+') {
          ++pos_;
        } else if (peek() == '-') {
          negate = true;
          ++pos_;
        } else {
          fail("expected '+' or '-'");
        }
      }
      first = false;
      auto [coeff, deg] = term();
      if (negate) coeff = spec_->neg(coeff);
      if (deg < prec_)
        out.set_coeff(deg, FqElem(spec_, spec_->add(out.raw(deg), coeff)));
    }
    return out;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("series literal '" + text_ + "' at offset " +
                     std::to_string(pos_) + ": " + why);
  }

  std::uint64_t integer() {
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected digit");
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      if (v > (std::numeric_limits<std::uint64_t>::max() - 9) / 10)
        fail("integer too large");
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_++] - '0');
    }
    return v;
  }

  FqRaw coefficient() {
    if (peek() == '[') {
      ++pos_;
      std::vector<unsigned> cs;
      while (true) {
        cs.push_back(static_cast<unsigned>(integer() % spec_->p()));
        if (peek() == ',') {
          ++pos_;
        } else if (peek() == ']') {
          ++pos_;
          break;
        } else {
          fail("expected ',' or ']'");
        }
      }
      if (cs.size() != spec_->degree())
        fail("extension coefficient needs " + std::to_string(spec_->degree()) +
             " entries");
      return spec_->from_coeffs(cs);
    }
    return spec_->from_int(static_cast<std::int64_t>(integer() % spec_->p()));
  }

  std::pair<FqRaw, std::size_t> term() {
    FqRaw c = 1;
    bool have_coeff = false;
    if (peek() == '[' || std::isdigit(static_cast<unsigned char>(peek()))) {
      c = coefficient();
      have_coeff = true;
      if (peek() == '*') {
        ++pos_;
        if (peek() != 't') fail("expected 't' after '*'");
      } else if (peek() == 't') {
        fail("expected '*' between coefficient and 't'");
      } else {
        return {c, 0};
      }
    }
    if (peek() != 't') fail(have_coeff ? "expected 't'" : "expected a term");
    ++pos_;
    std::size_t deg = 1;
    if (peek() == '^') {
      ++pos_;
      deg = static_cast<std::size_t>(integer());
    }
    return {c, deg};
  }

  const FqSpecPtr& spec_;
  std::size_t prec_;
  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

TruncSeries parse_series(const FqSpecPtr& spec, std::string_view literal,
                         std::size_t prec) {
  return SeriesParser(spec, literal, prec).parse();
}

// --- unit enumeration --------------------------------------------------------

std::uint64_t unit_count(unsigned q, std::size_t prec) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  if (prec == 0) return 0;
  std::uint64_t n = q - 1;
  for (std::size_t i = 1; i < prec; ++i) {
    if (n > kMax / q) return kMax;
    n *= q;
  }
  return n;
}

void for_each_unit(const FqSpec& spec, std::size_t prec,
                   const std::function<void(std::span<const FqRaw>)>& visit,
                   UnitPartition part, std::uint64_t budget) {
  if (prec == 0) throw InsufficientPrecision("unit precision must be >= 1");
  if (part.count == 0 || part.index >= part.count)
    throw InvalidSpec("bad unit partition");
  const std::uint64_t total = unit_count(spec.order(), prec);
  if (total > budget)
    throw BudgetExceeded(std::to_string(total) + " units mod t^" +
                         std::to_string(prec) + " exceed the budget " +
                         std::to_string(budget));

  const std::vector<FqRaw> order = fq_enumerate_raw(spec);
  const std::vector<FqRaw> nonzero(order.begin() + 1, order.end());
  const std::size_t q = order.size();

  // Prefix = (index of a_0 among nonzero, index of a_1) when prec >= 2.
  const std::size_t prefix_len = std::min<std::size_t>(prec, 2);
  const std::size_t prefixes = (q - 1) * (prefix_len == 2 ? q : 1);

  std::vector<std::size_t> digit(prec, 0);
  std::vector<FqRaw> coeffs(prec, 0);
  for (std::size_t pfx = part.index; pfx < prefixes; pfx += part.count) {
    const std::size_t d0 = prefix_len == 2 ? pfx / q : pfx;
    coeffs[0] = nonzero[d0];
    if (prefix_len == 2) coeffs[1] = order[pfx % q];
    std::fill(digit.begin() + prefix_len, digit.end(), 0);
    std::fill(coeffs.begin() + prefix_len, coeffs.end(), order[0]);
    while (true) {
      visit(coeffs);
      bool advanced = false;
      for (std::size_t i = prec; i > prefix_len && !advanced;) {
        --i;
        if (++digit[i] < q) {
          coeffs[i] = order[digit[i]];
          advanced = true;
        } else {
          digit[i] = 0;
          coeffs[i] = order[0];
        }
      }
      if (!advanced) break;
    }
  }
}

std::vector<UnitClass> unit_enumerate(const FqSpecPtr& spec, std::size_t prec,
                                      std::uint64_t budget) {
  std::vector<UnitClass> out;
  for_each_unit(
      *spec, prec,
      [&](std::span<const FqRaw> c) {
        out.emplace_back(TruncSeries(spec, std::vector<FqRaw>(c.begin(), c.end())));
      },
      {}, budget);
  return out;
}

}  // namespace carlitz
