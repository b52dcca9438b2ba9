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

#include "carlitz/finite_field.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "carlitz/errors.hpp"

namespace carlitz {

namespace {

using Poly = std::vector<unsigned>;

// Remainder of `num` modulo the monic polynomial `den`, coefficients mod p.
Poly poly_mod(Poly num, const Poly& den, unsigned p) {
  const std::size_t dd = den.size() - 1;
  for (std::size_t d = num.size(); d-- > dd;) {
    const unsigned c = num[d] % p;
    if (c == 0) continue;
    for (std::size_t i = 0; i <= dd; ++i) {
      const unsigned sub = (c * den[i]) % p;
      num[d - dd + i] = (num[d - dd + i] + p - sub) % p;
    }
  }
  num.resize(std::min(num.size(), dd));
  return num;
}

bool all_zero(const Poly& a) {
  return std::all_of(a.begin(), a.end(), [](unsigned c) { return c == 0; });
}

struct BuiltinField {
  unsigned q;
  unsigned p;
  Poly poly;
};

// Conway-style small choices; each is checked for irreducibility in tests.
const std::vector<BuiltinField>& builtin_fields() {
  static const std::vector<BuiltinField> fields = {
      {4, 2, {1, 1, 1}},        // x^2 + x + 1
      {8, 2, {1, 1, 0, 1}},     // x^3 + x + 1
      {9, 3, {1, 0, 1}},        // x^2 + 1
      {16, 2, {1, 1, 0, 0, 1}}, // x^4 + x + 1
      {25, 5, {2, 0, 1}},       // x^2 + 2
      {27, 3, {1, 2, 0, 1}},    // x^3 + 2x + 1
  };
  return fields;
}

unsigned smallest_prime_factor(unsigned n) {
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return d;
  return n;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_irreducible(unsigned p, std::span<const unsigned> poly) {
  if (poly.size() < 2) return false;
  const Poly f(poly.begin(), poly.end());
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    // All monic divisors of degree d, odometer over the low coefficients.
    Poly g(d + 1, 0);
    g[d] = 1;
    while (true) {
      if (all_zero(poly_mod(f, g, p))) return false;
      std::size_t i = 0;
      while (i < d && ++g[i] == p) g[i++] = 0;
      if (i == d) break;
    }
  }
  return true;
}

FqSpec::FqSpec(unsigned p, Poly poly)
    : p_(p), e_(static_cast<unsigned>(poly.size() - 1)), q_(1),
      poly_(std::move(poly)) {
  for (unsigned i = 0; i < e_; ++i) q_ *= p_;

  std::ostringstream id;
  id << "p=" << p_ << ";poly=";
  for (std::size_t i = 0; i < poly_.size(); ++i)
    id << (i ? "," : "") << poly_[i];
  id_ = id.str();

  add_.resize(std::size_t{q_} * q_);
  mul_.resize(std::size_t{q_} * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  for (unsigned a = 0; a < q_; ++a) {
    const auto ca = coeffs(static_cast<FqRaw>(a));
    Poly cn(e_);
    for (unsigned i = 0; i < e_; ++i) cn[i] = (p_ - ca[i]) % p_;
    neg_[a] = from_coeffs(cn);
    for (unsigned b = 0; b < q_; ++b) {
      const auto cb = coeffs(static_cast<FqRaw>(b));
      Poly cs(e_);
      for (unsigned i = 0; i < e_; ++i) cs[i] = (ca[i] + cb[i]) % p_;
      add_[a * q_ + b] = from_coeffs(cs);
      mul_[a * q_ + b] =
          mul_poly(static_cast<FqRaw>(a), static_cast<FqRaw>(b));
    }
  }
  for (unsigned a = 1; a < q_; ++a)
    for (unsigned b = 1; b < q_; ++b)
      if (mul_[a * q_ + b] == 1) {
        inv_[a] = static_cast<FqRaw>(b);
        break;
      }
}

std::shared_ptr<const FqSpec> FqSpec::make(unsigned p, Poly defining_poly,
                                           unsigned max_order) {
  if (!is_prime(p))
    throw InvalidCharacteristic(std::to_string(p) + " is not prime");
  if (defining_poly.size() < 2)
    throw InvalidSpec("defining polynomial must have degree >= 1");
  if (defining_poly.back() != 1)
    throw InvalidSpec("defining polynomial must be monic");
  for (unsigned c : defining_poly)
    if (c >= p) throw InvalidSpec("coefficient out of range [0, p)");

  const unsigned bound = std::min(max_order, kMaxSupportedOrder);
  std::uint64_t q = 1;
  for (std::size_t i = 1; i < defining_poly.size(); ++i) {
    q *= p;
    if (q > bound)
      throw InvalidSpec("field order exceeds the configured bound " +
                        std::to_string(bound));
  }
  if (!is_irreducible(p, defining_poly))
    throw InvalidSpec("defining polynomial is reducible over F_" +
                      std::to_string(p));
  return std::shared_ptr<const FqSpec>(new FqSpec(p, std::move(defining_poly)));
}

std::shared_ptr<const FqSpec> FqSpec::prime(unsigned p) {
  return make(p, {0, 1});
}

FqRaw FqSpec::inv(FqRaw a) const {
  if (a == 0) throw DivisionByZero("inverse of 0 in F_" + std::to_string(q_));
  return inv_[a];
}

FqRaw FqSpec::pow(FqRaw a, std::uint64_t n) const {
  FqRaw result = 1;
  while (n) {
    if (n & 1) result = mul(result, a);
    a = mul(a, a);
    n >>= 1;
  }
  return result;
}

FqRaw FqSpec::from_int(std::int64_t n) const {
  const std::int64_t r = ((n % static_cast<std::int64_t>(p_)) + p_) % p_;
  return static_cast<FqRaw>(r);
}

FqRaw FqSpec::from_coeffs(std::span<const unsigned> coeffs) const {
  unsigned v = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) v = v * p_ + coeffs[i] % p_;
  return static_cast<FqRaw>(v);
}

std::vector<unsigned> FqSpec::coeffs(FqRaw a) const {
  std::vector<unsigned> c(e_);
  unsigned v = a;
  for (unsigned i = 0; i < e_; ++i) {
    c[i] = v % p_;
    v /= p_;
  }
  return c;
}

FqRaw FqSpec::mul_poly(FqRaw a, FqRaw b) const {
  const auto ca = coeffs(a);
  const auto cb = coeffs(b);
  Poly prod(2 * e_ - 1, 0);
  for (unsigned i = 0; i < e_; ++i)
    for (unsigned j = 0; j < e_; ++j)
      prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
  prod = poly_mod(std::move(prod), poly_, p_);
  prod.resize(e_, 0);
  return from_coeffs(prod);
}

std::string FqSpec::format(FqRaw a) const {
  if (e_ == 1) return std::to_string(a);
  std::string s = "[";
  const auto c = coeffs(a);
  for (unsigned i = 0; i < e_; ++i) {
    if (i) s += ',';
    s += std::to_string(c[i]);
  }
  return s + "]";
}

void require_same_field(const FqSpec& a, const FqSpec& b) {
  if (!a.same_field(b))
    throw SpecMismatch("operands live in " + a.id() + " and " + b.id());
}

// --- FqElem ----------------------------------------------------------------

FqElem::FqElem(FqSpecPtr spec, FqRaw raw) : spec_(std::move(spec)), raw_(raw) {
  if (raw_ >= spec_->order()) throw InvalidSpec("raw value out of range");
}

FqElem FqElem::from_int(const FqSpecPtr& spec, std::int64_t n) {
  return {spec, spec->from_int(n)};
}

FqElem FqElem::from_coeffs(const FqSpecPtr& spec,
                           std::span<const unsigned> coeffs) {
  if (coeffs.size() != spec->degree())
    throw InvalidSpec("expected " + std::to_string(spec->degree()) +
                      " coefficients");
  for (unsigned c : coeffs)
    if (c >= spec->p()) throw InvalidSpec("coefficient out of range [0, p)");
  return {spec, spec->from_coeffs(coeffs)};
}

FqElem FqElem::inv() const { return {spec_, spec_->inv(raw_)}; }

FqElem FqElem::pow(std::uint64_t n) const { return {spec_, spec_->pow(raw_, n)}; }

FqElem FqElem::operator-() const { return {spec_, spec_->neg(raw_)}; }

FqElem& FqElem::operator+=(const FqElem& rhs) {
  require_same_field(*spec_, *rhs.spec_);
  raw_ = spec_->add(raw_, rhs.raw_);
  return *this;
}

FqElem& FqElem::operator-=(const FqElem& rhs) {
  require_same_field(*spec_, *rhs.spec_);
  raw_ = spec_->sub(raw_, rhs.raw_);
  return *this;
}

FqElem& FqElem::operator*=(const FqElem& rhs) {
  require_same_field(*spec_, *rhs.spec_);
  raw_ = spec_->mul(raw_, rhs.raw_);
  return *this;
}

FqElem& FqElem::operator/=(const FqElem& rhs) {
  require_same_field(*spec_, *rhs.spec_);
  raw_ = spec_->mul(raw_, spec_->inv(rhs.raw_));
  return *this;
}

std::ostream& operator<<(std::ostream& os, const FqElem& a) {
  return os << a.to_string();
}

std::vector<FqRaw> fq_enumerate_raw(const FqSpec& spec) {
  std::vector<std::vector<unsigned>> tuples;
  tuples.reserve(spec.order());
  for (unsigned v = 0; v < spec.order(); ++v)
    tuples.push_back(spec.coeffs(static_cast<FqRaw>(v)));
  std::sort(tuples.begin(), tuples.end());
  std::vector<FqRaw> out;
  out.reserve(tuples.size());
  for (const auto& t : tuples) out.push_back(spec.from_coeffs(t));
  return out;
}

std::vector<FqElem> fq_enumerate(const FqSpecPtr& spec) {
  std::vector<FqElem> out;
  for (FqRaw v : fq_enumerate_raw(*spec)) out.emplace_back(spec, v);
  return out;
}

// --- config ----------------------------------------------------------------

std::vector<FieldConfigEntry> parse_field_config(std::istream& in) {
  std::vector<FieldConfigEntry> entries;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;

    std::istringstream tokens(line);
    std::string tok;
    std::map<std::string, std::string> kv;
    while (tokens >> tok) {
      const auto eq = tok.find('=');
      if (eq == std::string::npos)
        throw ParseError("line " + std::to_string(lineno) +
                         ": expected key=value, got '" + tok + "'");
      kv[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
    if (!kv.count("q") || !kv.count("poly") || kv.size() != 2)
      throw ParseError("line " + std::to_string(lineno) +
                       ": expected exactly the keys q and poly");

    FieldConfigEntry entry{};
    try {
      std::size_t used = 0;
      entry.q = static_cast<unsigned>(std::stoul(kv["q"], &used));
      if (used != kv["q"].size()) throw std::invalid_argument("q");
      std::istringstream cs(kv["poly"]);
      std::string c;
      while (std::getline(cs, c, ',')) {
        entry.poly.push_back(static_cast<unsigned>(std::stoul(c, &used)));
        if (used != c.size()) throw std::invalid_argument("poly");
      }
    } catch (const std::logic_error&) {
      throw ParseError("line " + std::to_string(lineno) +
                       ": malformed integer");
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

std::vector<FieldConfigEntry> load_field_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open field config '" + path + "'");
  return parse_field_config(in);
}

bool has_builtin_field(unsigned q) {
  if (is_prime(q)) return true;
  return std::any_of(builtin_fields().begin(), builtin_fields().end(),
                     [q](const BuiltinField& f) { return f.q == q; });
}

FqSpecPtr resolve_field(unsigned q, const std::vector<FieldConfigEntry>& config,
                        unsigned max_order) {
  if (q < 2) throw InvalidSpec("q must be at least 2");
  for (const auto& entry : config) {
    if (entry.q != q) continue;
    const unsigned p = smallest_prime_factor(q);
    std::uint64_t pe = 1;
    for (std::size_t i = 1; i < entry.poly.size(); ++i) pe *= p;
    if (pe != q)
      throw InvalidSpec("config polynomial degree does not match q=" +
                        std::to_string(q));
    return FqSpec::make(p, entry.poly, max_order);
  }
  if (is_prime(q)) return FqSpec::make(q, {0, 1}, max_order);
  for (const auto& f : builtin_fields())
    if (f.q == q) return FqSpec::make(f.p, f.poly, max_order);
  throw InvalidSpec("no defining polynomial known for q=" + std::to_string(q) +
                    "; declare one in the field config");
}

}  // namespace carlitz
