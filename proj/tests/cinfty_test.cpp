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

#include <gtest/gtest.h>

#include <map>

#include "carlitz/errors.hpp"
#include "json.hpp"
#include "support.hpp"

namespace carlitz {
namespace {

// Random element known on [val, uprec) together with a random exact
// completion beyond uprec; the completion stands for "the true value".
struct Sampled {
  UInftyElem known;
  UInftyElem truth;
};

Sampled sample(std::mt19937_64& rng, const FqSpecPtr& spec, std::int64_t val,
               std::int64_t span, std::int64_t tail) {
  auto c = testing::random_raw(rng, spec->order(),
                               static_cast<std::size_t>(span + tail));
  c[0] = static_cast<FqRaw>(1 + rng() % (spec->order() - 1));
  const auto truth = UInftyElem::from_coeffs(spec, val, c, kExactPrecision);
  return {truth.truncated(val + span), truth};
}

TEST(UInftyElem, ThetaAndZeta) {
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    const auto spec = resolve_field(q);
    const auto zeta = UInftyElem::zeta(spec);
    UInftyElem power = UInftyElem::monomial(FqElem::one(spec), 0);
    for (unsigned i = 0; i + 1 < q; ++i) power = power * zeta;
    // zeta^(q-1) = -theta.
    EXPECT_TRUE(power.agrees_with(-UInftyElem::theta(spec)));
    EXPECT_TRUE(power.is_exact());
    const auto theta = UInftyElem::theta(spec);
    EXPECT_TRUE((theta * theta.inv())
                    .agrees_with(UInftyElem::monomial(FqElem::one(spec), 0)));
    EXPECT_EQ(theta.val(), -static_cast<std::int64_t>(q - 1));
  }
}

// The declared window of a result never claims coefficients that depend on
// the unknown tails of the operands.
TEST(UInftyElem, PrecisionPropagation) {
  std::mt19937_64 rng(21);
  for (unsigned q : {2u, 3u, 4u}) {
    const auto spec = resolve_field(q);
    for (int trial = 0; trial < 200; ++trial) {
      const std::int64_t vx = static_cast<std::int64_t>(rng() % 21) - 10;
      const std::int64_t vy = static_cast<std::int64_t>(rng() % 21) - 10;
      const std::int64_t sx = 1 + rng() % 12, sy = 1 + rng() % 12;
      const auto x = sample(rng, spec, vx, sx, 20);
      const auto y = sample(rng, spec, vy, sy, 20);

      const auto prod = x.known * y.known;
      EXPECT_EQ(prod.uprec(), std::min(vx + sx + vy, vy + sy + vx));
      EXPECT_TRUE(prod.agrees_with(x.truth * y.truth));

      const auto sum = x.known + y.known;
      EXPECT_EQ(sum.uprec(), std::min(vx + sx, vy + sy));
      EXPECT_TRUE(sum.agrees_with((x.truth + y.truth).truncated(sum.uprec())));

      const auto frob = x.known.frobenius_q();
      EXPECT_EQ(frob.uprec(), static_cast<std::int64_t>(q) * (vx + sx));
      EXPECT_TRUE(frob.agrees_with(x.truth.frobenius_q()));

      const auto inv = x.known.inv();
      EXPECT_EQ(inv.uprec(), -vx + sx);
      EXPECT_TRUE((inv * x.known)
                      .agrees_with(UInftyElem::monomial(FqElem::one(spec), 0)));
    }
  }
}

TEST(UInftyElem, FrobeniusIsMultiplicative) {
  std::mt19937_64 rng(22);
  const auto spec = resolve_field(9);
  for (int trial = 0; trial < 50; ++trial) {
    const auto x = sample(rng, spec, 3, 8, 0).known;
    const auto y = sample(rng, spec, -2, 8, 0).known;
    EXPECT_TRUE((x * y).frobenius_q().agrees_with(x.frobenius_q() *
                                                  y.frobenius_q()));
    EXPECT_TRUE((x + y).frobenius_q().agrees_with(x.frobenius_q() +
                                                  y.frobenius_q()));
  }
}

TEST(UInftyElem, WindowsAndErrors) {
  const auto spec = resolve_field(3);
  const auto x = UInftyElem::from_coeffs(spec, 2, {0, 1, 2, 0}, 6);
  EXPECT_EQ(x.val(), 3);
  EXPECT_EQ(x.uprec(), 6);
  EXPECT_EQ(x.coeff(4).to_string(), "2");
  EXPECT_EQ(x.raw_coeff(-7), 0);
  EXPECT_THROW(x.coeff(6), InsufficientPrecision);
  EXPECT_THROW(x.with_coeff(6, FqElem::one(spec)), InsufficientPrecision);
  EXPECT_EQ(x.to_string(), "1*u^3 + 2*u^4 + O(u^6)");

  const auto z = UInftyElem::zero(spec, 5);
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.val(), 5);
  EXPECT_TRUE(z.agrees_with(UInftyElem::zero(spec)));
  EXPECT_THROW(z.inv(), DivisionByZero);

  // A nonzero element that lives entirely beyond the other's precision.
  const auto far = UInftyElem::monomial(FqElem::one(spec), 9);
  EXPECT_THROW(far.agrees_with(z), WindowEmpty);
  EXPECT_FALSE(x.agrees_with(x.with_coeff(5, FqElem::one(spec))));
  EXPECT_TRUE(x.agrees_with(x.with_coeff(5, FqElem::zero(spec)).truncated(5)));

  const auto two_terms = UInftyElem::from_coeffs(spec, 0, {1, 1}, kExactPrecision);
  EXPECT_THROW(two_terms.inv(), InsufficientPrecision);
  EXPECT_THROW(UInftyElem::from_coeffs(spec, 0, {5}, 3), InvalidSpec);
  EXPECT_THROW(x + UInftyElem::zeta(resolve_field(9)), SpecMismatch);
}

// Independent expansion of zeta * prod_i (1 - t / theta^(q^i))^-1: each
// factor's geometric series is multiplied in as a t-polynomial whose
// coefficients are sparse Laurent polynomials in u.
using Laurent = std::map<std::int64_t, FqRaw>;

std::vector<Laurent> omega_oracle(const FqSpec& k, std::size_t T,
                                  std::int64_t bound) {
  const std::int64_t q = k.order();
  std::vector<Laurent> prod(T);
  prod[0][0] = 1;
  for (std::int64_t qi = 1; (q - 1) * qi < bound + q; qi *= q) {
    // 1/theta^(q^i) = (-u^(q-1))^(q^i).
    const FqRaw c = k.pow(k.neg(1), static_cast<std::uint64_t>(qi));
    const std::int64_t e = (q - 1) * qi;
    std::vector<Laurent> next(T);
    for (std::size_t a = 0; a < T; ++a) {
      for (const auto& [ea, ca] : prod[a]) {
        FqRaw cm = 1;
        for (std::size_t m = 0; a + m < T; ++m) {
          const std::int64_t exp = ea + static_cast<std::int64_t>(m) * e;
          if (exp > bound) break;
          auto& slot = next[a + m][exp];
          slot = k.add(slot, k.mul(ca, cm));
          cm = k.mul(cm, c);
        }
      }
    }
    prod = std::move(next);
  }
  for (auto& entry : prod) {
    Laurent shifted;
    for (const auto& [e, c] : entry)
      if (c) shifted[e - 1] = c;
    entry = std::move(shifted);
  }
  return prod;
}

TEST(Omega, MatchesIndependentExpansion) {
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    const auto spec = resolve_field(q);
    for (std::int64_t U : {1, 7, 40, 128}) {
      const std::size_t T = 8;
      const auto omega = compute_omega(spec, T, U);
      const std::int64_t top = -1 + static_cast<std::int64_t>(T) * (q - 1) + U;
      const auto oracle = omega_oracle(*spec, T, top + 1);
      for (std::size_t n = 0; n < T; ++n) {
        const auto& w = omega.entries[n];
        const std::int64_t val = -1 + static_cast<std::int64_t>(n) * (q - 1);
        ASSERT_EQ(w.uprec(), val + U);
        for (std::int64_t e = val - 3; e < w.uprec(); ++e) {
          const auto it = oracle[n].find(e);
          const FqRaw expect = it == oracle[n].end() ? 0 : it->second;
          ASSERT_EQ(w.raw_coeff(e), expect)
              << "q=" << q << " U=" << U << " n=" << n << " e=" << e;
        }
        // Lowest term: omega_n = (-1)^n u^(val) + ...
        EXPECT_EQ(w.val(), val);
      }
    }
  }
}

TEST(Omega, LowestTerms) {
  // omega_1 = -u^(q-2) + ... for every q.
  for (unsigned q : {2u, 3u, 7u}) {
    const auto spec = resolve_field(q);
    const auto omega = compute_omega(spec, 2, 16);
    EXPECT_EQ(omega.entries[0].coeff(-1), FqElem::one(spec));
    EXPECT_EQ(omega.entries[1].coeff(static_cast<std::int64_t>(q) - 2),
              -FqElem::one(spec));
  }
}

TEST(Omega, FactorCount) {
  EXPECT_EQ(omega_factor_count(2, 128), 8u);
  EXPECT_EQ(omega_factor_count(3, 32), 3u);
  EXPECT_EQ(omega_factor_count(3, 1), 1u);
  EXPECT_EQ(omega_factor_count(5, 4), 1u);
  EXPECT_EQ(omega_factor_count(5, 17), 2u);
}

class OmegaIdentityTest
    : public ::testing::TestWithParam<std::tuple<unsigned, std::size_t>> {};

TEST_P(OmegaIdentityTest, EquationsHold) {
  const auto [q, k] = GetParam();
  const auto omega = compute_omega(resolve_field(q), 8, 128);
  EXPECT_TRUE(verify_carlitz_equation(omega));
  EXPECT_TRUE(verify_prolongation_trivialization(omega, k));
  for (std::size_t c = 0; c <= k; ++c)
    EXPECT_TRUE(verify_hhat_membership(k, omega_jet_column(omega, k, c)));
}

// Every single-coefficient perturbation of omega is caught.
TEST_P(OmegaIdentityTest, PerturbationsAreDetected) {
  const auto [q, k] = GetParam();
  const auto spec = resolve_field(q);
  const auto omega = compute_omega(spec, 8, 128);
  const FqElem one = FqElem::one(spec);
  std::size_t tried = 0;
  for (std::size_t n = 0; n < omega.tprec(); ++n) {
    const auto& w = omega.entries[n];
    for (std::int64_t e = w.val(); e < w.uprec(); e += 5) {
      OmegaSeries bad = omega;
      bad.entries[n] = w.with_coeff(e, w.coeff(e) + one);
      ++tried;
      ASSERT_FALSE(verify_carlitz_equation(bad)) << n << " " << e;
      ASSERT_FALSE(verify_prolongation_trivialization(bad, k)) << n << " " << e;
      bool some_column_fails = false;
      for (std::size_t c = 0; c <= k; ++c)
        some_column_fails |=
            !verify_hhat_membership(k, omega_jet_column(bad, k, c));
      ASSERT_TRUE(some_column_fails) << n << " " << e;
    }
  }
  EXPECT_GT(tried, 100u);
}

INSTANTIATE_TEST_SUITE_P(
    SmallFields, OmegaIdentityTest,
    ::testing::Combine(::testing::Values(2u, 3u, 4u),
                       ::testing::Values(std::size_t{0}, std::size_t{1},
                                         std::size_t{2})));

TEST(Omega, PrecisionErrors) {
  const auto spec = resolve_field(2);
  EXPECT_THROW(compute_omega(spec, 0, 10), InsufficientPrecision);
  EXPECT_THROW(compute_omega(spec, 3, 0), InsufficientPrecision);
  const auto omega = compute_omega(spec, 3, 10);
  EXPECT_THROW(verify_prolongation_trivialization(omega, 3),
               InsufficientPrecision);
  EXPECT_THROW(tate_agrees({}, omega.entries), WindowEmpty);
  EXPECT_THROW(torsion_generators(omega, 1, 2), InsufficientPrecision);
  EXPECT_THROW(omega_jet_column(omega, 1, 2), ShapeMismatch);
  EXPECT_THROW(verify_hhat_membership(2, omega_jet_column(omega, 1, 0)),
               ShapeMismatch);
}

TEST(Prolongation, ActionStructure) {
  std::mt19937_64 rng(23);
  const auto spec = resolve_field(3);
  const std::size_t k = 3;
  std::vector<UInftyElem> e;
  for (std::size_t r = 0; r <= k; ++r) e.push_back(sample(rng, spec, 0, 10, 0).known);
  const ProlongationAction action{k};
  // The nilpotent part vanishes after k+1 applications and not before.
  auto v = e;
  for (std::size_t i = 0; i <= k; ++i) {
    bool all_zero = true;
    for (const auto& x : v) all_zero &= x.is_zero();
    EXPECT_FALSE(all_zero) << i;
    v = action.apply_nilpotent(v);
  }
  for (const auto& x : v) EXPECT_TRUE(x.is_zero());
  const auto lin = action.apply_linear(e);
  const auto nil = action.apply_nilpotent(e);
  const auto theta = UInftyElem::theta(spec);
  const auto full = action.apply(e);
  for (std::size_t r = 0; r <= k; ++r) {
    EXPECT_TRUE((lin[r] - theta * e[r]).agrees_with(nil[r]));
    EXPECT_TRUE(full[r].agrees_with(lin[r] + e[r].frobenius_q()));
  }
  EXPECT_THROW(action.apply(std::vector<UInftyElem>(2, e[0])), ShapeMismatch);
}

TEST(Omega, TorsionGeneratorsAreScaledCoefficients) {
  const auto spec = resolve_field(3);
  const auto omega = compute_omega(spec, 6, 20);
  const auto table = torsion_generators(omega, 2, 2);
  ASSERT_EQ(table.size(), 3u);
  // C(2,1) = 2 mod 3: the (1,1) generator is 2 * omega_2.
  EXPECT_TRUE(table[1][1].agrees_with(FqElem::from_int(spec, 2) * omega.entries[2]));
  EXPECT_TRUE(table[2][0].agrees_with(omega.entries[2]));
  // C(3,1) = 0 mod 3.
  EXPECT_TRUE(table[2][1].is_zero());
}

TEST(Omega, JsonDump) {
  const auto spec = resolve_field(4);
  const auto omega = compute_omega(spec, 3, 5);
  const auto doc = nlohmann::json::parse(omega_to_json(omega));
  EXPECT_EQ(doc["q"], 4);
  EXPECT_EQ(doc["p"], 2);
  EXPECT_EQ(doc["e"], 2);
  EXPECT_EQ(doc["tprec"], 3);
  EXPECT_EQ(doc["uspan"], 5);
  ASSERT_EQ(doc["entries"].size(), 3u);
  for (std::size_t n = 0; n < 3; ++n) {
    const auto& rec = doc["entries"][n];
    EXPECT_EQ(rec["n"], n);
    const std::int64_t val = rec["val"], uprec = rec["uprec"];
    EXPECT_EQ(val, omega.entries[n].val());
    EXPECT_EQ(uprec, omega.entries[n].uprec());
    ASSERT_EQ(rec["coeffs"].size(), static_cast<std::size_t>(uprec - val));
    for (std::int64_t e = val; e < uprec; ++e) {
      const std::vector<unsigned> c = rec["coeffs"][e - val];
      EXPECT_EQ(c, omega.entries[n].coeff(e).coeffs());
    }
  }
}

}  // namespace
}  // namespace carlitz
