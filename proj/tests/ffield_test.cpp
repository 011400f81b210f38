/* Copyright 2026 The modgamma Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/


#include "modgamma/ffield.hpp"

#include <set>

#include <gtest/gtest.h>

namespace modgamma {
namespace {

// Smallest monic polynomial of degree 2 or 3 with no roots mod p, ordered
// with the constant term most significant (the same order build() uses).
std::vector<u64> smallest_rootless(u64 p, unsigned f) {
  std::vector<u64> c(f, 0);
  for (;;) {
    bool has_root = false;
    for (u64 x = 0; x < p && !has_root; ++x) {
      u64 v = 1;
      for (unsigned i = f; i-- > 0;) v = (v * x + c[i]) % p;
      has_root = v == 0;
    }
    if (!has_root) {
      c.push_back(1);
      return c;
    }
    unsigned i = f;
    while (i-- > 0) {
      if (++c[i] < p) break;
      c[i] = 0;
    }
  }
}

TEST(FqField, GeneratorsOfPrimeFields) {
  EXPECT_EQ(fq_field::build(5, 1)->generator().code(), 2u);
  EXPECT_EQ(fq_field::build(3, 1)->generator().code(), 2u);
  EXPECT_EQ(fq_field::build(7, 1)->generator().code(), 3u);
}

TEST(FqField, ModulusIsSmallestIrreducible) {
  for (auto [p, f] : std::vector<std::pair<u64, unsigned>>{{5, 2}, {3, 2}, {2, 3}, {7, 2}, {3, 3}, {2, 2}})
    EXPECT_EQ(fq_field::build(p, f)->modulus(), smallest_rootless(p, f)) << p << "^" << f;
  EXPECT_EQ(fq_field::build(2, 4)->modulus(), (std::vector<u64>{1, 0, 0, 1, 1}));
}

TEST(FqField, GeneratorHasFullOrderAndIsSmallest) {
  for (auto [p, f] : std::vector<std::pair<u64, unsigned>>{{5, 2}, {2, 4}, {3, 3}, {7, 2}}) {
    auto k = fq_field::build(p, f);
    const u64 n = k->group_order();
    const auto g = k->generator();
    for (u64 r : prime_factors(n)) EXPECT_NE(g.pow(static_cast<i64>(n / r)).code(), 1u);
    EXPECT_EQ(g.pow(static_cast<i64>(n)).code(), 1u);
    for (fq_field::code_t c = 1; c < g.code(); ++c) {
      const auto x = k->element(c);
      bool full = true;
      for (u64 r : prime_factors(n)) full = full && x.pow(static_cast<i64>(n / r)).code() != 1;
      EXPECT_FALSE(full) << "smaller generator " << c;
    }
  }
}

TEST(FqField, GeneratorRankSelectsLaterGenerators) {
  auto k0 = fq_field::build(2, 4, 0);
  auto k1 = fq_field::build(2, 4, 1);
  EXPECT_LT(k0->generator().code(), k1->generator().code());
  EXPECT_EQ(k0->modulus(), k1->modulus());
}

TEST(FqField, GuardsAndErrors) {
  EXPECT_THROW(fq_field::build(4, 1), std::invalid_argument);
  EXPECT_THROW(fq_field::build(2, 21), size_error);
  EXPECT_NO_THROW(fq_field::build(2, 20));
  EXPECT_THROW(fq_field::build(5, 0), std::invalid_argument);
}

TEST(FqField, PowersEnumerateEveryUnitOnce) {
  auto k = fq_field::build(5, 2);
  std::set<fq_field::code_t> seen;
  for (i64 i = 0; i < 24; ++i) seen.insert(k->power_of_generator(i).code());
  EXPECT_EQ(seen.size(), 24u);
  EXPECT_EQ(seen.count(0), 0u);
}

TEST(FqField, DiscreteLogs) {
  auto f5 = fq_field::build(5, 1);
  EXPECT_EQ(dlog(f5->one()), 0u);
  EXPECT_EQ(dlog(f5->generator()), 1u);
  EXPECT_EQ(dlog(f5->element(4)), 2u);
  EXPECT_EQ(dlog(f5->element(3)), 3u);
  EXPECT_THROW(dlog(f5->zero()), std::domain_error);
  auto k = fq_field::build(3, 3);
  for (u64 e = 0; e < k->group_order(); ++e) EXPECT_EQ(dlog(k->power_of_generator(static_cast<i64>(e))), e);
}

TEST(FqField, ArithmeticMatchesPolynomialModel) {
  auto k = fq_field::build(5, 2);  // t^2 + t + 1
  const auto t = k->from_coeffs({0, 1});
  EXPECT_EQ(t * t, k->from_coeffs({4, 4}));
  EXPECT_EQ((t * t + t + k->one()).code(), 0u);
  EXPECT_EQ(t * t.inverse(), k->one());
  EXPECT_EQ(k->format(k->from_coeffs({3, 2}).code()), "3+2*t");
  EXPECT_EQ(k->format(0), "0");
}

TEST(TraceNorm, QuadraticExtensionOfF5) {
  auto k = fq_field::build(5, 2);
  std::vector<int> norm_hits(5, 0);
  for (i64 i = 0; i < 24; ++i) {
    const auto x = k->power_of_generator(i);
    const auto r = trace_norm_frob(x, 1);
    EXPECT_EQ(r.trace, x + x.pow(5));
    EXPECT_EQ(r.norm, x.pow(6));
    EXPECT_EQ(r.frob, x.pow(5));
    ++norm_hits[r.norm.code()];
  }
  EXPECT_EQ(norm_hits, (std::vector<int>{0, 6, 6, 6, 6}));
}

TEST(TraceNorm, PrimeFieldInputs) {
  auto k = fq_field::build(3, 3);
  const auto x = k->element(2);
  const auto r = trace_norm_frob(x, 1);
  EXPECT_EQ(r.trace, x + x + x);
  EXPECT_EQ(r.norm, x.pow(3));
  EXPECT_THROW(trace_norm_frob(x, 2), std::invalid_argument);
}

TEST(TraceNorm, LinearityMultiplicativityFrobenius) {
  for (auto [p, f, s] : std::vector<std::tuple<u64, unsigned, unsigned>>{{5, 2, 1}, {2, 4, 2}, {3, 2, 1}, {5, 4, 2}}) {
    auto k = fq_field::build(p, f);
    for (fq_field::code_t a = 0; a < k->size(); a += 3) {
      for (fq_field::code_t b = 1; b < k->size(); b += 5) {
        const auto x = k->element(a);
        const auto y = k->element(b);
        EXPECT_EQ(trace_norm_frob(x + y, s).trace, trace_norm_frob(x, s).trace + trace_norm_frob(y, s).trace);
        EXPECT_EQ(trace_norm_frob(x * y, s).norm, trace_norm_frob(x, s).norm * trace_norm_frob(y, s).norm);
        EXPECT_EQ(trace_norm_frob(x * y, s).frob, trace_norm_frob(x, s).frob * trace_norm_frob(y, s).frob);
      }
    }
    u64 fixed = 0;
    for (fq_field::code_t a = 0; a < k->size(); ++a) fixed += k->in_subfield(a, s);
    EXPECT_EQ(fixed, checked_pow(p, s, 1u << 20));
  }
}

TEST(TraceNorm, AbsoluteTraceIsIntegerValued) {
  auto k = fq_field::build(5, 2);
  const auto t = k->from_coeffs({0, 1});
  // t^3 = 1, so t^5 = t^2 = -1 - t and the trace is -1 = 4.
  EXPECT_EQ(absolute_trace(*k, t.code()), 4u);
  EXPECT_EQ(absolute_trace(*k, k->one().code()), 2u);
}

}  // namespace
}  // namespace modgamma
