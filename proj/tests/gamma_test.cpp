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


#include "modgamma/gamma.hpp"

#include <gtest/gtest.h>

#include <numeric>

namespace modgamma {
namespace {

using artin_gamma = gamma_factor<artin_elem>;
using local_gamma = gamma_factor<cyc_local>;

gamma_context<artin_elem> scenario_context(u64 q, u64 ell, unsigned depth, compare_mode mode = compare_mode::exact) {
  return make_artin_context(q, reduction_with_sqrt_q(scenario_order(q), q, ell), depth, mode);
}

gamma_context<artin_elem> gl1_context(u64 q, u64 ell) {
  const u64 p = as_prime_power(q)->first;
  return make_artin_context(q, reduction_with_sqrt_q(std::lcm(q - 1, p), q, ell), 1, compare_mode::exact);
}

template <class E>
tame_char<E> trivial(const gamma_context<E>& ctx) {
  return {ctx.unit, ctx.unit};
}

TEST(GammaContext, SquareRootOfQ) {
  for (u64 q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    const auto c0 = make_char0_context(q);
    EXPECT_EQ(c0.sqrt_q * c0.sqrt_q, c0.q_image) << q;
    EXPECT_EQ(c0.sqrt_q * c0.sqrt_q_inv, c0.unit) << q;
  }
  for (auto [q, ell] : std::vector<std::pair<u64, u64>>{{5, 2}, {5, 3}, {3, 2}, {7, 3}, {4, 3}}) {
    const auto ctx = scenario_context(q, ell, 1);
    EXPECT_EQ(ctx.sqrt_q * ctx.sqrt_q, ctx.q_image) << q << " " << ell;
    EXPECT_TRUE(ctx.q_image.is_unit());
    EXPECT_TRUE(ctx.sqrt_q.is_nilpotent_free());
  }
  // 3 is a non-residue mod 5 and F_5 has odd degree: the residue field doubles.
  EXPECT_EQ(sqrt_degree_multiple(3, 5, 1), 2u);
  EXPECT_EQ(sqrt_degree_multiple(4, 5, 1), 1u);
  EXPECT_EQ(sqrt_degree_multiple(3, 2, 1), 1u);
}

TEST(GammaContext, ScenarioOrderAndGuards) {
  EXPECT_EQ(scenario_order(5), 120u);
  EXPECT_EQ(scenario_order(2), 24u);
  EXPECT_EQ(scenario_order(9), 240u);
  EXPECT_THROW(scenario_order(6), std::invalid_argument);
  const auto map = reduction_map::build(120, 2);
  EXPECT_THROW(make_artin_context(5, map, 5), std::invalid_argument);
  EXPECT_THROW(make_artin_context(5, map, 0), std::invalid_argument);
  EXPECT_THROW(make_artin_context(7, map, 1), std::invalid_argument);
  EXPECT_THROW(make_artin_context(5, reduction_map::build(120, 5), 1), std::invalid_argument);
  EXPECT_EQ(parse_compare_mode("exact"), compare_mode::exact);
  EXPECT_EQ(parse_compare_mode(to_string(compare_mode::up_to_monomial)), compare_mode::up_to_monomial);
  EXPECT_THROW(parse_compare_mode("loose"), std::invalid_argument);
}

TEST(GammaGl1, UnramifiedCharacteristicZeroShape) {
  const auto c0 = make_char0_context(5);
  const auto g = gamma_gl1(c0, trivial(c0));
  const auto& num = g.numerator().terms();
  const auto& den = g.denominator().terms();
  ASSERT_EQ(num.size(), 2u);
  ASSERT_EQ(den.size(), 2u);
  EXPECT_EQ(num.at(-1), c0.unit);
  EXPECT_EQ(num.at(0), -c0.sqrt_q_inv);
  EXPECT_EQ(den.at(0), c0.unit);
  EXPECT_EQ(den.at(-1), -c0.sqrt_q_inv);
}

TEST(GammaGl1, UnramifiedReducesToMinusOne) {
  for (auto [q, ell] : std::vector<std::pair<u64, u64>>{{5, 2}, {7, 3}, {11, 5}, {13, 3}}) {
    ASSERT_EQ(q % ell, 1u);
    const auto ctx = gl1_context(q, ell);
    const auto minus_one = artin_gamma::monomial(-ctx.unit, 0);
    const auto g = gamma_gl1(ctx, trivial(ctx));
    EXPECT_TRUE(gamma_eq(compare_mode::up_to_monomial, g, minus_one)) << q << " " << ell;
    EXPECT_TRUE(gamma_eq(compare_mode::exact, g, minus_one)) << q << " " << ell;
  }
}

TEST(GammaGl1, NonUnitUniformizerRejected) {
  const auto ctx = scenario_context(5, 2, 4);
  const tame_char<artin_elem> bad{ctx.unit, ctx.unit.alg()->y()};
  EXPECT_THROW(gamma_gl1(ctx, bad), std::invalid_argument);
  EXPECT_THROW(gamma_cuspidal_twist(ctx, 8, bad), std::invalid_argument);
}

TEST(GammaGl1, PairOfOrderFourLiftsOverF16) {
  const auto ctx = scenario_context(5, 2, 4);
  const auto& r = ctx.unit.alg();
  const tame_char<artin_elem> lift{ctx.unit + r->y(), ctx.unit};
  const auto g = gamma_gl1(ctx, lift) * gamma_gl1(ctx, lift.inverse());
  EXPECT_EQ(g, artin_gamma::monomial(r->from_codes({1, 0, 1, 1}), -2));
}

TEST(GammaGl1, PairIdentityForResiduallyNontrivialCharacters) {
  const auto c0 = make_char0_context(5);
  for (i64 e = 1; e < 4; ++e) {
    const auto chi = tame_from_exponent(c0, e);
    const auto sign = e % 2 == 0 ? c0.unit : -c0.unit;
    EXPECT_EQ(gamma_galois_tame(c0, {chi, chi.inverse()}), local_gamma::monomial(sign, -2)) << e;
  }
  // Residue exponent 3 has order 2 in F_7^x, prime to ell = 3.
  const auto ctx = gl1_context(7, 3);
  const auto chi = tame_from_exponent(ctx, 3);
  EXPECT_FALSE(chi.is_unramified());
  EXPECT_EQ(gamma_gl1(ctx, chi) * gamma_gl1(ctx, chi.inverse()), artin_gamma::monomial(-ctx.unit, -2));
}

TEST(GammaPrincipal, TrivialDataReducesToOne) {
  for (auto [q, ell] : std::vector<std::pair<u64, u64>>{{5, 2}, {7, 3}, {13, 3}}) {
    const auto ctx = gl1_context(q, ell);
    const auto one = artin_gamma::monomial(ctx.unit, 0);
    const auto g = gamma_principal(ctx, trivial(ctx), trivial(ctx), trivial(ctx));
    EXPECT_TRUE(gamma_eq(compare_mode::up_to_monomial, g, one)) << q;
    EXPECT_TRUE(gamma_eq(compare_mode::up_to_monomial, gamma_galois_tame(ctx, {trivial(ctx), trivial(ctx)}), g));
  }
}

TEST(GammaPrincipal, RamifiedTwistGivesSquareOfGl1) {
  const auto c0 = make_char0_context(5);
  for (i64 e = 1; e < 4; ++e) {
    const auto chi = tame_from_exponent(c0, e);
    const auto g1 = gamma_gl1(c0, chi);
    EXPECT_EQ(gamma_principal(c0, trivial(c0), trivial(c0), chi), g1 * g1) << e;
  }
}

TEST(GammaPrincipal, OrderFourLiftTwistSquaresTheGaussSum) {
  const auto ctx = scenario_context(5, 2, 4);
  const auto& r = ctx.unit.alg();
  const tame_char<artin_elem> lift{ctx.unit + r->y(), ctx.unit};
  const auto g = gamma_principal(ctx, trivial(ctx), trivial(ctx), lift).simplified();
  ASSERT_TRUE(g.is_monomial());
  const auto& [k, c] = *g.numerator().terms().begin();
  EXPECT_EQ(k, -2);
  const auto& f = *r->residue_field();
  EXPECT_EQ(c.coeffs()[0], 1u);
  EXPECT_EQ(c.coeffs()[1], 0u);
  EXPECT_EQ(c.coeffs()[3], 0u);
  const auto a = c.coeffs()[2];
  EXPECT_EQ(f.add(f.add(f.mul(a, a), a), 1), 0u);
}

TEST(GammaCuspidal, UnramifiedTwistReducesToOneForQ5Ell2) {
  const auto ctx = scenario_context(5, 2, 1);
  EXPECT_EQ(gamma_cuspidal_twist(ctx, 8, trivial(ctx)), artin_gamma::monomial(ctx.unit, -1));
}

TEST(GammaCuspidal, CharacteristicZeroCoefficient) {
  const auto c0 = make_char0_context(5);
  const auto g = gamma_cuspidal_twist(c0, 8, trivial(c0));
  ASSERT_TRUE(g.is_monomial());
  const auto& [k, c] = *g.numerator().terms().begin();
  EXPECT_EQ(k, -1);
  EXPECT_EQ(c * c, cyc_local(c0.unit.ring()->integer(625), 5));
  EXPECT_EQ(g, local_gamma::monomial(cyc_local(c0.unit.ring()->integer(-25), 5), -1));
}

TEST(GammaCuspidal, NonRegularDataRejected) {
  const auto ctx = scenario_context(5, 2, 1);
  EXPECT_THROW(gamma_cuspidal_twist(ctx, 0, trivial(ctx)), std::invalid_argument);
  EXPECT_THROW(gamma_cuspidal_twist(ctx, 6, trivial(ctx)), std::invalid_argument);
  const auto small = gl1_context(5, 2);
  EXPECT_THROW(gamma_cuspidal_twist(small, 8, trivial(small)), std::invalid_argument);
}

TEST(GammaCuspidal, SquareMatchesReducedGaussSquareForEveryOrbit) {
  const auto map = reduction_map::build(120, 2);
  const auto ctx = make_artin_context(5, map, 4, compare_mode::exact);
  auto k = fq_field::build(5, 2);
  const auto psi_tilde = add_char(k, 1, 1).compose_trace(2);
  std::size_t orbits = 0;
  for (i64 e = 0; e < 24; ++e) {
    const mult_char theta(k, e);
    if (!is_regular(theta, 1)) continue;
    ++orbits;
    const auto g = gamma_cuspidal_twist(ctx, static_cast<u64>(e), trivial(ctx));
    const auto c = g.numerator().terms().begin()->second;
    const auto tau = gauss_sum(theta.inverse(), psi_tilde);
    EXPECT_EQ(c * c, map(tau.ring()->integer(25) * tau * tau)) << e;
  }
  EXPECT_EQ(orbits, 20u);
}

TEST(GammaCuspidal, OrderFourLiftTwistMatchesDirectSum) {
  const auto map = reduction_map::build(120, 2);
  const auto ctx = make_artin_context(5, map, 4, compare_mode::exact);
  const auto& r = ctx.unit.alg();
  const tame_char<artin_elem> lift{ctx.unit + r->y(), ctx.unit};
  const auto g = gamma_cuspidal_twist(ctx, 8, lift);

  // chi_E theta sends the generator of F_25^x to the image of
  // zeta_120^(105 + 40); sum its inverse against psi~ in Z[zeta_120].
  ASSERT_EQ(map.zeta_image(105), ctx.unit + r->y());
  auto k = fq_field::build(5, 2);
  const auto psi_tilde = add_char(k, 1, 1).compose_trace(2);
  const auto& ring = *map.source();
  cyc_int s = ring.zero();
  for (i64 j = 0; j < 24; ++j)
    s += ring.zeta_pow(-145 * j + 24 * static_cast<i64>(psi_tilde.exponent(k->power_of_generator(j))));
  EXPECT_EQ(g, artin_gamma::monomial(map(ring.integer(-5) * s), -1));

  const auto t = r->residue_field()->exp(1);
  const auto t3 = r->residue_field()->exp(3);
  const auto& f = *r->residue_field();
  const auto a = f.add(t, t3);
  EXPECT_EQ(g, artin_gamma::monomial(r->from_codes({1, 1, a, f.add(a, 1)}), -1));
}

TEST(GammaGaloisTame, SingletonAndEmpty) {
  const auto ctx = scenario_context(5, 2, 4);
  const auto& r = ctx.unit.alg();
  const tame_char<artin_elem> lift{ctx.unit + r->y(), ctx.unit + r->y()};
  EXPECT_EQ(gamma_galois_tame(ctx, {lift}), gamma_gl1(ctx, lift));
  EXPECT_EQ(gamma_galois_tame(ctx, {trivial(ctx)}), gamma_gl1(ctx, trivial(ctx)));
  EXPECT_THROW(gamma_galois_tame(ctx, {}), std::invalid_argument);
}

TEST(GammaEq, ModeSemantics) {
  const auto ctx = scenario_context(5, 2, 2);
  const auto g = gamma_gl1(ctx, trivial(ctx));
  EXPECT_TRUE(gamma_eq(compare_mode::exact, g, g));
  EXPECT_TRUE(gamma_eq(compare_mode::up_to_monomial, g, g));
  const auto c = ctx.unit + ctx.unit.alg()->y();
  const auto a = artin_gamma::monomial(c, -1);
  const auto b = artin_gamma::monomial(c, 0);
  EXPECT_FALSE(gamma_eq(compare_mode::exact, a, b));
  EXPECT_TRUE(gamma_eq(compare_mode::up_to_monomial, a, b));
  EXPECT_FALSE(gamma_eq(compare_mode::up_to_monomial, a, artin_gamma::monomial(ctx.unit, 0)));
  const auto ctx_m = scenario_context(5, 2, 2, compare_mode::up_to_monomial);
  EXPECT_TRUE(gamma_eq(ctx_m, a, b));
  EXPECT_FALSE(gamma_eq(ctx, a, b));
}

TEST(GammaEq, NaiveCounterexampleSides) {
  const auto ctx = scenario_context(5, 2, 1);
  const auto cusp = inertial_support::cuspidal(5, 8);
  const auto sp = inertial_support::special(5, 0);
  for (i64 e = 0; e < 4; ++e) {
    const auto chi = tame_from_exponent(ctx, e);
    EXPECT_TRUE(chi.is_unramified());
    const auto a = gamma_of_support(ctx, cusp, chi);
    const auto b = gamma_of_support(ctx, sp, chi);
    EXPECT_TRUE(gamma_eq(compare_mode::up_to_monomial, a, b)) << e;
    // The two sides differ by X^-1.
    EXPECT_FALSE(gamma_eq(compare_mode::exact, a, b)) << e;
    EXPECT_EQ(a, b.shift(-1));
  }
}

TEST(InertialSupport, CanonicalForms) {
  EXPECT_EQ(inertial_support::cuspidal(5, 16), inertial_support::cuspidal(5, 8));
  EXPECT_EQ(inertial_support::cuspidal(5, 8).label(), "cusp(8)");
  EXPECT_EQ(inertial_support::cuspidal(5, -16).data, (std::vector<u64>{8, 16}));
  EXPECT_THROW(inertial_support::cuspidal(5, 6), std::invalid_argument);
  EXPECT_THROW(inertial_support::cuspidal(5, 0), std::invalid_argument);
  EXPECT_EQ(inertial_support::principal(5, 3, 1), inertial_support::principal(5, 1, 7));
  EXPECT_EQ(inertial_support::principal(5, 3, 1).label(), "ps(1,3)");
  EXPECT_EQ(inertial_support::special(5, -1).label(), "sp(3)");
  EXPECT_EQ(inertial_support::special(5, 0).kind_name(), "special");
  EXPECT_LT(inertial_support::cuspidal(5, 1), inertial_support::principal(5, 0, 0));
}

TEST(InertialSupport, GammaOfSupportDispatch) {
  const auto ctx = scenario_context(5, 2, 4);
  const auto& r = ctx.unit.alg();
  const tame_char<artin_elem> lift{ctx.unit + r->y(), ctx.unit};
  EXPECT_EQ(gamma_of_support(ctx, inertial_support::cuspidal(5, 8), lift), gamma_cuspidal_twist(ctx, 8, lift));
  const auto c1 = tame_from_exponent(ctx, 1);
  const auto c2 = tame_from_exponent(ctx, 2);
  EXPECT_EQ(gamma_of_support(ctx, inertial_support::principal(5, 1, 2), lift),
            gamma_galois_tame(ctx, {c1 * lift, c2 * lift}));
  EXPECT_EQ(gamma_of_support(ctx, inertial_support::special(5, 1), lift), gamma_principal(ctx, c1, c1, lift));
}

TEST(GammaFactor, DenominatorsStayInMultiplicativeSystem) {
  const auto ctx = scenario_context(5, 2, 4);
  const auto& r = ctx.unit.alg();
  for (u64 power = 0; power < 4; ++power) {
    const tame_char<artin_elem> tw{(ctx.unit + r->y()).pow(static_cast<i64>(power)), ctx.unit};
    for (const auto& s : {inertial_support::cuspidal(5, 1), inertial_support::principal(5, 0, 1),
                          inertial_support::principal(5, 0, 0), inertial_support::special(5, 2)}) {
      const auto g = gamma_of_support(ctx, s, tw);
      EXPECT_TRUE(g.denominator().in_multiplicative_system());
      EXPECT_TRUE(g.simplified().denominator().in_multiplicative_system());
      EXPECT_EQ(g.simplified(), g);
    }
  }
}

}  // namespace
}  // namespace modgamma
