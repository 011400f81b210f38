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

/**
 * @file gamma.hpp
 * @brief Closed-form gamma factors of tame GL(1) data and level-zero GL(2)
 * supports, valued in S^{-1} R[X, X^{-1}].
 *
 * Conventions (s is the chosen square root of q, c = chi(uniformizer)):
 *
 *   GL(1), unramified      (c^{-1} X^{-1} - s^{-1}) / (1 - c^{-1} s^{-1} X^{-1})
 *   GL(1), tame ramified   s^{-1} tau(chi^{-1}, psi) c^{-1} X^{-1}
 *   GL(2) cuspidal, twist  -q tau((chi_E theta)^{-1}, psi~) c^{-2} X^{-1}
 *   Sp2 twisted by chi     gamma1(chi)(s^{-1} X) * gamma1(chi)(s X)
 *   principal {chi1,chi2}  gamma1(chi1 chi) * gamma1(chi2 chi)
 *
 * Gauss sums always take the inverse character, so that replacing psi by
 * psi(a .) multiplies every gamma factor of a GL(n) object by its central
 * character at a (times the twist's square); this keeps comparisons stable
 * when the reduction map is changed by a Galois automorphism.
 *
 * Everything is templated on the coefficient ring: artin_elem for mod-ell
 * (and nilpotent) values, cyc_local for characteristic-zero checks.
 */

#ifndef MODGAMMA_GAMMA_HPP
#define MODGAMMA_GAMMA_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "modgamma/artin.hpp"
#include "modgamma/chars.hpp"
#include "modgamma/cyclo.hpp"
#include "modgamma/ffield.hpp"
#include "modgamma/laurent.hpp"
#include "modgamma/reduce.hpp"

namespace modgamma {

/// exact: cross-multiplication equality. up_to_monomial: equality after
/// multiplying one side by a power of X (the coefficient must match exactly).
enum class compare_mode { exact, up_to_monomial };

inline std::string to_string(compare_mode mode) {
  return mode == compare_mode::exact ? "exact" : "up_to_monomial";
}

inline compare_mode parse_compare_mode(const std::string& s) {
  if (s == "exact") return compare_mode::exact;
  if (s == "up_to_monomial" || s == "monomial") return compare_mode::up_to_monomial;
  throw std::invalid_argument("unknown compare mode '" + s + "'");
}

/// lcm(q^2 - 1, p), with 8 thrown in when p = 2 so that sqrt(2) exists in
/// characteristic zero.
inline u64 scenario_order(u64 q) {
  const auto pp = as_prime_power(q);
  if (!pp) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
  u64 m = std::lcm(q * q - 1, pp->first);
  if (pp->first == 2) m = std::lcm<u64>(m, 8);
  return m;
}

/// Residue-field degree needed so that q has a square root in F_{ell^d}.
inline unsigned sqrt_degree_multiple(u64 q, u64 ell, unsigned base_degree) {
  if (ell == 2 || base_degree % 2 == 0) return 1;
  const u64 r = q % ell;
  return pow_mod(r, (ell - 1) / 2, ell) == 1 ? 1 : 2;
}

template <coefficient_ring E>
using gamma_factor = laurent_rational<E>;

template <coefficient_ring E>
struct gamma_context {
  u64 q;
  u64 p;
  unsigned base_degree;     // [F_q : F_p]
  field_ptr field;          // F_{q^2}
  char_domain base_domain;  // F_q^x inside F_{q^2}
  char_domain top_domain;   // F_{q^2}^x
  add_char psi_base;        // canonical character of F_q
  add_char psi_top;         // psi_base o Tr_{q^2/q}
  E unit;
  E q_image;
  E sqrt_q;
  E sqrt_q_inv;
  E psi_root;               // image of zeta_p
  std::vector<E> roots;     // images of zeta_M^k, k < M
  compare_mode mode;

  u64 root_order() const { return roots.size(); }

  /// Image of zeta_order^e; order must divide M.
  E root_of_unity(u64 order, i64 e) const {
    if (order == 0 || root_order() % order != 0) throw std::invalid_argument("root order does not divide M");
    const auto k = static_cast<u64>(mod_floor(e, static_cast<i64>(order))) * (root_order() / order);
    return roots[k % root_order()];
  }

  /// tau over F_q^x of the character with the given value at the base generator.
  E tau_base(const E& value_at_generator) const {
    return character_sum(base_domain, value_at_generator, psi_root, psi_base);
  }
  E tau_top(const E& value_at_generator) const {
    return character_sum(top_domain, value_at_generator, psi_root, psi_top);
  }
};

namespace detail {

struct field_layout {
  u64 p;
  unsigned base_degree;
  field_ptr field;
};

inline field_layout layout_for(u64 q) {
  const auto pp = as_prime_power(q);
  if (!pp) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
  return {pp->first, pp->second, fq_field::build(pp->first, 2 * pp->second)};
}

}  // namespace detail

/// Reduction of Z[zeta_order] with the residue degree enlarged, if needed, so
/// that q has a square root in the residue field.
inline reduction_map reduction_with_sqrt_q(u64 order, u64 q, u64 ell, unsigned seed = 0) {
  const auto pp = as_prime_power(q);
  if (!pp) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
  if (!is_prime(ell)) throw std::invalid_argument("ell = " + std::to_string(ell) + " is not prime");
  const prime_part split = split_prime_part(order, ell);
  const auto d0 = static_cast<unsigned>(multiplicative_order(ell % split.rest, split.rest));
  return reduction_map::build(order, ell, seed, sqrt_degree_multiple(q, ell, d0));
}

/// Mod-ell context of nilpotency `depth`, obtained by truncating `map`. The
/// map's order must be a multiple of lcm(q - 1, p); scenario_order(q) is needed
/// for cuspidal data.
inline gamma_context<artin_elem> make_artin_context(u64 q, const reduction_map& map, unsigned depth,
                                                    compare_mode mode = compare_mode::up_to_monomial) {
  auto layout = detail::layout_for(q);
  if (layout.p == map.ell()) throw std::invalid_argument("ell must differ from the residue characteristic");
  // GL(1) data only needs (q - 1)-th and p-th roots; cuspidal evaluation
  // rejects contexts without (q^2 - 1)-th roots.
  if (map.order() % std::lcm(q - 1, layout.p) != 0) throw std::invalid_argument("reduction map order too small for q");
  if (depth == 0 || depth > map.target()->nilpotency())
    throw std::invalid_argument("depth must lie between 1 and the reduction's nilpotency order");
  auto alg = artin_alg::build(map.target()->residue_field(), depth);
  const auto& k = *alg->residue_field();
  const auto q_code = k.from_integer(static_cast<i64>(q % map.ell()));
  const u64 q_log = k.log(q_code);
  if (q_log % 2 != 0) throw std::invalid_argument("q has no square root in the residue field; enlarge d");
  const artin_elem s = alg->constant(k.exp(q_log / 2));

  std::vector<artin_elem> roots;
  roots.reserve(map.order());
  artin_elem acc = map.target()->one();
  for (u64 i = 0; i < map.order(); ++i) {
    roots.push_back(project(acc, alg));
    acc = acc * map.root_image();
  }
  const artin_elem psi_root = roots[map.order() / layout.p];
  char_domain base(layout.field, layout.base_degree);
  char_domain top(layout.field, 2 * layout.base_degree);
  add_char psi_base(layout.field, layout.base_degree, layout.base_degree);
  return gamma_context<artin_elem>{q,        layout.p,   layout.base_degree,
                                   layout.field, base,   top,
                                   psi_base, psi_base.compose_trace(2 * layout.base_degree),
                                   alg->one(), alg->integer(static_cast<i64>(q % map.ell())),
                                   s,        s.inverse(), psi_root,
                                   std::move(roots), mode};
}

/// sqrt(q) in Z[zeta_M], M = scenario_order(q), via quadratic Gauss sums.
inline cyc_int sqrt_q_char0(u64 q, const cyc_ring& ring) {
  const auto pp = as_prime_power(q);
  const u64 p = pp->first;
  const unsigned f = pp->second;
  const cyc_int p_half = ring.integer(boost::multiprecision::pow(bigint(p), f / 2));
  if (f % 2 == 0) return p_half;
  cyc_int root_p = ring.zero();
  const u64 m = ring.order();
  if (p == 2) {
    root_p = ring.zeta_pow(static_cast<i64>(m / 8)) + ring.zeta_pow(-static_cast<i64>(m / 8));
  } else {
    // G = sum (x/p) zeta_p^x satisfies G^2 = (-1)^((p-1)/2) p.
    for (u64 x = 1; x < p; ++x) {
      const bool residue = pow_mod(x, (p - 1) / 2, p) == 1;
      const cyc_int z = ring.zeta_pow(static_cast<i64>(x * (m / p)));
      root_p = residue ? root_p + z : root_p - z;
    }
    if (p % 4 == 3) root_p = ring.zeta_pow(-static_cast<i64>(m / 4)) * root_p;
  }
  cyc_int s = root_p * p_half;
  if (!(s * s == ring.integer(bigint(q)))) throw consistency_error("sqrt_q_char0: square root check failed");
  return s;
}

/// Characteristic-zero context over Z[zeta_M][1/p].
inline gamma_context<cyc_local> make_char0_context(u64 q, compare_mode mode = compare_mode::exact) {
  auto layout = detail::layout_for(q);
  auto ring = cyc_ring::build(scenario_order(q));
  std::vector<cyc_local> roots;
  roots.reserve(ring->order());
  for (u64 i = 0; i < ring->order(); ++i) roots.emplace_back(ring->zeta_pow(static_cast<i64>(i)), layout.p);
  const cyc_local s(sqrt_q_char0(q, *ring), layout.p);
  const cyc_local s_inv(s.numerator(), layout.p, layout.base_degree);  // s / q
  const cyc_local psi_root = roots[ring->order() / layout.p];
  char_domain base(layout.field, layout.base_degree);
  char_domain top(layout.field, 2 * layout.base_degree);
  add_char psi_base(layout.field, layout.base_degree, layout.base_degree);
  cyc_local unit(ring->one(), layout.p);
  cyc_local q_image(ring->integer(bigint(q)), layout.p);
  return gamma_context<cyc_local>{q,         layout.p,  layout.base_degree,
                                  layout.field, base,   top,
                                  psi_base,  psi_base.compose_trace(2 * layout.base_degree),
                                  unit,      q_image,   s,
                                  s_inv,     psi_root,  std::move(roots),
                                  mode};
}

/// Tame character of F^x: its restriction to the units (through F_q^x) and
/// its value at the uniformizer.
template <coefficient_ring E>
struct tame_char {
  E value_at_generator;  // value at the generator of F_q^x
  E at_uniformizer;

  bool is_unramified() const { return value_at_generator == value_at_generator.one(); }
  tame_char inverse() const { return {value_at_generator.inverse(), at_uniformizer.inverse()}; }
  friend tame_char operator*(const tame_char& a, const tame_char& b) {
    return {a.value_at_generator * b.value_at_generator, a.at_uniformizer * b.at_uniformizer};
  }
};

/// The characteristic-zero character with exponent e on F_q^x (as seen by the
/// context), unramified at the uniformizer with value c.
template <coefficient_ring E>
tame_char<E> tame_from_exponent(const gamma_context<E>& ctx, i64 e, std::optional<E> c = std::nullopt) {
  return {ctx.root_of_unity(ctx.base_domain.order(), e), c.value_or(ctx.unit)};
}

/// A nilpotent lift on F_q^x, projected to the context's depth.
inline tame_char<artin_elem> tame_from_lift(const gamma_context<artin_elem>& ctx, const nil_char_lift& lift,
                                            std::optional<artin_elem> c = std::nullopt) {
  if (!(lift.domain() == ctx.base_domain)) throw std::invalid_argument("lift is not a character of F_q^x");
  return {project(lift.value_at_generator(), ctx.unit.alg()), c.value_or(ctx.unit)};
}

template <coefficient_ring E>
void check_uniformizer(const tame_char<E>& chi) {
  if (!chi.at_uniformizer.is_unit()) throw std::invalid_argument("chi(uniformizer) must be a unit");
}

template <coefficient_ring E>
gamma_factor<E> gamma_gl1(const gamma_context<E>& ctx, const tame_char<E>& chi) {
  check_uniformizer(chi);
  using poly = laurent_poly<E>;
  const E c_inv = chi.at_uniformizer.inverse();
  if (chi.is_unramified()) {
    typename poly::term_map num;
    num.emplace(-1, c_inv);
    num.emplace(0, -ctx.sqrt_q_inv);
    typename poly::term_map den;
    den.emplace(0, ctx.unit);
    den.emplace(-1, -(c_inv * ctx.sqrt_q_inv));
    return gamma_factor<E>(poly(std::move(num)), poly(std::move(den)));
  }
  const E tau = ctx.tau_base(chi.value_at_generator.inverse());
  return gamma_factor<E>::monomial(ctx.sqrt_q_inv * tau * c_inv, -1);
}

/// Shifted product gamma1(twist chi1)(s^{-1} X) * gamma1(twist chi2)(s X);
/// the gamma factor of (chi o det) twists when chi1 = chi2.
template <coefficient_ring E>
gamma_factor<E> gamma_principal(const gamma_context<E>& ctx, const tame_char<E>& chi1, const tame_char<E>& chi2,
                                const tame_char<E>& twist) {
  const auto g1 = gamma_gl1(ctx, twist * chi1).substitute(ctx.sqrt_q_inv);
  const auto g2 = gamma_gl1(ctx, twist * chi2).substitute(ctx.sqrt_q);
  return g1 * g2;
}

/// Product of GL(1) factors of a direct sum of tame characters.
template <coefficient_ring E>
gamma_factor<E> gamma_galois_tame(const gamma_context<E>& ctx, const std::vector<tame_char<E>>& chars) {
  if (chars.empty()) throw std::invalid_argument("gamma_galois_tame: empty multiset");
  gamma_factor<E> out = gamma_gl1(ctx, chars.front());
  for (std::size_t i = 1; i < chars.size(); ++i) out = out * gamma_gl1(ctx, chars[i]);
  return out;
}

/// Level-zero cuspidal attached to the regular character theta of
/// F_{q^2}^x with exponent theta_exponent, twisted by a tame character.
template <coefficient_ring E>
gamma_factor<E> gamma_cuspidal_twist(const gamma_context<E>& ctx, u64 theta_exponent, const tame_char<E>& twist) {
  check_uniformizer(twist);
  const mult_char theta(ctx.top_domain, static_cast<i64>(theta_exponent));
  if (!is_regular(theta, ctx.base_degree)) throw std::invalid_argument("cuspidal data must be a regular character");
  // chi_E = chi o N and N(g) is the generator of F_q^x, so chi_E(g) = chi(g_base).
  const E theta_value = ctx.root_of_unity(ctx.top_domain.order(), static_cast<i64>(theta_exponent));
  const E twisted = theta_value * twist.value_at_generator;
  const E tau = ctx.tau_top(twisted.inverse());
  const E c_inv = twist.at_uniformizer.inverse();
  return gamma_factor<E>::monomial(-(ctx.q_image * tau) * c_inv * c_inv, -1);
}

template <coefficient_ring E>
bool gamma_eq(compare_mode mode, const gamma_factor<E>& a, const gamma_factor<E>& b) {
  return mode == compare_mode::exact ? a == b : equal_up_to_x_power(a, b);
}

template <coefficient_ring E>
bool gamma_eq(const gamma_context<E>& ctx, const gamma_factor<E>& a, const gamma_factor<E>& b) {
  return gamma_eq(ctx.mode, a, b);
}

/// A level-zero inertial class for GL(2) over a field with residue field F_q.
struct inertial_support {
  enum class kind { cuspidal, principal, special };

  kind type;
  /// cuspidal: {e, q e mod q^2 - 1} with e the smaller; principal: {e1 <= e2}
  /// mod q - 1; special: {e} mod q - 1.
  std::vector<u64> data;

  static inertial_support cuspidal(u64 q, i64 e) {
    const u64 n = q * q - 1;
    const auto e0 = static_cast<u64>(mod_floor(e, static_cast<i64>(n)));
    const u64 e1 = mul_mod(e0, q, n);
    if (e0 == e1) throw std::invalid_argument("cuspidal exponent " + std::to_string(e) + " is not regular");
    return {kind::cuspidal, {std::min(e0, e1), std::max(e0, e1)}};
  }
  static inertial_support principal(u64 q, i64 e1, i64 e2) {
    const auto n = static_cast<i64>(q - 1);
    const auto a = static_cast<u64>(mod_floor(e1, n));
    const auto b = static_cast<u64>(mod_floor(e2, n));
    return {kind::principal, {std::min(a, b), std::max(a, b)}};
  }
  static inertial_support special(u64 q, i64 e) {
    return {kind::special, {static_cast<u64>(mod_floor(e, static_cast<i64>(q - 1)))}};
  }

  std::string kind_name() const {
    switch (type) {
      case kind::cuspidal: return "cuspidal";
      case kind::principal: return "principal";
      case kind::special: return "special";
    }
    return "?";
  }

  /// "cusp(8)", "ps(0,1)", "sp(0)".
  std::string label() const {
    switch (type) {
      case kind::cuspidal: return "cusp(" + std::to_string(data[0]) + ")";
      case kind::principal: return "ps(" + std::to_string(data[0]) + "," + std::to_string(data[1]) + ")";
      case kind::special: return "sp(" + std::to_string(data[0]) + ")";
    }
    return "?";
  }

  friend bool operator==(const inertial_support&, const inertial_support&) = default;
  friend auto operator<=>(const inertial_support&, const inertial_support&) = default;
};

/// Gamma factor of a support twisted by a tame character.
template <coefficient_ring E>
gamma_factor<E> gamma_of_support(const gamma_context<E>& ctx, const inertial_support& support,
                                 const tame_char<E>& twist) {
  switch (support.type) {
    case inertial_support::kind::cuspidal:
      return gamma_cuspidal_twist(ctx, support.data[0], twist);
    case inertial_support::kind::principal: {
      const auto c1 = tame_from_exponent(ctx, static_cast<i64>(support.data[0]));
      const auto c2 = tame_from_exponent(ctx, static_cast<i64>(support.data[1]));
      return gamma_galois_tame(ctx, std::vector<tame_char<E>>{c1 * twist, c2 * twist});
    }
    case inertial_support::kind::special: {
      const auto c = tame_from_exponent(ctx, static_cast<i64>(support.data[0]));
      return gamma_principal(ctx, c, c, twist);
    }
  }
  throw std::logic_error("unknown support kind");
}

}  // namespace modgamma

#endif  // MODGAMMA_GAMMA_HPP
