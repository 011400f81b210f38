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
 * @file reduce.hpp
 * @brief Mod-ell reduction Z[zeta_M] -> F_{ell^d}[Y]/(Y^N).
 *
 * Write M = ell^a M' with ell prime to M'. The target has residue degree
 * d = ord_{M'}(ell) and nilpotency N = phi(ell^a), which makes it the full
 * quotient Z[zeta_M]/(ell) localised at one prime above ell. The root of unity
 * maps to t (1 + Y) where t = g^((ell^d - 1)/M') for the residue field's
 * generator g. Which generator is used (and therefore which prime above ell)
 * is controlled by the generator rank.
 */

#ifndef MODGAMMA_REDUCE_HPP
#define MODGAMMA_REDUCE_HPP

#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "modgamma/artin.hpp"
#include "modgamma/cyclo.hpp"
#include "modgamma/errors.hpp"
#include "modgamma/numtheory.hpp"

namespace modgamma {

class reduction_map {
 public:
  /// `degree_multiple` forces d to be a multiple of the given value (used to
  /// make room for a square root of q).
  static reduction_map build(u64 order, u64 ell, unsigned generator_rank = 0, unsigned degree_multiple = 1) {
    if (!is_prime(ell)) throw std::invalid_argument("ell = " + std::to_string(ell) + " is not prime");
    if (degree_multiple == 0) throw std::invalid_argument("degree multiple must be positive");
    auto source = cyc_ring::build(order);
    const prime_part split = split_prime_part(order, ell);
    const u64 base_degree = multiplicative_order(ell % split.rest, split.rest);
    const auto d = static_cast<unsigned>(std::lcm<u64>(base_degree, degree_multiple));
    const auto n = static_cast<unsigned>(split.exponent == 0 ? 1 : euler_phi(split.power));
    auto target = artin_alg::build(ell, d, n, generator_rank);
    const auto& k = *target->residue_field();
    const artin_elem t = target->constant(k.exp(k.group_order() / split.rest));
    const artin_elem u = target->one() + target->y();
    const artin_elem root = split.exponent == 0 ? t : t * u;
    return reduction_map(std::move(source), std::move(target), split.rest, split.power, root);
  }

  const cyc_ring_ptr& source() const { return source_; }
  const artin_alg_ptr& target() const { return target_; }
  u64 order() const { return source_->order(); }
  u64 ell() const { return target_->ell(); }
  u64 prime_to_ell_part() const { return m_prime_; }
  u64 ell_part() const { return ell_part_; }
  const artin_elem& root_image() const { return root_; }

  /// Image of zeta_M^e.
  artin_elem zeta_image(i64 e) const { return root_.pow(mod_floor(e, static_cast<i64>(order()))); }

  artin_elem operator()(const cyc_int& x) const {
    if (x.ring()->order() != order()) throw std::invalid_argument("reduce: element is not in the source ring");
    const auto& field = *target_->residue_field();
    const auto ell_big = static_cast<long long>(ell());
    artin_elem out = target_->zero();
    for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
      const bigint residue = ((x.coeffs()[i] % ell_big) + ell_big) % ell_big;
      const auto c = residue.convert_to<long long>();
      if (c == 0) continue;
      out += target_->constant(field.from_integer(c)) * powers_[i];
    }
    return out;
  }

 private:
  reduction_map(cyc_ring_ptr source, artin_alg_ptr target, u64 m_prime, u64 ell_part, artin_elem root)
      : source_(std::move(source)), target_(std::move(target)), m_prime_(m_prime), ell_part_(ell_part), root_(root) {
    const auto degree = source_->degree();
    powers_.reserve(degree + 1);
    artin_elem acc = target_->one();
    for (std::size_t i = 0; i <= degree; ++i) {
      powers_.push_back(acc);
      acc = acc * root_;
    }
    // Phi_M(root) = 0 makes zeta -> root a well-defined ring homomorphism.
    const auto& phi = source_->cyclotomic_polynomial();
    artin_elem value = target_->zero();
    for (std::size_t i = 0; i < phi.size(); ++i)
      if (phi[i] != 0) value += target_->integer(phi[i]) * powers_[i];
    if (!value.is_zero()) throw consistency_error("reduction map: Phi_M(root image) != 0");
    if (!(root_.pow(static_cast<i64>(order())) == target_->one()))
      throw consistency_error("reduction map: root image is not an M-th root of unity");
    powers_.pop_back();
  }

  cyc_ring_ptr source_;
  artin_alg_ptr target_;
  u64 m_prime_;
  u64 ell_part_;
  artin_elem root_;
  std::vector<artin_elem> powers_;  // root^i for i < phi(M)
};

}  // namespace modgamma

#endif  // MODGAMMA_REDUCE_HPP
