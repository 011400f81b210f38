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
 * @file chars.hpp
 * @brief Characters of finite fields, nilpotent lifts and Gauss sums.
 *
 * A multiplicative character is recorded by its exponent against a fixed
 * generator of its domain group. The domain is either the whole field or the
 * subfield of degree s inside it, whose multiplicative group is generated by
 * g^((p^f - 1)/(p^s - 1)). Keeping every subfield inside one top field means
 * norms and traces never need an embedding between independently built
 * fields.
 *
 * The canonical additive character of F_{p^s} is x -> zeta_p^{Tr(x)}.
 */

#ifndef MODGAMMA_CHARS_HPP
#define MODGAMMA_CHARS_HPP

#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "modgamma/artin.hpp"
#include "modgamma/cyclo.hpp"
#include "modgamma/ffield.hpp"
#include "modgamma/reduce.hpp"

namespace modgamma {

namespace detail {

inline u64 subgroup_order(const fq_field& field, unsigned degree) {
  if (degree == 0 || field.degree() % degree != 0)
    throw std::invalid_argument("character domain degree must divide the field degree");
  return checked_pow(field.characteristic(), degree, max_field_size) - 1;
}

}  // namespace detail

/// Domain of a character: the multiplicative group of the degree-s subfield.
class char_domain {
 public:
  char_domain(field_ptr field, unsigned degree) : field_(std::move(field)), degree_(degree) {
    order_ = detail::subgroup_order(*field_, degree_);
    index_ = field_->group_order() / order_;
  }

  const field_ptr& field() const { return field_; }
  unsigned degree() const { return degree_; }
  /// |F_{p^s}^x|.
  u64 order() const { return order_; }
  /// (p^f - 1)/(p^s - 1); the domain generator is g^index.
  u64 index() const { return index_; }
  fq_elem generator() const { return field_->power_of_generator(static_cast<i64>(index_)); }
  fq_elem element(u64 k) const { return field_->power_of_generator(static_cast<i64>((k % order_) * index_)); }
  /// k with x = generator()^k; x must be a nonzero element of the subfield.
  u64 log(const fq_elem& x) const {
    if (x.is_zero()) throw std::domain_error("character evaluated at zero");
    const u64 l = dlog(x);
    if (l % index_ != 0) throw std::invalid_argument("element is not in the character's domain");
    return l / index_;
  }
  bool operator==(const char_domain& other) const {
    return degree_ == other.degree_ && field_->size() == other.field_->size() &&
           field_->generator_rank() == other.field_->generator_rank();
  }

 private:
  field_ptr field_;
  unsigned degree_;
  u64 order_;
  u64 index_;
};

/// Character x -> zeta_n^(exponent * log x) of F_{p^s}^x, n = p^s - 1.
class mult_char {
 public:
  mult_char(char_domain domain, i64 exponent)
      : domain_(std::move(domain)), exponent_(static_cast<u64>(mod_floor(exponent, static_cast<i64>(domain_.order())))) {}
  mult_char(field_ptr field, i64 exponent) : mult_char(char_domain(field, field->degree()), exponent) {}

  const char_domain& domain() const { return domain_; }
  u64 exponent() const { return exponent_; }
  u64 group_order() const { return domain_.order(); }
  bool is_trivial() const { return exponent_ == 0; }
  /// Order of the character as a group element.
  u64 order() const { return group_order() / std::gcd(group_order(), exponent_); }

  mult_char inverse() const { return {domain_, -static_cast<i64>(exponent_)}; }
  friend mult_char operator*(const mult_char& a, const mult_char& b) {
    if (!(a.domain_ == b.domain_)) throw std::invalid_argument("characters on different domains");
    return {a.domain_, static_cast<i64>((a.exponent_ + b.exponent_) % a.group_order())};
  }
  /// chi o Frob^k with Frob(x) = x^p.
  mult_char compose_frobenius(unsigned k = 1) const {
    u64 e = exponent_;
    for (unsigned i = 0; i < k; ++i) e = mul_mod(e, domain_.field()->characteristic(), group_order());
    return {domain_, static_cast<i64>(e)};
  }
  /// chi o N where N is the norm from the whole field onto this domain.
  mult_char compose_norm() const {
    const char_domain top(domain_.field(), domain_.field()->degree());
    return {top, static_cast<i64>(mul_mod(exponent_, domain_.index(), top.order()))};
  }

  /// Value in `ring`, whose order must be a multiple of the group order.
  cyc_int evaluate(const fq_elem& x, const cyc_ring& ring) const {
    if (ring.order() % group_order() != 0)
      throw std::invalid_argument("value ring does not contain the character's values");
    const u64 scale = ring.order() / group_order();
    return ring.zeta_pow(static_cast<i64>(mul_mod(exponent_ * scale % ring.order(), domain_.log(x), ring.order())));
  }

  friend bool operator==(const mult_char& a, const mult_char& b) {
    return a.domain_ == b.domain_ && a.exponent_ == b.exponent_;
  }

 private:
  char_domain domain_;
  u64 exponent_;
};

/// theta^(p^sub_degree) != theta.
inline bool is_regular(const mult_char& theta, unsigned sub_degree) {
  if (sub_degree == 0 || theta.domain().degree() % sub_degree != 0)
    throw std::invalid_argument("is_regular: subfield degree must divide the domain degree");
  return !(theta.compose_frobenius(sub_degree) == theta);
}

/// x -> psi(Tr_{domain -> base}(x)) where psi is the canonical additive
/// character of the degree-`base_degree` subfield. base_degree equal to the
/// domain degree gives the canonical character itself.
class add_char {
 public:
  add_char(field_ptr field, unsigned domain_degree, unsigned base_degree)
      : field_(std::move(field)), domain_degree_(domain_degree), base_degree_(base_degree) {
    if (domain_degree_ == 0 || field_->degree() % domain_degree_ != 0 || base_degree_ == 0 ||
        domain_degree_ % base_degree_ != 0)
      throw std::invalid_argument("add_char: incompatible degrees");
  }
  explicit add_char(field_ptr field) : add_char(field, field->degree(), field->degree()) {}

  const field_ptr& field() const { return field_; }
  unsigned domain_degree() const { return domain_degree_; }
  unsigned base_degree() const { return base_degree_; }
  u64 characteristic() const { return field_->characteristic(); }

  /// Precomposition with the trace from `new_domain_degree` down to the
  /// current domain.
  add_char compose_trace(unsigned new_domain_degree) const {
    if (new_domain_degree % domain_degree_ != 0) throw std::invalid_argument("compose_trace: degree mismatch");
    return add_char(field_, new_domain_degree, base_degree_);
  }

  /// The exponent j in [0, p) with psi(x) = zeta_p^j.
  u64 exponent(const fq_elem& x) const {
    if (!field_->in_subfield(x.code(), domain_degree_)) throw std::invalid_argument("element outside add_char domain");
    fq_elem y = x;
    if (domain_degree_ != base_degree_) {
      // Tr_{domain -> base}: sum of x^(p^(base*i)) over i < domain/base.
      fq_field::code_t acc = 0;
      fq_field::code_t conj = x.code();
      for (unsigned i = 0; i < domain_degree_ / base_degree_; ++i) {
        acc = field_->add(acc, conj);
        conj = field_->frobenius(conj, base_degree_);
      }
      y = field_->element(acc);
    }
    fq_field::code_t t = 0;
    fq_field::code_t conj = y.code();
    for (unsigned i = 0; i < base_degree_; ++i) {
      t = field_->add(t, conj);
      conj = field_->frobenius(conj, 1);
    }
    return t;
  }

  cyc_int evaluate(const fq_elem& x, const cyc_ring& ring) const {
    if (ring.order() % characteristic() != 0) throw std::invalid_argument("value ring lacks p-th roots of unity");
    return ring.zeta_pow(static_cast<i64>(exponent(x) * (ring.order() / characteristic())));
  }

 private:
  field_ptr field_;
  unsigned domain_degree_;
  unsigned base_degree_;
};

/// Additive character pushed through a reduction map: zeta_p -> root_image.
class artin_add_char {
 public:
  artin_add_char(add_char base, const reduction_map& map) : base_(std::move(base)), root_(map.target()->one()) {
    const u64 p = base_.characteristic();
    if (map.order() % p != 0) throw std::invalid_argument("reduction source lacks p-th roots of unity");
    if (p == map.ell()) throw std::invalid_argument("additive character would reduce to the trivial character");
    root_ = map.zeta_image(static_cast<i64>(map.order() / p));
  }
  artin_add_char(add_char base, artin_elem root) : base_(std::move(base)), root_(std::move(root)) {}

  const add_char& base() const { return base_; }
  /// Image of zeta_p.
  const artin_elem& root() const { return root_; }
  artin_elem evaluate(const fq_elem& x) const { return root_.pow(static_cast<i64>(base_.exponent(x))); }

 private:
  add_char base_;
  artin_elem root_;
};

/// A character of a finite field's multiplicative group with values in an
/// Artin local algebra, reducing to a declared k-valued character.
class nil_char_lift {
 public:
  /// Residue part from zeta_n^residue_exponent through `map`, times
  /// `unipotent` (which must reduce to 1).
  static nil_char_lift build(char_domain domain, const reduction_map& map, i64 residue_exponent,
                             const artin_elem& unipotent) {
    if (!unipotent.alg()->same_as(*map.target()))
      throw std::invalid_argument("unipotent part lives in a different algebra");
    if (unipotent.residue() != 1) throw std::invalid_argument("unipotent part must reduce to 1");
    const u64 n = domain.order();
    const auto e = static_cast<u64>(mod_floor(residue_exponent, static_cast<i64>(n)));
    const artin_elem residue = residue_value(domain, map, e);
    if (!residue.is_nilpotent_free())
      throw std::invalid_argument("residue exponent must give a character of prime-to-ell order");
    return nil_char_lift(std::move(domain), residue * unipotent, e);
  }

  /// The reduction of a characteristic-zero character, nilpotents kept.
  static nil_char_lift reduce(const mult_char& chi, const reduction_map& map) {
    const u64 n = chi.group_order();
    if (map.order() % n != 0) throw std::invalid_argument("reduction source does not contain the character values");
    const artin_elem value = map.zeta_image(static_cast<i64>(chi.exponent() * (map.order() / n)));
    const prime_part split = split_prime_part(n, map.ell());
    const u64 residue_exponent = crt_pair(chi.exponent() % split.rest, split.rest, 0, split.power);
    return nil_char_lift(chi.domain(), value, residue_exponent);
  }

  /// Direct construction from a value at the domain generator.
  nil_char_lift(char_domain domain, artin_elem value_at_generator, u64 residue_exponent)
      : domain_(std::move(domain)), value_(std::move(value_at_generator)), residue_exponent_(residue_exponent) {
    if (!value_.is_unit()) throw std::invalid_argument("character value must be a unit");
    if (!(value_.pow(static_cast<i64>(domain_.order())) == value_.one()))
      throw std::invalid_argument("value at generator is not a root of unity of the group order");
  }

  const char_domain& domain() const { return domain_; }
  const artin_elem& value_at_generator() const { return value_; }
  u64 residue_exponent() const { return residue_exponent_; }
  /// Order of the unipotent factor of the value.
  u64 unipotent_order() const {
    const u64 total = unit_order(value_);
    return split_prime_part(total, value_.alg()->ell()).power;
  }

  /// residue(value) equals the reduction of zeta_n^residue_exponent.
  bool reduces_to_declared(const reduction_map& map) const {
    return residue_value(domain_, map, residue_exponent_).residue() == value_.residue();
  }

  artin_elem evaluate(const fq_elem& x) const { return value_.pow(static_cast<i64>(domain_.log(x))); }
  nil_char_lift inverse() const {
    const u64 n = domain_.order();
    return nil_char_lift(domain_, value_.inverse(), (n - residue_exponent_) % n);
  }

 private:
  static artin_elem residue_value(const char_domain& domain, const reduction_map& map, u64 e) {
    const u64 n = domain.order();
    if (map.order() % n != 0) throw std::invalid_argument("reduction source does not contain the character values");
    return map.zeta_image(static_cast<i64>(e * (map.order() / n)));
  }

  char_domain domain_;
  artin_elem value_;
  u64 residue_exponent_;
};

/// sum_x chi(x) psi(x) over the domain group, exact in Z[zeta_M] with
/// M = lcm(|domain|, p) unless a ring is supplied.
inline cyc_int gauss_sum(const mult_char& chi, const add_char& psi, cyc_ring_ptr ring = nullptr) {
  if (chi.domain().degree() != psi.domain_degree() || chi.domain().field()->size() != psi.field()->size())
    throw std::invalid_argument("gauss_sum: characters live on different fields");
  const u64 n = chi.group_order();
  const u64 p = psi.characteristic();
  if (!ring) ring = cyc_ring::build(std::lcm(n, p));
  const u64 m = ring->order();
  if (m % n != 0 || m % p != 0) throw std::invalid_argument("gauss_sum: ring too small for the character values");
  // Count exponents of zeta_M in Z[x]/(x^M - 1), then reduce once.
  std::vector<bigint> counts(m);
  const u64 chi_step = chi.exponent() * (m / n) % m;
  for (u64 k = 0; k < n; ++k) {
    const fq_elem x = chi.domain().element(k);
    const u64 e = (mul_mod(chi_step, k, m) + psi.exponent(x) * (m / p)) % m;
    counts[e] += 1;
  }
  return ring->from_polynomial(std::move(counts));
}

/// sum over the domain of value_at_generator^k * psi(g^k), computed in any
/// coefficient ring from the image of zeta_p.
template <class E>
E character_sum(const char_domain& domain, const E& value_at_generator, const E& psi_root, const add_char& psi) {
  std::vector<E> psi_powers;
  psi_powers.reserve(psi.characteristic());
  E acc = psi_root.one();
  for (u64 j = 0; j < psi.characteristic(); ++j) {
    psi_powers.push_back(acc);
    acc = acc * psi_root;
  }
  E sum = psi_root.zero();
  E chi_value = psi_root.one();
  for (u64 k = 0; k < domain.order(); ++k) {
    sum = sum + chi_value * psi_powers[psi.exponent(domain.element(k))];
    chi_value = chi_value * value_at_generator;
  }
  return sum;
}

inline artin_elem gauss_sum_artin(const nil_char_lift& chi, const artin_add_char& psi) {
  if (!(chi.domain().degree() == psi.base().domain_degree()) ||
      chi.domain().field()->size() != psi.base().field()->size())
    throw std::invalid_argument("gauss_sum_artin: characters live on different fields");
  return character_sum(chi.domain(), chi.value_at_generator(), psi.root(), psi.base());
}

struct completeness_result {
  artin_elem k_sum;             // sum of a k-valued character over C
  artin_elem lift_sum;          // sum_{j < ell^a} (1 + Y)^j
  u64 k_character_count;        // number of k-valued characters of C
  bool lift_is_character;       // (1 + Y)^(ell^a) = 1 in F_ell[Y]/Y^N
};

/// Character sums over a cyclic group C of order ell^a. Every k-valued
/// character of C is trivial, so its sum is ell^a = 0; the nilpotent lift
/// 1 + Y survives when N >= ell^a.
inline completeness_result completeness_demo(u64 ell, unsigned a, unsigned n) {
  if (!is_prime(ell)) throw std::invalid_argument("ell must be prime");
  if (a == 0) throw std::invalid_argument("a must be positive");
  const u64 group_order = checked_pow(ell, a, max_field_size);
  auto alg = artin_alg::build(ell, 1, n);
  const auto& k = *alg->residue_field();
  // Enumerate k-points v with v^(ell^a) = 1; each defines a character of C.
  std::vector<fq_field::code_t> k_characters;
  for (fq_field::code_t v = 1; v < k.size(); ++v)
    if (k.pow(v, static_cast<i64>(group_order)) == 1) k_characters.push_back(v);
  artin_elem k_sum = alg->zero();
  for (std::size_t idx = 0; idx < k_characters.size(); ++idx) {
    artin_elem s = alg->zero();
    artin_elem term = alg->one();
    const artin_elem v = alg->constant(k_characters[idx]);
    for (u64 j = 0; j < group_order; ++j) {
      s += term;
      term *= v;
    }
    if (idx == 0) {
      k_sum = s;
    } else if (!(s == k_sum)) {
      throw consistency_error("k-valued character sums disagree");
    }
  }
  const artin_elem u = alg->one() + alg->y();
  artin_elem lift_sum = alg->zero();
  artin_elem term = alg->one();
  for (u64 j = 0; j < group_order; ++j) {
    lift_sum += term;
    term *= u;
  }
  return {k_sum, lift_sum, k_characters.size(), term == alg->one()};
}

}  // namespace modgamma

#endif  // MODGAMMA_CHARS_HPP
