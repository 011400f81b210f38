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
 * @file artin.hpp
 * @brief Truncated polynomial algebras F_{ell^d}[Y]/(Y^N).
 *
 * These are the monogenic Artin local algebras used as coefficient rings for
 * nilpotent lifts. The maximal ideal is (Y), so an element is a unit exactly
 * when its Y^0 coefficient is nonzero.
 */

#ifndef MODGAMMA_ARTIN_HPP
#define MODGAMMA_ARTIN_HPP

#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "modgamma/ffield.hpp"
#include "modgamma/numtheory.hpp"

namespace modgamma {

class artin_elem;

class artin_alg : public std::enable_shared_from_this<artin_alg> {
 public:
  using alg_ptr = std::shared_ptr<const artin_alg>;

  static alg_ptr build(u64 ell, unsigned d, unsigned nilpotency, unsigned generator_rank = 0) {
    if (!is_prime(ell)) throw std::invalid_argument("ell = " + std::to_string(ell) + " is not prime");
    return build(fq_field::build(ell, d, generator_rank), nilpotency);
  }

  /// Reuses an existing residue field.
  static alg_ptr build(field_ptr residue, unsigned nilpotency) {
    if (nilpotency == 0) throw std::invalid_argument("nilpotency order N must be at least 1");
    return alg_ptr(new artin_alg(std::move(residue), nilpotency));
  }

  u64 ell() const { return residue_->characteristic(); }
  unsigned residue_degree() const { return residue_->degree(); }
  unsigned nilpotency() const { return n_; }
  const field_ptr& residue_field() const { return residue_; }

  bool same_as(const artin_alg& other) const {
    return n_ == other.n_ && residue_->size() == other.residue_->size() &&
           residue_->generator_rank() == other.residue_->generator_rank();
  }

  artin_elem zero() const;
  artin_elem one() const;
  /// The nilpotent generator Y (zero when N = 1).
  artin_elem y() const;
  artin_elem integer(i64 n) const;
  /// Residue-field element embedded as a constant.
  artin_elem constant(fq_field::code_t code) const;
  artin_elem from_codes(std::vector<fq_field::code_t> coeffs) const;

  /// Smallest ell^c with (1 + n)^(ell^c) = 1 for every nilpotent n.
  u64 unipotent_exponent() const {
    u64 power = 1;
    while (power < n_) power *= ell();
    return power;
  }

 private:
  artin_alg(field_ptr residue, unsigned n) : residue_(std::move(residue)), n_(n) {}

  field_ptr residue_;
  unsigned n_;
};

using artin_alg_ptr = artin_alg::alg_ptr;

/// a_0 + a_1 Y + ... + a_{N-1} Y^{N-1} with a_i in the residue field.
class artin_elem {
 public:
  using code_t = fq_field::code_t;

  artin_elem(artin_alg_ptr alg, std::vector<code_t> coeffs) : alg_(std::move(alg)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() > alg_->nilpotency()) coeffs_.resize(alg_->nilpotency());
    coeffs_.resize(alg_->nilpotency(), 0);
    for (auto c : coeffs_)
      if (c >= alg_->residue_field()->size()) throw std::invalid_argument("coefficient outside the residue field");
  }

  const artin_alg_ptr& alg() const { return alg_; }
  const std::vector<code_t>& coeffs() const { return coeffs_; }

  artin_elem zero() const { return alg_->zero(); }
  artin_elem one() const { return alg_->one(); }

  bool is_zero() const {
    for (auto c : coeffs_)
      if (c != 0) return false;
    return true;
  }
  bool is_unit() const { return coeffs_[0] != 0; }
  /// Image under R -> F_{ell^d}.
  code_t residue() const { return coeffs_[0]; }
  /// The element residue(x) viewed back in R.
  artin_elem residue_part() const { return alg_->constant(coeffs_[0]); }
  bool is_nilpotent_free() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) return false;
    return true;
  }
  /// Least i with a_i != 0, or N for zero.
  unsigned valuation() const {
    for (unsigned i = 0; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) return i;
    return static_cast<unsigned>(coeffs_.size());
  }

  friend artin_elem operator+(const artin_elem& a, const artin_elem& b) {
    a.check(b);
    const auto& k = *a.alg_->residue_field();
    std::vector<code_t> out(a.coeffs_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = k.add(a.coeffs_[i], b.coeffs_[i]);
    return {a.alg_, std::move(out)};
  }
  friend artin_elem operator-(const artin_elem& a, const artin_elem& b) {
    a.check(b);
    const auto& k = *a.alg_->residue_field();
    std::vector<code_t> out(a.coeffs_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = k.sub(a.coeffs_[i], b.coeffs_[i]);
    return {a.alg_, std::move(out)};
  }
  artin_elem operator-() const {
    const auto& k = *alg_->residue_field();
    std::vector<code_t> out(coeffs_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = k.neg(coeffs_[i]);
    return {alg_, std::move(out)};
  }
  friend artin_elem operator*(const artin_elem& a, const artin_elem& b) {
    a.check(b);
    const auto& k = *a.alg_->residue_field();
    const std::size_t n = a.coeffs_.size();
    std::vector<code_t> out(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; i + j < n; ++j) out[i + j] = k.add(out[i + j], k.mul(a.coeffs_[i], b.coeffs_[j]));
    }
    return {a.alg_, std::move(out)};
  }
  artin_elem& operator+=(const artin_elem& b) { return *this = *this + b; }
  artin_elem& operator*=(const artin_elem& b) { return *this = *this * b; }

  /// u^{-1} = a0^{-1} (1 - m + m^2 - ...) with m = a0^{-1} u - 1 nilpotent.
  artin_elem inverse() const {
    if (!is_unit()) throw std::domain_error("inverse of a non-unit in an Artin local algebra");
    const auto& k = *alg_->residue_field();
    const artin_elem a0_inv = alg_->constant(k.inv(coeffs_[0]));
    const artin_elem m = a0_inv * *this - one();
    artin_elem term = one();
    artin_elem sum = one();
    for (unsigned i = 1; i < alg_->nilpotency(); ++i) {
      term = -(term * m);
      sum += term;
    }
    return sum * a0_inv;
  }

  artin_elem pow(i64 e) const {
    artin_elem base = e < 0 ? inverse() : *this;
    u64 k = e < 0 ? static_cast<u64>(-e) : static_cast<u64>(e);
    artin_elem result = one();
    while (k > 0) {
      if (k & 1) result *= base;
      k >>= 1;
      if (k) base *= base;
    }
    return result;
  }

  /// Applies x -> x^(ell^k) to every residue coefficient (fixes Y).
  artin_elem frobenius_on_coefficients(unsigned k = 1) const {
    const auto& field = *alg_->residue_field();
    std::vector<code_t> out(coeffs_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = field.frobenius(coeffs_[i], k);
    return {alg_, std::move(out)};
  }

  friend bool operator==(const artin_elem& a, const artin_elem& b) {
    a.check(b);
    return a.coeffs_ == b.coeffs_;
  }

  /// "a0 + a1*Y + ..." with residue elements printed as little-endian
  /// polynomials in the field generator t.
  std::string to_string() const {
    const auto& k = *alg_->residue_field();
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] == 0) continue;
      if (!first) os << " + ";
      first = false;
      const std::string c = k.format(coeffs_[i]);
      const bool compound = c.find('+') != std::string::npos;
      if (i == 0) {
        os << c;
        continue;
      }
      if (c != "1") os << (compound ? "(" + c + ")" : c) << '*';
      os << 'Y';
      if (i > 1) os << '^' << i;
    }
    return first ? "0" : os.str();
  }

  /// Residue-field encodings, one per power of Y.
  std::vector<std::string> coefficient_strings() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (auto c : coeffs_) out.push_back(alg_->residue_field()->format(c));
    return out;
  }

 private:
  void check(const artin_elem& other) const {
    if (!alg_->same_as(*other.alg_)) throw std::invalid_argument("Artin elements from different algebras");
  }

  artin_alg_ptr alg_;
  std::vector<code_t> coeffs_;
};

inline artin_elem artin_alg::zero() const { return {shared_from_this(), {}}; }
inline artin_elem artin_alg::one() const { return constant(1); }
inline artin_elem artin_alg::constant(fq_field::code_t code) const { return {shared_from_this(), {code}}; }
inline artin_elem artin_alg::integer(i64 n) const { return constant(residue_->from_integer(n)); }
inline artin_elem artin_alg::y() const {
  if (n_ == 1) return zero();
  return {shared_from_this(), {0, 1}};
}
inline artin_elem artin_alg::from_codes(std::vector<fq_field::code_t> coeffs) const {
  if (coeffs.size() > n_) throw std::invalid_argument("more coefficients than the nilpotency order");
  return {shared_from_this(), std::move(coeffs)};
}

/// Truncation R_N -> R_{N'} for N' <= N over the same residue field; a ring
/// homomorphism.
inline artin_elem project(const artin_elem& x, const artin_alg_ptr& target) {
  const auto& source = *x.alg();
  if (target->nilpotency() > source.nilpotency() || target->residue_field()->size() != source.residue_field()->size() ||
      target->residue_field()->generator_rank() != source.residue_field()->generator_rank())
    throw std::invalid_argument("project: target is not a truncation of the source algebra");
  std::vector<fq_field::code_t> c(x.coeffs().begin(), x.coeffs().begin() + target->nilpotency());
  return target->from_codes(std::move(c));
}

/// Least m >= 1 with u^m = 1.
inline u64 unit_order(const artin_elem& u) {
  if (!u.is_unit()) throw std::domain_error("unit_order of a non-unit");
  const auto& k = *u.alg()->residue_field();
  const u64 n = k.group_order();
  const u64 residue_order = n / std::gcd<u64>(n, k.log(u.residue()));
  artin_elem w = u.pow(static_cast<i64>(residue_order));
  u64 unipotent_order = 1;
  const artin_elem one = u.one();
  while (!(w == one)) {
    w = w.pow(static_cast<i64>(u.alg()->ell()));
    unipotent_order *= u.alg()->ell();
  }
  return residue_order * unipotent_order;
}

}  // namespace modgamma

#endif  // MODGAMMA_ARTIN_HPP
