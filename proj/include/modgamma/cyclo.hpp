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
 * @file cyclo.hpp
 * @brief Exact arithmetic in cyclotomic integer rings Z[zeta_M].
 *
 * Z[zeta_M] is modelled as Z[x]/(Phi_M(x)) with arbitrary precision
 * coefficients, so the ring is an integral domain and two elements are equal
 * exactly when their reduced coefficient vectors agree. Phi_M is produced
 * from the Moebius product of the binomials x^(M/d) - 1, grouped prime by
 * prime so that every intermediate step is an exact division of degree at
 * most M.
 *
 * cyc_local extends this to Z[zeta_M][1/p], which is where gamma factors with
 * a q^(-1/2) normalisation live in characteristic zero.
 */

#ifndef MODGAMMA_CYCLO_HPP
#define MODGAMMA_CYCLO_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "modgamma/errors.hpp"
#include "modgamma/numtheory.hpp"

namespace modgamma {

using bigint = boost::multiprecision::cpp_int;

class cyc_int;

/// Largest supported root-of-unity order.
inline constexpr u64 max_cyclotomic_order = 1'000'000;

namespace detail {

using int_poly = std::vector<i64>;  // coefficients, constant term first

inline int_poly substitute_power(const int_poly& f, u64 k) {
  int_poly out((f.size() - 1) * k + 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i) out[i * k] = f[i];
  return out;
}

/// Exact quotient f / g for monic g; throws if the remainder is nonzero.
inline int_poly exact_divide(int_poly f, const int_poly& g) {
  const std::size_t dg = g.size() - 1;
  if (f.size() < g.size()) throw consistency_error("exact_divide: degree too small");
  int_poly quotient(f.size() - dg, 0);
  for (std::size_t i = f.size(); i-- > dg;) {
    const i64 c = f[i];
    quotient[i - dg] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dg; ++j) f[i - dg + j] -= c * g[j];
  }
  for (std::size_t i = 0; i < dg; ++i)
    if (f[i] != 0) throw consistency_error("exact_divide: nonzero remainder");
  return quotient;
}

}  // namespace detail

/// The ring Z[zeta_M] = Z[x]/(Phi_M). Immutable; share through ring_ptr.
class cyc_ring : public std::enable_shared_from_this<cyc_ring> {
 public:
  using ring_ptr = std::shared_ptr<const cyc_ring>;

  static ring_ptr build(u64 order) {
    if (order == 0) throw std::invalid_argument("cyclotomic order must be positive");
    if (order > max_cyclotomic_order)
      throw size_error("cyclotomic order " + std::to_string(order) + " exceeds guard");
    return ring_ptr(new cyc_ring(order));
  }

  u64 order() const { return order_; }
  std::size_t degree() const { return phi_.size() - 1; }
  /// Phi_M, constant term first; monic of degree phi(M).
  const std::vector<i64>& cyclotomic_polynomial() const { return phi_; }

  cyc_int zero() const;
  cyc_int one() const;
  cyc_int integer(const bigint& n) const;
  /// zeta^(e mod M).
  cyc_int zeta_pow(i64 e) const;
  /// Element whose coefficient vector is `coeffs` read in Z[x]/(x^M - 1) or
  /// any longer representative; reduced modulo Phi_M.
  cyc_int from_polynomial(std::vector<bigint> coeffs) const;

  /// Reduces a polynomial modulo Phi_M in place, leaving degree() coefficients.
  void reduce_in_place(std::vector<bigint>& v) const {
    const std::size_t n = degree();
    for (std::size_t i = v.size(); i-- > n;) {
      if (v[i] == 0) continue;
      const bigint c = v[i];
      for (const auto& [j, coeff] : sparse_tail_) v[i - n + j] -= c * coeff;
      v[i] = 0;
    }
    v.resize(n);
  }

 private:
  explicit cyc_ring(u64 order) : order_(order) {
    // Moebius product prod_{d | M} (x^(M/d) - 1)^mu(d), evaluated as the
    // iterated exact quotient H_i(x) = H_{i-1}(x^{r_i}) / H_{i-1}(x) over the
    // distinct primes r_i of M, followed by x -> x^(M / rad M).
    detail::int_poly h{-1, 1};
    u64 radical = 1;
    for (u64 r : prime_factors(order)) {
      h = detail::exact_divide(detail::substitute_power(h, r), h);
      radical *= r;
    }
    phi_ = detail::substitute_power(h, order / radical);
    for (std::size_t j = 0; j + 1 < phi_.size(); ++j)
      if (phi_[j] != 0) sparse_tail_.emplace_back(j, phi_[j]);
  }

  u64 order_;
  std::vector<i64> phi_;
  std::vector<std::pair<std::size_t, i64>> sparse_tail_;
};

using cyc_ring_ptr = cyc_ring::ring_ptr;

/// An element of Z[zeta_M], stored as its residue modulo Phi_M.
class cyc_int {
 public:
  cyc_int(cyc_ring_ptr ring, std::vector<bigint> coeffs) : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() > ring_->degree()) {
      ring_->reduce_in_place(coeffs_);
    } else {
      coeffs_.resize(ring_->degree());
    }
  }

  const cyc_ring_ptr& ring() const { return ring_; }
  const std::vector<bigint>& coeffs() const { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  /// The integer n when this element equals n * 1.
  std::optional<bigint> as_integer() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) return std::nullopt;
    return coeffs_.empty() ? bigint(0) : coeffs_[0];
  }

  cyc_int zero() const { return ring_->zero(); }
  cyc_int one() const { return ring_->one(); }

  cyc_int operator-() const {
    cyc_int out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }

  cyc_int& operator+=(const cyc_int& other) {
    check_same_ring(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
  }
  cyc_int& operator-=(const cyc_int& other) {
    check_same_ring(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    return *this;
  }
  cyc_int& operator*=(const cyc_int& other) {
    *this = *this * other;
    return *this;
  }

  friend cyc_int operator+(cyc_int a, const cyc_int& b) { return a += b; }
  friend cyc_int operator-(cyc_int a, const cyc_int& b) { return a -= b; }

  friend cyc_int operator*(const cyc_int& a, const cyc_int& b) {
    a.check_same_ring(b);
    const std::size_t n = a.coeffs_.size();
    std::vector<bigint> product(n == 0 ? 0 : 2 * n - 1);
    for (std::size_t i = 0; i < n; ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (b.coeffs_[j] != 0) product[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return cyc_int(a.ring_, std::move(product));
  }

  friend bool operator==(const cyc_int& a, const cyc_int& b) {
    a.check_same_ring(b);
    return a.coeffs_ == b.coeffs_;
  }

  /// "[c0,c1,...]"
  std::string to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (i) os << ',';
      os << coeffs_[i];
    }
    os << ']';
    return os.str();
  }

 private:
  void check_same_ring(const cyc_int& other) const {
    if (ring_->order() != other.ring_->order())
      throw std::invalid_argument("cyclotomic elements from different rings");
  }

  cyc_ring_ptr ring_;
  std::vector<bigint> coeffs_;
};

inline cyc_int cyc_ring::zero() const { return cyc_int(shared_from_this(), {}); }

inline cyc_int cyc_ring::one() const { return integer(1); }

inline cyc_int cyc_ring::integer(const bigint& n) const {
  std::vector<bigint> c(degree());
  c[0] = n;
  return cyc_int(shared_from_this(), std::move(c));
}

inline cyc_int cyc_ring::zeta_pow(i64 e) const {
  const auto k = static_cast<std::size_t>(mod_floor(e, static_cast<i64>(order_)));
  std::vector<bigint> c(k + 1);
  c[k] = 1;
  return cyc_int(shared_from_this(), std::move(c));
}

inline cyc_int cyc_ring::from_polynomial(std::vector<bigint> coeffs) const {
  return cyc_int(shared_from_this(), std::move(coeffs));
}

inline cyc_int pow(cyc_int base, u64 e) {
  cyc_int result = base.one();
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

/// The automorphism zeta -> zeta^a of Z[zeta_M].
inline cyc_int galois_apply(i64 a, const cyc_int& x) {
  const auto& ring = x.ring();
  const auto m = static_cast<i64>(ring->order());
  const i64 am = mod_floor(a, m);
  if (std::gcd(static_cast<u64>(am), static_cast<u64>(m)) != 1)
    throw std::invalid_argument("galois_apply: exponent not coprime to the ring order");
  std::vector<bigint> image(static_cast<std::size_t>(m));
  const auto& c = x.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) image[static_cast<std::size_t>(mod_floor(am * static_cast<i64>(i), m))] += c[i];
  return ring->from_polynomial(std::move(image));
}

/// Product of all Galois conjugates; always a rational integer.
inline bigint norm(const cyc_int& x) {
  const u64 m = x.ring()->order();
  cyc_int product = x.one();
  for (u64 a = 1; a <= m; ++a)
    if (std::gcd(a, m) == 1) product *= galois_apply(static_cast<i64>(a), x);
  auto n = product.as_integer();
  if (!n) throw consistency_error("norm: product of conjugates is not an integer");
  return *n;
}

/// Element of Z[zeta_M][1/p], kept in the canonical form numerator / p^k with
/// k minimal.
class cyc_local {
 public:
  cyc_local(cyc_int numerator, u64 prime, unsigned p_power = 0)
      : num_(std::move(numerator)), prime_(prime), p_power_(p_power) {
    if (!is_prime(prime_)) throw std::invalid_argument("cyc_local: inverted element must be prime");
    canonicalize();
  }

  const cyc_int& numerator() const { return num_; }
  unsigned p_power() const { return p_power_; }
  u64 inverted_prime() const { return prime_; }
  const cyc_ring_ptr& ring() const { return num_.ring(); }

  cyc_local zero() const { return cyc_local(num_.zero(), prime_); }
  cyc_local one() const { return cyc_local(num_.one(), prime_); }
  bool is_zero() const { return num_.is_zero(); }

  /// Units of Z[zeta][1/p] are the elements whose norm is +-p^j.
  bool is_unit() const {
    if (is_zero()) return false;
    bigint n = abs(norm(num_));
    while (n % prime_ == 0) n /= prime_;
    return n == 1;
  }

  cyc_local inverse() const {
    if (!is_unit()) throw std::domain_error("cyc_local: element is not a unit");
    const u64 m = ring()->order();
    cyc_int cofactor = num_.one();
    for (u64 a = 2; a <= m; ++a)
      if (std::gcd(a, m) == 1) cofactor *= galois_apply(static_cast<i64>(a), num_);
    bigint n = norm(num_);
    unsigned j = 0;
    while (n % prime_ == 0) {
      n /= prime_;
      ++j;
    }
    // n = +-1 now; x^{-1} = cofactor * p^k / (n p^j).
    cyc_int scaled = cofactor * ring()->integer(n * boost::multiprecision::pow(bigint(prime_), p_power_));
    return cyc_local(std::move(scaled), prime_, j);
  }

  friend cyc_local operator+(const cyc_local& a, const cyc_local& b) {
    a.check_compatible(b);
    const unsigned k = std::max(a.p_power_, b.p_power_);
    return cyc_local(a.lift_to(k) + b.lift_to(k), a.prime_, k);
  }
  friend cyc_local operator-(const cyc_local& a, const cyc_local& b) {
    a.check_compatible(b);
    const unsigned k = std::max(a.p_power_, b.p_power_);
    return cyc_local(a.lift_to(k) - b.lift_to(k), a.prime_, k);
  }
  friend cyc_local operator*(const cyc_local& a, const cyc_local& b) {
    a.check_compatible(b);
    return cyc_local(a.num_ * b.num_, a.prime_, a.p_power_ + b.p_power_);
  }
  cyc_local operator-() const { return cyc_local(-num_, prime_, p_power_); }

  friend bool operator==(const cyc_local& a, const cyc_local& b) {
    a.check_compatible(b);
    return a.p_power_ == b.p_power_ && a.num_ == b.num_;
  }

  std::string to_string() const {
    std::string s = num_.to_string();
    if (p_power_ > 0) s += "/" + std::to_string(prime_) + "^" + std::to_string(p_power_);
    return s;
  }

 private:
  void canonicalize() {
    if (num_.is_zero()) {
      p_power_ = 0;
      return;
    }
    while (p_power_ > 0) {
      for (const auto& c : num_.coeffs())
        if (c % prime_ != 0) return;
      std::vector<bigint> reduced = num_.coeffs();
      for (auto& c : reduced) c /= prime_;
      num_ = cyc_int(num_.ring(), std::move(reduced));
      --p_power_;
    }
  }

  cyc_int lift_to(unsigned k) const {
    if (k == p_power_) return num_;
    return num_ * ring()->integer(boost::multiprecision::pow(bigint(prime_), k - p_power_));
  }

  void check_compatible(const cyc_local& other) const {
    if (prime_ != other.prime_ || ring()->order() != other.ring()->order())
      throw std::invalid_argument("cyc_local: incompatible localized rings");
  }

  cyc_int num_;
  u64 prime_;
  unsigned p_power_;
};

}  // namespace modgamma

#endif  // MODGAMMA_CYCLO_HPP
