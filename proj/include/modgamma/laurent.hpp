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
 * @file laurent.hpp
 * @brief Laurent polynomials over a commutative coefficient ring, and
 * fractions whose denominators have unit leading and trailing coefficients.
 *
 * The fractions form the localisation S^{-1} R[X, X^{-1}]. No gcd
 * cancellation is attempted (R need not be a domain); two fractions are equal
 * when they cross-multiply to the same Laurent polynomial.
 */

#ifndef MODGAMMA_LAURENT_HPP
#define MODGAMMA_LAURENT_HPP

#include <concepts>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include "modgamma/errors.hpp"

namespace modgamma {

/// Coefficient rings accepted by the Laurent machinery.
template <class E>
concept coefficient_ring = std::equality_comparable<E> && requires(const E& a, const E& b) {
  { a + b } -> std::convertible_to<E>;
  { a - b } -> std::convertible_to<E>;
  { a * b } -> std::convertible_to<E>;
  { -a } -> std::convertible_to<E>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.is_unit() } -> std::convertible_to<bool>;
  { a.inverse() } -> std::convertible_to<E>;
  { a.zero() } -> std::convertible_to<E>;
  { a.one() } -> std::convertible_to<E>;
  { a.to_string() } -> std::convertible_to<std::string>;
};

template <coefficient_ring E>
E ring_pow(const E& base, std::int64_t e) {
  E b = e < 0 ? base.inverse() : base;
  auto k = static_cast<std::uint64_t>(e < 0 ? -e : e);
  E result = base.one();
  while (k > 0) {
    if (k & 1) result = result * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return result;
}

/// Sparse Laurent polynomial; the term map never stores zero coefficients.
template <coefficient_ring E>
class laurent_poly {
 public:
  using exponent_t = std::int64_t;
  using term_map = std::map<exponent_t, E>;

  laurent_poly() = default;
  explicit laurent_poly(term_map terms) : terms_(std::move(terms)) { trim(); }

  static laurent_poly monomial(const E& c, exponent_t k) {
    term_map t;
    t.emplace(k, c);
    return laurent_poly(std::move(t));
  }
  static laurent_poly constant(const E& c) { return monomial(c, 0); }

  const term_map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Lowest exponent; requires a nonzero polynomial.
  exponent_t valuation() const { return terms_.begin()->first; }
  exponent_t degree() const { return terms_.rbegin()->first; }
  const E& trailing() const { return terms_.begin()->second; }
  const E& leading() const { return terms_.rbegin()->second; }

  /// Membership in the multiplicative system S.
  bool in_multiplicative_system() const { return !is_zero() && leading().is_unit() && trailing().is_unit(); }

  std::optional<E> coefficient(exponent_t k) const {
    auto it = terms_.find(k);
    if (it == terms_.end()) return std::nullopt;
    return it->second;
  }

  friend laurent_poly operator+(const laurent_poly& a, const laurent_poly& b) {
    term_map out = a.terms_;
    for (const auto& [k, c] : b.terms_) {
      auto it = out.find(k);
      if (it == out.end()) {
        out.emplace(k, c);
      } else {
        it->second = it->second + c;
      }
    }
    return laurent_poly(std::move(out));
  }
  laurent_poly operator-() const {
    term_map out;
    for (const auto& [k, c] : terms_) out.emplace(k, -c);
    return laurent_poly(std::move(out));
  }
  friend laurent_poly operator-(const laurent_poly& a, const laurent_poly& b) { return a + (-b); }
  friend laurent_poly operator*(const laurent_poly& a, const laurent_poly& b) {
    term_map out;
    for (const auto& [i, x] : a.terms_) {
      for (const auto& [j, y] : b.terms_) {
        E prod = x * y;
        auto it = out.find(i + j);
        if (it == out.end()) {
          out.emplace(i + j, std::move(prod));
        } else {
          it->second = it->second + prod;
        }
      }
    }
    return laurent_poly(std::move(out));
  }
  friend bool operator==(const laurent_poly& a, const laurent_poly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    for (; ia != a.terms_.end(); ++ia, ++ib)
      if (ia->first != ib->first || !(ia->second == ib->second)) return false;
    return true;
  }

  /// Multiplication by X^k.
  laurent_poly shift(exponent_t k) const {
    term_map out;
    for (const auto& [e, c] : terms_) out.emplace(e + k, c);
    return laurent_poly(std::move(out));
  }

  /// Substitution X -> c X^sign for a unit c and sign = +-1.
  laurent_poly substitute(const E& c, int sign) const {
    if (!c.is_unit()) throw std::invalid_argument("substitution scale must be a unit");
    if (sign != 1 && sign != -1) throw std::invalid_argument("substitution sign must be +1 or -1");
    term_map out;
    for (const auto& [e, coeff] : terms_) out.emplace(sign * e, coeff * ring_pow(c, e));
    return laurent_poly(std::move(out));
  }

  /// "c*X^k + ..." in increasing exponent order; "0" when empty.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << '(' << c.to_string() << ')';
      if (k != 0) os << "*X^" << k;
    }
    return os.str();
  }

 private:
  void trim() {
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (it->second.is_zero()) {
        it = terms_.erase(it);
      } else {
        ++it;
      }
    }
  }

  term_map terms_;
};

/// Element num/den of S^{-1} R[X, X^{-1}].
template <coefficient_ring E>
class laurent_rational {
 public:
  using poly = laurent_poly<E>;

  laurent_rational(poly num, poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (!den_.in_multiplicative_system())
      throw contract_violation("denominator " + den_.to_string() + " lacks unit leading/trailing coefficients");
  }

  static laurent_rational monomial(const E& c, std::int64_t k) {
    return laurent_rational(poly::monomial(c, k), poly::constant(c.one()));
  }

  const poly& numerator() const { return num_; }
  const poly& denominator() const { return den_; }

  /// True when the fraction is c X^k with a single numerator term over a
  /// constant unit denominator.
  bool is_monomial() const { return num_.terms().size() == 1 && den_.terms().size() == 1; }

  friend laurent_rational operator*(const laurent_rational& a, const laurent_rational& b) {
    return laurent_rational(a.num_ * b.num_, a.den_ * b.den_);
  }

  /// Cross-multiplication equality.
  friend bool operator==(const laurent_rational& a, const laurent_rational& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  /// X -> c X^sign.
  laurent_rational substitute(const E& c, int sign = 1) const {
    return laurent_rational(num_.substitute(c, sign), den_.substitute(c, sign));
  }

  laurent_rational shift(std::int64_t k) const { return laurent_rational(num_.shift(k), den_); }

  /// Same element with a monomial denominator divided out, and num = c X^k den
  /// collapsed to c X^k. Equal to *this under operator==.
  laurent_rational simplified() const {
    if (num_.is_zero()) return laurent_rational(num_, poly::constant(den_.leading().one()));
    const E lead_inv = den_.trailing().inverse();
    if (den_.terms().size() == 1) {
      poly n = num_.shift(-den_.valuation()) * poly::constant(lead_inv);
      return laurent_rational(std::move(n), poly::constant(lead_inv.one()));
    }
    if (num_.terms().size() == den_.terms().size()) {
      const E c = num_.trailing() * lead_inv;
      const auto k = num_.valuation() - den_.valuation();
      if (num_ == den_.shift(k) * poly::constant(c)) return monomial(c, k);
    }
    return *this;
  }

  std::string to_string() const {
    if (den_.terms().size() == 1 && den_.valuation() == 0 && den_.leading() == den_.leading().one())
      return num_.to_string();
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
  }

 private:
  poly num_;
  poly den_;
};

/// a = X^m b for some integer m.
template <coefficient_ring E>
bool equal_up_to_x_power(const laurent_rational<E>& a, const laurent_rational<E>& b) {
  const auto lhs = a.numerator() * b.denominator();
  const auto rhs = b.numerator() * a.denominator();
  if (lhs.is_zero() || rhs.is_zero()) return lhs.is_zero() && rhs.is_zero();
  return lhs == rhs.shift(lhs.valuation() - rhs.valuation());
}

}  // namespace modgamma

#endif  // MODGAMMA_LAURENT_HPP
