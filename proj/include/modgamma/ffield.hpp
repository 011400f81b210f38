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
 * @file ffield.hpp
 * @brief Small finite fields F_{p^f} with full discrete-logarithm tables.
 *
 * Construction is deterministic. The modulus is the lexicographically
 * smallest monic irreducible polynomial of degree f, comparing coefficient
 * tuples (c0, c1, ..., c_{f-1}) from the constant term up. Elements are
 * encoded as the integer c0 + c1 p + ... + c_{f-1} p^(f-1) and the generator
 * is the full-order element of smallest encoding (or, for a nonzero
 * `generator_rank`, the rank-th one in increasing encoding order).
 *
 * Multiplication goes through the log/exp tables, which is why the field
 * size is capped at 2^20.
 */

#ifndef MODGAMMA_FFIELD_HPP
#define MODGAMMA_FFIELD_HPP

#include <cstdint>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "modgamma/errors.hpp"
#include "modgamma/numtheory.hpp"

namespace modgamma {

/// Largest supported field size p^f.
inline constexpr u64 max_field_size = u64{1} << 20;

namespace detail {

using fp_poly = std::vector<u64>;  // coefficients mod p, constant term first

inline void trim(fp_poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline u64 inverse_mod_prime(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

inline fp_poly poly_mod(fp_poly f, const fp_poly& g, u64 p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  const u64 lead_inv = inverse_mod_prime(g.back(), p);
  while (f.size() >= g.size()) {
    const u64 c = mul_mod(f.back(), lead_inv, p);
    const std::size_t shift = f.size() - g.size();
    for (std::size_t j = 0; j <= dg; ++j) f[shift + j] = (f[shift + j] + p - mul_mod(c, g[j], p)) % p;
    trim(f);
  }
  return f;
}

inline fp_poly poly_mulmod(const fp_poly& a, const fp_poly& b, const fp_poly& m, u64 p) {
  if (a.empty() || b.empty()) return {};
  fp_poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  return poly_mod(std::move(prod), m, p);
}

inline fp_poly poly_powmod(fp_poly base, u64 e, const fp_poly& m, u64 p) {
  fp_poly result{1};
  base = poly_mod(std::move(base), m, p);
  while (e > 0) {
    if (e & 1) result = poly_mulmod(result, base, m, p);
    e >>= 1;
    if (e) base = poly_mulmod(base, base, m, p);
  }
  return result;
}

inline fp_poly poly_gcd(fp_poly a, fp_poly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    fp_poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// x^(p^f) = x mod h and gcd(x^(p^(f/r)) - x, h) = 1 for every prime r | f.
inline bool is_irreducible(const fp_poly& h, u64 p) {
  const u64 f = h.size() - 1;
  if (f == 1) return true;
  // Cheap rejection: a root in F_p gives a linear factor.
  for (u64 a = 0; a < p && a < 64; ++a) {
    u64 v = 0;
    for (std::size_t i = h.size(); i-- > 0;) v = (mul_mod(v, a, p) + h[i]) % p;
    if (v == 0) return false;
  }
  const fp_poly x{0, 1};
  auto frobenius_iterate = [&](u64 times) {
    fp_poly y = x;
    for (u64 i = 0; i < times; ++i) y = poly_powmod(y, p, h, p);
    return y;
  };
  fp_poly full = frobenius_iterate(f);
  trim(full);
  if (full != fp_poly{0, 1}) return false;
  for (u64 r : prime_factors(f)) {
    fp_poly y = frobenius_iterate(f / r);
    y.resize(std::max<std::size_t>(y.size(), 2), 0);
    y[1] = (y[1] + p - 1) % p;
    trim(y);
    if (y.empty()) return false;
    if (poly_gcd(y, h, p).size() != 1) return false;
  }
  return true;
}

}  // namespace detail

class fq_elem;

/// F_{p^f}. Immutable after build(); share through field_ptr.
class fq_field : public std::enable_shared_from_this<fq_field> {
 public:
  using field_ptr = std::shared_ptr<const fq_field>;
  using code_t = std::uint32_t;
  static constexpr code_t no_log = std::numeric_limits<code_t>::max();

  static field_ptr build(u64 p, unsigned f, unsigned generator_rank = 0) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
    if (f == 0) throw std::invalid_argument("field extension degree must be positive");
    u64 size = 0;
    try {
      size = checked_pow(p, f, max_field_size);
    } catch (const std::overflow_error&) {
      throw size_error("field of size " + std::to_string(p) + "^" + std::to_string(f) + " exceeds 2^20");
    }
    return field_ptr(new fq_field(p, f, size, generator_rank));
  }

  u64 characteristic() const { return p_; }
  unsigned degree() const { return f_; }
  u64 size() const { return size_; }
  u64 group_order() const { return size_ - 1; }
  /// Monic modulus, constant term first.
  const std::vector<u64>& modulus() const { return modulus_; }
  unsigned generator_rank() const { return generator_rank_; }

  fq_elem element(code_t code) const;
  fq_elem from_coeffs(const std::vector<u64>& coeffs) const;
  fq_elem zero() const;
  fq_elem one() const;
  fq_elem generator() const;
  /// generator^k.
  fq_elem power_of_generator(i64 k) const;

  // Code-level arithmetic, used by the coefficient algebras layered on top.
  code_t add(code_t a, code_t b) const {
    if (p_ == 2) return a ^ b;
    code_t out = 0;
    u64 scale = 1;
    for (unsigned i = 0; i < f_; ++i) {
      out += static_cast<code_t>(((a % p_ + b % p_) % p_) * scale);
      a /= static_cast<code_t>(p_);
      b /= static_cast<code_t>(p_);
      scale *= p_;
    }
    return out;
  }
  code_t neg(code_t a) const {
    if (p_ == 2) return a;
    code_t out = 0;
    u64 scale = 1;
    for (unsigned i = 0; i < f_; ++i) {
      out += static_cast<code_t>(((p_ - a % p_) % p_) * scale);
      a /= static_cast<code_t>(p_);
      scale *= p_;
    }
    return out;
  }
  code_t sub(code_t a, code_t b) const { return add(a, neg(b)); }
  code_t mul(code_t a, code_t b) const {
    if (a == 0 || b == 0) return 0;
    u64 k = u64{log_[a]} + log_[b];
    if (k >= group_order()) k -= group_order();
    return exp_[k];
  }
  code_t inv(code_t a) const {
    if (a == 0) throw std::domain_error("inverse of zero in a finite field");
    return log_[a] == 0 ? 1 : exp_[group_order() - log_[a]];
  }
  code_t pow(code_t a, i64 e) const {
    if (a == 0) {
      if (e < 0) throw std::domain_error("negative power of zero");
      return e == 0 ? 1 : 0;
    }
    const auto n = static_cast<i64>(group_order());
    const i64 k = mod_floor(mod_floor(e, n) * static_cast<i64>(log_[a]) % n, n);
    return exp_[static_cast<std::size_t>(k)];
  }
  /// Discrete log to the base of the generator; throws for 0.
  code_t log(code_t a) const {
    if (a == 0) throw std::domain_error("discrete logarithm of zero");
    return log_[a];
  }
  code_t exp(u64 k) const { return exp_[k % group_order()]; }
  /// Image of an integer in the prime field.
  code_t from_integer(i64 n) const { return static_cast<code_t>(mod_floor(n, static_cast<i64>(p_))); }
  std::vector<u64> coeffs_of(code_t code) const {
    std::vector<u64> c(f_);
    for (unsigned i = 0; i < f_; ++i) {
      c[i] = code % p_;
      code /= static_cast<code_t>(p_);
    }
    return c;
  }
  /// Little-endian "c0+c1*t+c2*t^2"; zero coefficients omitted, "0" for zero.
  std::string format(code_t code) const {
    const auto c = coeffs_of(code);
    std::string out;
    for (unsigned i = 0; i < f_; ++i) {
      if (c[i] == 0) continue;
      if (!out.empty()) out += '+';
      if (i == 0) {
        out += std::to_string(c[i]);
      } else {
        if (c[i] != 1) out += std::to_string(c[i]) + "*";
        out += (i == 1) ? std::string("t") : "t^" + std::to_string(i);
      }
    }
    return out.empty() ? "0" : out;
  }
  /// Code of x^(p^k).
  code_t frobenius(code_t a, unsigned k) const {
    if (a == 0) return 0;
    u64 e = log_[a];
    for (unsigned i = 0; i < k; ++i) e = mul_mod(e, p_, group_order());
    return exp_[e];
  }
  bool in_subfield(code_t a, unsigned sub_degree) const { return frobenius(a, sub_degree) == a; }

 private:
  fq_field(u64 p, unsigned f, u64 size, unsigned generator_rank)
      : p_(p), f_(f), size_(size), generator_rank_(generator_rank) {
    modulus_ = smallest_irreducible();
    const u64 n = size_ - 1;
    const auto factors = prime_factors(n);
    unsigned seen = 0;
    detail::fp_poly gen;
    for (code_t code = 1; code < size_; ++code) {
      detail::fp_poly g = to_poly(code);
      bool full_order = true;
      for (u64 r : factors) {
        detail::fp_poly y = detail::poly_powmod(g, n / r, modulus_, p_);
        if (y == detail::fp_poly{1}) {
          full_order = false;
          break;
        }
      }
      if (full_order && seen++ == generator_rank) {
        gen = std::move(g);
        break;
      }
    }
    if (gen.empty()) throw std::invalid_argument("generator rank exceeds the number of generators");
    exp_.resize(n);
    log_.assign(size_, no_log);
    // acc <- acc * gen mod modulus, on fixed buffers (this loop dominates
    // construction of the larger fields).
    gen.resize(f_, 0);
    std::vector<u64> acc(f_, 0);
    std::vector<u64> prod(2 * f_ - 1, 0);
    acc[0] = 1;
    for (u64 k = 0; k < n; ++k) {
      const code_t c = to_code(acc);
      if (log_[c] != no_log) throw consistency_error("generator power cycle shorter than p^f - 1");
      exp_[k] = c;
      log_[c] = static_cast<code_t>(k);
      std::fill(prod.begin(), prod.end(), 0);
      for (unsigned i = 0; i < f_; ++i) {
        if (acc[i] == 0) continue;
        for (unsigned j = 0; j < f_; ++j) prod[i + j] = (prod[i + j] + acc[i] * gen[j]) % p_;
      }
      for (std::size_t i = prod.size(); i-- > f_;) {
        const u64 top = prod[i];
        if (top == 0) continue;
        for (unsigned j = 0; j < f_; ++j) prod[i - f_ + j] = (prod[i - f_ + j] + top * (p_ - modulus_[j])) % p_;
      }
      std::copy(prod.begin(), prod.begin() + f_, acc.begin());
    }
    if (to_code(acc) != 1) throw consistency_error("generator power cycle does not close");
  }

  std::vector<u64> smallest_irreducible() const {
    // c0 is the most significant position of the lexicographic order.
    const u64 count = size_;
    for (u64 index = 0; index < count; ++index) {
      detail::fp_poly h(f_ + 1, 0);
      u64 rest = index;
      for (unsigned i = f_; i-- > 0;) {
        h[i] = rest % p_;
        rest /= p_;
      }
      h[f_] = 1;
      if (detail::is_irreducible(h, p_)) return h;
    }
    throw consistency_error("no irreducible polynomial found");
  }

  detail::fp_poly to_poly(code_t code) const {
    detail::fp_poly out = coeffs_of(code);
    detail::trim(out);
    return out;
  }
  code_t to_code(const detail::fp_poly& poly) const {
    code_t out = 0;
    for (std::size_t i = poly.size(); i-- > 0;) out = static_cast<code_t>(out * p_ + poly[i]);
    return out;
  }

  u64 p_;
  unsigned f_;
  u64 size_;
  unsigned generator_rank_;
  std::vector<u64> modulus_;
  std::vector<code_t> exp_;
  std::vector<code_t> log_;
};

using field_ptr = fq_field::field_ptr;

/// Value-type element of an fq_field.
class fq_elem {
 public:
  using code_t = fq_field::code_t;

  fq_elem(field_ptr field, code_t code) : field_(std::move(field)), code_(code) {
    if (code_ >= field_->size()) throw std::invalid_argument("element encoding out of range");
  }

  const field_ptr& field() const { return field_; }
  code_t code() const { return code_; }
  std::vector<u64> coeffs() const { return field_->coeffs_of(code_); }
  bool is_zero() const { return code_ == 0; }
  std::string to_string() const { return field_->format(code_); }

  friend fq_elem operator+(const fq_elem& a, const fq_elem& b) {
    a.check(b);
    return {a.field_, a.field_->add(a.code_, b.code_)};
  }
  friend fq_elem operator-(const fq_elem& a, const fq_elem& b) {
    a.check(b);
    return {a.field_, a.field_->sub(a.code_, b.code_)};
  }
  fq_elem operator-() const { return {field_, field_->neg(code_)}; }
  friend fq_elem operator*(const fq_elem& a, const fq_elem& b) {
    a.check(b);
    return {a.field_, a.field_->mul(a.code_, b.code_)};
  }
  fq_elem inverse() const { return {field_, field_->inv(code_)}; }
  fq_elem pow(i64 e) const { return {field_, field_->pow(code_, e)}; }
  friend bool operator==(const fq_elem& a, const fq_elem& b) {
    a.check(b);
    return a.code_ == b.code_;
  }

 private:
  void check(const fq_elem& other) const {
    if (field_->size() != other.field_->size() || field_->generator_rank() != other.field_->generator_rank())
      throw std::invalid_argument("finite field elements from different fields");
  }

  field_ptr field_;
  code_t code_;
};

inline fq_elem fq_field::element(code_t code) const { return fq_elem(shared_from_this(), code); }
inline fq_elem fq_field::zero() const { return element(0); }
inline fq_elem fq_field::one() const { return element(1); }
inline fq_elem fq_field::generator() const { return element(exp_[1 % group_order()]); }
inline fq_elem fq_field::power_of_generator(i64 k) const {
  return element(exp_[static_cast<std::size_t>(mod_floor(k, static_cast<i64>(group_order())))]);
}
inline fq_elem fq_field::from_coeffs(const std::vector<u64>& coeffs) const {
  if (coeffs.size() != f_) throw std::invalid_argument("coefficient vector length must equal the degree");
  code_t code = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= p_) throw std::invalid_argument("coefficient not reduced mod p");
    code = static_cast<code_t>(code * p_ + coeffs[i]);
  }
  return element(code);
}

/// Exponent k in [0, p^f - 2] with generator^k = x.
inline u64 dlog(const fq_elem& x) { return x.field()->log(x.code()); }

struct trace_norm_frob_result {
  fq_elem trace;
  fq_elem norm;
  fq_elem frob;
};

/// Trace, norm and relative Frobenius x^(p^sub_degree) down to the subfield of
/// degree sub_degree.
inline trace_norm_frob_result trace_norm_frob(const fq_elem& x, unsigned sub_degree) {
  const auto& field = *x.field();
  if (sub_degree == 0 || field.degree() % sub_degree != 0)
    throw std::invalid_argument("subfield degree must divide the field degree");
  const unsigned steps = field.degree() / sub_degree;
  fq_elem::code_t trace = 0;
  fq_elem::code_t norm = 1;
  fq_elem::code_t conj = x.code();
  for (unsigned i = 0; i < steps; ++i) {
    trace = field.add(trace, conj);
    norm = field.mul(norm, conj);
    conj = field.frobenius(conj, sub_degree);
  }
  if (!field.in_subfield(trace, sub_degree) || !field.in_subfield(norm, sub_degree))
    throw consistency_error("trace or norm left the subfield");
  return {field.element(trace), field.element(norm), field.element(field.frobenius(x.code(), sub_degree))};
}

/// Absolute trace to F_p as an integer in [0, p).
inline u64 absolute_trace(const fq_field& field, fq_field::code_t code) {
  fq_field::code_t trace = 0;
  for (unsigned i = 0; i < field.degree(); ++i) trace = field.add(trace, field.frobenius(code, i));
  return trace;  // prime-field elements are encoded by their integer value
}

}  // namespace modgamma

#endif  // MODGAMMA_FFIELD_HPP
