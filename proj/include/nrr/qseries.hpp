// Copyright 2026 The nrr Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file qseries.hpp
 * @brief Dense truncated power series in one variable q.
 *
 * A SeriesQ of order N holds the exact integer coefficients c_0..c_N and
 * stands for the class of a formal power series modulo q^(N+1). All
 * arithmetic is checked: a coefficient leaving the int64 range raises
 * CoefficientOverflow instead of wrapping.
 */

#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "nrr/errors.hpp"

namespace nrr {

using Coeff = std::int64_t;

/// Truncation order N: series are kept modulo q^(N+1).
class Order {
 public:
  constexpr explicit Order(std::size_t n) noexcept : n_(n) {}
  constexpr std::size_t value() const noexcept { return n_; }
  constexpr auto operator<=>(const Order&) const = default;

 private:
  std::size_t n_;
};

class SeriesQ {
 public:
  /// The zero series of the given order.
  explicit SeriesQ(Order order) : coeffs_(order.value() + 1, 0) {}

  SeriesQ(Order order, std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != order.value() + 1)
      throw InvalidInput("coefficient vector length does not match order");
  }

  /// Order is taken to be coeffs.size() - 1.
  static SeriesQ from_coeffs(std::vector<Coeff> coeffs) {
    if (coeffs.empty()) throw InvalidInput("a series needs at least one coefficient");
    const Order order(coeffs.size() - 1);
    return SeriesQ(order, std::move(coeffs));
  }

  static SeriesQ from_coeffs(std::initializer_list<Coeff> coeffs) {
    return from_coeffs(std::vector<Coeff>(coeffs));
  }

  Order order() const noexcept { return Order(coeffs_.size() - 1); }
  std::span<const Coeff> coeffs() const noexcept { return coeffs_; }
  Coeff operator[](std::size_t k) const { return coeffs_.at(k); }

  /// Discards every coefficient above `m`; `m` must not exceed the order.
  SeriesQ truncated(Order m) const {
    if (m > order()) throw InvalidInput("cannot truncate to a larger order");
    return SeriesQ(m, std::vector<Coeff>(coeffs_.begin(), coeffs_.begin() + m.value() + 1));
  }

  friend bool operator==(const SeriesQ&, const SeriesQ&) = default;

 private:
  std::vector<Coeff> coeffs_;
};

inline SeriesQ series_const(Coeff c, Order order) {
  std::vector<Coeff> v(order.value() + 1, 0);
  v[0] = c;
  return SeriesQ(order, std::move(v));
}

/// The monomial q^e, which is zero when e exceeds the order.
inline SeriesQ series_monomial(std::size_t e, Coeff c, Order order) {
  std::vector<Coeff> v(order.value() + 1, 0);
  if (e <= order.value()) v[e] = c;
  return SeriesQ(order, std::move(v));
}

namespace detail {

inline void require_same_order(const SeriesQ& a, const SeriesQ& b) {
  if (a.order() != b.order()) throw OrderMismatch(a.order().value(), b.order().value());
}

// In-place kernels on raw coefficient vectors. They are shared by the
// generating-function builders so that no temporary SeriesQ is needed per
// factor.

/// v *= (1 - q^e)
inline void mul_one_minus(std::vector<Coeff>& v, std::size_t e) {
  if (e == 0) throw InvalidInput("exponent must be positive");
  for (std::size_t k = v.size(); k-- > e;) v[k] = checked_sub(v[k], v[k - e]);
}

/// v /= (1 - q^e)
inline void div_one_minus(std::vector<Coeff>& v, std::size_t e) {
  if (e == 0) throw InvalidInput("exponent must be positive");
  for (std::size_t k = e; k < v.size(); ++k) v[k] = checked_add(v[k], v[k - e]);
}

/// Truncated Cauchy product of two equal-length coefficient vectors.
inline std::vector<Coeff> convolve(std::span<const Coeff> a, std::span<const Coeff> b) {
  const std::size_t len = a.size();
  std::vector<Coeff> out(len, 0);
  for (std::size_t i = 0; i < len; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < len; ++j) {
      if (b[j] == 0) continue;
      out[i + j] = checked_add(out[i + j], checked_mul(a[i], b[j]));
    }
  }
  return out;
}

}  // namespace detail

inline SeriesQ series_add(const SeriesQ& a, const SeriesQ& b) {
  detail::require_same_order(a, b);
  std::vector<Coeff> v(a.coeffs().begin(), a.coeffs().end());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = detail::checked_add(v[k], b[k]);
  return SeriesQ(a.order(), std::move(v));
}

inline SeriesQ series_sub(const SeriesQ& a, const SeriesQ& b) {
  detail::require_same_order(a, b);
  std::vector<Coeff> v(a.coeffs().begin(), a.coeffs().end());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = detail::checked_sub(v[k], b[k]);
  return SeriesQ(a.order(), std::move(v));
}

inline SeriesQ series_mul(const SeriesQ& a, const SeriesQ& b) {
  detail::require_same_order(a, b);
  return SeriesQ(a.order(), detail::convolve(a.coeffs(), b.coeffs()));
}

inline SeriesQ operator+(const SeriesQ& a, const SeriesQ& b) { return series_add(a, b); }
inline SeriesQ operator-(const SeriesQ& a, const SeriesQ& b) { return series_sub(a, b); }
inline SeriesQ operator*(const SeriesQ& a, const SeriesQ& b) { return series_mul(a, b); }

/// Truncation of prod_{e in exponents} (1 - q^e). Each listed exponent
/// contributes one factor, so repeating an exponent squares its factor.
/// Exponents above the order are accepted and have no effect.
inline SeriesQ product_one_minus(std::span<const std::size_t> exponents, Order order) {
  std::vector<Coeff> v(order.value() + 1, 0);
  v[0] = 1;
  for (std::size_t e : exponents) detail::mul_one_minus(v, e);
  return SeriesQ(order, std::move(v));
}

/// Truncation of prod_{e in exponents} 1/(1 - q^e): the coefficient of q^n
/// counts partitions of n into parts drawn from `exponents`.
inline SeriesQ inverse_one_minus(std::span<const std::size_t> exponents, Order order) {
  std::vector<Coeff> v(order.value() + 1, 0);
  v[0] = 1;
  for (std::size_t e : exponents) detail::div_one_minus(v, e);
  return SeriesQ(order, std::move(v));
}

inline SeriesQ product_one_minus(std::initializer_list<std::size_t> exponents, Order order) {
  return product_one_minus(std::span<const std::size_t>(exponents.begin(), exponents.size()),
                           order);
}

inline SeriesQ inverse_one_minus(std::initializer_list<std::size_t> exponents, Order order) {
  return inverse_one_minus(std::span<const std::size_t>(exponents.begin(), exponents.size()),
                           order);
}

/// The integers lo..hi inclusive; empty when hi < lo.
inline std::vector<std::size_t> exponent_range(std::size_t lo, std::size_t hi) {
  std::vector<std::size_t> out;
  for (std::size_t j = lo; j <= hi; ++j) out.push_back(j);
  return out;
}

/// First coefficient where two series disagree.
struct Discrepancy {
  std::size_t index;
  Coeff lhs;
  Coeff rhs;
  friend bool operator==(const Discrepancy&, const Discrepancy&) = default;
};

struct EqualityCheck {
  std::optional<Discrepancy> discrepancy;
  explicit operator bool() const noexcept { return !discrepancy.has_value(); }
};

/// Compares c_k(a) and c_k(b) for from <= k <= upto.
inline EqualityCheck series_eq_to_order(const SeriesQ& a, const SeriesQ& b, Order upto,
                                        std::size_t from = 0) {
  if (upto > a.order() || upto > b.order())
    throw InvalidInput("comparison order exceeds a series order");
  for (std::size_t k = from; k <= upto.value(); ++k)
    if (a[k] != b[k]) return {Discrepancy{k, a[k], b[k]}};
  return {};
}

inline std::ostream& operator<<(std::ostream& os, const SeriesQ& s) {
  os << '[';
  for (std::size_t k = 0; k < s.coeffs().size(); ++k) os << (k ? "," : "") << s[k];
  return os << ']';
}

}  // namespace nrr
