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
 * @file partitions.hpp
 * @brief Integer partitions and the four partition families.
 *
 * For a mode i in {1,2}:
 *  - neighborly N_i(n): every part has another part at distance <= 1, no
 *    part occurs more than twice, every part is >= 3-i;
 *  - T_i(n): distinct parts with pairwise gaps >= 2, part 1 at most i-1 times;
 *  - E_i(n): every part congruent to +-(2+i) mod 5;
 *  - R_i(n): distinct parts >= 3-i, each congruent to 0 or +-i mod 5.
 *
 * Families are produced by filtering the full partition enumeration with the
 * defining predicate, so the predicate is the only place where a family's
 * definition lives.
 */

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "nrr/errors.hpp"
#include "nrr/qseries.hpp"

namespace nrr {

using Part = std::uint32_t;

/// Non-increasing sequence of positive parts.
class Partition {
 public:
  Partition() = default;

  /// Parts must already be positive and non-increasing.
  explicit Partition(std::vector<Part> parts) : parts_(std::move(parts)) {
    for (std::size_t k = 0; k < parts_.size(); ++k) {
      if (parts_[k] == 0) throw InvalidInput("partition parts must be positive");
      if (k > 0 && parts_[k] > parts_[k - 1])
        throw InvalidInput("partition parts must be non-increasing");
    }
  }

  /// Accepts parts in any order and sorts them into canonical form.
  static Partition canonical(std::vector<Part> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
  }

  const std::vector<Part>& parts() const noexcept { return parts_; }
  std::size_t size() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }

  std::uint64_t weight() const noexcept {
    std::uint64_t w = 0;
    for (Part p : parts_) w += p;
    return w;
  }

  std::size_t multiplicity(Part h) const noexcept {
    return static_cast<std::size_t>(std::count(parts_.begin(), parts_.end(), h));
  }

  std::size_t max_multiplicity() const noexcept {
    std::size_t best = 0;
    for (std::size_t k = 0; k < parts_.size();) {
      std::size_t run = 1;
      while (k + run < parts_.size() && parts_[k + run] == parts_[k]) ++run;
      best = std::max(best, run);
      k += run;
    }
    return best;
  }

  /// "3+2+1"; the empty partition prints as "()".
  std::string to_string() const {
    if (parts_.empty()) return "()";
    std::string s;
    for (std::size_t k = 0; k < parts_.size(); ++k) {
      if (k) s += '+';
      s += std::to_string(parts_[k]);
    }
    return s;
  }

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<Part> parts_;
};

inline std::ostream& operator<<(std::ostream& os, const Partition& p) {
  return os << p.to_string();
}

/// Selects identity (1) (i = 2) or identity (2) (i = 1).
enum class Mode : int { one = 1, two = 2 };

inline Mode mode_from_int(int i) {
  if (i == 1) return Mode::one;
  if (i == 2) return Mode::two;
  throw InvalidInput("mode must be 1 or 2, got " + std::to_string(i));
}

constexpr int to_int(Mode m) noexcept { return static_cast<int>(m); }

/// Smallest admissible part / vertex index: 3 - i.
constexpr Part min_part(Mode m) noexcept { return static_cast<Part>(3 - to_int(m)); }

// ---------------------------------------------------------------------------
// Enumeration

namespace detail {

template <class Visitor>
void visit_partitions(std::uint32_t remaining, Part max_part, std::vector<Part>& prefix,
                      Visitor& visit) {
  if (remaining == 0) {
    visit(static_cast<const std::vector<Part>&>(prefix));
    return;
  }
  for (Part p = std::min<Part>(max_part, remaining); p >= 1; --p) {
    prefix.push_back(p);
    visit_partitions(remaining - p, p, prefix, visit);
    prefix.pop_back();
  }
}

}  // namespace detail

/// Calls `visit(const std::vector<Part>&)` once per partition of n, in
/// lexicographically decreasing order of the part sequence. The vector is
/// only valid for the duration of the call.
template <class Visitor>
void for_each_partition(std::uint32_t n, Visitor&& visit) {
  std::vector<Part> prefix;
  prefix.reserve(n);
  detail::visit_partitions(n, n, prefix, visit);
}

/// All partitions of n, lexicographically decreasing; n = 0 gives {()}.
inline std::vector<Partition> partitions_of(std::uint32_t n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const std::vector<Part>& parts) { out.emplace_back(parts); });
  return out;
}

// ---------------------------------------------------------------------------
// Defining predicates. They take the raw non-increasing part sequence so the
// streaming enumerator can test them without building a Partition.

inline bool is_neighborly(std::span<const Part> parts, Mode mode) {
  const std::size_t r = parts.size();
  for (std::size_t j = 0; j < r; ++j) {
    if (parts[j] < min_part(mode)) return false;
    // at most two equal parts
    if (j + 2 < r && parts[j] == parts[j + 2]) return false;
    // some other part at distance <= 1; in a sorted sequence it is adjacent
    const bool left = j > 0 && parts[j - 1] - parts[j] <= 1;
    const bool right = j + 1 < r && parts[j] - parts[j + 1] <= 1;
    if (!left && !right) return false;
  }
  return true;
}

inline bool is_neighborly(const Partition& p, Mode mode) { return is_neighborly(p.parts(), mode); }

inline bool is_t_partition(std::span<const Part> parts, Mode mode) {
  for (std::size_t j = 0; j + 1 < parts.size(); ++j)
    if (parts[j] - parts[j + 1] < 2) return false;
  const std::size_t ones = static_cast<std::size_t>(std::count(parts.begin(), parts.end(), 1u));
  return ones <= static_cast<std::size_t>(to_int(mode) - 1);
}

inline bool is_e_partition(std::span<const Part> parts, Mode mode) {
  const Part a = static_cast<Part>(2 + to_int(mode));
  const Part b = 5 - a;
  return std::all_of(parts.begin(), parts.end(), [&](Part p) { return p % 5 == a || p % 5 == b; });
}

/// Membership of the residue class {j >= 3-i : j = 0, +-i mod 5}.
inline bool in_numerator_class(std::size_t j, Mode mode) {
  const std::size_t i = static_cast<std::size_t>(to_int(mode));
  if (j < min_part(mode)) return false;
  const std::size_t r = j % 5;
  return r == 0 || r == i || r == 5 - i;
}

inline bool is_r_partition(std::span<const Part> parts, Mode mode) {
  for (std::size_t j = 0; j < parts.size(); ++j) {
    if (!in_numerator_class(parts[j], mode)) return false;
    if (j + 1 < parts.size() && parts[j] == parts[j + 1]) return false;
  }
  return true;
}

inline bool is_t_partition(const Partition& p, Mode mode) { return is_t_partition(p.parts(), mode); }
inline bool is_e_partition(const Partition& p, Mode mode) { return is_e_partition(p.parts(), mode); }
inline bool is_r_partition(const Partition& p, Mode mode) { return is_r_partition(p.parts(), mode); }

// ---------------------------------------------------------------------------
// Families

namespace detail {

template <class Pred>
std::vector<Partition> filter_partitions(std::uint32_t n, Pred pred) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const std::vector<Part>& parts) {
    if (pred(std::span<const Part>(parts))) out.emplace_back(parts);
  });
  return out;
}

template <class Pred>
std::uint64_t count_partitions(std::uint32_t n, Pred pred) {
  std::uint64_t count = 0;
  for_each_partition(n, [&](const std::vector<Part>& parts) {
    if (pred(std::span<const Part>(parts))) ++count;
  });
  return count;
}

inline void require_positive(std::uint32_t n) {
  if (n == 0) throw InvalidInput("family is defined for n >= 1 only");
}

}  // namespace detail

/// N_i(n), n >= 1.
inline std::vector<Partition> neighborly_partitions(std::uint32_t n, Mode mode) {
  detail::require_positive(n);
  return detail::filter_partitions(n, [mode](std::span<const Part> p) { return is_neighborly(p, mode); });
}

/// T_i(n); contains the empty partition when n = 0.
inline std::vector<Partition> t_partitions(std::uint32_t n, Mode mode) {
  return detail::filter_partitions(n, [mode](std::span<const Part> p) { return is_t_partition(p, mode); });
}

/// E_i(n); contains the empty partition when n = 0.
inline std::vector<Partition> e_partitions(std::uint32_t n, Mode mode) {
  return detail::filter_partitions(n, [mode](std::span<const Part> p) { return is_e_partition(p, mode); });
}

/// R_i(n), n >= 1.
inline std::vector<Partition> r_partitions(std::uint32_t n, Mode mode) {
  detail::require_positive(n);
  return detail::filter_partitions(n, [mode](std::span<const Part> p) { return is_r_partition(p, mode); });
}

/// sum over R_i(n) of (-1)^size.
inline std::int64_t r_signed_count(std::uint32_t n, Mode mode) {
  std::int64_t total = 0;
  for (const Partition& p : r_partitions(n, mode)) total += (p.size() % 2 == 0) ? 1 : -1;
  return total;
}

// ---------------------------------------------------------------------------
// Generating series

/// {j in [3-i, N] : j = 0, +-i mod 5}, the exponents of the numerator product.
inline std::vector<std::size_t> numerator_exponents(Mode mode, Order order) {
  std::vector<std::size_t> out;
  for (std::size_t j = min_part(mode); j <= order.value(); ++j)
    if (in_numerator_class(j, mode)) out.push_back(j);
  return out;
}

/// prod_{j >= 3-i, j = 0,+-i mod 5} (1 - q^j), truncated.
inline SeriesQ numerator_product(Mode mode, Order order) {
  return product_one_minus(numerator_exponents(mode, order), order);
}

/// sum_h |T_i(h)| q^h, each coefficient counted by enumeration.
inline SeriesQ gf_t(Mode mode, Order order) {
  std::vector<Coeff> v(order.value() + 1, 0);
  for (std::size_t h = 0; h <= order.value(); ++h)
    v[h] = static_cast<Coeff>(detail::count_partitions(
        static_cast<std::uint32_t>(h), [mode](std::span<const Part> p) { return is_t_partition(p, mode); }));
  return SeriesQ(order, std::move(v));
}

/// sum_h |E_i(h)| q^h, each coefficient counted by enumeration.
inline SeriesQ gf_e(Mode mode, Order order) {
  std::vector<Coeff> v(order.value() + 1, 0);
  for (std::size_t h = 0; h <= order.value(); ++h)
    v[h] = static_cast<Coeff>(detail::count_partitions(
        static_cast<std::uint32_t>(h), [mode](std::span<const Part> p) { return is_e_partition(p, mode); }));
  return SeriesQ(order, std::move(v));
}

/// sum_{k >= 0} q^{k^2 + (2-i)k} / ((1-q)...(1-q^k)), truncated. The sum
/// stops at the first k whose leading exponent exceeds the order.
inline SeriesQ rr_sum_side(Mode mode, Order order) {
  const std::size_t shift = static_cast<std::size_t>(2 - to_int(mode));
  const std::size_t n = order.value();
  std::vector<Coeff> total(n + 1, 0);
  std::vector<Coeff> denom(n + 1, 0);  // 1/((1-q)...(1-q^k))
  denom[0] = 1;
  for (std::size_t k = 0;; ++k) {
    const std::size_t lead = k * k + shift * k;
    if (lead > n) break;
    if (k > 0) detail::div_one_minus(denom, k);
    for (std::size_t e = lead; e <= n; ++e)
      total[e] = detail::checked_add(total[e], denom[e - lead]);
  }
  return SeriesQ(order, std::move(total));
}

/// numerator_product(i) / prod_{j >= 3-i} (1 - q^j), truncated.
inline SeriesQ rr_product_side(Mode mode, Order order) {
  const auto denominators = exponent_range(min_part(mode), order.value());
  return numerator_product(mode, order) * inverse_one_minus(denominators, order);
}

}  // namespace nrr
