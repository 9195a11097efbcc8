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
 * @file signature.hpp
 * @brief Signed counts of vertex-spanning subgraphs without isolated vertices.
 *
 * The signature of a finite graph G is
 *
 *     delta(G) = sum over edge sets S covering every vertex of (-1)^|S|.
 *
 * signature_bruteforce() enumerates the edge sets. signature_fast() uses
 * inclusion-exclusion over the set U of uncovered vertices: the edge sets
 * avoiding U are the subsets of E(G - U), whose signed sum vanishes unless
 * G - U has no edges, i.e. unless V - U is independent. This gives
 *
 *     delta(G) = (-1)^|V| * I_G(-1),
 *
 * with I_G(t) the independence polynomial. The fast route is checked against
 * the brute force in the test suite.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "nrr/errors.hpp"
#include "nrr/graphs.hpp"
#include "nrr/limits.hpp"
#include "nrr/partitions.hpp"
#include "nrr/qseries.hpp"

namespace nrr {

using SignedCount = std::int64_t;

namespace detail {

inline void sign_sum_edges(const std::vector<std::uint64_t>& edge_masks, std::size_t next,
                           std::uint64_t covered, bool odd, std::uint64_t full,
                           SignedCount& total) {
  if (next == edge_masks.size()) {
    if (covered == full) total += odd ? -1 : 1;
    return;
  }
  sign_sum_edges(edge_masks, next + 1, covered, odd, full, total);
  sign_sum_edges(edge_masks, next + 1, covered | edge_masks[next], !odd, full, total);
}

}  // namespace detail

/// Direct enumeration of all 2^|E| edge subsets.
inline SignedCount signature_bruteforce(const LabeledGraph& g, const Limits& limits = {}) {
  if (g.edge_count() > limits.max_edges)
    throw BoundExceeded("signature_bruteforce: " + std::to_string(g.edge_count()) +
                        " edges exceeds the bound " + std::to_string(limits.max_edges));
  // Fewer than |V|/2 edges can never cover every vertex.
  if (g.vertex_count() > 2 * g.edge_count()) return 0;
  if (g.vertex_count() > 64) throw BoundExceeded("signature_bruteforce: more than 64 vertices");
  std::vector<std::uint64_t> masks;
  for (auto [a, b] : g.indexed_edges()) masks.push_back((1ULL << a) | (1ULL << b));
  const std::uint64_t full =
      g.vertex_count() == 64 ? ~0ULL : (1ULL << g.vertex_count()) - 1;
  SignedCount total = 0;
  detail::sign_sum_edges(masks, 0, 0, false, full, total);
  return total;
}

namespace detail {

// I(G)(t) for a forest: root each tree, then for every vertex
//   without(v) = prod_c (without(c) + with(c)),  with(v) = t * prod_c without(c).
inline SignedCount independence_forest(const LabeledGraph& g, SignedCount t) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::size_t>> adj(n);
  for (auto [a, b] : g.indexed_edges()) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<SignedCount> without(n, 1), with(n, t);
  std::vector<std::size_t> parent(n, SIZE_MAX), order;
  std::vector<bool> seen(n, false);
  SignedCount total = 1;
  for (std::size_t root = 0; root < n; ++root) {
    if (seen[root]) continue;
    order.clear();
    std::vector<std::size_t> stack{root};
    seen[root] = true;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      order.push_back(v);
      for (std::size_t w : adj[v])
        if (!seen[w]) {
          seen[w] = true;
          parent[w] = v;
          stack.push_back(w);
        }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const std::size_t v = *it;
      const std::size_t p = parent[v];
      if (p == SIZE_MAX) continue;
      without[p] = checked_mul(without[p], checked_add(without[v], with[v]));
      with[p] = checked_mul(with[p], without[v]);
    }
    total = checked_mul(total, checked_add(without[root], with[root]));
  }
  return total;
}

// I(G) = I(G - v) + t * I(G - N[v]) over vertex bitmasks, memoized.
class IndependenceRecursion {
 public:
  IndependenceRecursion(const LabeledGraph& g, SignedCount t) : t_(t), closed_(g.vertex_count()) {
    for (std::size_t v = 0; v < closed_.size(); ++v) closed_[v] = 1ULL << v;
    for (auto [a, b] : g.indexed_edges()) {
      closed_[a] |= 1ULL << b;
      closed_[b] |= 1ULL << a;
    }
  }

  SignedCount eval(std::uint64_t alive) {
    if (alive == 0) return 1;
    if (auto it = memo_.find(alive); it != memo_.end()) return it->second;
    const auto v = static_cast<std::size_t>(__builtin_ctzll(alive));
    const std::uint64_t rest = alive & ~(1ULL << v);
    SignedCount value;
    if ((closed_[v] & rest) == 0) {
      value = checked_mul(checked_add(1, t_), eval(rest));
    } else {
      value = checked_add(eval(rest), checked_mul(t_, eval(alive & ~closed_[v])));
    }
    memo_.emplace(alive, value);
    return value;
  }

 private:
  SignedCount t_;
  std::vector<std::uint64_t> closed_;
  std::unordered_map<std::uint64_t, SignedCount> memo_;
};

}  // namespace detail

/// I_G(t) = sum over independent vertex sets I of t^|I|.
inline SignedCount independence_polynomial_at(const LabeledGraph& g, SignedCount t,
                                              const Limits& limits = {}) {
  if (is_forest(g)) {
    if (g.vertex_count() > limits.max_forest_vertices)
      throw BoundExceeded("independence polynomial: forest with " +
                          std::to_string(g.vertex_count()) + " vertices exceeds the bound " +
                          std::to_string(limits.max_forest_vertices));
    return detail::independence_forest(g, t);
  }
  if (g.vertex_count() > limits.max_vertices || g.vertex_count() > 62)
    throw BoundExceeded("independence polynomial: " + std::to_string(g.vertex_count()) +
                        " vertices exceeds the bound " + std::to_string(limits.max_vertices));
  detail::IndependenceRecursion rec(g, t);
  const std::uint64_t all = (1ULL << g.vertex_count()) - 1;
  return rec.eval(all);
}

/// (-1)^|V| * I_G(-1).
inline SignedCount signature_fast(const LabeledGraph& g, const Limits& limits = {}) {
  const SignedCount value = independence_polynomial_at(g, -1, limits);
  return g.vertex_count() % 2 == 0 ? value : -value;
}

enum class SignatureMethod { bruteforce, fast };

inline SignedCount signature(const LabeledGraph& g, SignatureMethod method,
                             const Limits& limits = {}) {
  return method == SignatureMethod::bruteforce ? signature_bruteforce(g, limits)
                                               : signature_fast(g, limits);
}

/// delta(lambda) for a partition whose parts occur at most twice.
inline SignedCount partition_signature(const Partition& lambda,
                                       SignatureMethod method = SignatureMethod::fast,
                                       const Limits& limits = {}) {
  return signature(graph_of_partition(lambda), method, limits);
}

/// sum over N_i(n) of delta(lambda), n >= 1.
inline SignedCount neighborly_signature_sum(std::uint32_t n, Mode mode,
                                            SignatureMethod method = SignatureMethod::fast,
                                            const Limits& limits = {}) {
  SignedCount total = 0;
  for (const Partition& p : neighborly_partitions(n, mode))
    total = detail::checked_add(total, partition_signature(p, method, limits));
  return total;
}

/// 1 + sum_{n=1..N} (sum over N_i(n) of delta) q^n. The constant term is the
/// empty partition, whose graph has the empty edge set as its only spanning
/// subgraph.
inline SeriesQ signed_neighborly_gf(Mode mode, Order order,
                                    SignatureMethod method = SignatureMethod::fast,
                                    const Limits& limits = {}) {
  std::vector<Coeff> v(order.value() + 1, 0);
  v[0] = 1;
  for (std::size_t n = 1; n <= order.value(); ++n)
    v[n] = neighborly_signature_sum(static_cast<std::uint32_t>(n), mode, method, limits);
  return SeriesQ(order, std::move(v));
}

}  // namespace nrr
