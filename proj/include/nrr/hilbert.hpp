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
 * @file hilbert.hpp
 * @brief Weighted Hilbert series of monomial quotients and edge ideals.
 *
 * Every vertex / variable v carries a positive weight w(v), and a monomial
 * prod v^{a_v} is sent to q^{sum a_v w(v)}. The weighted Hilbert series of
 * A / I counts the monomials outside I by weight. For an edge ideal the
 * monomials outside I(G) are exactly those whose support is an independent
 * set of G. Three routes are provided:
 *
 *  - independent sets: sum over independent I of prod_{v in I} q^w/(1-q^w);
 *  - inclusion-exclusion over generator subsets, weighted by their lcm;
 *  - direct enumeration of standard monomials (any monomial ideal).
 *
 * Prefixes of G_i^inf with w(x_j) = w(y_j) = j get a linear transfer DP.
 * A prefix on indices <= N is enough for every coefficient up to q^N, since
 * every variable of larger index has weight > N.
 */

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nrr/errors.hpp"
#include "nrr/graphs.hpp"
#include "nrr/limits.hpp"
#include "nrr/partitions.hpp"
#include "nrr/qseries.hpp"
#include "nrr/signature.hpp"

namespace nrr {

using Weight = std::uint32_t;

/// Positive weight for every vertex of one graph.
class WeightMap {
 public:
  WeightMap(const LabeledGraph& g, std::map<VertexLabel, Weight> weights)
      : weights_(std::move(weights)) {
    for (VertexLabel v : g.vertices()) {
      auto it = weights_.find(v);
      if (it == weights_.end()) throw InvalidInput("no weight for vertex " + v.to_string());
      if (it->second == 0) throw InvalidInput("weight of " + v.to_string() + " must be >= 1");
    }
    if (weights_.size() != g.vertex_count())
      throw InvalidInput("weight map names a vertex outside the graph");
  }

  /// w(x_j) = w(y_j) = j.
  static WeightMap by_index(const LabeledGraph& g) {
    std::map<VertexLabel, Weight> w;
    for (VertexLabel v : g.vertices()) w.emplace(v, v.index);
    return WeightMap(g, std::move(w));
  }

  Weight at(VertexLabel v) const {
    auto it = weights_.find(v);
    if (it == weights_.end()) throw InvalidInput("no weight for vertex " + v.to_string());
    return it->second;
  }

  /// Weights in the order of g.vertices().
  std::vector<Weight> aligned(const LabeledGraph& g) const {
    std::vector<Weight> out;
    out.reserve(g.vertex_count());
    for (VertexLabel v : g.vertices()) out.push_back(at(v));
    return out;
  }

  const std::map<VertexLabel, Weight>& entries() const noexcept { return weights_; }

 private:
  std::map<VertexLabel, Weight> weights_;
};

struct Variable {
  std::string name;
  Weight weight;
  friend auto operator<=>(const Variable&, const Variable&) = default;
};

/// Monomial ideal given by generator exponent vectors over weighted variables.
class MonomialIdealSpec {
 public:
  using Exponents = std::vector<std::uint32_t>;

  MonomialIdealSpec(std::vector<Variable> variables, std::vector<Exponents> generators)
      : variables_(std::move(variables)), generators_(std::move(generators)) {
    std::set<std::string> names;
    for (const Variable& v : variables_) {
      if (v.weight == 0) throw InvalidInput("variable " + v.name + " needs a positive weight");
      if (!names.insert(v.name).second) throw InvalidInput("repeated variable " + v.name);
    }
    for (const Exponents& g : generators_) {
      if (g.size() != variables_.size())
        throw InvalidInput("generator length does not match the variable count");
      if (std::all_of(g.begin(), g.end(), [](auto e) { return e == 0; }))
        throw InvalidInput("the unit monomial is not an admissible generator");
    }
  }

  const std::vector<Variable>& variables() const noexcept { return variables_; }
  const std::vector<Exponents>& generators() const noexcept { return generators_; }

  bool is_squarefree() const {
    for (const Exponents& g : generators_)
      for (auto e : g)
        if (e > 1) return false;
    return true;
  }

  /// Generator as "x_1^2*x_2"; used in diagnostics and CLI output.
  std::string generator_string(std::size_t k) const {
    std::string s;
    const Exponents& g = generators_.at(k);
    for (std::size_t v = 0; v < g.size(); ++v) {
      if (g[v] == 0) continue;
      if (!s.empty()) s += '*';
      s += variables_[v].name;
      if (g[v] > 1) s += "^" + std::to_string(g[v]);
    }
    return s;
  }

 private:
  std::vector<Variable> variables_;
  std::vector<Exponents> generators_;
};

/// True when both specs name the same weighted variables and the same set of
/// generators, irrespective of variable and generator order.
inline bool same_ideal(const MonomialIdealSpec& a, const MonomialIdealSpec& b) {
  auto canonical = [](const MonomialIdealSpec& s) {
    std::set<Variable> vars(s.variables().begin(), s.variables().end());
    std::set<std::vector<std::pair<std::string, std::uint32_t>>> gens;
    for (const auto& g : s.generators()) {
      std::vector<std::pair<std::string, std::uint32_t>> named;
      for (std::size_t v = 0; v < g.size(); ++v)
        if (g[v] != 0) named.emplace_back(s.variables()[v].name, g[v]);
      std::sort(named.begin(), named.end());
      gens.insert(std::move(named));
    }
    return std::make_pair(std::move(vars), std::move(gens));
  };
  return canonical(a) == canonical(b);
}

/// One squarefree quadratic generator per edge.
inline MonomialIdealSpec edge_ideal_of(const LabeledGraph& g, const WeightMap& w) {
  std::vector<Variable> vars;
  for (VertexLabel v : g.vertices()) vars.push_back({v.to_string(), w.at(v)});
  std::vector<MonomialIdealSpec::Exponents> gens;
  for (auto [a, b] : g.indexed_edges()) {
    MonomialIdealSpec::Exponents e(vars.size(), 0);
    e[a] = e[b] = 1;
    gens.push_back(std::move(e));
  }
  return MonomialIdealSpec(std::move(vars), std::move(gens));
}

inline MonomialIdealSpec edge_ideal_of(const LabeledGraph& g) {
  return edge_ideal_of(g, WeightMap::by_index(g));
}

/// <x_j^2, x_j x_{j+1} : 3-i <= j <= max_index> in K[x_j : 3-i <= j <= max_index],
/// with w(x_j) = j.
inline MonomialIdealSpec r_ideal(Mode mode, std::uint32_t max_index) {
  const std::uint32_t lo = min_part(mode);
  std::vector<Variable> vars;
  for (std::uint32_t j = lo; j <= max_index; ++j) vars.push_back({x(j).to_string(), j});
  std::vector<MonomialIdealSpec::Exponents> gens;
  for (std::size_t k = 0; k < vars.size(); ++k) {
    MonomialIdealSpec::Exponents sq(vars.size(), 0);
    sq[k] = 2;
    gens.push_back(std::move(sq));
    if (k + 1 < vars.size()) {
      MonomialIdealSpec::Exponents link(vars.size(), 0);
      link[k] = link[k + 1] = 1;
      gens.push_back(std::move(link));
    }
  }
  return MonomialIdealSpec(std::move(vars), std::move(gens));
}

// ---------------------------------------------------------------------------
// Polarization

/// Names the copy-th fresh variable (copy >= 1) of an original variable.
using PolarizationNaming = std::function<std::string(const std::string&, std::size_t)>;

inline std::string default_polarization_name(const std::string& name, std::size_t copy) {
  return name + "#" + std::to_string(copy);
}

/// x_j -> y_j for the first copy; other names fall back to the default.
inline std::string ladder_polarization_name(const std::string& name, std::size_t copy) {
  if (copy == 1 && name.size() > 2 && name.rfind("x_", 0) == 0) return "y_" + name.substr(2);
  return default_polarization_name(name, copy);
}

/// Replaces every power v^e in a generator by v * v#1 * ... * v#(e-1). The
/// k-th copy of v is one shared variable across all generators and inherits
/// the weight of v.
inline MonomialIdealSpec polarize(const MonomialIdealSpec& spec,
                                  const PolarizationNaming& naming = default_polarization_name) {
  const auto& vars = spec.variables();
  std::vector<std::uint32_t> max_exp(vars.size(), 0);
  for (const auto& g : spec.generators())
    for (std::size_t v = 0; v < vars.size(); ++v) max_exp[v] = std::max(max_exp[v], g[v]);

  std::vector<Variable> out_vars(vars.begin(), vars.end());
  // copy_slot[v][c-1] = position of copy c of variable v
  std::vector<std::vector<std::size_t>> copy_slot(vars.size());
  for (std::size_t v = 0; v < vars.size(); ++v)
    for (std::uint32_t c = 1; c < max_exp[v]; ++c) {
      copy_slot[v].push_back(out_vars.size());
      out_vars.push_back({naming(vars[v].name, c), vars[v].weight});
    }

  std::vector<MonomialIdealSpec::Exponents> out_gens;
  for (const auto& g : spec.generators()) {
    MonomialIdealSpec::Exponents e(out_vars.size(), 0);
    for (std::size_t v = 0; v < vars.size(); ++v) {
      if (g[v] == 0) continue;
      e[v] = 1;
      for (std::uint32_t c = 1; c < g[v]; ++c) e[copy_slot[v][c - 1]] = 1;
    }
    out_gens.push_back(std::move(e));
  }
  return MonomialIdealSpec(std::move(out_vars), std::move(out_gens));
}

// ---------------------------------------------------------------------------
// Hilbert series

namespace detail {

/// v <- v * q^w / (1 - q^w)
inline std::vector<Coeff> times_power_geometric(const std::vector<Coeff>& v, std::size_t w) {
  std::vector<Coeff> out(v.size(), 0);
  for (std::size_t k = w; k < v.size(); ++k) out[k] = v[k - w];
  div_one_minus(out, w);
  return out;
}

inline void add_into(std::vector<Coeff>& acc, const std::vector<Coeff>& v) {
  for (std::size_t k = 0; k < acc.size(); ++k) acc[k] = checked_add(acc[k], v[k]);
}

class IndependentSetHilbert {
 public:
  IndependentSetHilbert(const LabeledGraph& g, std::vector<Weight> weights, std::size_t len)
      : weights_(std::move(weights)), len_(len), closed_(g.vertex_count()) {
    for (std::size_t v = 0; v < closed_.size(); ++v) closed_[v] = 1ULL << v;
    for (auto [a, b] : g.indexed_edges()) {
      closed_[a] |= 1ULL << b;
      closed_[b] |= 1ULL << a;
    }
  }

  // H(alive) = H(alive - v) + q^w/(1-q^w) * H(alive - N[v])
  const std::vector<Coeff>& eval(std::uint64_t alive) {
    if (auto it = memo_.find(alive); it != memo_.end()) return it->second;
    std::vector<Coeff> value(len_, 0);
    if (alive == 0) {
      value[0] = 1;
    } else {
      const auto v = static_cast<std::size_t>(__builtin_ctzll(alive));
      value = eval(alive & ~(1ULL << v));
      add_into(value, times_power_geometric(eval(alive & ~closed_[v]), weights_[v]));
    }
    return memo_.emplace(alive, std::move(value)).first->second;
  }

 private:
  std::vector<Weight> weights_;
  std::size_t len_;
  std::vector<std::uint64_t> closed_;
  std::unordered_map<std::uint64_t, std::vector<Coeff>> memo_;
};

}  // namespace detail

/// Weighted Hilbert series of A / I(prefix of G_i^inf on indices <= max_index),
/// w(x_j) = w(y_j) = j, by a transfer DP over j with state "x_j divides the
/// monomial".
inline SeriesQ hilbert_g_infinity_prefix(Mode mode, std::uint32_t max_index, Order order) {
  const std::size_t len = order.value() + 1;
  std::vector<Coeff> used(len, 0), unused(len, 0);
  unused[0] = 1;
  for (std::uint32_t j = min_part(mode); j <= max_index; ++j) {
    // x_j alone (y_j excluded by x_j y_j), or y_j alone, or neither.
    std::vector<Coeff> next_used = detail::times_power_geometric(unused, j);
    std::vector<Coeff> next_unused = used;
    detail::add_into(next_unused, unused);
    detail::add_into(next_unused, detail::times_power_geometric(next_unused, j));
    used = std::move(next_used);
    unused = std::move(next_unused);
  }
  detail::add_into(used, unused);
  return SeriesQ(order, std::move(used));
}

/// Counts monomials whose support is independent in g. Prefixes of G_i^inf
/// with index weights go through hilbert_g_infinity_prefix(); anything else
/// is enumerated and limited by limits.max_vertices.
inline SeriesQ weighted_hilbert_independent_sets(const LabeledGraph& g, const WeightMap& w,
                                                 Order order, const Limits& limits = {}) {
  if (g.vertex_count() > limits.max_vertices || g.vertex_count() > 62) {
    if (auto prefix = as_g_infinity_prefix(g)) {
      bool index_weights = true;
      for (VertexLabel v : g.vertices()) index_weights = index_weights && w.at(v) == v.index;
      if (index_weights) return hilbert_g_infinity_prefix(prefix->first, prefix->second, order);
    }
    throw BoundExceeded("independent-set Hilbert series: " + std::to_string(g.vertex_count()) +
                        " vertices exceeds the bound " + std::to_string(limits.max_vertices));
  }
  detail::IndependentSetHilbert rec(g, w.aligned(g), order.value() + 1);
  const std::uint64_t all = g.vertex_count() == 0 ? 0 : (1ULL << g.vertex_count()) - 1;
  return SeriesQ(order, rec.eval(all));
}

namespace detail {

struct LcmWalk {
  const MonomialIdealSpec& spec;
  std::size_t limit;  // largest weight kept
  std::vector<std::uint32_t> lcm;
  std::vector<Coeff> numerator;

  void visit(std::size_t next, std::size_t weight, bool odd) {
    numerator[weight] = checked_add(numerator[weight], odd ? -1 : 1);
    for (std::size_t k = next; k < spec.generators().size(); ++k) {
      const auto& g = spec.generators()[k];
      std::size_t grown = weight;
      for (std::size_t v = 0; v < g.size(); ++v)
        if (g[v] > lcm[v]) grown += static_cast<std::size_t>(g[v] - lcm[v]) * spec.variables()[v].weight;
      // lcm weights only grow along a branch
      if (grown > limit) continue;
      std::vector<std::uint32_t> saved = lcm;
      for (std::size_t v = 0; v < g.size(); ++v) lcm[v] = std::max(lcm[v], g[v]);
      visit(k + 1, grown, !odd);
      lcm = std::move(saved);
    }
  }
};

}  // namespace detail

/// H_A * sum over generator subsets S of (-1)^|S| q^{w(lcm S)}, where
/// H_A = prod_v 1/(1 - q^{w(v)}). Subsets whose lcm already weighs more than
/// the order are pruned with all their supersets.
inline SeriesQ weighted_hilbert_inclusion_exclusion(const MonomialIdealSpec& spec, Order order,
                                                    const Limits& limits = {}) {
  if (spec.generators().size() > limits.max_generators)
    throw BoundExceeded("inclusion-exclusion: " + std::to_string(spec.generators().size()) +
                        " generators exceeds the bound " + std::to_string(limits.max_generators));
  detail::LcmWalk walk{spec, order.value(), std::vector<std::uint32_t>(spec.variables().size(), 0),
                       std::vector<Coeff>(order.value() + 1, 0)};
  walk.visit(0, 0, false);
  for (const Variable& v : spec.variables()) detail::div_one_minus(walk.numerator, v.weight);
  return SeriesQ(order, std::move(walk.numerator));
}

namespace detail {

struct StandardMonomialWalk {
  const MonomialIdealSpec& spec;
  std::size_t limit;
  // generators indexed by the last variable of their support
  std::vector<std::vector<std::size_t>> closing;
  std::vector<std::uint32_t> exps;
  std::vector<Coeff> counts;

  bool divisible_by_closing(std::size_t var) const {
    for (std::size_t k : closing[var]) {
      const auto& g = spec.generators()[k];
      bool divides = true;
      for (std::size_t v = 0; v <= var && divides; ++v) divides = g[v] <= exps[v];
      if (divides) return true;
    }
    return false;
  }

  void visit(std::size_t var, std::size_t weight) {
    if (var == exps.size()) {
      counts[weight] = checked_add(counts[weight], 1);
      return;
    }
    const std::size_t w = spec.variables()[var].weight;
    for (std::uint32_t e = 0; weight + e * w <= limit; ++e) {
      exps[var] = e;
      // any multiple of an ideal member is a member
      if (divisible_by_closing(var)) break;
      visit(var + 1, weight + e * w);
    }
    exps[var] = 0;
  }
};

}  // namespace detail

/// Weighted Hilbert series by listing every monomial of weight <= N outside
/// the ideal. Works for any monomial ideal; cost grows with the answer.
inline SeriesQ weighted_hilbert_standard_monomials(const MonomialIdealSpec& spec, Order order) {
  detail::StandardMonomialWalk walk{spec, order.value(), {}, {}, {}};
  const std::size_t n = spec.variables().size();
  walk.closing.resize(n);
  walk.exps.assign(n, 0);
  walk.counts.assign(order.value() + 1, 0);
  for (std::size_t k = 0; k < spec.generators().size(); ++k) {
    const auto& g = spec.generators()[k];
    std::size_t last = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (g[v] != 0) last = v;
    walk.closing[last].push_back(k);
  }
  walk.visit(0, 0);
  return SeriesQ(order, std::move(walk.counts));
}

/// HP of K[x_j : j >= 3-i] / <x_j^2, x_j x_{j+1}>, w(x_j) = j, computed from
/// the prefix ideal on indices <= N by standard-monomial enumeration.
inline SeriesQ hp_R(Mode mode, Order order) {
  const auto max_index = std::max<std::uint32_t>(static_cast<std::uint32_t>(order.value()), min_part(mode));
  return weighted_hilbert_standard_monomials(r_ideal(mode, max_index), order);
}

// ---------------------------------------------------------------------------
// Subgraph enumerating series

namespace detail {

struct SubgraphWalk {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<Weight> weights;
  Coeff z;
  std::size_t limit;
  std::uint64_t budget;
  std::uint64_t terms = 0;
  std::vector<std::uint32_t> cover;
  std::vector<Coeff> out;

  void visit(std::size_t next, std::size_t weight, Coeff zpow) {
    if (next == edges.size()) {
      if (++terms > budget) throw BoundExceeded("subgraph series: enumeration budget exhausted");
      out[weight] = checked_add(out[weight], zpow);
      return;
    }
    visit(next + 1, weight, zpow);
    const auto [a, b] = edges[next];
    std::size_t grown = weight;
    if (cover[a] == 0) grown += weights[a];
    if (cover[b] == 0) grown += weights[b];
    if (grown > limit) return;
    ++cover[a];
    ++cover[b];
    visit(next + 1, grown, checked_mul(zpow, z));
    --cover[a];
    --cover[b];
  }
};

}  // namespace detail

/// sum over finite subgraphs H without isolated vertices of
/// q^{w(V(H))} z^{|E(H)|}. Such an H is fixed by its edge set, so this walks
/// edge subsets, pruning any whose covered weight exceeds the order. At most
/// 2^limits.max_edges terms are enumerated.
inline SeriesQ weighted_subgraph_series_at(const LabeledGraph& g, const WeightMap& w, Coeff z,
                                           Order order, const Limits& limits = {}) {
  detail::SubgraphWalk walk{g.indexed_edges(),
                            w.aligned(g),
                            z,
                            order.value(),
                            limits.max_edges >= 63 ? UINT64_MAX : (1ULL << limits.max_edges),
                            0,
                            std::vector<std::uint32_t>(g.vertex_count(), 0),
                            std::vector<Coeff>(order.value() + 1, 0)};
  // Light edges first so that heavy branches are cut early.
  std::stable_sort(walk.edges.begin(), walk.edges.end(), [&](auto e, auto f) {
    return walk.weights[e.first] + walk.weights[e.second] <
           walk.weights[f.first] + walk.weights[f.second];
  });
  walk.visit(0, 0, 1);
  return SeriesQ(order, std::move(walk.out));
}

// ---------------------------------------------------------------------------
// Identities between the routes

/// Two independently computed sides of one identity.
struct SeriesPair {
  SeriesQ lhs;
  SeriesQ rhs;
};

/// Independent-set Hilbert series vs S_G(q, -1) * prod_v 1/(1 - q^{w(v)}).
inline SeriesPair lemma_hilb_sides(const LabeledGraph& g, const WeightMap& w, Order order,
                                   const Limits& limits = {}) {
  std::vector<std::size_t> ws;
  for (Weight wt : w.aligned(g)) ws.push_back(wt);
  return {weighted_hilbert_independent_sets(g, w, order, limits),
          weighted_subgraph_series_at(g, w, -1, order, limits) * inverse_one_minus(ws, order)};
}

/// HP of the polarized ring vs HP_R * prod_{j >= 3-i} 1/(1 - q^j).
inline SeriesPair polarization_sides(Mode mode, Order order) {
  const auto max_index = std::max<std::uint32_t>(static_cast<std::uint32_t>(order.value()), min_part(mode));
  const auto denominators = exponent_range(min_part(mode), order.value());
  return {hilbert_g_infinity_prefix(mode, max_index, order),
          hp_R(mode, order) * inverse_one_minus(denominators, order)};
}

/// HP of the polarized ring vs signed neighborly series / prod (1 - q^j)^2.
inline SeriesPair proposition_sides(Mode mode, Order order,
                                    SignatureMethod method = SignatureMethod::fast,
                                    const Limits& limits = {}) {
  const auto max_index = std::max<std::uint32_t>(static_cast<std::uint32_t>(order.value()), min_part(mode));
  std::vector<std::size_t> squared;
  for (std::size_t j = min_part(mode); j <= order.value(); ++j) {
    squared.push_back(j);
    squared.push_back(j);
  }
  return {hilbert_g_infinity_prefix(mode, max_index, order),
          signed_neighborly_gf(mode, order, method, limits) * inverse_one_minus(squared, order)};
}

inline EqualityCheck verify_lemma_hilb(const LabeledGraph& g, const WeightMap& w, Order order,
                                       const Limits& limits = {}) {
  const SeriesPair s = lemma_hilb_sides(g, w, order, limits);
  return series_eq_to_order(s.lhs, s.rhs, order);
}

inline EqualityCheck verify_polarization_identity(Mode mode, Order order) {
  const SeriesPair s = polarization_sides(mode, order);
  return series_eq_to_order(s.lhs, s.rhs, order);
}

inline EqualityCheck verify_proposition_hp(Mode mode, Order order) {
  const SeriesPair s = proposition_sides(mode, order);
  return series_eq_to_order(s.lhs, s.rhs, order);
}

/// The polarization of the R ideal is the edge ideal of the matching prefix
/// of G_i^inf, once x_j#1 is renamed y_j.
inline bool polarization_matches_edge_ideal(Mode mode, std::uint32_t max_index) {
  return same_ideal(polarize(r_ideal(mode, max_index), ladder_polarization_name),
                    edge_ideal_of(truncated_g_infinity(mode, max_index)));
}

}  // namespace nrr
