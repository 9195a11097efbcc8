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
 * @file verify.hpp
 * @brief Truncated checks of the identities, with witnesses on failure.
 *
 * Each check builds two sides by unrelated routes and compares them
 * coefficientwise up to the requested order:
 *
 *   theorem       sum of brute-force signatures over N_i(n)  vs  signed count of R_i(n)
 *   corollary     signed neighborly series                   vs  numerator product
 *   rr            sum side vs product side vs |T_i(n)| vs |E_i(n)|
 *   lemma-enum    subgraph series of G_i^inf at z = -1        vs  signed neighborly series
 *   lemma-hilb    independent-set Hilbert series              vs  S(q,-1) / prod(1 - q^w)
 *   polarization  Hilbert series of P_i                       vs  HP_R / prod(1 - q^j)
 *   proposition   Hilbert series of P_i                       vs  signed series / prod(1 - q^j)^2
 */

#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <future>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "nrr/graphs.hpp"
#include "nrr/hilbert.hpp"
#include "nrr/limits.hpp"
#include "nrr/partitions.hpp"
#include "nrr/qseries.hpp"
#include "nrr/signature.hpp"

namespace nrr {

enum class Target { theorem, corollary, rr, lemma_enum, lemma_hilb, polarization, proposition };

inline constexpr Target all_targets[] = {Target::theorem,    Target::corollary,  Target::rr,
                                         Target::lemma_enum, Target::lemma_hilb, Target::polarization,
                                         Target::proposition};

inline std::string target_name(Target t) {
  switch (t) {
    case Target::theorem: return "theorem";
    case Target::corollary: return "corollary";
    case Target::rr: return "rr";
    case Target::lemma_enum: return "lemma-enum";
    case Target::lemma_hilb: return "lemma-hilb";
    case Target::polarization: return "polarization";
    case Target::proposition: return "proposition";
  }
  return "?";
}

inline std::optional<Target> target_from_name(const std::string& name) {
  for (Target t : all_targets)
    if (target_name(t) == name) return t;
  return std::nullopt;
}

struct VerifyOptions {
  Limits limits{};
  /// Test hook: adds 1 to the left-hand coefficient at this order before
  /// every comparison, so that a correct identity must be reported broken.
  std::optional<std::size_t> corrupt_order{};
  /// Random graphs in the lemma-hilb battery.
  std::size_t random_graphs = 200;
  std::uint64_t seed = 20260101;
};

struct VerificationReport {
  std::string identity;
  std::optional<Mode> mode;
  std::size_t from = 0;
  std::size_t upto = 0;
  bool passed = true;
  /// Which comparison failed, e.g. "sum-side = product-side".
  std::string failed_check;
  std::optional<Discrepancy> witness;
  /// Set for failures that have no coefficient witness (ideal mismatch, error).
  std::string message;
  double seconds = 0;
};

namespace detail {

class ReportBuilder {
 public:
  ReportBuilder(std::string identity, std::optional<Mode> mode, std::size_t from, std::size_t upto,
                const VerifyOptions& options)
      : options_(options), start_(std::chrono::steady_clock::now()) {
    report_.identity = std::move(identity);
    report_.mode = mode;
    report_.from = from;
    report_.upto = upto;
  }

  /// Records the first failing comparison only.
  void compare(const std::string& check, SeriesQ lhs, const SeriesQ& rhs) {
    if (options_.corrupt_order && *options_.corrupt_order <= lhs.order().value()) {
      std::vector<Coeff> v(lhs.coeffs().begin(), lhs.coeffs().end());
      v[*options_.corrupt_order] = checked_add(v[*options_.corrupt_order], 1);
      lhs = SeriesQ(lhs.order(), std::move(v));
    }
    const EqualityCheck eq = series_eq_to_order(lhs, rhs, Order(report_.upto), report_.from);
    if (!eq && report_.passed) {
      report_.passed = false;
      report_.failed_check = check;
      report_.witness = eq.discrepancy;
    }
  }

  void fail(const std::string& check, const std::string& message) {
    if (!report_.passed) return;
    report_.passed = false;
    report_.failed_check = check;
    report_.message = message;
  }

  VerificationReport finish() {
    report_.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return std::move(report_);
  }

 private:
  const VerifyOptions& options_;
  std::chrono::steady_clock::time_point start_;
  VerificationReport report_;
};

inline std::uint32_t prefix_index(Mode mode, Order order) {
  return std::max<std::uint32_t>(static_cast<std::uint32_t>(order.value()), min_part(mode));
}

}  // namespace detail

inline VerificationReport verify_theorem(Mode mode, Order order, const VerifyOptions& options = {}) {
  detail::ReportBuilder report("theorem", mode, 1, order.value(), options);
  std::vector<Coeff> lhs(order.value() + 1, 0), rhs(order.value() + 1, 0);
  for (std::size_t n = 1; n <= order.value(); ++n) {
    const auto m = static_cast<std::uint32_t>(n);
    lhs[n] = neighborly_signature_sum(m, mode, SignatureMethod::bruteforce, options.limits);
    rhs[n] = r_signed_count(m, mode);
  }
  report.compare("sum delta(N_i(n)) = sum (-1)^size(R_i(n))", SeriesQ(order, lhs),
                 SeriesQ(order, rhs));
  return report.finish();
}

inline VerificationReport verify_corollary(Mode mode, Order order, const VerifyOptions& options = {}) {
  detail::ReportBuilder report("corollary", mode, 0, order.value(), options);
  report.compare("signed-gf = numerator",
                 signed_neighborly_gf(mode, order, SignatureMethod::fast, options.limits),
                 numerator_product(mode, order));
  return report.finish();
}

inline VerificationReport verify_rr(Mode mode, Order order, const VerifyOptions& options = {}) {
  detail::ReportBuilder report("rr", mode, 0, order.value(), options);
  const SeriesQ sum = rr_sum_side(mode, order);
  const SeriesQ t = gf_t(mode, order);
  report.compare("rr-sum = rr-product", sum, rr_product_side(mode, order));
  report.compare("rr-sum = |T_i|", sum, t);
  report.compare("|T_i| = |E_i|", t, gf_e(mode, order));
  return report.finish();
}

inline VerificationReport verify_lemma_enum(Mode mode, Order order, const VerifyOptions& options = {}) {
  detail::ReportBuilder report("lemma-enum", mode, 0, order.value(), options);
  const LabeledGraph g = truncated_g_infinity(mode, detail::prefix_index(mode, order));
  report.compare("S_i(q,-1) = signed-gf",
                 weighted_subgraph_series_at(g, WeightMap::by_index(g), -1, order, options.limits),
                 signed_neighborly_gf(mode, order, SignatureMethod::fast, options.limits));
  return report.finish();
}

inline VerificationReport verify_lemma_hilb_prefix(Mode mode, Order order,
                                                   const VerifyOptions& options = {}) {
  detail::ReportBuilder report("lemma-hilb", mode, 0, order.value(), options);
  const LabeledGraph g = truncated_g_infinity(mode, detail::prefix_index(mode, order));
  const SeriesPair sides = lemma_hilb_sides(g, WeightMap::by_index(g), order, options.limits);
  report.compare("H_G = S_G(q,-1) / prod(1-q^w)", sides.lhs, sides.rhs);
  return report.finish();
}

/// Random simple graph on <= max_vertices vertices x_1.. with <= max_edges edges.
inline LabeledGraph random_graph(std::mt19937_64& rng, std::size_t max_vertices,
                                 std::size_t max_edges) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_vertices)(rng);
  std::vector<VertexLabel> vs;
  for (std::uint32_t j = 1; j <= n; ++j) vs.push_back(x(j));
  std::vector<Edge> all;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) all.push_back(Edge::make(vs[a], vs[b]));
  std::shuffle(all.begin(), all.end(), rng);
  const std::size_t m =
      std::uniform_int_distribution<std::size_t>(0, std::min(max_edges, all.size()))(rng);
  all.resize(m);
  return LabeledGraph(std::move(vs), std::move(all));
}

inline WeightMap random_weights(std::mt19937_64& rng, const LabeledGraph& g, Weight max_weight) {
  std::map<VertexLabel, Weight> w;
  std::uniform_int_distribution<Weight> dist(1, max_weight);
  for (VertexLabel v : g.vertices()) w.emplace(v, dist(rng));
  return WeightMap(g, std::move(w));
}

/// The lemma-hilb identity on random graphs (<= 8 vertices, <= 12 edges,
/// weights 1..5).
inline VerificationReport verify_lemma_hilb_random(Order order, const VerifyOptions& options = {}) {
  detail::ReportBuilder report("lemma-hilb-random", std::nullopt, 0, order.value(), options);
  std::mt19937_64 rng(options.seed);
  for (std::size_t k = 0; k < options.random_graphs; ++k) {
    const LabeledGraph g = random_graph(rng, 8, 12);
    const WeightMap w = random_weights(rng, g, 5);
    const SeriesPair sides = lemma_hilb_sides(g, w, order, options.limits);
    report.compare("random graph #" + std::to_string(k), sides.lhs, sides.rhs);
  }
  return report.finish();
}

inline VerificationReport verify_polarization(Mode mode, Order order,
                                              const VerifyOptions& options = {}) {
  detail::ReportBuilder report("polarization", mode, 0, order.value(), options);
  if (!polarization_matches_edge_ideal(mode, detail::prefix_index(mode, order)))
    report.fail("polarize(R ideal) = I(G_i)", "polarized ideal differs from the edge ideal");
  const SeriesPair sides = polarization_sides(mode, order);
  report.compare("HP_P = HP_R / prod(1-q^j)", sides.lhs, sides.rhs);
  return report.finish();
}

inline VerificationReport verify_proposition(Mode mode, Order order,
                                             const VerifyOptions& options = {}) {
  detail::ReportBuilder report("proposition", mode, 0, order.value(), options);
  const SeriesPair sides = proposition_sides(mode, order, SignatureMethod::fast, options.limits);
  report.compare("HP_P = signed-gf / prod(1-q^j)^2", sides.lhs, sides.rhs);
  return report.finish();
}

/// All reports for one target; lemma-hilb also runs the random battery.
inline std::vector<VerificationReport> verify_target(Target target, const std::vector<Mode>& modes,
                                                     Order order, const VerifyOptions& options = {}) {
  std::vector<VerificationReport> out;
  for (Mode m : modes) {
    switch (target) {
      case Target::theorem: out.push_back(verify_theorem(m, order, options)); break;
      case Target::corollary: out.push_back(verify_corollary(m, order, options)); break;
      case Target::rr: out.push_back(verify_rr(m, order, options)); break;
      case Target::lemma_enum: out.push_back(verify_lemma_enum(m, order, options)); break;
      case Target::lemma_hilb: out.push_back(verify_lemma_hilb_prefix(m, order, options)); break;
      case Target::polarization: out.push_back(verify_polarization(m, order, options)); break;
      case Target::proposition: out.push_back(verify_proposition(m, order, options)); break;
    }
  }
  if (target == Target::lemma_hilb) out.push_back(verify_lemma_hilb_random(order, options));
  return out;
}

/// Runs the targets concurrently; reports come back in the order of
/// `targets`, then of `modes`, whatever the schedule. Library errors inside a
/// target become failed reports.
inline std::vector<VerificationReport> verify_targets(const std::vector<Target>& targets,
                                                      const std::vector<Mode>& modes, Order order,
                                                      const VerifyOptions& options = {}) {
  std::vector<std::future<std::vector<VerificationReport>>> jobs;
  for (Target t : targets)
    jobs.push_back(std::async(std::launch::async, [t, &modes, order, &options] {
      try {
        return verify_target(t, modes, order, options);
      } catch (const Error& e) {
        VerificationReport failed;
        failed.identity = target_name(t);
        failed.upto = order.value();
        failed.passed = false;
        failed.failed_check = "evaluation";
        failed.message = e.what();
        return std::vector<VerificationReport>{failed};
      }
    }));
  std::vector<VerificationReport> out;
  for (auto& job : jobs)
    for (auto& r : job.get()) out.push_back(std::move(r));
  return out;
}

}  // namespace nrr
