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

// Command-line front end. Exit codes: 0 success, 1 identity violation,
// overflow or exhausted bound, 2 usage error.

#pragma once

#include <cstddef>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nrr/nrr.hpp"

namespace nrr::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_usage = 2;

using json = nlohmann::json;

inline const std::vector<std::string> kFormats = {"text", "json", "csv"};
inline const std::vector<std::string> kFamilies = {"neighborly", "T", "E", "R", "all"};
inline const std::vector<std::string> kSeries = {"numerator", "rr-sum",  "rr-product",
                                                 "signed-gf", "hp-R",    "hilbert-P"};

/// "3,1,2" -> 3+2+1. Throws InvalidInput on anything but positive integers.
inline Partition parse_partition(const std::string& text) {
  std::vector<Part> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(' ');
    const auto last = item.find_last_not_of(' ');
    if (first == std::string::npos) throw InvalidInput("empty part in '" + text + "'");
    item = item.substr(first, last - first + 1);
    if (item.find_first_not_of("0123456789") != std::string::npos || item.size() > 9)
      throw InvalidInput("malformed part '" + item + "'");
    const auto value = static_cast<Part>(std::stoul(item));
    if (value == 0) throw InvalidInput("parts must be positive");
    parts.push_back(value);
  }
  if (parts.empty() || text.back() == ',') throw InvalidInput("malformed partition '" + text + "'");
  return Partition::canonical(std::move(parts));
}

inline json partition_json(const Partition& p) { return json(p.parts()); }

// ---------------------------------------------------------------------------
// partitions

struct FamilyListing {
  std::string family;
  std::vector<Partition> members;
  std::optional<std::int64_t> signed_count;
};

inline FamilyListing list_family(const std::string& family, std::uint32_t n, Mode mode) {
  if (family == "neighborly") return {family, neighborly_partitions(n, mode), std::nullopt};
  if (family == "T") return {family, t_partitions(n, mode), std::nullopt};
  if (family == "E") return {family, e_partitions(n, mode), std::nullopt};
  auto members = r_partitions(n, mode);
  std::int64_t signed_count = 0;
  for (const Partition& p : members) signed_count += p.size() % 2 == 0 ? 1 : -1;
  return {family, std::move(members), signed_count};
}

inline int cmd_partitions(std::uint32_t n, Mode mode, const std::string& family,
                          const std::string& format, std::ostream& out) {
  std::vector<FamilyListing> listings;
  if (family == "all") {
    for (const char* f : {"neighborly", "T", "E", "R"}) listings.push_back(list_family(f, n, mode));
  } else {
    listings.push_back(list_family(family, n, mode));
  }

  if (format == "json") {
    json doc{{"n", n}, {"mode", to_int(mode)}, {"families", json::array()}};
    for (const auto& l : listings) {
      json f{{"family", l.family}, {"count", l.members.size()}, {"partitions", json::array()}};
      for (const auto& p : l.members) f["partitions"].push_back(partition_json(p));
      if (l.signed_count) f["signed_count"] = *l.signed_count;
      doc["families"].push_back(std::move(f));
    }
    out << doc.dump(2) << '\n';
  } else if (format == "csv") {
    out << "family,index,partition\n";
    for (const auto& l : listings)
      for (std::size_t k = 0; k < l.members.size(); ++k)
        out << l.family << ',' << k + 1 << ',' << l.members[k].to_string() << '\n';
  } else {
    for (const auto& l : listings) {
      out << l.family << " n=" << n << " mode=" << to_int(mode) << " count=" << l.members.size();
      if (l.signed_count) out << " signed_count=" << *l.signed_count;
      out << '\n';
      for (const auto& p : l.members) out << "  " << p.to_string() << '\n';
    }
  }
  return exit_ok;
}

// ---------------------------------------------------------------------------
// signature

inline int cmd_signature(const std::string& partition_text, Mode mode, const std::string& format,
                         const Limits& limits, std::ostream& out, std::ostream& err) {
  const Partition lambda = parse_partition(partition_text);
  const LabeledGraph g = graph_of_partition(lambda);
  const bool neighborly = is_neighborly(lambda, mode);
  if (!neighborly) {
    err << "warning: " << lambda.to_string() << " is not neighborly for mode " << to_int(mode);
    if (has_isolated_vertex(g)) err << "; its graph has isolated vertices";
    err << '\n';
  }
  const SignedCount brute = signature_bruteforce(g, limits);
  const SignedCount fast = signature_fast(g, limits);
  const bool agree = brute == fast;

  if (format == "json") {
    json doc{{"partition", lambda.to_string()},
             {"parts", partition_json(lambda)},
             {"mode", to_int(mode)},
             {"neighborly", neighborly},
             {"vertices", json::array()},
             {"edges", json::array()},
             {"delta_bruteforce", brute},
             {"delta_fast", fast}};
    for (VertexLabel v : g.vertices()) doc["vertices"].push_back(v.to_string());
    for (const Edge& e : g.edges())
      doc["edges"].push_back({e.first.to_string(), e.second.to_string()});
    if (agree) doc["delta"] = brute;
    out << doc.dump(2) << '\n';
  } else {
    out << "partition: " << lambda.to_string() << '\n';
    out << "mode: " << to_int(mode) << '\n';
    out << "neighborly: " << (neighborly ? "yes" : "no") << '\n';
    out << "vertices:";
    for (VertexLabel v : g.vertices()) out << ' ' << v.to_string();
    out << "\nedges:";
    for (const Edge& e : g.edges()) out << ' ' << e.to_string();
    out << "\ndelta_bruteforce: " << brute << "\ndelta_fast: " << fast << '\n';
    if (agree) out << "delta: " << brute << '\n';
  }
  if (!agree) {
    err << "error: signature routes disagree (" << brute << " vs " << fast << ")\n";
    return exit_failure;
  }
  return exit_ok;
}

// ---------------------------------------------------------------------------
// series

inline SeriesQ named_series(const std::string& which, Mode mode, Order order, const Limits& limits) {
  if (which == "numerator") return numerator_product(mode, order);
  if (which == "signed-gf") return signed_neighborly_gf(mode, order, SignatureMethod::fast, limits);
  if (which == "rr-sum") return rr_sum_side(mode, order);
  if (which == "rr-product") return rr_product_side(mode, order);
  if (which == "hp-R") return hp_R(mode, order);
  if (which == "hilbert-P") {
    const auto max_index =
        std::max<std::uint32_t>(static_cast<std::uint32_t>(order.value()), min_part(mode));
    return hilbert_g_infinity_prefix(mode, max_index, order);
  }
  throw InvalidInput("unknown series '" + which + "'");
}

inline void render_series(const std::string& which, Mode mode, const SeriesQ& s,
                          const std::string& format, std::ostream& out) {
  if (format == "json") {
    json doc{{"which", which},
             {"mode", to_int(mode)},
             {"order", s.order().value()},
             {"coefficients", json(std::vector<Coeff>(s.coeffs().begin(), s.coeffs().end()))}};
    out << doc.dump() << '\n';
  } else if (format == "csv") {
    out << "order,coefficient\n";
    for (std::size_t k = 0; k < s.coeffs().size(); ++k) out << k << ',' << s[k] << '\n';
  } else {
    for (std::size_t k = 0; k < s.coeffs().size(); ++k) out << (k ? "," : "") << s[k];
    out << '\n';
  }
}

inline int cmd_series(const std::string& which, Mode mode, Order order, const std::string& format,
                      const Limits& limits, std::ostream& out) {
  render_series(which, mode, named_series(which, mode, order, limits), format, out);
  return exit_ok;
}

// ---------------------------------------------------------------------------
// verify

inline std::string describe(const VerificationReport& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS " : "FAIL ") << r.identity;
  if (r.mode) os << " mode=" << to_int(*r.mode);
  os << " orders " << r.from << ".." << r.upto;
  if (!r.passed) {
    os << ": " << r.failed_check;
    if (r.witness)
      os << " first differs at order " << r.witness->index << " (lhs=" << r.witness->lhs
         << ", rhs=" << r.witness->rhs << ")";
    if (!r.message.empty()) os << ": " << r.message;
  }
  os << " [" << std::fixed << std::setprecision(3) << r.seconds << " s]";
  return os.str();
}

inline json report_json(const VerificationReport& r) {
  json j{{"identity", r.identity},
         {"mode", r.mode ? json(to_int(*r.mode)) : json(nullptr)},
         {"from", r.from},
         {"upto", r.upto},
         {"passed", r.passed},
         {"seconds", r.seconds}};
  if (!r.passed) {
    j["failed_check"] = r.failed_check;
    if (r.witness)
      j["witness"] = {{"order", r.witness->index}, {"lhs", r.witness->lhs}, {"rhs", r.witness->rhs}};
    if (!r.message.empty()) j["message"] = r.message;
  }
  return j;
}

inline int cmd_verify(const std::string& target, const std::string& mode_text, Order order,
                      const std::string& format, const VerifyOptions& options, std::ostream& out) {
  std::vector<Target> targets;
  if (target == "all") {
    targets.assign(std::begin(all_targets), std::end(all_targets));
  } else if (auto t = target_from_name(target)) {
    targets.push_back(*t);
  } else {
    throw InvalidInput("unknown target '" + target + "'");
  }
  std::vector<Mode> modes;
  if (mode_text == "both") modes = {Mode::one, Mode::two};
  else modes = {mode_from_int(std::stoi(mode_text))};

  const auto reports = verify_targets(targets, modes, order, options);
  std::size_t failed = 0;
  for (const auto& r : reports) failed += r.passed ? 0 : 1;

  if (format == "json") {
    json doc{{"order", order.value()}, {"passed", failed == 0}, {"reports", json::array()}};
    for (const auto& r : reports) doc["reports"].push_back(report_json(r));
    out << doc.dump(2) << '\n';
  } else {
    for (const auto& r : reports) out << describe(r) << '\n';
    if (failed == 0) out << "all " << reports.size() << " checks passed\n";
    else out << failed << " of " << reports.size() << " checks failed\n";
  }
  return failed == 0 ? exit_ok : exit_failure;
}

// ---------------------------------------------------------------------------
// entry point

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Neighborly partitions, signatures and Rogers-Ramanujan truncations"};
  app.require_subcommand(1);

  std::string format = "text";
  int mode = 2;
  std::size_t order = 50;

  auto* partitions = app.add_subcommand("partitions", "list a partition family");
  std::uint32_t n = 0;
  std::string family = "all";
  partitions->add_option("--n", n, "the integer being partitioned")->required();
  partitions->add_option("--mode", mode, "identity index i")->check(CLI::IsMember({1, 2}));
  partitions->add_option("--family", family)->check(CLI::IsMember(kFamilies));
  partitions->add_option("--format", format)->check(CLI::IsMember(kFormats));

  auto* signature = app.add_subcommand("signature", "signature of a partition's graph");
  std::string partition_text;
  signature->add_option("--partition", partition_text, "comma-separated parts")->required();
  signature->add_option("--mode", mode)->check(CLI::IsMember({1, 2}));
  signature->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* series = app.add_subcommand("series", "print a truncated series");
  std::string which;
  series->add_option("--which", which)->required()->check(CLI::IsMember(kSeries));
  series->add_option("--mode", mode)->check(CLI::IsMember({1, 2}));
  series->add_option("--order", order);
  series->add_option("--format", format)->check(CLI::IsMember(kFormats));

  auto* verify = app.add_subcommand("verify", "check identities to a truncation order");
  std::string target = "all";
  std::string verify_mode = "both";
  std::optional<std::size_t> corrupt;
  const std::vector<std::string> targets = {"theorem",    "corollary",    "rr",          "lemma-enum",
                                            "lemma-hilb", "polarization", "proposition", "all"};
  verify->add_option("--target", target)->check(CLI::IsMember(targets));
  verify->add_option("--mode", verify_mode)->check(CLI::IsMember({"1", "2", "both"}));
  verify->add_option("--order", order);
  verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--corrupt", corrupt,
                     "testing aid: perturb the left side at this order")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    const Limits limits = Limits::from_env();
    if (*partitions) return cmd_partitions(n, mode_from_int(mode), family, format, out);
    if (*signature)
      return cmd_signature(partition_text, mode_from_int(mode), format, limits, out, err);
    if (*series) return cmd_series(which, mode_from_int(mode), Order(order), format, limits, out);
    VerifyOptions options;
    options.limits = limits;
    options.corrupt_order = corrupt;
    return cmd_verify(target, verify_mode, Order(order), format, options, out);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_failure;
  }
}

}  // namespace nrr::cli
