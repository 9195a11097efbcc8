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

#pragma once

#include <cstddef>
#include <cstdlib>
#include <string>

#include "nrr/errors.hpp"

namespace nrr {

/// Bounds on the exponential enumerations.
struct Limits {
  /// Edge subsets enumerated by the brute-force signature: 2^max_edges.
  std::size_t max_edges = 24;
  /// Vertices for the general independent-set recursions.
  std::size_t max_vertices = 25;
  /// Vertices for the forest dynamic programme.
  std::size_t max_forest_vertices = 40;
  /// Generators for the inclusion-exclusion Hilbert series.
  std::size_t max_generators = 20;

  /// Defaults overridden by NRR_MAX_EDGES and NRR_MAX_VERTICES.
  static Limits from_env() {
    Limits limits;
    if (const char* s = std::getenv("NRR_MAX_EDGES")) limits.max_edges = parse(s, "NRR_MAX_EDGES");
    if (const char* s = std::getenv("NRR_MAX_VERTICES"))
      limits.max_vertices = parse(s, "NRR_MAX_VERTICES");
    return limits;
  }

 private:
  static std::size_t parse(const std::string& text, const char* name) {
    std::size_t pos = 0;
    unsigned long value = 0;
    try {
      value = std::stoul(text, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != text.size() || value > 62)
      throw InvalidInput(std::string(name) + " must be an integer in 0..62");
    return value;
  }
};

}  // namespace nrr
