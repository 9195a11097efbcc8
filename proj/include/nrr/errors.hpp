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

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nrr {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad partition, mode out of range, vertex not in graph...
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Two series with different truncation orders were combined.
class OrderMismatch : public Error {
 public:
  OrderMismatch(std::size_t lhs, std::size_t rhs)
      : Error("series order mismatch: " + std::to_string(lhs) + " vs " +
              std::to_string(rhs)) {}
};

/// An exact coefficient left the range of the 64-bit representation.
class CoefficientOverflow : public Error {
 public:
  CoefficientOverflow() : Error("coefficient overflow") {}
};

/// An exponential enumeration was asked to run past its configured bound.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw CoefficientOverflow();
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw CoefficientOverflow();
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw CoefficientOverflow();
  return r;
}

}  // namespace detail
}  // namespace nrr
