// Copyright 2026 The qpc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <atomic>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qpc {

using Complex = std::complex<double>;

// Operators are stored row-major: the composite index of H_a (x) H_b is
// i*dim_b + j with the left factor most significant, so a controller whose
// control register indexes the left factor is literally block-diagonal in
// memory.
using Operator =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using StateVector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;

// Default tolerances.
inline constexpr double unitarity_tol = 1e-10;
inline constexpr double hermiticity_tol = 1e-12;
inline constexpr double norm_tol = 1e-10;
inline constexpr double schmidt_tol = 1e-8;

// Violated precondition (dimension mismatch, bad index, non-unitary input).
struct ContractError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Requested dimension exceeds the configured dense-capacity cap.
struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An inconsistency that the library's own invariants rule out.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

// Dense representations (tensor products, controllers, shift operators,
// whole-machine execution) refuse to allocate beyond this many basis states.
inline constexpr std::int64_t default_max_dim = std::int64_t{1} << 20;

namespace detail {
inline std::atomic<std::int64_t>& max_dim_storage() {
  static std::atomic<std::int64_t> value{default_max_dim};
  return value;
}
}  // namespace detail

inline std::int64_t max_dim() { return detail::max_dim_storage().load(); }

inline void set_max_dim(std::int64_t value) {
  if (value < 1) throw ContractError("set_max_dim: cap must be positive");
  detail::max_dim_storage().store(value);
}

inline void check_capacity(std::int64_t dim, const char* where) {
  if (dim > max_dim())
    throw CapacityError(std::string(where) + ": dimension " +
                        std::to_string(dim) + " exceeds cap " +
                        std::to_string(max_dim()) +
                        " (override with QPC_MAX_DIM / set_max_dim)");
}

}  // namespace qpc
