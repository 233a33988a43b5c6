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

#include <complex>

#include "qpc/core.hpp"

namespace qpc_test {

inline double max_abs_diff(const qpc::Operator& a, const qpc::Operator& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

inline double max_abs_diff(const qpc::StateVector& a,
                           const qpc::StateVector& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

// Entrywise bit-for-bit equality, for contracts promising exactness.
inline bool exactly_equal(const qpc::Operator& a, const qpc::Operator& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    for (Eigen::Index c = 0; c < a.cols(); ++c)
      if (a(r, c) != b(r, c)) return false;
  return true;
}

inline bool exactly_equal(const qpc::StateVector& a, const qpc::StateVector& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return false;
  return true;
}

}  // namespace qpc_test
