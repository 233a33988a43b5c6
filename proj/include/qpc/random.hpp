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
//
// Seeded random states and operators. All generators are deterministic given
// the engine state, which keeps sampled reports reproducible.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qpc/core.hpp"
#include "qpc/linalg.hpp"

namespace qpc {

using Rng = std::mt19937_64;

// Normalized complex Gaussian vector (Haar-distributed direction).
inline StateVector random_state(Eigen::Index dim, Rng& rng) {
  std::normal_distribution<double> gauss;
  StateVector psi(dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    psi(i) = Complex(gauss(rng), gauss(rng));
  const double norm = psi.norm();
  if (norm == 0.0) return basis_state(dim, 0);
  return psi / norm;
}

inline Operator random_hermitian(Eigen::Index dim, Rng& rng) {
  std::normal_distribution<double> gauss;
  Operator a(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j)
      a(i, j) = Complex(gauss(rng), gauss(rng));
  return Operator((a + a.adjoint()) / 2.0);
}

// Haar-ish unitary: QR of a complex Gaussian matrix with the R diagonal
// phases folded into Q.
inline Operator random_unitary(Eigen::Index dim, Rng& rng) {
  std::normal_distribution<double> gauss;
  Operator a(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j)
      a(i, j) = Complex(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<Operator> qr(a);
  Operator q = qr.householderQ();
  const Operator r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    q.col(j) *= (mag > 0) ? d / mag : Complex(1.0, 0.0);
  }
  return q;
}

inline std::vector<StateVector> sample_states(Eigen::Index dim, int count,
                                              std::uint64_t seed) {
  Rng rng(seed);
  std::vector<StateVector> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out.push_back(random_state(dim, rng));
  return out;
}

}  // namespace qpc
