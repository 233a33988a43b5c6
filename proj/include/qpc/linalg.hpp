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
// Dense complex linear algebra kernel: Kronecker products, Hermitian
// exponentials, unitarity checks, Schmidt decomposition and the
// phase-invariant operator distance. Everything here is a pure function of
// immutable values and safe to call concurrently.

#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include "qpc/core.hpp"

namespace qpc {

inline Operator identity_op(Eigen::Index dim) {
  if (dim < 1) throw ContractError("identity_op: dim must be positive");
  return Operator::Identity(dim, dim);
}

inline StateVector basis_state(Eigen::Index dim, Eigen::Index index) {
  if (dim < 1) throw ContractError("basis_state: dim must be positive");
  if (index < 0 || index >= dim)
    throw ContractError("basis_state: index " + std::to_string(index) +
                        " out of range for dim " + std::to_string(dim));
  StateVector psi = StateVector::Zero(dim);
  psi(index) = Complex(1.0, 0.0);
  return psi;
}

// Kronecker product; (a (x) b)[(i*nb+k),(j*nb+l)] = a(i,j) * b(k,l).
inline Operator tensor_op(const Operator& a, const Operator& b) {
  const Eigen::Index na = a.rows(), nb = b.rows();
  check_capacity(static_cast<std::int64_t>(na) * nb, "tensor_op");
  Operator out(na * nb, na * nb);
  for (Eigen::Index i = 0; i < na; ++i)
    for (Eigen::Index j = 0; j < na; ++j)
      out.block(i * nb, j * nb, nb, nb) = a(i, j) * b;
  return out;
}

inline StateVector tensor_state(const StateVector& a, const StateVector& b) {
  const Eigen::Index na = a.size(), nb = b.size();
  check_capacity(static_cast<std::int64_t>(na) * nb, "tensor_state");
  StateVector out(na * nb);
  for (Eigen::Index i = 0; i < na; ++i) out.segment(i * nb, nb) = a(i) * b;
  return out;
}

inline StateVector apply(const Operator& a, const StateVector& psi) {
  if (a.cols() != psi.size())
    throw ContractError("apply: operator dim " + std::to_string(a.cols()) +
                        " vs state dim " + std::to_string(psi.size()));
  return a * psi;
}

inline bool is_unitary(const Operator& a, double tol = unitarity_tol) {
  if (tol <= 0) throw ContractError("is_unitary: tol must be positive");
  return (a.adjoint() * a - Operator::Identity(a.rows(), a.cols())).norm() <=
         tol;
}

inline bool is_hermitian(const Operator& a, double tol = hermiticity_tol) {
  return (a - a.adjoint()).norm() <= tol;
}

// exp(i*H*theta) for Hermitian H, via eigendecomposition H = V diag(w) V†:
// the result V diag(e^{i w theta}) V† is unitary up to eigensolver rounding,
// which a truncated power series would not be.
inline Operator hermitian_exp(const Operator& h, double theta) {
  if (!is_hermitian(h))
    throw ContractError("hermitian_exp: input is not Hermitian within " +
                        std::to_string(hermiticity_tol));
  Eigen::SelfAdjointEigenSolver<Operator> es(h);
  if (es.info() != Eigen::Success)
    throw InternalError("hermitian_exp: eigendecomposition failed");
  const Eigen::Index n = h.rows();
  StateVector phases(n);
  for (Eigen::Index i = 0; i < n; ++i)
    phases(i) = std::exp(Complex(0.0, es.eigenvalues()(i) * theta));
  return es.eigenvectors() * phases.asDiagonal() *
         es.eigenvectors().adjoint();
}

namespace detail {
inline Eigen::JacobiSVD<Operator> bipartite_svd(const StateVector& psi,
                                                Eigen::Index dim_a,
                                                Eigen::Index dim_b,
                                                unsigned options = 0) {
  if (dim_a < 1 || dim_b < 1 || dim_a * dim_b != psi.size())
    throw ContractError("schmidt: cut " + std::to_string(dim_a) + "x" +
                        std::to_string(dim_b) + " does not match state dim " +
                        std::to_string(psi.size()));
  // Row-major reshape: amplitude(i*dim_b + k) becomes entry (i, k).
  Eigen::Map<const Operator> m(psi.data(), dim_a, dim_b);
  return Eigen::JacobiSVD<Operator>(m, options);
}
}  // namespace detail

// Number of singular values of the dim_a x dim_b amplitude matrix above tol;
// 1 means the state factorizes across the cut.
inline int schmidt_rank(const StateVector& psi, Eigen::Index dim_a,
                        Eigen::Index dim_b, double tol = schmidt_tol) {
  const auto svd = detail::bipartite_svd(psi, dim_a, dim_b);
  const auto& sv = svd.singularValues();
  return static_cast<int>(
      std::count_if(sv.data(), sv.data() + sv.size(),
                    [tol](double s) { return s > tol; }));
}

// Rank-1 factorization psi = control (x) data across the (dim_a, dim_b) cut.
// The split-phase gauge is fixed by making the largest-magnitude entry of
// `control` real positive, so repeated factorizations are comparable.
struct ProductFactors {
  bool is_product = false;
  StateVector control;
  StateVector data;
};

inline ProductFactors product_factors(const StateVector& psi,
                                      Eigen::Index dim_a, Eigen::Index dim_b,
                                      double tol = schmidt_tol) {
  const auto svd = detail::bipartite_svd(psi, dim_a, dim_b,
                                         Eigen::ComputeThinU |
                                             Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  ProductFactors out;
  for (Eigen::Index i = 1; i < sv.size(); ++i)
    if (sv(i) > tol) return out;
  out.is_product = true;
  StateVector control = svd.matrixU().col(0);
  // M = s * u * v†, and amplitude(i*nb+k) = control(i)*data(k), so
  // data = s * conj(v).
  StateVector data = sv(0) * svd.matrixV().col(0).conjugate();
  Eigen::Index imax = 0;
  control.cwiseAbs().maxCoeff(&imax);
  const Complex pivot = control(imax);
  if (std::abs(pivot) > 0) {
    const Complex phase = pivot / std::abs(pivot);
    control *= std::conj(phase);
    data *= phase;
  }
  out.control = std::move(control);
  out.data = std::move(data);
  return out;
}

// min over real phi of ||A - e^{i phi} B||_F
//   = sqrt(||A||_F^2 + ||B||_F^2 - 2 |tr(A† B)|),
// i.e. sqrt(2d - 2|tr(A† B)|) for d x d unitaries. Global phase is
// physically irrelevant, so this is the synthesis metric throughout.
inline double phase_distance(const Operator& a, const Operator& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ContractError("phase_distance: dimension mismatch " +
                        std::to_string(a.rows()) + " vs " +
                        std::to_string(b.rows()));
  const double val = a.squaredNorm() + b.squaredNorm() -
                     2.0 * std::abs((a.adjoint() * b).trace());
  return std::sqrt(std::max(val, 0.0));
}

}  // namespace qpc
