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
// Controller unitaries over a control (x) data space.
//
// A controller with instruction set {u_0 = 1, u_1, ..., u_{m-1}} on an
// n-dimensional data register is the block-diagonal mn x mn unitary
//
//     Ctrl = sum_k |k><k| (x) u_k ,
//
// i.e. control basis state |k> selects which u_k acts on the data. Because
// Ctrl is unitary it preserves scalar products, so for two control states
// |A>, |B> mapped to |A'> (x) u_A|psi>, |B'> (x) u_B|psi>:
//
//     <A|B> = <A'|B'> <psi| u_A† u_B |psi>   for every |psi>.
//
// When u_A and u_B differ beyond a global phase the right-hand side depends
// on |psi| while the left is fixed, forcing <A|B> = 0: control states that
// implement distinct gates must be orthogonal, and a superposed control
// state entangles itself with the data. orthogonality_residual and
// superposed_program_entanglement measure both effects numerically, and
// non_unitary_universal_map exhibits the (linear, non-unitary) map that a
// universal finite controller would need.

#pragma once

#include <cmath>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qpc/core.hpp"
#include "qpc/linalg.hpp"

namespace qpc {

namespace detail {
inline bool is_exact_identity(const Operator& a) {
  if (a.rows() != a.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != Complex(i == j ? 1.0 : 0.0, 0.0)) return false;
  return true;
}

// One-hot with a real unit amplitude; such control states admit exact
// factor extraction with no SVD noise.
inline Eigen::Index exact_basis_index(const StateVector& psi) {
  Eigen::Index hit = -1;
  for (Eigen::Index i = 0; i < psi.size(); ++i) {
    if (psi(i) == Complex(0.0, 0.0)) continue;
    if (hit >= 0 || psi(i) != Complex(1.0, 0.0)) return -1;
    hit = i;
  }
  return hit;
}
}  // namespace detail

// Ordered gate alphabet u_0 .. u_{m-1} on an n-dimensional data register.
// u_0 is the no-operation instruction and must be the exact identity.
struct InstructionSet {
  int m = 0;
  Eigen::Index n = 0;
  std::vector<Operator> gates;
};

inline void validate_instruction_set(const InstructionSet& iset) {
  if (iset.m < 1 || iset.n < 1 ||
      iset.gates.size() != static_cast<std::size_t>(iset.m))
    throw ContractError("instruction set: need m >= 1 gates of dim n >= 1");
  for (int k = 0; k < iset.m; ++k) {
    const Operator& g = iset.gates[static_cast<std::size_t>(k)];
    if (g.rows() != iset.n || g.cols() != iset.n)
      throw ContractError("instruction set: gate " + std::to_string(k) +
                          " is not " + std::to_string(iset.n) + "x" +
                          std::to_string(iset.n));
    if (!is_unitary(g))
      throw ContractError("instruction set: gate " + std::to_string(k) +
                          " is not unitary within " +
                          std::to_string(unitarity_tol));
  }
  if (!detail::is_exact_identity(iset.gates[0]))
    throw ContractError("instruction set: gate 0 must be the exact identity");
}

inline InstructionSet make_instruction_set(std::vector<Operator> gates) {
  InstructionSet iset;
  iset.m = static_cast<int>(gates.size());
  iset.n = gates.empty() ? 0 : gates.front().rows();
  iset.gates = std::move(gates);
  validate_instruction_set(iset);
  return iset;
}

struct ControllerUnitary {
  int m = 0;
  Eigen::Index n = 0;
  Operator matrix;
  bool block_diagonal = false;
};

// Block-placement construction: gate k occupies rows/cols [k*n, (k+1)*n).
inline ControllerUnitary build_controller(const InstructionSet& iset) {
  validate_instruction_set(iset);
  const Eigen::Index dim = static_cast<Eigen::Index>(iset.m) * iset.n;
  check_capacity(dim, "build_controller");
  Operator mat = Operator::Zero(dim, dim);
  for (int k = 0; k < iset.m; ++k)
    mat.block(k * iset.n, k * iset.n, iset.n, iset.n) =
        iset.gates[static_cast<std::size_t>(k)];
  return ControllerUnitary{iset.m, iset.n, std::move(mat), true};
}

// Dirac-sum construction sum_k |k><k| (x) u_k. Kept as an independent route:
// it must agree with build_controller entrywise, and tests hold both to that.
inline Operator build_controller_dirac(const InstructionSet& iset) {
  validate_instruction_set(iset);
  const Eigen::Index dim = static_cast<Eigen::Index>(iset.m) * iset.n;
  check_capacity(dim, "build_controller_dirac");
  Operator sum = Operator::Zero(dim, dim);
  for (int k = 0; k < iset.m; ++k) {
    Operator proj = Operator::Zero(iset.m, iset.m);
    proj(k, k) = Complex(1.0, 0.0);
    sum += tensor_op(proj, iset.gates[static_cast<std::size_t>(k)]);
  }
  return sum;
}

inline ControllerUnitary controlled_u(const Operator& u) {
  if (u.rows() != 2 || u.cols() != 2)
    throw ContractError("controlled_u: gate must be 2x2");
  if (!is_unitary(u)) throw ContractError("controlled_u: gate is not unitary");
  return build_controller(make_instruction_set({identity_op(2), u}));
}

// u_k |psi>, read off the k-th diagonal block. Applying the full matrix to
// |k> (x) |psi> gives exactly |k> (x) u_k|psi>; tests cross-check that.
inline StateVector apply_with_program_state(const ControllerUnitary& ctrl,
                                            int k, const StateVector& psi) {
  if (k < 0 || k >= ctrl.m)
    throw ContractError("apply_with_program_state: program index " +
                        std::to_string(k) + " out of range for m = " +
                        std::to_string(ctrl.m));
  if (psi.size() != ctrl.n)
    throw ContractError("apply_with_program_state: state dim " +
                        std::to_string(psi.size()) + " vs data dim " +
                        std::to_string(ctrl.n));
  return ctrl.matrix.block(k * ctrl.n, k * ctrl.n, ctrl.n, ctrl.n) * psi;
}

// Outcome of probing Ctrl with two program states over a sample of data
// states. `entangled` is a distinct outcome, not a residual: it means some
// sample left control and data non-factorable, which already violates the
// processor contract.
struct OrthogonalityReport {
  bool entangled = false;
  int entangled_samples = 0;
  // max over samples of |<A|B> - <A'|B'><u_A psi|u_B psi>|
  double residual = 0.0;
  // max over sample pairs of |g_i - g_j| with g = <u_A psi|u_B psi>
  double gram_spread = 0.0;
  Complex program_overlap{0.0, 0.0};
};

inline OrthogonalityReport orthogonality_residual(
    const ControllerUnitary& ctrl, const StateVector& prog_a,
    const StateVector& prog_b, std::span<const StateVector> samples) {
  if (prog_a.size() != ctrl.m || prog_b.size() != ctrl.m)
    throw ContractError("orthogonality_residual: program dim must equal m");
  if (samples.size() < 2)
    throw ContractError("orthogonality_residual: need at least 2 samples");

  OrthogonalityReport report;
  report.program_overlap = prog_a.dot(prog_b);

  const auto factor = [&](const StateVector& prog,
                          const StateVector& psi) -> ProductFactors {
    const Eigen::Index basis = detail::exact_basis_index(prog);
    if (basis >= 0) {
      // Basis program: output is literally |k> (x) u_k psi, so take the
      // k-th row of the reshaped output without SVD rounding.
      ProductFactors f;
      f.is_product = true;
      f.control = basis_state(ctrl.m, basis);
      const StateVector out =
          ctrl.matrix * tensor_state(prog, psi);
      f.data = out.segment(basis * ctrl.n, ctrl.n);
      return f;
    }
    const StateVector out = ctrl.matrix * tensor_state(prog, psi);
    return product_factors(out, ctrl.m, ctrl.n);
  };

  std::vector<Complex> gram;
  gram.reserve(samples.size());
  for (const StateVector& psi : samples) {
    if (psi.size() != ctrl.n)
      throw ContractError("orthogonality_residual: sample dim mismatch");
    const ProductFactors fa = factor(prog_a, psi);
    const ProductFactors fb = factor(prog_b, psi);
    if (!fa.is_product || !fb.is_product) {
      report.entangled = true;
      ++report.entangled_samples;
      continue;
    }
    const Complex out_overlap = fa.control.dot(fb.control);
    const Complex data_overlap = fa.data.dot(fb.data);
    gram.push_back(data_overlap);
    report.residual =
        std::max(report.residual,
                 std::abs(report.program_overlap - out_overlap * data_overlap));
  }
  for (std::size_t i = 0; i < gram.size(); ++i)
    for (std::size_t j = i + 1; j < gram.size(); ++j)
      report.gram_spread =
          std::max(report.gram_spread, std::abs(gram[i] - gram[j]));
  return report;
}

// Schmidt rank of Ctrl((sum_k w_k |k>) (x) psi) across the control/data cut.
// Rank 1 iff every selected u_k acts on psi identically up to one phase.
inline int superposed_program_entanglement(const ControllerUnitary& ctrl,
                                           std::span<const Complex> weights,
                                           const StateVector& psi) {
  if (weights.size() != static_cast<std::size_t>(ctrl.m))
    throw ContractError(
        "superposed_program_entanglement: weight count must equal m");
  if (psi.size() != ctrl.n)
    throw ContractError("superposed_program_entanglement: state dim mismatch");
  StateVector prog(ctrl.m);
  for (int k = 0; k < ctrl.m; ++k)
    prog(k) = weights[static_cast<std::size_t>(k)];
  if (std::abs(prog.norm() - 1.0) > norm_tol)
    throw ContractError(
        "superposed_program_entanglement: weights must be normalized");
  const StateVector out = ctrl.matrix * tensor_state(prog, psi);
  return schmidt_rank(out, ctrl.m, ctrl.n);
}

// The linear map (A (x) v) |-> (1 (x) A v) on (H (x) H*) (x) H, written in
// the basis e_ij (x) e_k |-> delta_jk sum_l e_ll (x) e_i with e_ij at index
// i*n + j. A finite controller of this shape would be universal, but the map
// is badly non-unitary: its image is spanned by the n vectors vec(1) (x) e_i,
// so it has rank n and singular values n (with multiplicity n) and 0.
inline Operator non_unitary_universal_map(Eigen::Index n) {
  if (n < 1) throw ContractError("non_unitary_universal_map: n must be >= 1");
  const std::int64_t dim64 = static_cast<std::int64_t>(n) * n * n;
  check_capacity(dim64, "non_unitary_universal_map");
  const Eigen::Index dim = static_cast<Eigen::Index>(dim64);
  Operator map = Operator::Zero(dim, dim);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      const Eigen::Index col = (i * n + j) * n + j;
      for (Eigen::Index l = 0; l < n; ++l)
        map((l * n + l) * n + i, col) += Complex(1.0, 0.0);
    }
  return map;
}

}  // namespace qpc
