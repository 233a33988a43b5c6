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
// Universality machinery: near-identity instruction sets exp(i H_k eps),
// the dynamical-Lie-algebra closure test, the group-commutator gadget, and
// exhaustive gate-sequence synthesis.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qpc/controller.hpp"
#include "qpc/core.hpp"
#include "qpc/gates.hpp"
#include "qpc/linalg.hpp"
#include "qpc/program_bus.hpp"

namespace qpc {

inline constexpr double lie_closure_tol = 1e-9;

struct HamiltonianSet {
  Eigen::Index n = 0;
  std::vector<Operator> hams;
};

inline void validate_hamiltonian_set(const HamiltonianSet& hs) {
  if (hs.n < 1) throw ContractError("hamiltonian set: n must be >= 1");
  for (std::size_t k = 0; k < hs.hams.size(); ++k) {
    const Operator& h = hs.hams[k];
    if (h.rows() != hs.n || h.cols() != hs.n)
      throw ContractError("hamiltonian set: member " + std::to_string(k) +
                          " is not " + std::to_string(hs.n) + "x" +
                          std::to_string(hs.n));
    if (!is_hermitian(h))
      throw ContractError("hamiltonian set: member " + std::to_string(k) +
                          " is not Hermitian within " +
                          std::to_string(hermiticity_tol));
  }
}

// {1, exp(i H_1 eps), ..., exp(i H_K eps)}: the identity is prepended as the
// no-operation instruction, so m = |hams| + 1.
inline InstructionSet epsilon_instruction_set(const HamiltonianSet& hs,
                                              double eps) {
  validate_hamiltonian_set(hs);
  std::vector<Operator> gates;
  gates.reserve(hs.hams.size() + 1);
  gates.push_back(identity_op(hs.n));
  for (const Operator& h : hs.hams) gates.push_back(hermitian_exp(h, eps));
  return make_instruction_set(std::move(gates));
}

// Lie-closure verdict. `basis` is orthonormal under the real Frobenius inner
// product Re tr(A† B), and universal means the generated algebra is u(n)
// (dim n^2) or su(n) (dim n^2 - 1 with the identity absent from the span);
// a missing global-phase generator does not spoil controllability.
struct LieClosureReport {
  int generated_dim = 0;
  bool universal = false;
  std::vector<Operator> basis;
  int iterations = 0;
};

// Raised when the commutator sweep has not stabilized within max_iter
// sweeps; carries the dimension reached so far.
struct NonterminationError : std::runtime_error {
  int partial_dim;

  NonterminationError(const std::string& msg, int dim)
      : std::runtime_error(msg), partial_dim(dim) {}
};

namespace detail {
inline double frob_inner(const Operator& a, const Operator& b) {
  return (a.adjoint() * b).trace().real();
}

// Gram-Schmidt step against `basis`; appends the normalized residual when it
// survives the discard threshold.
inline bool absorb_candidate(std::vector<Operator>& basis, Operator cand,
                             double tol) {
  const double scale = cand.norm();
  if (scale <= tol) return false;
  cand /= scale;
  for (const Operator& b : basis) cand -= frob_inner(b, cand) * b;
  // Re-orthogonalize once; single-pass Gram-Schmidt loses orthogonality for
  // nearly dependent candidates.
  for (const Operator& b : basis) cand -= frob_inner(b, cand) * b;
  const double residual = cand.norm();
  if (residual <= tol) return false;
  basis.push_back(Operator(cand / residual));
  return true;
}
}  // namespace detail

// Span of {H_k} and all nested commutators i[.,.], computed by sweeping:
// Hermitian n x n matrices form a real n^2-dimensional inner-product space,
// and each sweep orthonormalizes i[B_a, B_b] over current basis pairs until
// the dimension stabilizes.
inline LieClosureReport lie_closure(const HamiltonianSet& hs,
                                    double tol = lie_closure_tol,
                                    int max_iter = 64) {
  validate_hamiltonian_set(hs);
  if (tol <= 0) throw ContractError("lie_closure: tol must be positive");
  const int full_dim = static_cast<int>(hs.n * hs.n);

  LieClosureReport report;
  for (const Operator& h : hs.hams)
    detail::absorb_candidate(report.basis, h, tol);

  std::size_t fresh_from = 0;  // pairs touching indices >= fresh_from are new
  while (static_cast<int>(report.basis.size()) < full_dim) {
    const std::size_t before = report.basis.size();
    if (report.iterations >= max_iter)
      throw NonterminationError(
          "lie_closure: no stabilization within " + std::to_string(max_iter) +
              " sweeps (dim so far " + std::to_string(before) + ")",
          static_cast<int>(before));
    ++report.iterations;
    for (std::size_t a = 0; a < before; ++a) {
      for (std::size_t b = std::max(a + 1, fresh_from); b < before; ++b) {
        const Operator comm = report.basis[a] * report.basis[b] -
                              report.basis[b] * report.basis[a];
        detail::absorb_candidate(report.basis, Operator(Complex(0, 1) * comm),
                                 tol);
      }
    }
    if (report.basis.size() == before) break;
    fresh_from = before;
  }

  report.generated_dim = static_cast<int>(report.basis.size());
  if (report.generated_dim == full_dim) {
    report.universal = true;
  } else if (report.generated_dim == full_dim - 1) {
    Operator residual = identity_op(hs.n);
    residual /= residual.norm();
    for (const Operator& b : report.basis)
      residual -= detail::frob_inner(b, residual) * b;
    report.universal = residual.norm() > 1e-6;
  }
  return report;
}

// u_A u_B u_A† u_B†. For u = exp(i H eps) this realizes the effective
// Hamiltonian i[H_A, H_B] at order eps^2 with error O(eps^3), which is how a
// fixed instruction set reaches the rest of its Lie algebra.
inline Operator group_commutator(const Operator& ua, const Operator& ub) {
  if (ua.rows() != ub.rows() || ua.cols() != ub.cols())
    throw ContractError("group_commutator: dimension mismatch");
  if (!is_unitary(ua) || !is_unitary(ub))
    throw ContractError("group_commutator: inputs must be unitary");
  return ua * ub * ua.adjoint() * ub.adjoint();
}

struct SynthesisResult {
  bool found = false;
  Program program;
  double distance = 0.0;
  std::int64_t expanded_nodes = 0;
};

// Iterative-deepening exhaustive search for a program realizing `target`
// within phase_distance tol. Sequences are enumerated over the non-identity
// indices 1..m-1 in lexicographic order, one exact length per round, so the
// first hit is the shortest program and lexicographically smallest among
// ties; padding with index 0 never helps and is skipped (the identity
// product is represented by the canonical program "0"). Not-found is a
// normal outcome carrying the best distance seen. `expanded_nodes` counts
// every partial sequence visited across rounds; the walk stops early when
// the budget is exhausted.
inline SynthesisResult synthesize(const Operator& target,
                                  const InstructionSet& iset, int max_len,
                                  double tol,
                                  std::int64_t node_budget = 10'000'000) {
  validate_instruction_set(iset);
  if (target.rows() != iset.n || target.cols() != iset.n)
    throw ContractError("synthesize: target dim " +
                        std::to_string(target.rows()) + " vs data dim " +
                        std::to_string(iset.n));
  if (!is_unitary(target))
    throw ContractError("synthesize: target must be unitary");
  if (max_len < 1) throw ContractError("synthesize: max_len must be >= 1");
  if (tol <= 0) throw ContractError("synthesize: tol must be positive");

  SynthesisResult result;
  result.program = Program{iset.m, {0}};
  result.distance = phase_distance(identity_op(iset.n), target);
  result.expanded_nodes = 1;  // the empty product
  if (result.distance <= tol) {
    result.found = true;
    return result;
  }

  std::vector<int> seq;
  std::vector<Operator> prefix{identity_op(iset.n)};  // prefix[d] = product of seq[0..d)
  bool budget_hit = false;

  for (int len = 1; len <= max_len && !budget_hit; ++len) {
    if (iset.m < 2) break;
    seq.assign(static_cast<std::size_t>(len), 1);
    // Depth-first walk over {1..m-1}^len with incremental prefix products.
    int depth = 0;
    while (depth >= 0) {
      if (depth < len) {
        if (result.expanded_nodes >= node_budget) {
          budget_hit = true;
          break;
        }
        ++result.expanded_nodes;
        const int k = seq[static_cast<std::size_t>(depth)];
        prefix.resize(static_cast<std::size_t>(depth) + 2);
        prefix[static_cast<std::size_t>(depth) + 1] =
            iset.gates[static_cast<std::size_t>(k)] *
            prefix[static_cast<std::size_t>(depth)];
        ++depth;
        continue;
      }
      // Leaf: score the full-length product.
      const double dist = phase_distance(prefix[static_cast<std::size_t>(len)],
                                         target);
      if (dist < result.distance) {
        result.distance = dist;
        result.program = Program{iset.m, seq};
      }
      if (dist <= tol) {
        result.found = true;
        result.program = Program{iset.m, seq};
        result.distance = dist;
        return result;
      }
      // Advance to the next sequence: increment the deepest digit that can
      // still grow, resetting everything after it.
      --depth;
      while (depth >= 0 && seq[static_cast<std::size_t>(depth)] == iset.m - 1)
        --depth;
      if (depth < 0) break;
      ++seq[static_cast<std::size_t>(depth)];
      for (int d = depth + 1; d < len; ++d)
        seq[static_cast<std::size_t>(d)] = 1;
    }
  }
  return result;
}

// Principal logarithm of a unitary: the Hermitian H with u = exp(iH) and
// eigenphases in (-pi, pi]. When the -1 eigenspace has dimension >= 2 the
// branch cut makes H ambiguous there, so `ok` is false and the gate should
// be skipped by callers extracting effective Hamiltonians.
struct PrincipalLog {
  bool ok = false;
  Operator hamiltonian;
};

inline PrincipalLog principal_hamiltonian(const Operator& u,
                                          double branch_tol = 1e-9) {
  if (u.rows() != u.cols() || u.rows() < 1)
    throw ContractError("principal_hamiltonian: matrix must be square");
  if (!is_unitary(u))
    throw ContractError("principal_hamiltonian: input must be unitary");
  // A unitary is normal, so its Schur form is diagonal and the Schur basis
  // is orthonormal; this avoids the non-orthogonal eigenvectors a generic
  // eigensolver can return.
  Eigen::ComplexSchur<Operator> schur(u);
  if (schur.info() != Eigen::Success)
    throw InternalError("principal_hamiltonian: Schur decomposition failed");
  const Eigen::Index dim = u.rows();
  Eigen::VectorXd phases(dim);
  int at_minus_one = 0;
  for (Eigen::Index k = 0; k < dim; ++k) {
    phases(k) = std::arg(schur.matrixT()(k, k));
    if (std::numbers::pi - std::abs(phases(k)) < branch_tol) ++at_minus_one;
  }
  PrincipalLog out;
  if (at_minus_one >= 2) return out;
  out.ok = true;
  const Operator& q = schur.matrixU();
  out.hamiltonian =
      q * phases.asDiagonal().toDenseMatrix().cast<Complex>() * q.adjoint();
  out.hamiltonian = Operator((out.hamiltonian + out.hamiltonian.adjoint()) / 2.0);
  return out;
}

// exp(i sigma_axis phi): the continuously parametrized Pauli instructions.
inline Operator parametric_instruction(int axis, double phi) {
  if (axis < 1 || axis > 3)
    throw ContractError("parametric_instruction: axis must be 1, 2 or 3");
  return Operator(std::cos(phi) * identity_op(2) +
                  Complex(0, 1) * std::sin(phi) * pauli(axis));
}

}  // namespace qpc
