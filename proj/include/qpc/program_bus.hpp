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
// The three-bus machine: program bus (x) controller slot (x) data register.
//
// A program (k_1, ..., k_p) over alphabet size m is stored as the cyclic-ROM
// basis state |k_p, ..., k_2; k_1> of the m^p-dimensional program (x)
// controller space. Digits are packed mixed-radix with k_1 least significant,
// so k_1 occupies the controller slot and the composite index over
// H_p (x) H_c equals the ROM index directly. One machine step applies the
// controller (selected by the slot digit) and then rotates the digit tuple
//
//     |k_p, ..., k_2; k_1>  |->  |k_1, k_p, ..., k_3; k_2>,
//
// feeding k_2 into the slot and recycling k_1. After p steps the ROM is
// restored and the data register has seen u_{k_p} ... u_{k_1}.

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qpc/controller.hpp"
#include "qpc/core.hpp"
#include "qpc/linalg.hpp"

namespace qpc {

// Index sequence k_1 .. k_p, each in [0, m). p >= 1.
struct Program {
  int m = 0;
  std::vector<int> steps;

  int p() const { return static_cast<int>(steps.size()); }
};

inline void validate_program(const Program& prog) {
  if (prog.m < 1) throw ContractError("program: alphabet size must be >= 1");
  if (prog.steps.empty()) throw ContractError("program: length must be >= 1");
  for (std::size_t i = 0; i < prog.steps.size(); ++i)
    if (prog.steps[i] < 0 || prog.steps[i] >= prog.m)
      throw ContractError("program: step " + std::to_string(i) + " index " +
                          std::to_string(prog.steps[i]) +
                          " out of range for m = " + std::to_string(prog.m));
}

// Basis index of |K> in the m^p-dimensional ROM space.
struct RomState {
  int m = 0;
  int p = 0;
  std::int64_t index = 0;
};

namespace detail {
// m^p, guarded against 64-bit overflow.
inline std::int64_t checked_pow(int m, int p, const char* where) {
  std::int64_t out = 1;
  for (int i = 0; i < p; ++i) {
    if (out > (std::int64_t{1} << 62) / m)
      throw CapacityError(std::string(where) + ": m^p overflows");
    out *= m;
  }
  return out;
}
}  // namespace detail

// index = sum_j k_j * m^(j-1): k_1 least significant (controller slot),
// k_p most significant (top of the program bus).
inline RomState encode_rom(const Program& prog) {
  validate_program(prog);
  detail::checked_pow(prog.m, prog.p(), "encode_rom");
  std::int64_t index = 0;
  std::int64_t weight = 1;
  for (int j = 0; j < prog.p(); ++j) {
    index += prog.steps[static_cast<std::size_t>(j)] * weight;
    weight *= prog.m;
  }
  return RomState{prog.m, prog.p(), index};
}

inline Program decode_rom(const RomState& rom) {
  if (rom.m < 1 || rom.p < 1)
    throw ContractError("decode_rom: need m >= 1 and p >= 1");
  const std::int64_t span = detail::checked_pow(rom.m, rom.p, "decode_rom");
  if (rom.index < 0 || rom.index >= span)
    throw ContractError("decode_rom: index " + std::to_string(rom.index) +
                        " out of range for m^p = " + std::to_string(span));
  Program prog{rom.m, std::vector<int>(static_cast<std::size_t>(rom.p))};
  std::int64_t rest = rom.index;
  for (int j = 0; j < rom.p; ++j) {
    prog.steps[static_cast<std::size_t>(j)] = static_cast<int>(rest % rom.m);
    rest /= rom.m;
  }
  return prog;
}

// Digit rotation underlying the shift: k'_j = k_{j+1}, k'_p = k_1.
inline std::int64_t shift_index(std::int64_t index, int m, int p) {
  const std::int64_t msd_weight = detail::checked_pow(m, p - 1, "shift_index");
  return index / m + (index % m) * msd_weight;
}

// Cyclic-shift permutation on the m^p ROM space; a 0/1 matrix with
// Shft^p = identity exactly.
inline Operator build_shift(int m, int p) {
  if (m < 1 || p < 1) throw ContractError("build_shift: need m, p >= 1");
  const std::int64_t dim64 = detail::checked_pow(m, p, "build_shift");
  check_capacity(dim64, "build_shift");
  const Eigen::Index dim = static_cast<Eigen::Index>(dim64);
  Operator shift = Operator::Zero(dim, dim);
  for (Eigen::Index k = 0; k < dim; ++k)
    shift(static_cast<Eigen::Index>(shift_index(k, m, p)), k) =
        Complex(1.0, 0.0);
  return shift;
}

struct BusConfig {
  int m = 0;
  Eigen::Index n = 0;
  int p = 0;
};

inline void validate_bus_config(const BusConfig& cfg, const char* where) {
  if (cfg.m < 1 || cfg.n < 1 || cfg.p < 1)
    throw ContractError(std::string(where) + ": need m, n, p >= 1");
  const std::int64_t rom = detail::checked_pow(cfg.m, cfg.p, where);
  if (rom > (std::int64_t{1} << 62) / cfg.n)
    throw CapacityError(std::string(where) + ": m^p * n overflows");
  check_capacity(rom * cfg.n, where);
}

struct DenseExecution {
  RomState rom;
  StateVector data;
};

// Whole-machine simulation of p steps of (Shft Ctrl) on |K> (x) |psi>.
// The step operator (Shft (x) 1_d)(1_p (x) Ctrl) is built once on the
// m^p * n - dimensional space and applied p times. For basis ROM states the
// machine never entangles the (program (x) controller) half with the data,
// so each intermediate state must stay a product across that cut; a failure
// there is an internal invariant violation, not a caller error.
inline DenseExecution execute_dense(const InstructionSet& iset,
                                    const Program& prog,
                                    const StateVector& psi) {
  validate_instruction_set(iset);
  validate_program(prog);
  if (prog.m != iset.m)
    throw ContractError("execute_dense: program alphabet " +
                        std::to_string(prog.m) + " vs instruction set m = " +
                        std::to_string(iset.m));
  if (psi.size() != iset.n)
    throw ContractError("execute_dense: state dim mismatch");
  const int p = prog.p();
  validate_bus_config(BusConfig{iset.m, iset.n, p}, "execute_dense");

  const std::int64_t rom_dim64 = detail::checked_pow(iset.m, p, "execute_dense");
  const Eigen::Index rom_dim = static_cast<Eigen::Index>(rom_dim64);
  const Eigen::Index bus_dim = rom_dim / iset.m;  // m^(p-1)

  const ControllerUnitary ctrl = build_controller(iset);
  const Operator step =
      tensor_op(build_shift(iset.m, p), identity_op(iset.n)) *
      tensor_op(identity_op(bus_dim), ctrl.matrix);

  const RomState rom_in = encode_rom(prog);
  StateVector state =
      tensor_state(basis_state(rom_dim, static_cast<Eigen::Index>(rom_in.index)),
                   psi);
  for (int t = 0; t < p; ++t) {
    state = step * state;
    if (schmidt_rank(state, rom_dim, iset.n) != 1)
      throw InternalError(
          "execute_dense: non-product intermediate state at step " +
          std::to_string(t + 1));
  }

  // Basis ROM + product state: exactly one row of the reshape is populated.
  Eigen::Map<const Operator> reshaped(state.data(), rom_dim, iset.n);
  Eigen::Index rom_out = 0;
  reshaped.rowwise().norm().maxCoeff(&rom_out);
  return DenseExecution{RomState{iset.m, p, rom_out},
                        StateVector(reshaped.row(rom_out).transpose())};
}

// u_{k_p} ... u_{k_1} |psi> by direct gate multiplication, k_1 first.
// O(p n^2), independent of m^p.
inline StateVector execute_fast(const InstructionSet& iset,
                                const Program& prog, const StateVector& psi) {
  validate_instruction_set(iset);
  validate_program(prog);
  if (prog.m != iset.m)
    throw ContractError("execute_fast: program alphabet " +
                        std::to_string(prog.m) + " vs instruction set m = " +
                        std::to_string(iset.m));
  if (psi.size() != iset.n)
    throw ContractError("execute_fast: state dim mismatch");
  StateVector state = psi;
  for (int k : prog.steps)
    state = iset.gates[static_cast<std::size_t>(k)] * state;
  return state;
}

// Run-length pair (count, index).
struct RunPair {
  int count = 0;
  int index = 0;

  bool operator==(const RunPair&) const = default;
};

inline std::vector<RunPair> pack_run_length(const Program& prog) {
  validate_program(prog);
  std::vector<RunPair> pairs;
  for (int k : prog.steps) {
    if (!pairs.empty() && pairs.back().index == k)
      ++pairs.back().count;
    else
      pairs.push_back(RunPair{1, k});
  }
  return pairs;
}

inline Program unpack_run_length(std::span<const RunPair> pairs, int m) {
  if (m < 1) throw ContractError("unpack_run_length: alphabet must be >= 1");
  Program prog{m, {}};
  for (const RunPair& pair : pairs) {
    if (pair.count < 1)
      throw ContractError("unpack_run_length: count must be >= 1");
    if (pair.index < 0 || pair.index >= m)
      throw ContractError("unpack_run_length: index " +
                          std::to_string(pair.index) +
                          " out of range for m = " + std::to_string(m));
    prog.steps.insert(prog.steps.end(), static_cast<std::size_t>(pair.count),
                      pair.index);
  }
  validate_program(prog);
  return prog;
}

}  // namespace qpc
