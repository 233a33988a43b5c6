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

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "qpc/gates.hpp"
#include "qpc/linalg.hpp"
#include "qpc/program_bus.hpp"
#include "qpc/random.hpp"
#include "util.hpp"

namespace {

using qpc::Operator;
using qpc::Program;
using qpc::StateVector;
using qpc_test::exactly_equal;
using qpc_test::max_abs_diff;

qpc::InstructionSet random_iset(int m, Eigen::Index n, qpc::Rng& rng) {
  std::vector<Operator> gates;
  gates.push_back(qpc::identity_op(n));
  for (int k = 1; k < m; ++k) gates.push_back(qpc::random_unitary(n, rng));
  return qpc::make_instruction_set(std::move(gates));
}

Program random_program(int m, int p, qpc::Rng& rng) {
  std::uniform_int_distribution<int> pick(0, m - 1);
  Program prog{m, std::vector<int>(static_cast<std::size_t>(p))};
  for (int& step : prog.steps) step = pick(rng);
  return prog;
}

TEST(EncodeRom, MixedRadixLeastSignificantFirst) {
  // digits (k1, k2, k3) = (1, 0, 1) at base 2: 1*1 + 0*2 + 1*4.
  EXPECT_EQ(qpc::encode_rom(Program{2, {1, 0, 1}}).index, 5);
}

TEST(EncodeRom, AllZerosEncodeToZero) {
  EXPECT_EQ(qpc::encode_rom(Program{4, {0, 0, 0, 0, 0}}).index, 0);
}

TEST(EncodeRom, RoundTripsWithDecode) {
  qpc::Rng rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    std::uniform_int_distribution<int> pick_m(1, 5), pick_p(1, 6);
    const int m = pick_m(rng), p = pick_p(rng);
    const Program prog = random_program(m, p, rng);
    const Program back = qpc::decode_rom(qpc::encode_rom(prog));
    EXPECT_EQ(back.m, prog.m);
    EXPECT_EQ(back.steps, prog.steps);
  }
}

TEST(EncodeRom, RejectsIndexOverflow) {
  Program prog{3, std::vector<int>(60, 2)};
  EXPECT_THROW(qpc::encode_rom(prog), qpc::CapacityError);
}

TEST(DecodeRom, ZeroIsAllZeros) {
  const Program prog = qpc::decode_rom(qpc::RomState{3, 4, 0});
  EXPECT_EQ(prog.steps, std::vector<int>(4, 0));
}

TEST(DecodeRom, BaseThreeExample) {
  // 7 = 1 + 2*3 so (k1, k2) = (1, 2).
  const Program prog = qpc::decode_rom(qpc::RomState{3, 2, 7});
  EXPECT_EQ(prog.steps, (std::vector<int>{1, 2}));
}

TEST(DecodeRom, RejectsOutOfRangeIndex) {
  EXPECT_THROW(qpc::decode_rom(qpc::RomState{2, 2, 4}), qpc::ContractError);
  EXPECT_THROW(qpc::decode_rom(qpc::RomState{2, 2, -1}), qpc::ContractError);
}

TEST(BuildShift, SingleDigitIsIdentity) {
  EXPECT_TRUE(exactly_equal(qpc::build_shift(5, 1), qpc::identity_op(5)));
}

TEST(BuildShift, TwoQubitSwapPattern) {
  // Base 2, two digits: states 1 = (k1=1,k2=0) and 2 = (k1=0,k2=1) swap,
  // 0 and 3 are fixed points.
  const Operator shift = qpc::build_shift(2, 2);
  Operator want = Operator::Zero(4, 4);
  want(0, 0) = 1;
  want(2, 1) = 1;
  want(1, 2) = 1;
  want(3, 3) = 1;
  EXPECT_TRUE(exactly_equal(shift, want));
}

TEST(BuildShift, OrderDividesP) {
  const Operator shift = qpc::build_shift(2, 3);
  const Operator cubed = shift * shift * shift;
  EXPECT_TRUE(exactly_equal(cubed, qpc::identity_op(8)));
}

TEST(BuildShift, MatchesDigitRotation) {
  // One machine step consumes k1 and recycles it to the top, so the digit
  // tuple (k1, k2, ..., kp) becomes (k2, ..., kp, k1).
  qpc::Rng rng(32);
  for (int trial = 0; trial < 20; ++trial) {
    std::uniform_int_distribution<int> pick_m(1, 4), pick_p(1, 5);
    const int m = pick_m(rng), p = pick_p(rng);
    const Program prog = random_program(m, p, rng);
    const std::int64_t shifted =
        qpc::shift_index(qpc::encode_rom(prog).index, m, p);
    Program rotated{m, prog.steps};
    std::rotate(rotated.steps.begin(), rotated.steps.begin() + 1,
                rotated.steps.end());
    EXPECT_EQ(shifted, qpc::encode_rom(rotated).index);
  }
}

TEST(BuildShift, ColumnsFollowShiftIndex) {
  const int m = 3, p = 2;
  const Operator shift = qpc::build_shift(m, p);
  for (std::int64_t idx = 0; idx < 9; ++idx) {
    const std::int64_t to = qpc::shift_index(idx, m, p);
    for (std::int64_t row = 0; row < 9; ++row)
      EXPECT_EQ(shift(row, idx).real(), row == to ? 1.0 : 0.0);
  }
}

TEST(ExecuteDense, DoubleFlipReturnsToStart) {
  const qpc::InstructionSet iset =
      qpc::make_instruction_set({qpc::identity_op(2), qpc::gate_x()});
  const Program prog{2, {1, 1}};
  const qpc::DenseExecution out =
      qpc::execute_dense(iset, prog, qpc::basis_state(2, 0));
  EXPECT_EQ(out.rom.index, qpc::encode_rom(prog).index);
  EXPECT_LE(max_abs_diff(out.data, qpc::basis_state(2, 0)), 1e-12);
}

TEST(ExecuteDense, FlipThenNoOp) {
  const qpc::InstructionSet iset =
      qpc::make_instruction_set({qpc::identity_op(2), qpc::gate_x()});
  const qpc::DenseExecution out = qpc::execute_dense(
      iset, Program{2, {1, 0}}, qpc::basis_state(2, 0));
  EXPECT_EQ(out.rom.index, 1);
  EXPECT_LE(max_abs_diff(out.data, qpc::basis_state(2, 1)), 1e-12);
}

TEST(ExecuteDense, AgreesWithFastOnRandomInstances) {
  qpc::Rng rng(33);
  for (int trial = 0; trial < 25; ++trial) {
    std::uniform_int_distribution<int> pick_m(1, 3), pick_n(1, 3), pick_p(1, 4);
    const int m = pick_m(rng), p = pick_p(rng);
    const Eigen::Index n = pick_n(rng);
    const qpc::InstructionSet iset = random_iset(m, n, rng);
    const Program prog = random_program(m, p, rng);
    const StateVector psi = qpc::random_state(n, rng);
    const qpc::DenseExecution dense = qpc::execute_dense(iset, prog, psi);
    const StateVector fast = qpc::execute_fast(iset, prog, psi);
    EXPECT_EQ(dense.rom.index, qpc::encode_rom(prog).index);
    EXPECT_LE((dense.data - fast).norm(), 1e-10);
  }
}

TEST(ExecuteDense, RejectsAlphabetMismatch) {
  const qpc::InstructionSet iset =
      qpc::make_instruction_set({qpc::identity_op(2), qpc::gate_x()});
  EXPECT_THROW(
      qpc::execute_dense(iset, Program{3, {1}}, qpc::basis_state(2, 0)),
      qpc::ContractError);
}

TEST(ExecuteDense, CapacityGuard) {
  const qpc::InstructionSet iset =
      qpc::make_instruction_set({qpc::identity_op(2), qpc::gate_x()});
  Program prog{2, std::vector<int>(40, 1)};
  EXPECT_THROW(qpc::execute_dense(iset, prog, qpc::basis_state(2, 0)),
               qpc::CapacityError);
}

TEST(ExecuteFast, AllZerosIsIdentity) {
  qpc::Rng rng(34);
  const qpc::InstructionSet iset = random_iset(3, 3, rng);
  const StateVector psi = qpc::random_state(3, rng);
  const StateVector out =
      qpc::execute_fast(iset, Program{3, {0, 0, 0, 0}}, psi);
  EXPECT_LE(max_abs_diff(out, psi), 0.0);
}

TEST(ExecuteFast, SingleFlip) {
  const qpc::InstructionSet iset =
      qpc::make_instruction_set({qpc::identity_op(2), qpc::gate_x()});
  EXPECT_LE(max_abs_diff(
                qpc::execute_fast(iset, Program{2, {1}}, qpc::basis_state(2, 0)),
                qpc::basis_state(2, 1)),
            0.0);
}

TEST(ExecuteFast, ConcatenationComposes) {
  qpc::Rng rng(35);
  const qpc::InstructionSet iset = random_iset(3, 2, rng);
  const Program first = random_program(3, 3, rng);
  const Program second = random_program(3, 2, rng);
  Program joined{3, first.steps};
  joined.steps.insert(joined.steps.end(), second.steps.begin(),
                      second.steps.end());
  const StateVector psi = qpc::random_state(2, rng);
  const StateVector composed =
      qpc::execute_fast(iset, second, qpc::execute_fast(iset, first, psi));
  EXPECT_LE(max_abs_diff(qpc::execute_fast(iset, joined, psi), composed),
            1e-12);
}

TEST(ExecuteFast, PaddingWithZerosChangesNothing) {
  qpc::Rng rng(36);
  const qpc::InstructionSet iset = random_iset(3, 2, rng);
  const Program prog = random_program(3, 3, rng);
  Program padded{3, prog.steps};
  padded.steps.resize(6, 0);
  const StateVector psi = qpc::random_state(2, rng);
  EXPECT_LE(max_abs_diff(qpc::execute_fast(iset, prog, psi),
                         qpc::execute_fast(iset, padded, psi)),
            0.0);
}

TEST(RunLength, PacksAdjacentRuns) {
  const auto pairs = qpc::pack_run_length(Program{2, {1, 1, 1, 0, 0}});
  ASSERT_EQ(pairs.size(), 2u);
  EXPECT_EQ(pairs[0], (qpc::RunPair{3, 1}));
  EXPECT_EQ(pairs[1], (qpc::RunPair{2, 0}));
}

TEST(RunLength, SingletonProgram) {
  const auto pairs = qpc::pack_run_length(Program{2, {0}});
  ASSERT_EQ(pairs.size(), 1u);
  EXPECT_EQ(pairs[0], (qpc::RunPair{1, 0}));
}

TEST(RunLength, AdjacentPairsDistinct) {
  qpc::Rng rng(37);
  for (int trial = 0; trial < 30; ++trial) {
    const Program prog = random_program(2, 8, rng);
    const auto pairs = qpc::pack_run_length(prog);
    for (std::size_t k = 1; k < pairs.size(); ++k)
      EXPECT_NE(pairs[k - 1].index, pairs[k].index);
    EXPECT_EQ(qpc::unpack_run_length(pairs, 2).steps, prog.steps);
  }
}

TEST(RunLength, UnpackExamples) {
  EXPECT_EQ(qpc::unpack_run_length(std::vector<qpc::RunPair>{{1, 0}}, 2).steps,
            std::vector<int>{0});
  EXPECT_EQ(qpc::unpack_run_length(
                std::vector<qpc::RunPair>{{2, 1}, {1, 2}}, 3)
                .steps,
            (std::vector<int>{1, 1, 2}));
}

TEST(RunLength, UnpackRejectsBadPairs) {
  EXPECT_THROW(
      qpc::unpack_run_length(std::vector<qpc::RunPair>{{0, 1}}, 2),
      qpc::ContractError);
  EXPECT_THROW(
      qpc::unpack_run_length(std::vector<qpc::RunPair>{{1, 5}}, 2),
      qpc::ContractError);
}

}  // namespace
