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

#include <cmath>
#include <complex>
#include <numbers>

#include <gtest/gtest.h>

#include "qpc/gates.hpp"
#include "qpc/linalg.hpp"
#include "qpc/random.hpp"
#include "util.hpp"

namespace {

using qpc::Complex;
using qpc::Operator;
using qpc::StateVector;
using qpc_test::exactly_equal;
using qpc_test::max_abs_diff;

constexpr double kPi = std::numbers::pi;

TEST(TensorOp, IdentityTimesIdentity) {
  EXPECT_TRUE(exactly_equal(qpc::tensor_op(qpc::identity_op(2),
                                           qpc::identity_op(2)),
                            qpc::identity_op(4)));
}

TEST(TensorOp, MatchesIndexFormula) {
  Operator a(2, 2), b(2, 2);
  a << Complex(1, 1), Complex(2, 0), Complex(0, -1), Complex(3, 2);
  b << Complex(0, 1), Complex(1, 0), Complex(2, -1), Complex(0, 0);
  const Operator t = qpc::tensor_op(a, b);
  ASSERT_EQ(t.rows(), 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          EXPECT_EQ(t(i * 2 + k, j * 2 + l), a(i, j) * b(k, l));
}

TEST(TensorOp, PreservesUnitarity) {
  qpc::Rng rng(11);
  const Operator a = qpc::random_unitary(3, rng);
  const Operator b = qpc::random_unitary(2, rng);
  EXPECT_TRUE(qpc::is_unitary(qpc::tensor_op(a, b)));
}

TEST(TensorOp, Associativity) {
  qpc::Rng rng(5);
  const Operator a = qpc::random_unitary(2, rng);
  const Operator b = qpc::random_unitary(2, rng);
  const Operator c = qpc::random_unitary(2, rng);
  const Operator left = qpc::tensor_op(qpc::tensor_op(a, b), c);
  const Operator right = qpc::tensor_op(a, qpc::tensor_op(b, c));
  EXPECT_LE(max_abs_diff(left, right), 1e-14);
}

TEST(TensorOp, MixedProductRule) {
  qpc::Rng rng(6);
  const Operator a = qpc::random_unitary(2, rng);
  const Operator b = qpc::random_unitary(3, rng);
  const Operator c = qpc::random_unitary(2, rng);
  const Operator d = qpc::random_unitary(3, rng);
  const Operator left = qpc::tensor_op(a, b) * qpc::tensor_op(c, d);
  const Operator right = qpc::tensor_op(Operator(a * c), Operator(b * d));
  EXPECT_LE(max_abs_diff(left, right), 1e-12);
}

TEST(TensorOp, CapacityGuard) {
  const std::int64_t saved = qpc::max_dim();
  qpc::set_max_dim(8);
  EXPECT_THROW(qpc::tensor_op(qpc::identity_op(4), qpc::identity_op(4)),
               qpc::CapacityError);
  qpc::set_max_dim(saved);
}

TEST(TensorState, BasisIndexing) {
  const StateVector a0 = qpc::basis_state(2, 0);
  const StateVector a1 = qpc::basis_state(2, 1);
  EXPECT_LE(max_abs_diff(qpc::tensor_state(a0, a1), qpc::basis_state(4, 1)),
            0.0);
  EXPECT_LE(max_abs_diff(qpc::tensor_state(a1, a0), qpc::basis_state(4, 2)),
            0.0);
}

TEST(TensorState, NormMultiplicative) {
  qpc::Rng rng(7);
  const StateVector a = qpc::random_state(3, rng);
  const StateVector b = qpc::random_state(4, rng);
  EXPECT_NEAR(qpc::tensor_state(a, b).norm(), a.norm() * b.norm(), 1e-12);
}

TEST(Apply, PauliXFlipsBasis) {
  const StateVector out = qpc::apply(qpc::gate_x(), qpc::basis_state(2, 0));
  EXPECT_LE(max_abs_diff(out, qpc::basis_state(2, 1)), 0.0);
}

TEST(Apply, IdentityFixesState) {
  qpc::Rng rng(8);
  const StateVector psi = qpc::random_state(5, rng);
  EXPECT_LE(max_abs_diff(qpc::apply(qpc::identity_op(5), psi), psi), 0.0);
}

TEST(Apply, UnitaryPreservesNorm) {
  qpc::Rng rng(9);
  const Operator u = qpc::random_unitary(4, rng);
  const StateVector psi = qpc::random_state(4, rng);
  EXPECT_NEAR(qpc::apply(u, psi).norm(), 1.0, 1e-12);
}

TEST(Apply, DimensionMismatchThrows) {
  EXPECT_THROW(qpc::apply(qpc::identity_op(2), qpc::basis_state(3, 0)),
               qpc::ContractError);
}

TEST(IsUnitary, AcceptsIdentity) {
  EXPECT_TRUE(qpc::is_unitary(qpc::identity_op(3)));
}

TEST(IsUnitary, RejectsDiagonalStretch) {
  Operator d = Operator::Zero(2, 2);
  d(0, 0) = 1.0;
  d(1, 1) = 2.0;
  EXPECT_FALSE(qpc::is_unitary(d));
}

TEST(IsUnitary, AcceptsHermitianExponential) {
  qpc::Rng rng(10);
  const Operator h = qpc::random_hermitian(3, rng);
  EXPECT_TRUE(qpc::is_unitary(qpc::hermitian_exp(h, 0.1), 1e-10));
}

TEST(HermitianExp, ZeroHamiltonianGivesIdentity) {
  const Operator u = qpc::hermitian_exp(Operator::Zero(3, 3), 1.7);
  EXPECT_LE(max_abs_diff(u, qpc::identity_op(3)), 1e-14);
}

TEST(HermitianExp, PauliZAtPiGivesMinusIdentity) {
  const Operator u = qpc::hermitian_exp(qpc::pauli(3), kPi);
  EXPECT_LE(max_abs_diff(u, Operator(-qpc::identity_op(2))), 1e-14);
}

TEST(HermitianExp, InverseAtOppositeAngle) {
  qpc::Rng rng(12);
  const Operator h = qpc::random_hermitian(4, rng);
  const Operator u = qpc::hermitian_exp(h, 0.37);
  const Operator v = qpc::hermitian_exp(h, -0.37);
  EXPECT_LE(max_abs_diff(Operator(u * v), qpc::identity_op(4)), 1e-12);
}

TEST(HermitianExp, GroupLaw) {
  qpc::Rng rng(13);
  const Operator h = qpc::random_hermitian(3, rng);
  const Operator lhs =
      qpc::hermitian_exp(h, 0.31) * qpc::hermitian_exp(h, 0.45);
  EXPECT_LE(max_abs_diff(lhs, qpc::hermitian_exp(h, 0.76)), 1e-10);
}

TEST(HermitianExp, RejectsNonHermitian) {
  Operator a = Operator::Zero(2, 2);
  a(0, 1) = 1.0;
  EXPECT_THROW(qpc::hermitian_exp(a, 1.0), qpc::ContractError);
}

TEST(SchmidtRank, ProductStateIsOne) {
  EXPECT_EQ(qpc::schmidt_rank(
                qpc::tensor_state(qpc::basis_state(2, 0), qpc::basis_state(2, 1)),
                2, 2),
            1);
}

TEST(SchmidtRank, BellStateIsTwo) {
  StateVector bell(4);
  bell << 1 / std::sqrt(2.0), 0, 0, 1 / std::sqrt(2.0);
  EXPECT_EQ(qpc::schmidt_rank(bell, 2, 2), 2);
}

TEST(SchmidtRank, TinyPerturbationStaysRankOne) {
  qpc::Rng rng(14);
  StateVector psi =
      qpc::tensor_state(qpc::random_state(3, rng), qpc::random_state(2, rng));
  psi(2) += Complex(1e-14, -1e-14);
  psi.normalize();
  EXPECT_EQ(qpc::schmidt_rank(psi, 3, 2, 1e-8), 1);
}

TEST(SchmidtRank, RankOneForAllProducts) {
  qpc::Rng rng(15);
  for (int trial = 0; trial < 10; ++trial) {
    const StateVector a = qpc::random_state(3, rng);
    const StateVector b = qpc::random_state(4, rng);
    EXPECT_EQ(qpc::schmidt_rank(qpc::tensor_state(a, b), 3, 4), 1);
  }
}

TEST(SchmidtRank, DimensionMismatchThrows) {
  EXPECT_THROW(qpc::schmidt_rank(qpc::basis_state(6, 0), 2, 2),
               qpc::ContractError);
}

TEST(ProductFactors, ReconstructsProductState) {
  qpc::Rng rng(16);
  const StateVector a = qpc::random_state(3, rng);
  const StateVector b = qpc::random_state(2, rng);
  const StateVector psi = qpc::tensor_state(a, b);
  const qpc::ProductFactors f = qpc::product_factors(psi, 3, 2);
  ASSERT_TRUE(f.is_product);
  EXPECT_LE(max_abs_diff(qpc::tensor_state(f.control, f.data), psi), 1e-12);
}

TEST(ProductFactors, FlagsEntangledState) {
  StateVector bell(4);
  bell << 1 / std::sqrt(2.0), 0, 0, 1 / std::sqrt(2.0);
  EXPECT_FALSE(qpc::product_factors(bell, 2, 2).is_product);
}

TEST(PhaseDistance, ZeroOnSelf) {
  qpc::Rng rng(17);
  const Operator a = qpc::random_unitary(3, rng);
  EXPECT_NEAR(qpc::phase_distance(a, a), 0.0, 1e-12);
}

TEST(PhaseDistance, GlobalPhaseInvariant) {
  qpc::Rng rng(18);
  const Operator a = qpc::random_unitary(3, rng);
  const Operator b = std::exp(Complex(0, kPi / 3)) * a;
  EXPECT_NEAR(qpc::phase_distance(a, b), 0.0, 1e-12);
}

TEST(PhaseDistance, IdentityVersusPauliX) {
  // tr(X) = 0, so the minimum over phases of the Frobenius distance in
  // dimension 2 is sqrt(2 + 2 - 0) = 2.
  EXPECT_NEAR(qpc::phase_distance(qpc::identity_op(2), qpc::gate_x()), 2.0,
              1e-12);
}

TEST(PhaseDistance, Symmetric) {
  qpc::Rng rng(19);
  const Operator a = qpc::random_unitary(4, rng);
  const Operator b = qpc::random_unitary(4, rng);
  EXPECT_NEAR(qpc::phase_distance(a, b), qpc::phase_distance(b, a), 1e-14);
}

TEST(PhaseDistance, DimensionMismatchThrows) {
  EXPECT_THROW(qpc::phase_distance(qpc::identity_op(2), qpc::identity_op(3)),
               qpc::ContractError);
}

TEST(BasisState, RejectsOutOfRange) {
  EXPECT_THROW(qpc::basis_state(3, 3), qpc::ContractError);
  EXPECT_THROW(qpc::basis_state(3, -1), qpc::ContractError);
}

TEST(Gates, KnownMatrices) {
  Operator x(2, 2), h(2, 2), s(2, 2);
  x << 0, 1, 1, 0;
  h << 1 / std::sqrt(2.0), 1 / std::sqrt(2.0), 1 / std::sqrt(2.0),
      -1 / std::sqrt(2.0);
  s << 1, 0, 0, Complex(0, 1);
  EXPECT_LE(max_abs_diff(qpc::gate_x(), x), 0.0);
  EXPECT_LE(max_abs_diff(qpc::gate_h(), h), 1e-15);
  EXPECT_LE(max_abs_diff(qpc::gate_s(), s), 0.0);
  EXPECT_TRUE(qpc::is_unitary(qpc::gate_t()));
}

TEST(Gates, RotationConvention) {
  // RX(theta) = exp(-i sigma_x theta / 2); at theta = pi this is -i sigma_x.
  const Operator rx = qpc::gate_rx(kPi);
  EXPECT_LE(max_abs_diff(rx, Operator(Complex(0, -1) * qpc::gate_x())), 1e-15);
  const Operator rz = qpc::gate_rz(kPi / 2);
  Operator want(2, 2);
  want << std::exp(Complex(0, -kPi / 4)), 0, 0, std::exp(Complex(0, kPi / 4));
  EXPECT_LE(max_abs_diff(rz, want), 1e-15);
}

TEST(Random, UnitaryIsUnitaryAndSeedStable) {
  qpc::Rng rng_a(42), rng_b(42), rng_c(43);
  const Operator a = qpc::random_unitary(4, rng_a);
  const Operator b = qpc::random_unitary(4, rng_b);
  const Operator c = qpc::random_unitary(4, rng_c);
  EXPECT_TRUE(qpc::is_unitary(a, 1e-12));
  EXPECT_TRUE(exactly_equal(a, b));
  EXPECT_GT(max_abs_diff(a, c), 1e-3);
}

TEST(Random, HermitianIsHermitian) {
  qpc::Rng rng(44);
  EXPECT_TRUE(qpc::is_hermitian(qpc::random_hermitian(5, rng)));
}

TEST(Random, SampleStatesDeterministicAndNormalized) {
  const auto batch_a = qpc::sample_states(3, 4, 123);
  const auto batch_b = qpc::sample_states(3, 4, 123);
  ASSERT_EQ(batch_a.size(), 4u);
  for (std::size_t k = 0; k < batch_a.size(); ++k) {
    EXPECT_NEAR(batch_a[k].norm(), 1.0, 1e-12);
    EXPECT_LE(max_abs_diff(batch_a[k], batch_b[k]), 0.0);
  }
}

}  // namespace
