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

#include <cmath>
#include <optional>
#include <string_view>

#include "qpc/core.hpp"
#include "qpc/linalg.hpp"

namespace qpc {

// Pauli matrix by axis: 1 = x, 2 = y, 3 = z.
inline Operator pauli(int axis) {
  Operator s(2, 2);
  switch (axis) {
    case 1:
      s << Complex(0, 0), Complex(1, 0), Complex(1, 0), Complex(0, 0);
      break;
    case 2:
      s << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
      break;
    case 3:
      s << Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(-1, 0);
      break;
    default:
      throw ContractError("pauli: axis must be 1, 2 or 3");
  }
  return s;
}

inline Operator gate_x() { return pauli(1); }
inline Operator gate_y() { return pauli(2); }
inline Operator gate_z() { return pauli(3); }

inline Operator gate_h() {
  const double s = 1.0 / std::sqrt(2.0);
  Operator h(2, 2);
  h << Complex(s, 0), Complex(s, 0), Complex(s, 0), Complex(-s, 0);
  return h;
}

inline Operator gate_s() {
  Operator g(2, 2);
  g << Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(0, 1);
  return g;
}

inline Operator gate_t() {
  const double s = 1.0 / std::sqrt(2.0);
  Operator g(2, 2);
  g << Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(s, s);
  return g;
}

// RA(theta) = exp(-i sigma_A theta / 2) = cos(theta/2) I - i sin(theta/2) sigma_A.
inline Operator rotation_gate(int axis, double theta) {
  const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
  return Operator(c * identity_op(2) - Complex(0, 1) * s * pauli(axis));
}

inline Operator gate_rx(double theta) { return rotation_gate(1, theta); }
inline Operator gate_ry(double theta) { return rotation_gate(2, theta); }
inline Operator gate_rz(double theta) { return rotation_gate(3, theta); }

// Fixed built-in gates addressable by name; rotations take a parameter and
// are resolved separately.
inline std::optional<Operator> builtin_gate(std::string_view name) {
  if (name == "I") return identity_op(2);
  if (name == "X") return gate_x();
  if (name == "Y") return gate_y();
  if (name == "Z") return gate_z();
  if (name == "H") return gate_h();
  if (name == "S") return gate_s();
  if (name == "T") return gate_t();
  return std::nullopt;
}

inline std::optional<Operator> builtin_rotation(std::string_view name,
                                                double theta) {
  if (name == "RX") return gate_rx(theta);
  if (name == "RY") return gate_ry(theta);
  if (name == "RZ") return gate_rz(theta);
  return std::nullopt;
}

}  // namespace qpc
