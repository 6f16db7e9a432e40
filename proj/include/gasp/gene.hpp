// Copyright 2026 The GASP Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace gasp {

enum class GateKind : std::uint8_t { RX, RY, RZ, CNOT };

inline constexpr bool is_rotation(GateKind kind) { return kind != GateKind::CNOT; }

std::string_view gate_name(GateKind kind);

/// One gate application: target qubit, gate kind, optional control, optional angle.
///
/// Rotation genes carry an angle and no control; CNOT genes carry a control and
/// no angle. Genomes keep angles in the canonical range [0, 2pi). The simulator
/// itself accepts any finite angle.
struct Gene {
  int target = 0;
  GateKind kind = GateKind::RX;
  std::optional<int> control;
  std::optional<double> angle;

  static Gene rotation(GateKind kind, int target, double angle);
  static Gene cnot(int control, int target);

  bool is_rotation() const { return gasp::is_rotation(kind); }

  friend bool operator==(const Gene&, const Gene&) = default;
};

/// Throws std::invalid_argument if the gene is malformed or addresses a qubit
/// outside [0, n_qubits).
void validate_gene(const Gene& gene, int n_qubits);

/// Maps any finite angle into [0, 2pi).
double wrap_angle(double angle);

inline constexpr double kTwoPi = 6.283185307179586476925286766559;
inline constexpr double kPi = 3.141592653589793238462643383279;

}  // namespace gasp
