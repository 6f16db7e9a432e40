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

#include <stdexcept>
#include <string>
#include <string_view>

#include "gasp/genome.hpp"

namespace gasp {

class QasmError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// OpenQASM 2.0 text for the individual: one qreg `q`, one statement per gene,
/// angles at 17 significant digits. Qubit q[k] is bit k of the basis index.
std::string to_qasm(const Individual& ind);

/// Reads OpenQASM 2.0 restricted to rx, ry, rz and cx on a single quantum
/// register. `creg`, `barrier` and `measure` statements are accepted and
/// ignored. Angles may be arithmetic expressions in `pi` and are wrapped into
/// [0, 2pi). Throws QasmError naming the offending statement or gate.
Individual parse_qasm(std::string_view text);

}  // namespace gasp
