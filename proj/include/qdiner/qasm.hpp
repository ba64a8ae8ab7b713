// Copyright 2026 The qdiner Authors
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

// OpenQASM 2.0 reader/writer for the {u3, cz, cx, measure} subset on q[4]/c[4].
//
// Output layout:
//   OPENQASM 2.0;
//   include "qelib1.inc";
//   qreg q[4];
//   creg c[4];
//   u3(<t>,<p>,<l>) q[i];  |  cz q[i],q[j];  |  cx q[i],q[j];  |  measure q[i] -> c[j];
//
// Outcome strings elsewhere in this project put Alice (q[0]) leftmost;
// IBM-style histograms print c[3]..c[0] and so show the reversed string.

#pragma once

#include <string>
#include <string_view>

#include "qdiner/circuit.hpp"

namespace qdiner::qasm {

/// "0", "pi", "-pi/2", "3*pi/4" for small multiples of pi/4; otherwise the
/// shortest 17-significant-digit decimal.
std::string format_angle(double radians);

/// Inverse of format_angle; also accepts any plain decimal.
double parse_angle(std::string_view text);

std::string export_qasm(const circuit::Circuit &c);

/// Throws ParseError carrying the 1-based line number.
circuit::Circuit import_qasm(std::string_view text);

}  // namespace qdiner::qasm
