// Copyright 2026 The lcplearn Authors
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

#include <string>
#include <string_view>

#include "lcpl/circuit.hpp"

namespace lcpl {

// Text format: a QASM 2.0 subset.
//
//   OPENQASM 2.0;
//   include "qelib1.inc";
//   qreg q[<width>];
//   x q[i]; z q[i]; h q[i]; sx q[i]; rz(<float>) q[i]; cx q[i],q[j];
//
// One statement per line, `//` comments anywhere. Register offsets are
// 0-based (q[0] is qubit 1). Angles are written with 17 significant digits
// after reduction into (-2*pi, 2*pi].

std::string to_qasm(const Circuit& circuit);

/// Throws ParseError (with 1-based line/column) on malformed input, unknown
/// gate names, out-of-range offsets, or a cx whose control equals its target.
Circuit parse_qasm(std::string_view text);

}  // namespace lcpl
