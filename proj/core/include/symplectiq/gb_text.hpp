// Copyright 2026 The symplectiq Authors
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

// Text format for GB circuits:
//
//   modes 8
//   phase m=6 t=0.3
//   bs m=1 mp=7 t=0.5
//   sq m=3 t=0.1 sign=+
//   gphase cond=1:1,3:0 t=0.2
//   gbs cond=3:0 l=1 t=0.4
//   gsq cond=3:1 t=0.05 sign=-
//   disp m=1 dq=1.0 dp=0.0
//
// Keys may appear in any order, `#` starts a comment and `cond=-` is the
// empty condition.

#include <string>
#include <string_view>

#include "symplectiq/gb_circuit.hpp"

namespace symplectiq {

GbCircuit parse_gb_circuit(std::string_view text);
std::string serialize_gb_circuit(const GbCircuit &c);

BitCondition parse_condition(std::string_view text);
std::string format_condition(const BitCondition &cond);

}  // namespace symplectiq
