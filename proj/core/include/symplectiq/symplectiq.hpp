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

#include "symplectiq/bqp.hpp"
#include "symplectiq/compiler.hpp"
#include "symplectiq/error.hpp"
#include "symplectiq/gb_circuit.hpp"
#include "symplectiq/gb_text.hpp"
#include "symplectiq/measurement.hpp"
#include "symplectiq/pauli.hpp"
#include "symplectiq/qubit_circuit.hpp"
#include "symplectiq/random.hpp"
#include "symplectiq/simulator.hpp"
#include "symplectiq/statevector.hpp"
#include "symplectiq/symplectic.hpp"
