// Copyright 2026 The qumul Authors
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

#include "qumul/amplification.hpp"
#include "qumul/arithmetic_circuits.hpp"
#include "qumul/circuit.hpp"
#include "qumul/conv_multiplier.hpp"
#include "qumul/dft.hpp"
#include "qumul/digit_vector.hpp"
#include "qumul/errors.hpp"
#include "qumul/io.hpp"
#include "qumul/karatsuba.hpp"
#include "qumul/natural.hpp"
#include "qumul/qft.hpp"
#include "qumul/resources.hpp"
#include "qumul/rng.hpp"
#include "qumul/simulator.hpp"
#include "qumul/statevector.hpp"

namespace qumul {
inline constexpr char kVersion[] = "0.1.0";
}
