// Copyright 2026 The qoc Authors
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

// Everything, for applications that do not care about compile time.

#include "qoc/adiabatic/counterdiabatic.hpp"
#include "qoc/adiabatic/dressed.hpp"
#include "qoc/adiabatic/stirap.hpp"
#include "qoc/controllability/graph.hpp"
#include "qoc/controllability/lie_rank.hpp"
#include "qoc/controllability/systems.hpp"
#include "qoc/core/bloch.hpp"
#include "qoc/core/metrics.hpp"
#include "qoc/core/serialize.hpp"
#include "qoc/dynamics/bloch_precession.hpp"
#include "qoc/dynamics/propagate.hpp"
#include "qoc/frames/frames.hpp"
#include "qoc/functionals/bloch_match.hpp"
#include "qoc/functionals/gate.hpp"
#include "qoc/functionals/interference.hpp"
#include "qoc/functionals/two_qubit.hpp"
#include "qoc/functionals/verification.hpp"
#include "qoc/optimize/gradient_free.hpp"
#include "qoc/optimize/grape.hpp"
#include "qoc/optimize/krotov.hpp"
#include "qoc/scenario/run.hpp"
