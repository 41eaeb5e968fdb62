// SPDX-License-Identifier: Apache-2.0
//
// cfmimo - downlink simulation library for user-centric cell-free massive MIMO
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef CFMIMO_CONFIG_IO_HPP
#define CFMIMO_CONFIG_IO_HPP

#include "cfmimo/harness.hpp"

#include <string>

namespace cfmimo {

// Loads an experiment spec from a flat key = value file with [system] and
// [experiment] sections. Unknown keys are rejected. Lists (snr grid, methods,
// lambda multipliers) are space- or comma-separated.
ExperimentSpec load_experiment_spec(const std::string &path);

// Same parser over an in-memory string (used by tests).
ExperimentSpec parse_experiment_spec(const std::string &text);

} // namespace cfmimo

#endif
