// Copyright 2026 The actkit Authors
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

#include "actkit/analysis.hpp"
#include "actkit/config.hpp"
#include "actkit/energy.hpp"
#include "actkit/excitation.hpp"
#include "actkit/identify.hpp"
#include "actkit/param_vector.hpp"
#include "actkit/types.hpp"

namespace actkit {

// Config loaders for the documented schemas (docs/config-formats.md).
// Each consumes its keys from `cfg`; callers run cfg.finish() afterwards
// so leftover keys are reported with their line numbers.

RobotModel load_robot_model(Config& cfg);
ChirpSpec load_chirp_spec(Config& cfg);
StepSpec load_step_spec(Config& cfg);
FitConfig load_fit_config(Config& cfg);
ParamBounds load_param_bounds(Config& cfg, int n_joints);
EnergyTrial load_energy_trial(Config& cfg);
RewardWeights load_reward_weights(Config& cfg);
PendulumMeasurement load_pendulum_measurement(Config& cfg);
PlanarLegModel load_planar_leg(Config& cfg);
std::vector<ReducedComponent> load_reduced_components(Config& cfg);
SimConfig load_sim_config(Config& cfg);  // optional keys, defaults otherwise

}  // namespace actkit
