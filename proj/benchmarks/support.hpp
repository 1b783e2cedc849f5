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

#include "actkit/types.hpp"

namespace actkit::bench {

// 12-joint workload shaped like the identification use case
inline RobotModel reference_quadruped() {
  RobotModel m;
  m.n_joints = 12;
  for (int j = 0; j < 12; ++j) {
    const bool knee = j % 3 == 2;
    m.joints.push_back(JointParams{knee ? 0.0035 : 0.12, knee ? 2.5 : 1.0,
                                   knee ? 0.001 : 0.03, 0.01});
    m.gains.push_back(DriveGains{60.0, 2.0});
  }
  m.command_delay = 0.0075;
  return m;
}

}  // namespace actkit::bench
