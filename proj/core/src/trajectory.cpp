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

#include "actkit/trajectory.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "actkit/errors.hpp"

namespace actkit {
namespace {

// relative slack on the uniform-step check; real logs carry jitter-free
// integer timestamps scaled by dt, so this only guards corrupt files
constexpr double kStepTolerance = 1e-6;

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double parse_field(const std::string& s, const std::string& where) {
  double v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) {
    throw InputError(where + ": bad numeric field '" + s + "'");
  }
  return v;
}

}  // namespace

double Trajectory::sample_dt() const {
  if (time.size() < 2) throw InputError("trajectory has fewer than two samples");
  const double dt = time[1] - time[0];
  if (!(dt > 0)) throw InputError("trajectory time is not increasing");
  for (std::size_t k = 1; k + 1 < time.size(); ++k) {
    const double step = time[k + 1] - time[k];
    if (std::abs(step - dt) > kStepTolerance * std::max(1.0, std::abs(dt))) {
      throw InputError("trajectory is not uniformly sampled (step " +
                       std::to_string(step) + " at sample " + std::to_string(k) +
                       ", expected " + std::to_string(dt) + ")");
    }
  }
  return dt;
}

void validate(const Trajectory& t) {
  if (t.n_joints <= 0) throw InputError("trajectory needs n_joints > 0");
  const std::size_t n = static_cast<std::size_t>(t.n_joints) * t.time.size();
  if (t.targets.size() != n) throw InputError("trajectory targets shape mismatch");
  auto check = [&](const std::vector<double>& v, const char* what) {
    if (!v.empty() && v.size() != n) {
      throw InputError(std::string("trajectory ") + what + " shape mismatch");
    }
    for (double x : v) {
      if (!std::isfinite(x)) {
        throw InputError(std::string("non-finite value in trajectory ") + what);
      }
    }
  };
  check(t.targets, "targets");
  check(t.positions, "positions");
  check(t.velocities, "velocities");
  check(t.torques, "torques");
  t.sample_dt();
}

Trajectory read_trajectory_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open trajectory file: " + path);
  return read_trajectory_csv(in, path);
}

Trajectory read_trajectory_csv(std::istream& in, const std::string& name) {
  std::string line;
  int lineno = 0;
  // skip comment lines (embedded manifest) ahead of the header
  do {
    if (!std::getline(in, line)) throw InputError(name + ": empty trajectory file");
    ++lineno;
  } while (!line.empty() && line[0] == '#');

  const auto header = split_csv(line);
  if (header.empty() || header[0] != "t") {
    throw InputError(name + ":" + std::to_string(lineno) +
                     ": expected header starting with 't'");
  }
  int n = 0;
  while (1 + n < static_cast<int>(header.size()) && header[1 + n] == "q" + std::to_string(n)) ++n;
  if (n == 0) throw InputError(name + ": header has no q0 column");
  const std::size_t base_cols = 1 + 3 * static_cast<std::size_t>(n);
  const bool has_torques = header.size() == base_cols + static_cast<std::size_t>(n);
  if (header.size() != base_cols && !has_torques) {
    throw InputError(name + ": header has " + std::to_string(header.size()) +
                     " columns, expected " + std::to_string(base_cols) + " or " +
                     std::to_string(base_cols + n) + " for " + std::to_string(n) +
                     " joints");
  }
  for (int j = 0; j < n; ++j) {
    if (header[1 + n + j] != "qd" + std::to_string(j) ||
        header[1 + 2 * n + j] != "target" + std::to_string(j) ||
        (has_torques && header[1 + 3 * n + j] != "tau" + std::to_string(j))) {
      throw InputError(name + ": malformed header column order");
    }
  }

  Trajectory t;
  t.n_joints = n;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    const auto fields = split_csv(line);
    if (fields.size() != header.size()) {
      throw InputError(name + ":" + std::to_string(lineno) + ": row has " +
                       std::to_string(fields.size()) + " fields, expected " +
                       std::to_string(header.size()));
    }
    const std::string where = name + ":" + std::to_string(lineno);
    t.time.push_back(parse_field(fields[0], where));
    for (int j = 0; j < n; ++j) t.positions.push_back(parse_field(fields[1 + j], where));
    for (int j = 0; j < n; ++j) t.velocities.push_back(parse_field(fields[1 + n + j], where));
    for (int j = 0; j < n; ++j) t.targets.push_back(parse_field(fields[1 + 2 * n + j], where));
    if (has_torques) {
      for (int j = 0; j < n; ++j) t.torques.push_back(parse_field(fields[1 + 3 * n + j], where));
    }
  }
  validate(t);
  return t;
}

void write_trajectory_csv(std::ostream& out, const Trajectory& t,
                          const std::string& comment) {
  const int n = t.n_joints;
  const bool has_q = !t.positions.empty();
  const bool has_qd = !t.velocities.empty();
  const bool has_tau = !t.torques.empty();
  if (!comment.empty()) {
    std::stringstream ss(comment);
    std::string cline;
    while (std::getline(ss, cline)) out << "# " << cline << "\n";
  }
  out << "t";
  for (int j = 0; j < n; ++j) out << ",q" << j;
  for (int j = 0; j < n; ++j) out << ",qd" << j;
  for (int j = 0; j < n; ++j) out << ",target" << j;
  if (has_tau) {
    for (int j = 0; j < n; ++j) out << ",tau" << j;
  }
  out << "\n";
  out << std::setprecision(17);
  for (std::size_t k = 0; k < t.samples(); ++k) {
    out << t.time[k];
    for (int j = 0; j < n; ++j) out << ',' << (has_q ? t.position(k, j) : 0.0);
    for (int j = 0; j < n; ++j) out << ',' << (has_qd ? t.velocity(k, j) : 0.0);
    for (int j = 0; j < n; ++j) out << ',' << t.target(k, j);
    if (has_tau) {
      for (int j = 0; j < n; ++j) out << ',' << t.torque(k, j);
    }
    out << "\n";
  }
}

}  // namespace actkit
