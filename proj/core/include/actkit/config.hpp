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

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace actkit {

// Structured text config shared by all commands. One `key = value` pair
// per line, '#' comments, values are numbers, bare strings or bracketed
// number lists. Every file carries `schema = 1`; unknown keys are hard
// errors so a typo cannot silently fall back to a default.
class Config {
 public:
  static Config parse_file(const std::string& path);
  static Config parse(std::istream& in, const std::string& name);

  const std::string& name() const { return name_; }

  bool has(const std::string& key) const;

  double get_number(const std::string& key);
  double get_number(const std::string& key, double fallback);
  std::int64_t get_integer(const std::string& key);
  std::int64_t get_integer(const std::string& key, std::int64_t fallback);
  std::string get_string(const std::string& key);
  std::string get_string(const std::string& key, const std::string& fallback);
  std::vector<double> get_list(const std::string& key);
  std::optional<std::vector<double>> get_list_optional(const std::string& key);
  std::optional<double> get_number_optional(const std::string& key);

  /// Scalar broadcasts to n entries; a list must have exactly n.
  std::vector<double> get_per_joint(const std::string& key, int n_joints);
  std::optional<std::vector<double>> get_per_joint_optional(const std::string& key,
                                                            int n_joints);

  /// Call after reading everything: throws InputError naming any key
  /// (with its line) that no loader consumed.
  void finish() const;

 private:
  struct Entry {
    std::string raw;
    int line = 0;
    mutable bool consumed = false;
  };

  [[noreturn]] void fail(const std::string& key, const std::string& what) const;
  const Entry& require(const std::string& key);
  const Entry* lookup(const std::string& key);

  std::string name_;
  std::map<std::string, Entry> entries_;
};

}  // namespace actkit
