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

#include "actkit/config.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "actkit/errors.hpp"

namespace actkit {
namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

bool parse_double(const std::string& s, double& out) {
  std::string t = trim(s);
  if (!t.empty() && t.front() == '+') t.erase(0, 1);  // from_chars rejects '+'
  if (t.empty()) return false;
  const char* first = t.data();
  const char* last = t.data() + t.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

}  // namespace

Config Config::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config file: " + path);
  return parse(in, path);
}

Config Config::parse(std::istream& in, const std::string& name) {
  Config cfg;
  cfg.name_ = name;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw InputError(name + ":" + std::to_string(lineno) +
                       ": expected 'key = value', got '" + stripped + "'");
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty()) {
      throw InputError(name + ":" + std::to_string(lineno) + ": empty key");
    }
    if (cfg.entries_.count(key)) {
      throw InputError(name + ":" + std::to_string(lineno) + ": duplicate key '" +
                       key + "' (first defined on line " +
                       std::to_string(cfg.entries_[key].line) + ")");
    }
    cfg.entries_[key] = Entry{value, lineno, false};
  }

  // every config carries a schema version so stale files fail loudly
  auto* schema = cfg.lookup("schema");
  if (schema == nullptr) {
    throw InputError(name + ": missing required key 'schema' (expected schema = 1)");
  }
  schema->consumed = true;
  double v = 0;
  if (!parse_double(schema->raw, v) || v != 1.0) {
    throw InputError(name + ":" + std::to_string(schema->line) +
                     ": unsupported schema '" + schema->raw + "' (expected 1)");
  }
  return cfg;
}

bool Config::has(const std::string& key) const { return entries_.count(key) > 0; }

void Config::fail(const std::string& key, const std::string& what) const {
  auto it = entries_.find(key);
  const std::string where =
      it == entries_.end() ? name_ : name_ + ":" + std::to_string(it->second.line);
  throw InputError(where + ": " + what);
}

const Config::Entry* Config::lookup(const std::string& key) {
  auto it = entries_.find(key);
  if (it == entries_.end()) return nullptr;
  it->second.consumed = true;
  return &it->second;
}

const Config::Entry& Config::require(const std::string& key) {
  const Entry* e = lookup(key);
  if (e == nullptr) fail(key, "missing required key '" + key + "'");
  return *e;
}

double Config::get_number(const std::string& key) {
  const Entry& e = require(key);
  double v = 0;
  if (!parse_double(e.raw, v)) fail(key, "key '" + key + "' is not a number: '" + e.raw + "'");
  return v;
}

double Config::get_number(const std::string& key, double fallback) {
  if (!has(key)) return fallback;
  return get_number(key);
}

std::int64_t Config::get_integer(const std::string& key) {
  const double v = get_number(key);
  const auto i = static_cast<std::int64_t>(std::llround(v));
  if (static_cast<double>(i) != v) fail(key, "key '" + key + "' is not an integer");
  return i;
}

std::int64_t Config::get_integer(const std::string& key, std::int64_t fallback) {
  if (!has(key)) return fallback;
  return get_integer(key);
}

std::string Config::get_string(const std::string& key) {
  const Entry& e = require(key);
  std::string s = e.raw;
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') s = s.substr(1, s.size() - 2);
  return s;
}

std::string Config::get_string(const std::string& key, const std::string& fallback) {
  if (!has(key)) return fallback;
  return get_string(key);
}

std::vector<double> Config::get_list(const std::string& key) {
  auto v = get_list_optional(key);
  if (!v) fail(key, "missing required key '" + key + "'");
  return *v;
}

std::optional<std::vector<double>> Config::get_list_optional(const std::string& key) {
  const Entry* e = lookup(key);
  if (e == nullptr) return std::nullopt;
  std::string raw = trim(e->raw);
  if (raw.size() < 2 || raw.front() != '[' || raw.back() != ']') {
    // scalar shorthand: a single number is a one-element list
    double v = 0;
    if (parse_double(raw, v)) return std::vector<double>{v};
    fail(key, "key '" + key + "' is not a number list: '" + e->raw + "'");
  }
  raw = raw.substr(1, raw.size() - 2);
  std::vector<double> out;
  std::stringstream ss(raw);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const std::string t = trim(item);
    if (t.empty()) fail(key, "empty element in list '" + key + "'");
    double v = 0;
    if (!parse_double(t, v)) fail(key, "bad list element '" + t + "' in '" + key + "'");
    out.push_back(v);
  }
  if (out.empty()) fail(key, "empty list for key '" + key + "'");
  return out;
}

std::optional<double> Config::get_number_optional(const std::string& key) {
  const Entry* e = lookup(key);
  if (e == nullptr) return std::nullopt;
  double v = 0;
  if (!parse_double(e->raw, v)) fail(key, "key '" + key + "' is not a number: '" + e->raw + "'");
  return v;
}

std::vector<double> Config::get_per_joint(const std::string& key, int n_joints) {
  auto v = get_per_joint_optional(key, n_joints);
  if (!v) fail(key, "missing required key '" + key + "'");
  return *v;
}

std::optional<std::vector<double>> Config::get_per_joint_optional(const std::string& key,
                                                                  int n_joints) {
  auto list = get_list_optional(key);
  if (!list) return std::nullopt;
  if (list->size() == 1) return std::vector<double>(static_cast<std::size_t>(n_joints), (*list)[0]);
  if (list->size() != static_cast<std::size_t>(n_joints)) {
    fail(key, "key '" + key + "' has " + std::to_string(list->size()) +
                  " entries, expected " + std::to_string(n_joints) + " (or a scalar)");
  }
  return list;
}

void Config::finish() const {
  std::string bad;
  for (const auto& [key, entry] : entries_) {
    if (!entry.consumed) {
      if (!bad.empty()) bad += ", ";
      bad += "'" + key + "' (line " + std::to_string(entry.line) + ")";
    }
  }
  if (!bad.empty()) {
    throw InputError(name_ + ": unknown key(s): " + bad);
  }
}

}  // namespace actkit
