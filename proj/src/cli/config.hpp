// Copyright 2026 The dyncool Authors
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

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace dyncool::cli {

// Flat "section.key" -> value store. Layers, lowest first: built-in
// defaults, named profile, INI file, --set overrides, dedicated flags.
class Config {
 public:
  Config();

  void apply_profile(const std::string& name);
  void load_ini(const std::string& path);
  // "section.key=value"; unknown keys are a usage error.
  void set_override(const std::string& assignment);
  void set(const std::string& key, const std::string& value);

  std::string get(const std::string& key) const;
  double get_double(const std::string& key) const;
  long long get_int(const std::string& key) const;
  std::uint64_t get_u64(const std::string& key) const;
  std::vector<double> get_doubles(const std::string& key) const;
  std::vector<int> get_ints(const std::string& key) const;

  const std::map<std::string, std::string>& entries() const { return values_; }

 private:
  std::map<std::string, std::string> values_;
};

std::vector<std::string> profile_names();

// Bath temperature in kelvin from physics.p1, physics.reduced_temperature
// or physics.temperature_mk, first one set wins.
double configured_temperature(const Config& cfg);

}  // namespace dyncool::cli
