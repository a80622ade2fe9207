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

#include "cli/config.hpp"

#include <boost/algorithm/string.hpp>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "dyncool/analytics.hpp"
#include "dyncool/errors.hpp"

namespace dyncool::cli {

namespace {

const std::map<std::string, std::string>& defaults() {
  static const std::map<std::string, std::string> d = {
      {"physics.omega", "5e9"},
      {"physics.temperature_mk", "15"},
      {"physics.reduced_temperature", ""},
      {"physics.p1", ""},
      {"run.seed", "20240607"},
      {"run.shots", "100000"},
      {"run.threads", "0"},
      {"population.n_list", "4,8,16,32,64,128,256,512,1024"},
      {"population.x_points", "201"},
      {"temperature.s_list", "1,2,3,5,10,30,100,300,1000"},
      {"temperature.t_min", "0.01"},
      {"temperature.t_max", "100"},
      {"temperature.points", "81"},
      {"work.n_list", "4,16,64,256,1024"},
      {"work.x_points", "51"},
      {"work_temperature.t_min", "0.01"},
      {"work_temperature.t_max", "100"},
      {"work_temperature.points", "81"},
      {"work_temperature.markers", "0.2"},
      {"noise.n_list", "3,4,5"},
      {"noise.protocol", "mirror"},
      {"noise.p_grid", "0,0.001,0.002,0.005,0.01,0.02,0.05,0.1,0.2"},
      {"noise.locus", "one-operand"},
      {"noise.granularity", "mcx"},
      {"suboptimal.n", "3"},
      {"suboptimal.r", "2"},
      {"suboptimal.protocol", "mirror"},
      {"cnot.alpha", "6"},
      {"cnot.beta", "-8"},
      {"cnot.q2", "2"},
      {"cnot.q1", "-1"},
      {"cnot.q0", "0"},
      {"gatecount.n_min", "3"},
      {"gatecount.n_max", "14"},
      {"gatecount.synth_max", "14"},
  };
  return d;
}

const std::map<std::string, std::map<std::string, std::string>>& profiles() {
  static const std::map<std::string, std::map<std::string, std::string>> p = {
      {"ibm-5ghz", {{"physics.omega", "5e9"}, {"physics.p1", "0.01"}}},
      {"noise-15mK",
       {{"physics.temperature_mk", "15"},
        {"noise.n_list", "3,4,5"},
        {"noise.granularity", "elementary"},
        {"noise.p_grid", "0,0.001,0.002,0.005,0.01,0.02,0.05,0.1,0.2,0.3"}}},
      {"noise-100mK",
       {{"physics.temperature_mk", "100"},
        {"noise.n_list", "3,4,5"},
        {"noise.granularity", "elementary"},
        {"noise.p_grid", "0,0.001,0.002,0.005,0.01,0.02,0.05,0.1,0.2,0.3"}}},
      {"suboptimal-15mK",
       {{"physics.temperature_mk", "15"},
        {"noise.n_list", "3,5,9"},
        {"noise.granularity", "elementary"},
        {"noise.p_grid", "0,0.0005,0.001,0.002,0.005,0.01,0.02,0.05"},
        {"run.shots", "20000"},
        {"suboptimal.n", "3"},
        {"suboptimal.r", "2"}}},
      {"device-0.2", {{"physics.reduced_temperature", "0.2"}, {"work_temperature.markers", "0.2"}}},
  };
  return p;
}

[[noreturn]] void bad_value(const std::string& key, const std::string& value) {
  throw FormatError("config key " + key + " has invalid value '" + value + "'");
}

}  // namespace

Config::Config() : values_(defaults()) {}

std::vector<std::string> profile_names() {
  std::vector<std::string> out;
  for (const auto& [name, _] : profiles()) out.push_back(name);
  return out;
}

void Config::apply_profile(const std::string& name) {
  const auto it = profiles().find(name);
  if (it == profiles().end()) throw FormatError("unknown profile: " + name);
  for (const auto& [k, v] : it->second) set(k, v);
}

void Config::load_ini(const std::string& path) {
  boost::property_tree::ptree tree;
  try {
    boost::property_tree::read_ini(path, tree);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw FormatError(e.what());
  }
  for (const auto& [section, body] : tree) {
    if (body.empty()) {
      set(section, body.data());
      continue;
    }
    for (const auto& [key, leaf] : body) set(section + "." + key, leaf.data());
  }
}

void Config::set_override(const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos) throw FormatError("--set expects section.key=value, got " + assignment);
  set(boost::trim_copy(assignment.substr(0, eq)), boost::trim_copy(assignment.substr(eq + 1)));
}

void Config::set(const std::string& key, const std::string& value) {
  if (!values_.count(key)) throw FormatError("unknown config key: " + key);
  values_[key] = boost::trim_copy(value);
}

std::string Config::get(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) throw FormatError("unknown config key: " + key);
  return it->second;
}

double Config::get_double(const std::string& key) const {
  const std::string v = get(key);
  try {
    std::size_t used = 0;
    const double d = std::stod(v, &used);
    if (used != v.size()) bad_value(key, v);
    return d;
  } catch (const std::logic_error&) {
    bad_value(key, v);
  }
}

long long Config::get_int(const std::string& key) const {
  const std::string v = get(key);
  try {
    std::size_t used = 0;
    const long long i = std::stoll(v, &used);
    if (used != v.size()) bad_value(key, v);
    return i;
  } catch (const std::logic_error&) {
    bad_value(key, v);
  }
}

std::uint64_t Config::get_u64(const std::string& key) const {
  const std::string v = get(key);
  try {
    std::size_t used = 0;
    const auto i = std::stoull(v, &used);
    if (used != v.size() || v.find('-') != std::string::npos) bad_value(key, v);
    return i;
  } catch (const std::logic_error&) {
    bad_value(key, v);
  }
}

std::vector<double> Config::get_doubles(const std::string& key) const {
  std::vector<std::string> parts;
  const std::string v = get(key);
  boost::split(parts, v, boost::is_any_of(","));
  std::vector<double> out;
  for (auto& part : parts) {
    boost::trim(part);
    if (part.empty()) continue;
    try {
      out.push_back(std::stod(part));
    } catch (const std::logic_error&) {
      bad_value(key, v);
    }
  }
  return out;
}

std::vector<int> Config::get_ints(const std::string& key) const {
  std::vector<int> out;
  for (double d : get_doubles(key)) {
    if (d != static_cast<int>(d)) bad_value(key, get(key));
    out.push_back(static_cast<int>(d));
  }
  return out;
}

double configured_temperature(const Config& cfg) {
  const double omega = cfg.get_double("physics.omega");
  if (!cfg.get("physics.p1").empty()) {
    const auto t = temperature_from_population(cfg.get_double("physics.p1"), omega);
    if (!t.is_finite()) throw DomainError("physics.p1 must lie strictly between 0 and 1/2");
    return t.kelvin;
  }
  if (!cfg.get("physics.reduced_temperature").empty()) {
    return cfg.get_double("physics.reduced_temperature") * quantum_temperature(omega);
  }
  return cfg.get_double("physics.temperature_mk") * 1e-3;
}

}  // namespace dyncool::cli
