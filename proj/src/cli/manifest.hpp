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
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli/config.hpp"

namespace dyncool::cli {

inline constexpr const char* kToolVersion = "0.1.0";

// Column-major header plus typed rows; written as CSV and mirrored as JSON.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<nlohmann::json>> rows;

  void add(std::vector<nlohmann::json> row) { rows.push_back(std::move(row)); }
};

std::string format_cell(const nlohmann::json& cell);
std::string to_csv(const Table& table);
nlohmann::json to_json(const Table& table);

std::string sha256_hex(const std::string& bytes);

struct OutputFile {
  std::string name;
  std::string sha256;
};

class RunWriter {
 public:
  RunWriter(std::filesystem::path dir, std::string command);

  // Writes <stem>.csv and <stem>.json.
  void write_table(const std::string& stem, const Table& table);
  void write_text(const std::string& name, const std::string& text);
  // manifest.json: command, config, seed, version, timestamp, digests.
  void finish(const Config& cfg, std::uint64_t seed);

 private:
  std::filesystem::path dir_;
  std::string command_;
  std::vector<OutputFile> outputs_;
};

}  // namespace dyncool::cli
