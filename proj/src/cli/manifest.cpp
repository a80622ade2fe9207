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

#include "cli/manifest.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "dyncool/errors.hpp"

namespace dyncool::cli {

std::string format_cell(const nlohmann::json& cell) {
  if (cell.is_string()) return cell.get<std::string>();
  if (cell.is_boolean()) return cell.get<bool>() ? "true" : "false";
  if (cell.is_number_integer()) return cell.dump();
  if (cell.is_number_float()) {
    const double v = cell.get<double>();
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
  }
  if (cell.is_null()) return "";
  return cell.dump();
}

std::string to_csv(const Table& table) {
  std::ostringstream out;
  for (std::size_t i = 0; i < table.header.size(); ++i) out << (i ? "," : "") << table.header[i];
  out << "\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_cell(row[i]);
    out << "\n";
  }
  return out.str();
}

nlohmann::json to_json(const Table& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t i = 0; i < row.size() && i < table.header.size(); ++i) {
      const auto& cell = row[i];
      // json has no inf/nan; keep them as strings
      if (cell.is_number_float() && !std::isfinite(cell.get<double>())) {
        obj[table.header[i]] = format_cell(cell);
      } else {
        obj[table.header[i]] = cell;
      }
    }
    rows.push_back(std::move(obj));
  }
  return {{"columns", table.header}, {"rows", rows}};
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return out.str();
}

RunWriter::RunWriter(std::filesystem::path dir, std::string command) : dir_(std::move(dir)), command_(std::move(command)) {
  std::filesystem::create_directories(dir_);
}

void RunWriter::write_text(const std::string& name, const std::string& text) {
  std::ofstream f(dir_ / name, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + (dir_ / name).string());
  f << text;
  outputs_.push_back({name, sha256_hex(text)});
}

void RunWriter::write_table(const std::string& stem, const Table& table) {
  write_text(stem + ".csv", to_csv(table));
  write_text(stem + ".json", to_json(table).dump(2) + "\n");
}

void RunWriter::finish(const Config& cfg, std::uint64_t seed) {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &utc);
  nlohmann::json files = nlohmann::json::array();
  for (const auto& o : outputs_) files.push_back({{"file", o.name}, {"sha256", o.sha256}});
  nlohmann::json manifest = {
      {"command", command_}, {"config", cfg.entries()}, {"seed", seed},
      {"tool_version", kToolVersion}, {"timestamp", stamp}, {"outputs", files},
  };
  std::ofstream f(dir_ / "manifest.json", std::ios::binary);
  f << manifest.dump(2) << "\n";
}

}  // namespace dyncool::cli
