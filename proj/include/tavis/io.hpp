#pragma once

// Scenario config files (JSON), time-series CSV emission and run manifests.
//
// CSV rules: header row, comma separated, LF line endings, every number in
// decimal scientific notation with 17 significant digits.

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "tavis/dynamics.hpp"

namespace tavis {

inline constexpr const char* kVersionTag = "tavis-sim 1.0.0";

ScenarioConfig parse_config(const nlohmann::json& doc);
ScenarioConfig load_config(const std::filesystem::path& path);
nlohmann::json to_json(const ScenarioConfig& config);

std::string format_number(double value);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

void write_csv(const std::filesystem::path& path, const CsvTable& table);
CsvTable read_csv(const std::filesystem::path& path);

// Columns: t, t_over_tr, then the selected observables.
CsvTable to_table(const TimeSeries& series);

std::string sha256_file(const std::filesystem::path& path);

struct ManifestEntry {
  std::filesystem::path path;
  std::string sha256;
};

struct RunManifest {
  nlohmann::json config;
  std::string version = kVersionTag;
  double wall_seconds = 0.0;
  std::vector<ManifestEntry> files;
};

// Hashes each file and records it in the manifest.
void add_file(RunManifest& manifest, const std::filesystem::path& path);
void write_manifest(const std::filesystem::path& path, const RunManifest& manifest);
RunManifest read_manifest(const std::filesystem::path& path);

}  // namespace tavis
