#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "qwalk/experiments.hpp"
#include "qwalk/matrix.hpp"

#include <json.hpp>

namespace qwalk {

/// Resolved parameters of one CLI run. The data outputs embed everything
/// except the wall-clock duration, which only appears in the sidecar
/// manifest file, so re-running the same manifest reproduces every data
/// output byte-for-byte.
struct RunManifest {
    std::string command;
    std::map<std::string, std::string> parameters; // resolved, stringified
    std::string tool_version;
    double duration_seconds = 0.0;

    /// Manifest JSON without the duration field (embedded in data outputs).
    nlohmann::ordered_json to_json_reproducible() const;
    /// Full manifest JSON including the duration (sidecar only).
    nlohmann::ordered_json to_json_full() const;
};

/// Formats a double with 12 significant digits; the CSV number format.
std::string format_csv_number(double x);

/// Writes content to path atomically: a temp file in the same directory is
/// renamed over the target, so a failed run never leaves partial output.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

/// Splits a CSV line on commas (the outputs never need quoting).
std::vector<std::string> split_csv_line(const std::string& line);

std::string centrality_csv(const CentralityReport& report);
nlohmann::ordered_json centrality_json(const CentralityReport& report,
                                       const RunManifest& manifest);

std::string sweep_baseline_csv(const SweepResult& s);
std::string sweep_deltas_csv(const SweepResult& s);
std::string sweep_signs_csv(const SweepResult& s);
nlohmann::ordered_json sweep_json(const SweepResult& s, const RunManifest& manifest);

/// Reads the sign matrix back out of a sweep.json document.
std::vector<std::vector<std::int8_t>> signs_from_sweep_json(const nlohmann::json& doc);

std::string affinity_csv(const Matrix& alpha);

/// N x N heatmap over [-1, 1] with a blue-white-red diverging scale and a
/// labeled legend bar. Output is well-formed XML.
std::string affinity_svg(const Matrix& alpha);

std::string compare_csv(const GeneratorComparison& cmp);

} // namespace qwalk
