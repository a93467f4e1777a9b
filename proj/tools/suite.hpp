#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "shadowgauge/inequalities.hpp"

namespace shadowgauge::cli {

enum class Format { json, csv };

struct SuiteConfig {
    int dim = 3;
    int body_count = 10;
    int generator_count = 6;
    std::uint64_t seed = 1;
    std::int64_t coarse_samples = 0;
    int restarts = 8;
    std::optional<double> tol_closed_form;
    std::optional<double> tol_heuristic;
    bool with_oracle = false;
    std::string output_path;
    Format format = Format::json;
};

/// Writes zonotope_NNN.json for each random body plus the four fixtures.
/// Returns the written paths in order.
std::vector<std::filesystem::path> generate_suite(const SuiteConfig& cfg, const std::filesystem::path& dir);

struct Row {
    std::string body;
    std::string against; // empty unless the row compares a pair
    CheckReport report;
};

struct FileError {
    std::string file;
    std::string message;
};

struct SuiteResult {
    std::vector<Row> rows;
    std::vector<FileError> errors;
    int passed = 0;
    int failed = 0;
    int not_applicable = 0;
};

/// Files are checked in the given order; rows keep that order.
SuiteResult run_suite(const SuiteConfig& cfg, const std::vector<std::filesystem::path>& files);

nlohmann::json suite_to_json(const SuiteResult& result);
std::string suite_to_csv(const SuiteResult& result);

} // namespace shadowgauge::cli
