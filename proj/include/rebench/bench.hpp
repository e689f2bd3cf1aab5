#pragma once

#include "rebench/algorithms.hpp"
#include "rebench/core.hpp"

#include <map>

namespace rebench {

struct ExperimentConfig {
  std::vector<std::string> problems;        // empty: the 16 unconstrained problems
  std::vector<AlgorithmConfig> algorithms;  // empty: all six with default settings
  int runs = 31;
  int budget = 10000;
  std::string bounds_file;                  // empty: self-calibrate
  int calibrate_effort = 100000;
  int calibrate_runs = 31;
  std::string output_dir = "results";
  std::uint64_t base_seed = 1;
};

struct CalibrationResult {
  NormalizationBounds bounds;
  std::vector<Solution> archive;  // non-dominated union over every search, finite only
};

using BoundsTable = std::map<std::string, NormalizationBounds>;

/// Stable per-cell seed: base + FNV-1a of "problem|algorithm|run".
std::uint64_t run_seed(std::uint64_t base, const std::string& problem,
                       const std::string& algorithm, int run);

/// The configured directory unless the REBENCH_OUTPUT_DIR environment
/// variable overrides it.
std::string resolve_output_dir(const std::string& configured);

/// Ideal/nadir estimation: the five generational EMOAs at the stated effort
/// for `runs` seeds each, plus one single-objective descent per objective.
CalibrationResult calibrate(const std::string& problem_id, int effort = 100000, int runs = 31,
                            std::uint64_t base_seed = 1);

BoundsTable load_bounds(const std::string& path);
void save_bounds(const BoundsTable& table, const std::string& path);

/// Executes the full (problem x algorithm x run) grid into output_dir:
/// bounds.json, per-run population CSVs with JSON sidecars, per-cell HV
/// lists, and a manifest. smsemoa cells with more than 3 objectives are
/// recorded as absent.
void run_experiment(const ExperimentConfig& cfg);

/// Reads a result directory, writes summary.csv and summary.txt, and
/// returns the aligned text table.
std::string summarize(const std::string& result_dir);

/// Thins an archive to k points (default 500 per objective) and writes an
/// objective-space CSV.
void export_front(const std::string& problem_id, const std::vector<Vec>& archive, int k,
                  const std::string& out_path);

/// Objective vectors of an archive CSV written by this tool.
std::vector<Vec> load_archive_objectives(const std::string& path);

ExperimentConfig config_from_json(const std::string& path);

}  // namespace rebench
