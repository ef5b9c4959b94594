#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "wpt/config.hpp"
#include "wpt/oracle.hpp"

namespace wpt {

// Process exit codes used by the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitDiverged = 2,
  kExitIo = 3,
  kExitEnumerationCap = 4,
};

inline constexpr const char* kMetricsHeader = "episode,total_energy_j,reward,feasible_count,epsilon,wall_ms";

struct TrainingOutcome {
  std::filesystem::path metrics_path;
  std::filesystem::path checkpoint_path;
  std::filesystem::path config_path;
  std::size_t episodes = 0;
  learn::GreedyEvaluation greedy;
};

// Runs the configured agent, streaming one CSV row per episode to
// <output>/metrics.csv, then writes <output>/checkpoint.txt and the
// effective <output>/config.txt. Throws NumericalError on divergence and
// IoError when files cannot be written.
TrainingOutcome run_training(const RunConfig& cfg);

struct OracleReport {
  JointSearchResult exhaustive;
  SequentialSearchResult sequential;
  std::size_t codes = 0;
  std::size_t transmitters = 0;
  std::size_t receivers = 0;
};

// Throws ResourceError when N^L exceeds the configured cap.
OracleReport run_oracle(const RunConfig& cfg);
std::string oracle_report_json(const OracleReport& r);
std::string oracle_report_text(const OracleReport& r);

struct PlotSummary {
  std::size_t input_rows = 0;
  std::size_t output_rows = 0;
};

// Sliding-window means of reward and total energy from a metrics CSV.
// Windows longer than the series collapse to a single averaged point.
// Throws IoError on unreadable or malformed input.
PlotSummary emit_plot_data(const std::filesystem::path& metrics, const std::filesystem::path& out,
                           std::size_t window = 50);

}  // namespace wpt
