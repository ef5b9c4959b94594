// wpt: train beam-selection agents, run the exhaustive oracle, and smooth
// metrics for plotting.
//
//   wpt train <config> [--seed N] [--episodes N] [--out DIR]
//   wpt oracle <config> [--seed N]
//   wpt plotdata <metrics.csv> [--out FILE] [--window N]
//
// Exit codes: 0 ok, 2 training diverged, 3 I/O, config or data error,
// 4 enumeration cap exceeded.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "wpt/errors.hpp"
#include "wpt/harness.hpp"

namespace {

struct Overrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> episodes;
  std::optional<std::string> out;

  void apply(wpt::RunConfig& cfg) const {
    if (seed) cfg.seed = *seed;
    if (episodes) cfg.episodes = *episodes;
    if (out) cfg.output = *out;
    cfg.validate();
  }
};

int train(const std::string& path, const Overrides& ov) {
  wpt::RunConfig cfg = wpt::load_config(path);
  ov.apply(cfg);
  const wpt::TrainingOutcome r = wpt::run_training(cfg);
  std::cout << "episodes: " << r.episodes << "\nmetrics: " << r.metrics_path.string()
            << "\ncheckpoint: " << r.checkpoint_path.string() << "\ngreedy peak total: " << r.greedy.peak_total
            << " J\ngreedy final total: " << r.greedy.final_total << " J\n";
  return wpt::kExitOk;
}

int oracle(const std::string& path, const Overrides& ov) {
  wpt::RunConfig cfg = wpt::load_config(path);
  ov.apply(cfg);
  const wpt::OracleReport r = wpt::run_oracle(cfg);
  std::cout << wpt::oracle_report_json(r) << '\n' << wpt::oracle_report_text(r);
  return wpt::kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Codebook energy-beamforming simulator and learners"};
  app.require_subcommand(1);

  std::string config_path, metrics_path, plot_out;
  std::size_t window = 50;
  Overrides ov;

  auto add_overrides = [&](CLI::App* sub, bool training) {
    sub->add_option_function<std::uint64_t>("--seed", [&](const std::uint64_t& v) { ov.seed = v; }, "Override seed");
    if (training) {
      sub->add_option_function<std::size_t>("--episodes", [&](const std::size_t& v) { ov.episodes = v; },
                                            "Override episode count");
      sub->add_option_function<std::string>("--out", [&](const std::string& v) { ov.out = v; },
                                            "Override output directory");
    }
  };

  CLI::App* train_cmd = app.add_subcommand("train", "Train the configured agent");
  train_cmd->add_option("config", config_path, "Config file")->required();
  add_overrides(train_cmd, true);

  CLI::App* oracle_cmd = app.add_subcommand("oracle", "Exhaustive and sequential search on the configured instance");
  oracle_cmd->add_option("config", config_path, "Config file")->required();
  add_overrides(oracle_cmd, false);

  CLI::App* plot_cmd = app.add_subcommand("plotdata", "Smooth a metrics CSV for plotting");
  plot_cmd->add_option("metrics", metrics_path, "metrics.csv from a training run")->required();
  plot_cmd->add_option("--out", plot_out, "Output CSV (default: <metrics dir>/plot.csv)");
  plot_cmd->add_option("--window", window, "Smoothing window")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? wpt::kExitOk : wpt::kExitIo;
  }

  try {
    if (*train_cmd) return train(config_path, ov);
    if (*oracle_cmd) return oracle(config_path, ov);
    const std::filesystem::path in(metrics_path);
    const std::filesystem::path out = plot_out.empty() ? in.parent_path() / "plot.csv" : std::filesystem::path(plot_out);
    const wpt::PlotSummary s = wpt::emit_plot_data(in, out, window);
    std::cout << "wrote " << s.output_rows << " rows to " << out.string() << '\n';
    return wpt::kExitOk;
  } catch (const wpt::NumericalError& e) {
    std::cerr << "diverged: " << e.what() << '\n';
    return wpt::kExitDiverged;
  } catch (const wpt::ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return wpt::kExitEnumerationCap;
  } catch (const wpt::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return wpt::kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return wpt::kExitIo;
  }
}
