#include "wpt/harness.hpp"

#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>

#include <json.hpp>

#include "wpt/errors.hpp"
#include "wpt/seeding.hpp"

namespace wpt {

namespace {

namespace fs = std::filesystem;

std::ofstream open_out(const fs::path& p) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + p.string());
  return out;
}

std::string csv_row(const learn::EpisodeMetrics& m, bool wall_clock) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%zu,%.12g,%.12g,%zu,%.9g,%.3f\n", m.episode, m.total_energy, m.reward,
                m.feasible_count, m.epsilon, wall_clock ? m.wall_ms : 0.0);
  return buf;
}

WptEnv make_env(const RunConfig& cfg) {
  return WptEnv(cfg.scenario_params(), cfg.env_params(), cfg.effective_placement_seed(), cfg.resample_rx_per_episode);
}

}  // namespace

TrainingOutcome run_training(const RunConfig& cfg) {
  cfg.validate();
  TrainingOutcome out;
  const fs::path dir(cfg.output);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());
  out.metrics_path = dir / "metrics.csv";
  out.checkpoint_path = dir / "checkpoint.txt";
  out.config_path = dir / "config.txt";

  {
    std::ofstream c = open_out(out.config_path);
    write_config(c, cfg);
  }

  std::ofstream metrics = open_out(out.metrics_path);
  metrics << kMetricsHeader << '\n';
  const learn::MetricsSink sink = [&](const learn::EpisodeMetrics& m) {
    metrics << csv_row(m, cfg.wall_clock);
    if (!metrics) throw IoError("failed writing " + out.metrics_path.string());
    ++out.episodes;
  };

  WptEnv env = make_env(cfg);
  const std::uint64_t eval_seed = derive_seed(cfg.seed, "evaluation");
  std::ostringstream checkpoint;
  switch (cfg.agent) {
    case AgentKind::TabularRollout: {
      const learn::QTable q = learn::train_tabular_rollout(env, cfg.tabular_config(), cfg.episodes, cfg.seed, sink);
      q.save(checkpoint);
      out.greedy = learn::evaluate_tabular_rollout(env, q, eval_seed);
      break;
    }
    case AgentKind::JointTabular: {
      const learn::QTable q = learn::train_joint_tabular(env, cfg.tabular_config(), cfg.episodes, cfg.seed, sink);
      q.save(checkpoint);
      out.greedy = learn::evaluate_joint_tabular(env, q, eval_seed);
      break;
    }
    case AgentKind::ActorCriticRollout: {
      const learn::EnvFactory factory = [&cfg] { return std::make_unique<WptEnv>(make_env(cfg)); };
      const learn::ActorCriticModel model =
          learn::a3c_train(factory, cfg.actor_critic_config(), cfg.episodes, cfg.seed, sink);
      learn::save_model(checkpoint, model);
      out.greedy = learn::evaluate_actor_critic(env, model, eval_seed);
      break;
    }
  }
  metrics.close();
  if (!metrics) throw IoError("failed writing " + out.metrics_path.string());

  std::ofstream ck = open_out(out.checkpoint_path);
  ck << checkpoint.str();
  if (!ck) throw IoError("failed writing " + out.checkpoint_path.string());
  return out;
}

OracleReport run_oracle(const RunConfig& cfg) {
  cfg.validate();
  const Scenario sc = make_scenario(cfg.scenario_params(), cfg.effective_placement_seed());
  OracleReport r;
  r.exhaustive = exhaustive_search(sc.gains, cfg.transfer_time, cfg.e_min, cfg.enumeration_cap);
  r.sequential = greedy_sequential_search(sc.gains, cfg.transfer_time);
  r.codes = sc.gains.codes();
  r.transmitters = sc.gains.transmitters();
  r.receivers = sc.gains.receivers();
  return r;
}

std::string oracle_report_json(const OracleReport& r) {
  nlohmann::json j;
  j["codes"] = r.codes;
  j["transmitters"] = r.transmitters;
  j["receivers"] = r.receivers;
  j["exhaustive"] = {{"codes", r.exhaustive.codes},
                     {"total_energy_j", r.exhaustive.total},
                     {"feasible", r.exhaustive.feasible},
                     {"evaluations", r.exhaustive.evaluations}};
  j["sequential"] = {{"codes", r.sequential.codes},
                     {"total_energy_j", r.sequential.total},
                     {"evaluations", r.sequential.evaluations}};
  return j.dump();
}

std::string oracle_report_text(const OracleReport& r) {
  auto codes = [](const std::vector<int>& c) {
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
    return s + ")";
  };
  char line[256];
  std::string s;
  std::snprintf(line, sizeof line, "instance: N=%zu codes, L=%zu transmitters, K=%zu receivers\n", r.codes,
                r.transmitters, r.receivers);
  s += line;
  std::snprintf(line, sizeof line, "exhaustive: codes=%s total=%.9g J feasible=%s evaluations=%llu\n",
                codes(r.exhaustive.codes).c_str(), r.exhaustive.total, r.exhaustive.feasible ? "yes" : "no",
                static_cast<unsigned long long>(r.exhaustive.evaluations));
  s += line;
  std::snprintf(line, sizeof line, "sequential: codes=%s total=%.9g J evaluations=%llu\n",
                codes(r.sequential.codes).c_str(), r.sequential.total,
                static_cast<unsigned long long>(r.sequential.evaluations));
  s += line;
  return s;
}

PlotSummary emit_plot_data(const fs::path& metrics, const fs::path& out, std::size_t window) {
  if (window == 0) throw InvalidInput("window must be at least 1");
  std::ifstream in(metrics);
  if (!in) throw IoError("cannot open metrics file " + metrics.string());
  std::string header;
  if (!std::getline(in, header) || header != kMetricsHeader)
    throw IoError(metrics.string() + ": missing or unexpected header");

  std::vector<double> episode, total, reward;
  std::string line;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::istringstream ls(line);
    for (std::string cell; std::getline(ls, cell, ',');) cells.push_back(cell);
    if (cells.size() != 6) throw IoError(metrics.string() + ":" + std::to_string(lineno) + ": expected 6 fields");
    double f[6];
    for (std::size_t n = 0; n < 6; ++n) {
      char* end = nullptr;
      f[n] = std::strtod(cells[n].c_str(), &end);
      if (cells[n].empty() || *end != '\0')
        throw IoError(metrics.string() + ":" + std::to_string(lineno) + ": bad field '" + cells[n] + "'");
    }
    episode.push_back(f[0]);
    total.push_back(f[1]);
    reward.push_back(f[2]);
  }
  if (episode.empty()) throw IoError(metrics.string() + ": no data rows");

  const std::size_t rows = episode.size();
  const std::size_t w = std::min(window, rows);
  std::ofstream o = open_out(out);
  o << "episode,reward_smoothed,total_energy_smoothed\n";
  PlotSummary summary{rows, 0};
  for (std::size_t end = w; end <= rows; ++end) {
    double rsum = 0.0, tsum = 0.0;
    for (std::size_t i = end - w; i < end; ++i) {
      rsum += reward[i];
      tsum += total[i];
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "%.0f,%.12g,%.12g\n", episode[end - 1], rsum / static_cast<double>(w),
                  tsum / static_cast<double>(w));
    o << buf;
    ++summary.output_rows;
  }
  if (!o) throw IoError("failed writing " + out.string());
  return summary;
}

}  // namespace wpt
