#pragma once

// Flat `key = value` run configuration. Every key has a default; unknown keys
// are rejected. Angles are in degrees here and converted to radians when the
// scenario is built.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wpt/env.hpp"
#include "wpt/learn/trainers.hpp"
#include "wpt/oracle.hpp"
#include "wpt/scenario.hpp"

namespace wpt {

enum class AgentKind { TabularRollout, ActorCriticRollout, JointTabular };

std::string_view to_string(AgentKind kind);
AgentKind parse_agent_kind(std::string_view text);

struct RunConfig {
  // run
  AgentKind agent = AgentKind::TabularRollout;
  std::size_t episodes = 1000;
  std::uint64_t seed = 1;
  std::string output = "run";
  bool wall_clock = false;
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;

  // geometry
  std::vector<Point> tx_positions{{0, 0}, {30, 0}, {30, 30}, {0, 30}};
  std::optional<std::vector<double>> tx_boresights_deg;
  double field_x = 30.0;
  double field_y = 30.0;
  std::size_t receivers = 5;
  std::vector<Point> rx_positions;
  std::optional<std::uint64_t> placement_seed;
  bool resample_rx_per_episode = false;

  // array and codebook
  std::size_t elements = 64;
  double spacing_phase = kPi;
  double carrier_hz = 8e6;
  std::size_t codes = 8;
  double code_range_deg = 90.0;
  std::optional<double> code_center_deg;

  // episode
  double transfer_time = 0.5;
  double e_min = 0.0;
  std::size_t max_steps = 100;

  // learners
  double gamma = 0.9;
  double q_lr = 0.1;
  double actor_lr = 0.01;
  double critic_lr = 0.03;
  double epsilon_decay = 0.995;
  double epsilon_floor = 0.01;
  std::size_t hidden = 32;
  std::size_t workers = 1;
  bool shared_policy = false;
  double reward_scale = 0.01;

  void validate() const;

  ScenarioParams scenario_params() const;
  EnvParams env_params() const;
  std::uint64_t effective_placement_seed() const;
  learn::TabularConfig tabular_config() const;
  learn::ActorCriticConfig actor_critic_config() const;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

// Sets one key from its textual value. Throws ConfigError.
void set_config_key(RunConfig& cfg, std::string_view key, std::string_view value, std::size_t line = 0);

RunConfig parse_config(std::istream& in);
RunConfig load_config(const std::filesystem::path& path);

// Writes every key, so the output reloads to an identical config.
void write_config(std::ostream& out, const RunConfig& cfg);

}  // namespace wpt
