#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "wpt/env.hpp"
#include "wpt/oracle.hpp"
#include "wpt/learn/actor_critic.hpp"
#include "wpt/learn/mlp.hpp"
#include "wpt/learn/qtable.hpp"
#include "wpt/learn/returns.hpp"
#include "wpt/learn/rollout.hpp"

namespace wpt::learn {

struct EpisodeMetrics {
  std::size_t episode = 0;
  double total_energy = 0.0;  // committed total at the end of the episode
  double reward = 0.0;        // sum of committed-step rewards
  std::size_t feasible_count = 0;
  double epsilon = 0.0;
  double wall_ms = 0.0;
};

using MetricsSink = std::function<void(const EpisodeMetrics&)>;

// Outcome of running a learned policy greedily (no exploration) for one
// episode from reset.
struct GreedyEvaluation {
  std::vector<int> final_codes;
  double final_total = 0.0;
  std::vector<int> peak_codes;  // committed assignment with the largest total
  double peak_total = 0.0;
};

struct TabularConfig {
  double alpha = 0.1;
  double gamma = 0.9;
  EpsilonSchedule epsilon;
};

// Q-learning on the rollout MDP: one table whose keys carry the pending
// partial actions, so each agent's decision points get their own rows.
QTable train_tabular_rollout(WptEnv& env, const TabularConfig& cfg, std::size_t episodes, std::uint64_t seed,
                             const MetricsSink& sink = {});
GreedyEvaluation evaluate_tabular_rollout(WptEnv& env, const QTable& table, std::uint64_t seed = 0);

// Baseline without rollout: one agent choosing among all N^L joint actions.
QTable train_joint_tabular(WptEnv& env, const TabularConfig& cfg, std::size_t episodes, std::uint64_t seed,
                           const MetricsSink& sink = {});
GreedyEvaluation evaluate_joint_tabular(WptEnv& env, const QTable& table, std::uint64_t seed = 0);

struct ActorCriticConfig {
  double gamma = 0.9;
  double actor_lr = 0.01;
  double critic_lr = 0.03;
  std::size_t hidden = 32;
  std::size_t workers = 1;
  bool shared_policy = false;
  // Multiplies rewards before they reach the learner; metrics stay in points.
  double reward_scale = 0.01;
};

// Maps raw observations to network inputs: energies divided by the largest
// attainable per-receiver energy, codes divided by N.
struct FeatureScaler {
  double energy_scale = 1.0;
  double code_scale = 1.0;
  std::size_t receivers = 0;

  static FeatureScaler for_env(const WptEnv& env);
  std::vector<double> operator()(std::span<const double> obs) const;
};

struct AgentNetworks {
  MlpParams actor;
  MlpParams critic;
  friend bool operator==(const AgentNetworks&, const AgentNetworks&) = default;
};

struct ActorCriticModel {
  std::vector<AgentNetworks> agents;  // one entry when the policy is shared
  FeatureScaler scaler;

  const AgentNetworks& for_agent(std::size_t k) const { return agents.size() == 1 ? agents[0] : agents[k]; }
  AgentNetworks& for_agent(std::size_t k) { return agents.size() == 1 ? agents[0] : agents[k]; }
};

using EnvFactory = std::function<std::unique_ptr<WptEnv>()>;

// Advantage actor-critic over rollout episodes. Advantage is G_t - v(s_t);
// the critic regresses onto r + gamma * v(s'). With one worker the run is a
// pure function of the seed. With more, each worker owns an environment and
// applies its episode's gradient batch to a shared store under a lock.
// Throws NumericalError on divergence.
ActorCriticModel a3c_train(const EnvFactory& factory, const ActorCriticConfig& cfg, std::size_t episodes,
                           std::uint64_t seed, const MetricsSink& sink = {});
GreedyEvaluation evaluate_actor_critic(WptEnv& env, const ActorCriticModel& model, std::uint64_t seed = 0);

void save_model(std::ostream& out, const ActorCriticModel& model);
ActorCriticModel load_model(std::istream& in);

}  // namespace wpt::learn
