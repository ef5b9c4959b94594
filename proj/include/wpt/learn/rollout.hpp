#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "wpt/env.hpp"

namespace wpt::learn {

// Chooses agent `agent`'s code in state S_t^{agent} (the base state with the
// earlier agents' actions pending).
using AgentPolicy = std::function<int(const EnvState& state, std::size_t agent, std::span<const double> obs)>;

// Called after every rollout sub-step, committed or intermediate.
using TransitionHook = std::function<void(const EnvState& from, std::size_t agent, int action, double reward,
                                          const EnvState& to, bool done)>;

struct TraceStep {
  EnvState state;
  std::vector<double> observation;
  std::size_t agent = 0;
  int action = 0;
  double reward = 0.0;
};

struct EpisodeTrace {
  std::vector<TraceStep> steps;  // S_t, A_t^1, R_t^1, S_t^1, A_t^2, ...
  EnvState final_state;
  std::vector<double> committed_totals;  // after each full step
  double joint_reward = 0.0;             // rewards of the committing sub-steps only
};

// Runs full steps until the episode ends. Each full step asks the L agents
// in index order; `policies` holds one policy per agent, or a single one
// shared by all.
EpisodeTrace rollout_episode(const WptEnv& env, EnvState state, std::span<const AgentPolicy> policies,
                             const TransitionHook& hook = {});

// Picks the code maximising the provisional total: N evaluations per call,
// counted into *evaluations when given.
AgentPolicy greedy_oracle_policy(const WptEnv& env, std::uint64_t* evaluations = nullptr);

}  // namespace wpt::learn
