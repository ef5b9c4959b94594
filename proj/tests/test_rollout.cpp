#include <doctest.h>

#include <vector>

#include "fixtures.hpp"
#include "wpt/errors.hpp"
#include "wpt/learn/rollout.hpp"
#include "wpt/oracle.hpp"

using namespace wpt;
using namespace wpt::learn;
using wpt::testing::close_rel;
using wpt::testing::corner_params;

TEST_CASE("trace holds L sub-steps per full step") {
  EnvParams ep;
  ep.max_steps = 7;
  WptEnv env(corner_params(3, 4, 8), ep, 5);
  const AgentPolicy fixed = [](const EnvState&, std::size_t k, std::span<const double>) { return static_cast<int>(k); };
  const EpisodeTrace trace = rollout_episode(env, env.reset(1), std::span<const AgentPolicy>(&fixed, 1));
  CHECK(trace.steps.size() == 3 * 7);
  CHECK(trace.committed_totals.size() == 7);
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    CHECK(trace.steps[i].agent == i % 3);
    CHECK(trace.steps[i].state.intermediate() == (i % 3 != 0));
  }
  CHECK(trace.final_state.step_count == 7);
  CHECK(trace.final_state.codes == std::vector<int>{0, 1, 2});
}

TEST_CASE("per-agent policies are routed by index") {
  EnvParams ep;
  ep.max_steps = 2;
  WptEnv env(corner_params(2, 3, 4), ep, 5);
  const std::vector<AgentPolicy> policies{
      [](const EnvState&, std::size_t, std::span<const double>) { return 3; },
      [](const EnvState&, std::size_t, std::span<const double>) { return 1; },
  };
  const EpisodeTrace trace = rollout_episode(env, env.reset(0), policies);
  CHECK(trace.final_state.codes == std::vector<int>{3, 1});
  const std::vector<AgentPolicy> three(3, policies[0]);
  CHECK_THROWS_AS(rollout_episode(env, env.reset(0), three), InvalidInput);
}

TEST_CASE("greedy oracle policy reaches the sequential optimum in one full step") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    EnvParams ep;
    ep.max_steps = 3;
    WptEnv env(corner_params(4, 5, 8), ep, seed + 40);
    std::uint64_t evals = 0;
    const AgentPolicy greedy = greedy_oracle_policy(env, &evals);
    const EpisodeTrace trace = rollout_episode(env, env.reset(0), std::span<const AgentPolicy>(&greedy, 1));
    const SequentialSearchResult seq = greedy_sequential_search(env.links(), ep.transfer_time);
    CHECK(close_rel(trace.committed_totals[0], seq.total, 1e-12));
    CHECK(evals <= 8 * 4 * ep.max_steps);
    CHECK(evals == seq.evaluations * ep.max_steps);
  }
}

TEST_CASE("rollout refuses an intermediate start") {
  WptEnv env(corner_params(2, 3, 4), EnvParams{}, 5);
  const EnvState mid = env.step_rollout(env.reset(0), 0, 1).next;
  const AgentPolicy p = [](const EnvState&, std::size_t, std::span<const double>) { return 0; };
  CHECK_THROWS_AS(rollout_episode(env, mid, std::span<const AgentPolicy>(&p, 1)), ProtocolError);
}
