#include "wpt/learn/rollout.hpp"

#include "wpt/errors.hpp"

namespace wpt::learn {

EpisodeTrace rollout_episode(const WptEnv& env, EnvState state, std::span<const AgentPolicy> policies,
                             const TransitionHook& hook) {
  const std::size_t l = env.agents();
  if (policies.size() != 1 && policies.size() != l) throw InvalidInput("need one policy per agent or one shared");
  if (state.intermediate()) throw ProtocolError("rollout must start from a committed state");

  EpisodeTrace trace;
  bool done = state.step_count >= env.params().max_steps;
  while (!done) {
    for (std::size_t k = 0; k < l; ++k) {
      TraceStep step;
      step.observation = observation(state);
      step.agent = k;
      const AgentPolicy& policy = policies.size() == 1 ? policies[0] : policies[k];
      step.action = policy(state, k, step.observation);
      StepResult r = env.step_rollout(state, k, step.action);
      step.reward = r.reward;
      if (hook) hook(state, k, step.action, r.reward, r.next, r.done);
      step.state = std::move(state);
      trace.steps.push_back(std::move(step));
      state = std::move(r.next);
      done = r.done;
      if (k + 1 == l) {
        trace.committed_totals.push_back(state.total());
        trace.joint_reward += r.reward;
      }
    }
  }
  trace.final_state = std::move(state);
  return trace;
}

AgentPolicy greedy_oracle_policy(const WptEnv& env, std::uint64_t* evaluations) {
  return [&env, evaluations](const EnvState& state, std::size_t agent, std::span<const double>) {
    int best = 0;
    double best_total = -1.0;
    for (std::size_t i = 0; i < env.codes(); ++i) {
      const double t = env.provisional_total(state, agent, static_cast<int>(i));
      if (evaluations) ++*evaluations;
      if (t > best_total) {
        best_total = t;
        best = static_cast<int>(i);
      }
    }
    return best;
  };
}

}  // namespace wpt::learn
