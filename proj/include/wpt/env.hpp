#pragma once

// The beam-selection MDP: every transmitter is an agent choosing a code.
// States step either jointly (all agents at once) or through rollout
// intermediate states where agents act one at a time in index order.

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "wpt/kernels.hpp"
#include "wpt/link_table.hpp"
#include "wpt/scenario.hpp"

namespace wpt {

struct EnvParams {
  double transfer_time = 0.5;  // s
  double e_min = 0.0;          // J
  std::size_t max_steps = 100;

  void validate() const;
};

struct PartialAction {
  std::size_t agent = 0;
  int action = 0;
  friend bool operator==(const PartialAction&, const PartialAction&) = default;
};

struct EnvState {
  // Committed energies; provisional ones while `partial` is non-empty.
  std::vector<double> energies;
  std::vector<int> codes;  // kUnset before a transmitter's first commit
  std::size_t step_count = 0;
  std::vector<PartialAction> partial;
  double prev_total = 0.0;

  bool intermediate() const { return !partial.empty(); }
  double total() const;
  friend bool operator==(const EnvState&, const EnvState&) = default;
};

struct StepResult {
  EnvState next;
  double reward = 0.0;
  bool done = false;
};

// Closed-form expectation of the received energy over zero-mean,
// unit-variance independent transmit signals: cross terms vanish.
double expected_energy(std::size_t j, std::span<const int> codes, const LinkTable& links, double duration);
std::vector<double> expected_energies(std::span<const int> codes, const LinkTable& links, double duration);

// Discretised integral of |y_j(t)|^2 with sampled transmit signals.
// `links_to_rx[p]` is the link row from transmitter p, `codes[p]` its code.
double sample_energy_monte_carlo(std::span<const ComplexVector> links_to_rx, std::span<const ComplexVector> codes,
                                 double duration, std::uint64_t n_samples, std::uint64_t seed,
                                 SignalModel model = SignalModel::ComplexGaussian, Exec exec = Exec::Parallel);
double sample_energy_monte_carlo(const Scenario& sc, std::size_t j, std::span<const int> codes, double duration,
                                 std::uint64_t n_samples, std::uint64_t seed,
                                 SignalModel model = SignalModel::ComplexGaussian, Exec exec = Exec::Parallel);

// +100 if the total rose, -300 if it fell, 0 if unchanged; -50 per receiver
// below e_min.
double reward(double prev_total, double new_total, std::span<const double> energies, double e_min);

EnvState initial_state(std::size_t receivers, std::size_t transmitters);

StepResult step_joint(const EnvState& state, std::span<const int> joint_action, const EnvParams& params,
                      const LinkTable& links);

// `default_codes` stand in for agents that have never committed when the
// provisional energies of an intermediate state are evaluated.
StepResult step_rollout(const EnvState& state, std::size_t agent, int action, const EnvParams& params,
                        const LinkTable& links, std::span<const int> default_codes);

// [e_1..e_K, c_1..c_L]; unset codes are -1, pending rollout actions replace
// the committed code of their agent.
std::vector<double> observation(const EnvState& state);

// Codes that would be in force if `agent` played `action` on top of the
// state's pending partial actions (later agents keep committed/default codes).
std::vector<int> provisional_codes(const EnvState& state, std::size_t agent, int action,
                                   std::span<const int> default_codes);

// Owns a scenario and the episode parameters. Stepping is const; only
// reset() may rebuild the scenario when per-episode resampling is on.
class WptEnv {
 public:
  WptEnv(ScenarioParams scenario, EnvParams params, std::uint64_t placement_seed, bool resample_per_episode = false);

  EnvState reset(std::uint64_t episode_seed);

  StepResult step_joint(const EnvState& state, std::span<const int> joint_action) const;
  StepResult step_rollout(const EnvState& state, std::size_t agent, int action) const;

  // Total expected energy if `agent` played `action` now.
  double provisional_total(const EnvState& state, std::size_t agent, int action) const;

  const Scenario& scenario() const { return *scenario_; }
  const LinkTable& links() const { return scenario_->gains; }
  const EnvParams& params() const { return params_; }
  std::size_t agents() const { return scenario_->geometry.transmitters(); }
  std::size_t receivers() const { return scenario_->geometry.receivers(); }
  std::size_t codes() const { return scenario_->codebook.size(); }
  std::size_t observation_size() const { return receivers() + agents(); }

 private:
  ScenarioParams scenario_params_;
  EnvParams params_;
  bool resample_;
  std::shared_ptr<const Scenario> scenario_;
};

}  // namespace wpt
