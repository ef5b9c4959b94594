#include "wpt/env.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "wpt/errors.hpp"
#include "wpt/seeding.hpp"

namespace wpt {

void EnvParams::validate() const {
  if (!(transfer_time > 0.0)) throw InvalidInput("transfer time must be positive");
  if (!(e_min >= 0.0)) throw InvalidInput("e_min must be non-negative");
  if (max_steps < 1) throw InvalidInput("max_steps must be at least 1");
}

double EnvState::total() const { return std::accumulate(energies.begin(), energies.end(), 0.0); }

namespace {

void check_assignment(std::span<const int> codes, const LinkTable& links) {
  if (codes.size() != links.transmitters()) throw InvalidInput("assignment needs one code per transmitter");
  for (std::size_t p = 0; p < codes.size(); ++p) {
    if (codes[p] == kUnset) throw InvalidState("transmitter " + std::to_string(p) + " has no code assigned");
    if (codes[p] < 0 || static_cast<std::size_t>(codes[p]) >= links.codes())
      throw IndexError("code index " + std::to_string(codes[p]) + " out of range");
  }
}

double sum(std::span<const double> v) { return std::accumulate(v.begin(), v.end(), 0.0); }

}  // namespace

double expected_energy(std::size_t j, std::span<const int> codes, const LinkTable& links, double duration) {
  if (j >= links.receivers()) throw IndexError("receiver index out of range");
  check_assignment(codes, links);
  return receiver_energy(links, j, codes, duration);
}

std::vector<double> expected_energies(std::span<const int> codes, const LinkTable& links, double duration) {
  check_assignment(codes, links);
  std::vector<double> e(links.receivers());
  for (std::size_t j = 0; j < e.size(); ++j) e[j] = receiver_energy(links, j, codes, duration);
  return e;
}

double sample_energy_monte_carlo(std::span<const ComplexVector> links_to_rx, std::span<const ComplexVector> codes,
                                 double duration, std::uint64_t n_samples, std::uint64_t seed, SignalModel model,
                                 Exec exec) {
  if (links_to_rx.size() != codes.size()) throw InvalidInput("one code per link row required");
  if (!(duration > 0.0)) throw InvalidInput("duration must be positive");
  if (n_samples == 0) throw InvalidInput("need at least one sample");
  // Per-transmitter complex amplitude alpha a*(phi) f at the receiver.
  std::vector<Complex> amp(links_to_rx.size());
  for (std::size_t p = 0; p < amp.size(); ++p) {
    if (links_to_rx[p].size() != codes[p].size()) throw InvalidInput("link and code lengths differ");
    Complex acc{0.0, 0.0};
    for (std::size_t m = 0; m < codes[p].size(); ++m) acc += links_to_rx[p][m] * codes[p][m];
    amp[p] = acc;
  }
  return exec == Exec::Serial ? kernels::sampled_energy_serial(amp, duration, n_samples, seed, model)
                              : kernels::sampled_energy_parallel(amp, duration, n_samples, seed, model);
}

double sample_energy_monte_carlo(const Scenario& sc, std::size_t j, std::span<const int> codes, double duration,
                                 std::uint64_t n_samples, std::uint64_t seed, SignalModel model, Exec exec) {
  check_assignment(codes, sc.gains);
  if (j >= sc.geometry.receivers()) throw IndexError("receiver index out of range");
  const std::size_t l = sc.geometry.transmitters();
  std::vector<ComplexVector> rows, cs;
  for (std::size_t p = 0; p < l; ++p) {
    rows.push_back(sc.link(j, p));
    cs.push_back(sc.codebook.code(static_cast<std::size_t>(codes[p])));
  }
  return sample_energy_monte_carlo(rows, cs, duration, n_samples, seed, model, exec);
}

double reward(double prev_total, double new_total, std::span<const double> energies, double e_min) {
  double r = 0.0;
  if (new_total > prev_total) r += 100.0;
  if (new_total < prev_total) r -= 300.0;
  for (double e : energies)
    if (e < e_min) r -= 50.0;
  return r;
}

EnvState initial_state(std::size_t receivers, std::size_t transmitters) {
  EnvState s;
  s.energies.assign(receivers, 0.0);
  s.codes.assign(transmitters, kUnset);
  return s;
}

StepResult step_joint(const EnvState& state, std::span<const int> joint_action, const EnvParams& params,
                      const LinkTable& links) {
  if (state.intermediate()) throw ProtocolError("joint step on an intermediate rollout state");
  if (state.step_count >= params.max_steps) throw ProtocolError("episode already finished");
  check_assignment(joint_action, links);

  StepResult r;
  r.next = state;
  r.next.codes.assign(joint_action.begin(), joint_action.end());
  r.next.energies = expected_energies(joint_action, links, params.transfer_time);
  const double total = sum(r.next.energies);
  r.reward = reward(state.prev_total, total, r.next.energies, params.e_min);
  r.next.prev_total = total;
  r.next.step_count = state.step_count + 1;
  r.done = r.next.step_count == params.max_steps;
  return r;
}

std::vector<int> provisional_codes(const EnvState& state, std::size_t agent, int action,
                                   std::span<const int> default_codes) {
  std::vector<int> codes(state.codes.size());
  for (std::size_t p = 0; p < codes.size(); ++p)
    codes[p] = state.codes[p] == kUnset ? default_codes[p] : state.codes[p];
  for (const PartialAction& pa : state.partial) codes[pa.agent] = pa.action;
  codes[agent] = action;
  return codes;
}

StepResult step_rollout(const EnvState& state, std::size_t agent, int action, const EnvParams& params,
                        const LinkTable& links, std::span<const int> default_codes) {
  if (state.step_count >= params.max_steps) throw ProtocolError("episode already finished");
  if (agent != state.partial.size())
    throw ProtocolError("agent " + std::to_string(agent) + " acted out of turn; expected agent " +
                        std::to_string(state.partial.size()));
  if (agent >= links.transmitters()) throw IndexError("agent index out of range");
  if (action < 0 || static_cast<std::size_t>(action) >= links.codes())
    throw IndexError("code index " + std::to_string(action) + " out of range");
  if (default_codes.size() != links.transmitters()) throw InvalidInput("one default code per transmitter required");

  if (agent + 1 == links.transmitters()) {
    std::vector<int> joint(links.transmitters());
    for (const PartialAction& pa : state.partial) joint[pa.agent] = pa.action;
    joint[agent] = action;
    EnvState base = state;
    base.partial.clear();
    return step_joint(base, joint, params, links);
  }

  StepResult r;
  r.next = state;
  r.next.partial.push_back({agent, action});
  const std::vector<int> codes = provisional_codes(state, agent, action, default_codes);
  r.next.energies = expected_energies(codes, links, params.transfer_time);
  r.reward = reward(state.prev_total, sum(r.next.energies), r.next.energies, params.e_min);
  r.done = false;
  return r;
}

std::vector<double> observation(const EnvState& state) {
  std::vector<double> obs(state.energies.begin(), state.energies.end());
  std::vector<int> codes = state.codes;
  for (const PartialAction& pa : state.partial) codes[pa.agent] = pa.action;
  for (int c : codes) obs.push_back(static_cast<double>(c));
  return obs;
}

WptEnv::WptEnv(ScenarioParams scenario, EnvParams params, std::uint64_t placement_seed, bool resample_per_episode)
    : scenario_params_(std::move(scenario)), params_(params), resample_(resample_per_episode) {
  params_.validate();
  scenario_ = std::make_shared<const Scenario>(make_scenario(scenario_params_, placement_seed));
}

EnvState WptEnv::reset(std::uint64_t episode_seed) {
  if (resample_)
    scenario_ = std::make_shared<const Scenario>(make_scenario(scenario_params_, derive_seed(episode_seed, "placement")));
  return initial_state(receivers(), agents());
}

StepResult WptEnv::step_joint(const EnvState& state, std::span<const int> joint_action) const {
  return wpt::step_joint(state, joint_action, params_, scenario_->gains);
}

StepResult WptEnv::step_rollout(const EnvState& state, std::size_t agent, int action) const {
  return wpt::step_rollout(state, agent, action, params_, scenario_->gains, scenario_->default_codes);
}

double WptEnv::provisional_total(const EnvState& state, std::size_t agent, int action) const {
  const std::vector<int> codes = provisional_codes(state, agent, action, scenario_->default_codes);
  return sum(expected_energies(codes, scenario_->gains, params_.transfer_time));
}

}  // namespace wpt
