#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "wpt/learn/mlp.hpp"

namespace wpt::learn {

struct CriticSample {
  std::vector<double> obs;
  double target = 0.0;
};

struct ActorSample {
  std::vector<double> obs;
  std::size_t action = 0;
  double advantage = 0.0;
};

struct Transition {
  std::vector<double> obs;
  double reward = 0.0;
  std::vector<double> next_obs;
  bool terminal = false;
};

// (1 / 2n) * sum (v(s) - target)^2 and its gradient (accumulated into grad).
double critic_loss(const MlpParams& critic, std::span<const CriticSample> batch);
double critic_gradient(const MlpParams& critic, std::span<const CriticSample> batch, MlpParams& grad);

// (1 / n) * sum A * ln pi(a|s) and its gradient.
double actor_objective(const MlpParams& actor, std::span<const ActorSample> batch);
double actor_gradient(const MlpParams& actor, std::span<const ActorSample> batch, MlpParams& grad);

// Targets r + gamma * v(s') under the current critic (r alone when terminal).
std::vector<CriticSample> bootstrap_targets(const MlpParams& critic, std::span<const Transition> trace,
                                            double gamma);

// One gradient-descent step on the squared TD error; targets are frozen
// before differentiating. Throws NumericalError on non-finite values.
void critic_step(MlpParams& critic, std::span<const CriticSample> batch, double lr);
void critic_step(MlpParams& critic, std::span<const Transition> trace, double gamma, double lr);

// One gradient-ascent step on sum A * ln pi(a|s): positive advantage raises
// pi(a|s).
void actor_step(MlpParams& actor, std::span<const ActorSample> batch, double lr);

}  // namespace wpt::learn
