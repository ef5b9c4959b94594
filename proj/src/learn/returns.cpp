#include "wpt/learn/returns.hpp"

#include <cmath>
#include <random>

#include "wpt/errors.hpp"

namespace wpt::learn {

std::vector<double> discounted_gain(std::span<const double> rewards, double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) throw InvalidInput("discount must lie in [0, 1]");
  std::vector<double> g(rewards.size());
  double next = 0.0;
  for (std::size_t t = rewards.size(); t-- > 0;) {
    g[t] = rewards[t] + gamma * next;
    next = g[t];
  }
  return g;
}

double epsilon_schedule(std::size_t episode, const EpsilonSchedule& params) {
  if (!(params.decay > 0.0 && params.decay <= 1.0)) throw InvalidInput("epsilon decay must lie in (0, 1]");
  if (!(params.floor >= 0.0 && params.floor <= 1.0)) throw InvalidInput("epsilon floor must lie in [0, 1]");
  return std::max(params.floor, std::pow(params.decay, static_cast<double>(episode)));
}

std::size_t argmax(std::span<const double> values) {
  if (values.empty()) throw InvalidInput("argmax of an empty row");
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i] > values[best]) best = i;
  return best;
}

std::size_t epsilon_greedy(std::span<const double> qrow, double epsilon, Rng& rng) {
  if (qrow.empty()) throw InvalidInput("epsilon-greedy over an empty action set");
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) throw InvalidInput("epsilon must lie in [0, 1]");
  if (epsilon > 0.0) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    if (coin(rng) < epsilon) {
      std::uniform_int_distribution<std::size_t> pick(0, qrow.size() - 1);
      return pick(rng);
    }
  }
  return argmax(qrow);
}

std::size_t sample_categorical(std::span<const double> probs, Rng& rng) {
  if (probs.empty()) throw InvalidInput("empty distribution");
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double x = u(rng);
  for (std::size_t i = 0; i + 1 < probs.size(); ++i) {
    if (x < probs[i]) return i;
    x -= probs[i];
  }
  return probs.size() - 1;
}

}  // namespace wpt::learn
