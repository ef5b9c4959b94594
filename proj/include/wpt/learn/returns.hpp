#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "wpt/seeding.hpp"

namespace wpt::learn {

// G_t = R_t + gamma * G_{t+1}, G_T = R_T.
std::vector<double> discounted_gain(std::span<const double> rewards, double gamma);

struct EpsilonSchedule {
  double decay = 0.995;
  double floor = 0.01;
};

// max(floor, decay^episode); 1 at episode 0.
double epsilon_schedule(std::size_t episode, const EpsilonSchedule& params = {});

// Lowest index among the maxima.
std::size_t argmax(std::span<const double> values);

// With probability epsilon a uniform draw over all actions, otherwise the
// argmax, so the greedy action has mass 1 - eps + eps/|A|.
std::size_t epsilon_greedy(std::span<const double> qrow, double epsilon, Rng& rng);

// Draw from a probability vector.
std::size_t sample_categorical(std::span<const double> probs, Rng& rng);

}  // namespace wpt::learn
