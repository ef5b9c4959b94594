#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "wpt/env.hpp"
#include "wpt/scenario.hpp"
#include "wpt/seeding.hpp"

namespace wpt::testing {

inline bool close_rel(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max({std::abs(a), std::abs(b), 1e-300});
}

// Corner transmitters of the default 30 m field, first `l` of them.
inline ScenarioParams corner_params(std::size_t l, std::size_t k, std::size_t n) {
  ScenarioParams p;
  p.tx_positions.resize(l);
  p.receivers = k;
  p.codes = n;
  return p;
}

inline LinkTable random_table(std::size_t k, std::size_t l, std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::uniform_real_distribution<double> u(0.0, 10.0);
  LinkTable t(k, l, n);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t p = 0; p < l; ++p)
      for (std::size_t i = 0; i < n; ++i) t(j, p, i) = u(rng);
  return t;
}

// Small instance used for the learning checks: two corner transmitters,
// three receivers, four codes, placement fixed.
inline constexpr std::uint64_t kSmallPlacement = 7;

inline WptEnv small_env(std::size_t max_steps = 100) {
  EnvParams ep;
  ep.max_steps = max_steps;
  return WptEnv(corner_params(2, 3, 4), ep, kSmallPlacement);
}

}  // namespace wpt::testing
