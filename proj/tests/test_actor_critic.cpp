#include <doctest.h>

#include <limits>
#include <vector>

#include "gradcheck.hpp"
#include "wpt/errors.hpp"
#include "wpt/learn/actor_critic.hpp"

using namespace wpt;
using namespace wpt::learn;
using wpt::testing::random_network;
using wpt::testing::random_obs;

TEST_CASE("actor gradient matches finite differences") {
  for (std::uint64_t s = 0; s < 10; ++s) CHECK(wpt::testing::actor_check(1000 + s) < 1e-4);
}

TEST_CASE("critic gradient matches finite differences") {
  for (std::uint64_t s = 0; s < 10; ++s) CHECK(wpt::testing::critic_check(2000 + s) < 1e-4);
}

TEST_CASE("zero TD error leaves the critic unchanged") {
  Rng rng(3);
  MlpParams critic = random_network(4, 6, 1, Head::Linear, rng);
  const std::vector<double> x = random_obs(4, rng);
  const MlpParams before = critic;
  const std::vector<CriticSample> batch{{x, mlp_forward(critic, x)[0]}};
  critic_step(critic, batch, 0.5);
  CHECK(critic == before);
}

TEST_CASE("zero advantage leaves the actor unchanged") {
  Rng rng(5);
  MlpParams actor = random_network(4, 6, 3, Head::Softmax, rng);
  const MlpParams before = actor;
  const std::vector<ActorSample> batch{{random_obs(4, rng), 1, 0.0}, {random_obs(4, rng), 2, 0.0}};
  actor_step(actor, batch, 0.5);
  CHECK(actor == before);
}

TEST_CASE("positive advantage raises the chosen action's probability") {
  Rng rng(6);
  for (std::size_t a = 0; a < 3; ++a) {
    MlpParams actor = random_network(4, 6, 3, Head::Softmax, rng);
    const std::vector<double> x = random_obs(4, rng);
    const double before = mlp_forward(actor, x)[a];
    actor_step(actor, std::vector<ActorSample>{{x, a, 1.0}}, 0.05);
    CHECK(mlp_forward(actor, x)[a] > before);
  }
}

TEST_CASE("zero learning rate is the identity") {
  Rng rng(7);
  MlpParams actor = random_network(4, 6, 3, Head::Softmax, rng);
  MlpParams critic = random_network(4, 6, 1, Head::Linear, rng);
  const MlpParams a0 = actor, c0 = critic;
  const std::vector<double> x = random_obs(4, rng);
  actor_step(actor, std::vector<ActorSample>{{x, 0, 3.0}}, 0.0);
  critic_step(critic, std::vector<CriticSample>{{x, 10.0}}, 0.0);
  CHECK(actor == a0);
  CHECK(critic == c0);
}

TEST_CASE("critic loss decreases on a fixed batch") {
  Rng rng(8);
  MlpParams critic = random_network(3, 8, 1, Head::Linear, rng);
  std::vector<CriticSample> batch;
  for (int i = 0; i < 8; ++i) batch.push_back({random_obs(3, rng), 0.25 * i - 1.0});
  const double start = critic_loss(critic, batch);
  for (int t = 0; t < 100; ++t) critic_step(critic, batch, 0.05);
  CHECK(critic_loss(critic, batch) < start);
}

TEST_CASE("bootstrap targets") {
  MlpParams critic = MlpParams::zeros(2, 3, 1, Head::Linear);
  critic.layers.back().bias[0] = 2.0;  // v(s) = 2 everywhere
  const std::vector<Transition> trace{{{0, 0}, 1.0, {1, 1}, false}, {{1, 1}, -3.0, {2, 2}, true}};
  const std::vector<CriticSample> t = bootstrap_targets(critic, trace, 0.5);
  CHECK(t[0].target == 2.0);
  CHECK(t[1].target == -3.0);
}

TEST_CASE("non-finite inputs are rejected") {
  MlpParams critic = MlpParams::zeros(2, 3, 1, Head::Linear);
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(critic_step(critic, std::vector<CriticSample>{{{0, 0}, inf}}, 0.1), NumericalError);
  MlpParams actor = MlpParams::zeros(2, 3, 2, Head::Softmax);
  CHECK_THROWS_AS(actor_step(actor, std::vector<ActorSample>{{{0, 0}, 5, 1.0}}, 0.1), IndexError);
}
