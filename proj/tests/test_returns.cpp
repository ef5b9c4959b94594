#include <doctest.h>

#include <cmath>
#include <sstream>
#include <vector>

#include "wpt/errors.hpp"
#include "wpt/learn/qtable.hpp"
#include "wpt/learn/returns.hpp"

using namespace wpt;
using namespace wpt::learn;

TEST_CASE("discounted gain") {
  const std::vector<double> ones{1, 1, 1};
  const std::vector<double> g = discounted_gain(ones, 0.9);
  CHECK(g[0] == doctest::Approx(2.71));
  CHECK(g[2] == 1.0);
  CHECK(discounted_gain(std::vector<double>{3, -1, 7}, 0.0) == std::vector<double>{3, -1, 7});
  const std::vector<double> r{100, -300, 0, 100, -50, 100};
  const std::vector<double> gr = discounted_gain(r, 0.9);
  for (std::size_t t = 0; t + 1 < r.size(); ++t) CHECK(gr[t] - r[t] - 0.9 * gr[t + 1] == doctest::Approx(0.0));
  CHECK(gr.back() == r.back());
  CHECK(discounted_gain(std::vector<double>{}, 0.9).empty());
  CHECK_THROWS_AS(discounted_gain(ones, 1.5), InvalidInput);
}

TEST_CASE("q update rule") {
  QTable q(2);
  const StateKey s{0}, s2{1};
  q_update(q, s, 0, 1.0, s2, 0.5, 0.0);
  CHECK(q.value(s, 0) == 0.5);

  QTable q2(3);
  q2.set(s2, 1, 2.0);
  q_update(q2, s, 2, 1.0, s2, 1.0, 0.9);
  CHECK(q2.value(s, 2) == doctest::Approx(2.8));

  // zero TD error leaves the value alone
  QTable q3(2);
  q3.set(s2, 0, 4.0);
  q3.set(s, 1, 1.0 + 0.9 * 4.0);
  q_update(q3, s, 1, 1.0, s2, 0.7, 0.9);
  CHECK(q3.value(s, 1) == doctest::Approx(4.6));
}

TEST_CASE("missing Q rows read as zeros") {
  const QTable q(4);
  CHECK(q.row(StateKey{9, 9}).size() == 4);
  for (double v : q.row(StateKey{1})) CHECK(v == 0.0);
  CHECK(q.size() == 0);
}

TEST_CASE("epsilon-greedy with epsilon zero is the lowest-index argmax") {
  Rng rng(1);
  const std::vector<double> row{1, 5, 5, 2};
  for (int t = 0; t < 100; ++t) CHECK(epsilon_greedy(row, 0.0, rng) == 1);
  CHECK_THROWS_AS(epsilon_greedy(std::vector<double>{}, 0.1, rng), InvalidInput);
}

TEST_CASE("epsilon-greedy action frequencies") {
  const std::size_t n = 5, draws = 100000;
  const std::vector<double> row{0, 0, 3, 1, 0};
  for (double eps : {1.0, 0.3}) {
    Rng rng(99);
    std::vector<std::size_t> counts(n, 0);
    for (std::size_t t = 0; t < draws; ++t) ++counts[epsilon_greedy(row, eps, rng)];
    for (std::size_t a = 0; a < n; ++a) {
      const double p = (a == 2 ? 1 - eps : 0.0) + eps / n;
      const double sigma = std::sqrt(p * (1 - p) / draws);
      CHECK(std::abs(static_cast<double>(counts[a]) / draws - p) < 3 * sigma);
    }
  }
}

TEST_CASE("epsilon schedule") {
  CHECK(epsilon_schedule(0) == 1.0);
  double prev = 1.0;
  for (std::size_t e = 1; e < 3000; ++e) {
    const double eps = epsilon_schedule(e);
    CHECK(eps <= prev);
    prev = eps;
  }
  // 0.995^n drops below 0.01 after about 919 episodes
  CHECK(epsilon_schedule(918) == doctest::Approx(0.010036634861955126));
  CHECK(epsilon_schedule(919) == 0.01);
  CHECK(epsilon_schedule(100000) == 0.01);
}

TEST_CASE("Q-table checkpoint round-trips exactly") {
  QTable q(3);
  q.set({0, 1}, 2, 0.1);
  q.set({-1, -1, 2}, 0, -1.0 / 3.0);
  q.set({7}, 1, 1e-300);
  std::stringstream ss;
  q.save(ss);
  CHECK(QTable::load(ss) == q);
  std::stringstream bad("wpt-qtable 2\n");
  CHECK_THROWS_AS(QTable::load(bad), InvalidInput);
}

TEST_CASE("joint action encoding") {
  for (std::size_t idx = 0; idx < 4 * 4 * 4; ++idx) CHECK(encode_joint(decode_joint(idx, 4, 3), 4) == idx);
  CHECK(decode_joint(6, 4, 2) == std::vector<int>{1, 2});
}
