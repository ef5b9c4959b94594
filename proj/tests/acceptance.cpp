// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "gradcheck.hpp"
#include "wpt/array.hpp"
#include "wpt/env.hpp"
#include "wpt/harness.hpp"
#include "wpt/learn/trainers.hpp"
#include "wpt/oracle.hpp"

using namespace wpt;
using namespace wpt::learn;
using wpt::testing::close_rel;
using wpt::testing::corner_params;
using wpt::testing::small_env;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::vector<int> random_codes(std::size_t l, std::size_t n, Rng& rng) {
  std::uniform_int_distribution<int> u(0, static_cast<int>(n) - 1);
  std::vector<int> c(l);
  for (int& v : c) v = u(rng);
  return c;
}

std::string fmt(const char* f, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

Outcome matched_gain() {
  Outcome o;
  double worst = 0.0;
  for (std::size_t m : {2u, 16u, 64u}) {
    ArrayConfig cfg;
    cfg.elements = m;
    for (double phi : {0.3, 1.1, kPi / 2, 2.7}) {
      const ComplexVector a = steering_vector(phi, cfg);
      ComplexVector link(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) link[i] = std::conj(a[i]);
      const double g = beam_power_gain(link, a);
      const double m2 = static_cast<double>(m * m);
      worst = std::max(worst, std::abs(g - m2) / m2);
    }
  }
  o.pass = worst <= 1e-9;
  o.detail = fmt("max relative error %.3g", worst);
  return o;
}

Outcome monte_carlo() {
  Outcome o;
  double worst = 0.0;
  for (std::uint64_t inst = 0; inst < 10; ++inst) {
    WptEnv env(corner_params(4, 5, 8), EnvParams{}, derive_seed(inst, "mc-placement"));
    Rng rng(derive_seed(inst, "mc-codes"));
    const std::vector<int> codes = random_codes(4, 8, rng);
    for (std::size_t j = 0; j < 5; ++j) {
      const double closed = expected_energy(j, codes, env.links(), 0.5);
      const double mc = sample_energy_monte_carlo(env.scenario(), j, codes, 0.5, 100000, derive_seed(inst, j));
      worst = std::max(worst, std::abs(mc - closed) / closed);
    }
  }
  o.pass = worst < 0.01;
  o.detail = fmt("10 instances x 5 receivers, max relative deviation %.4f", worst);
  return o;
}

Outcome rollout_equivalence() {
  Outcome o;
  std::size_t identical = 0;
  Rng rng(2024);
  for (std::size_t t = 0; t < 100; ++t) {
    const std::size_t l = 1 + t % 4;
    WptEnv env(corner_params(l, 5, 8), EnvParams{}, derive_seed(t, "eq-placement"));
    EnvState s = env.reset(t);
    // Start from a random committed state half the time.
    if (t % 2) s = env.step_joint(s, random_codes(l, 8, rng)).next;
    const std::vector<int> a = random_codes(l, 8, rng);
    const StepResult joint = env.step_joint(s, a);
    StepResult r{s, 0.0, false};
    for (std::size_t k = 0; k < l; ++k) r = env.step_rollout(r.next, k, a[k]);
    if (r.next == joint.next && r.reward == joint.reward && r.done == joint.done) ++identical;
  }
  o.pass = identical == 100;
  o.detail = std::to_string(identical) + "/100 tuples bitwise identical";
  return o;
}

Outcome action_space() {
  Outcome o;
  RunConfig cfg;
  cfg.codes = 8;
  cfg.tx_positions = {{0, 0}, {30, 0}, {30, 30}, {0, 30}};
  const OracleReport r = run_oracle(cfg);
  o.pass = r.exhaustive.evaluations == 4096 && r.sequential.evaluations == 32;
  o.detail = std::to_string(r.exhaustive.evaluations) + " joint vs " + std::to_string(r.sequential.evaluations) +
             " sequential evaluations";
  return o;
}

Outcome separability() {
  Outcome o;
  double worst = 0.0;
  for (std::uint64_t inst = 0; inst < 20; ++inst) {
    WptEnv env(corner_params(4, 5, 8), EnvParams{}, derive_seed(inst, "sep-placement"));
    const JointSearchResult ex = exhaustive_search(env.links(), 0.5, 0.0);
    const SequentialSearchResult sq = greedy_sequential_search(env.links(), 0.5);
    worst = std::max(worst, std::abs(ex.total - sq.total) / ex.total);
  }
  o.pass = worst <= 1e-9;
  o.detail = fmt("20 instances, max relative gap %.3g", worst);
  return o;
}

Outcome tabular_learning() {
  Outcome o;
  WptEnv env = small_env();
  const JointSearchResult opt = exhaustive_search(env.links(), env.params().transfer_time, 0.0);
  std::size_t hits = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const QTable q = train_tabular_rollout(env, TabularConfig{}, 2000, seed);
    if (evaluate_tabular_rollout(env, q).final_codes == opt.codes) ++hits;
  }
  o.pass = hits >= 18;
  o.detail = std::to_string(hits) + "/20 seeds reach the optimal assignment after 2000 episodes";
  return o;
}

Outcome actor_critic() {
  Outcome o;
  double worst_grad = 0.0;
  for (std::uint64_t d = 0; d < 20; ++d) {
    worst_grad = std::max(worst_grad, wpt::testing::actor_check(derive_seed(d, "actor-draw")));
    worst_grad = std::max(worst_grad, wpt::testing::critic_check(derive_seed(d, "critic-draw")));
  }
  WptEnv env = small_env();
  const JointSearchResult opt = exhaustive_search(env.links(), env.params().transfer_time, 0.0);
  const EnvFactory factory = [] { return std::make_unique<WptEnv>(small_env()); };
  std::size_t hits = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const ActorCriticModel m = a3c_train(factory, ActorCriticConfig{}, 1000, seed);
    if (evaluate_actor_critic(env, m).final_total >= 0.95 * opt.total) ++hits;
  }
  o.pass = hits >= 15 && worst_grad < 1e-4;
  o.detail = std::to_string(hits) + "/20 seeds within 5% of the optimum; " +
             fmt("max gradient-check error %.3g over 20 draws", worst_grad);
  return o;
}

Outcome reward_branches() {
  Outcome o;
  const std::vector<double> ok{1.0, 1.0, 1.0};
  const std::vector<double> two_low{0.1, 0.2, 1.0};
  const double e_min = 0.5;
  const std::vector<double> got{
      reward(1.0, 2.0, ok, e_min),      reward(2.0, 2.0, ok, e_min),      reward(2.0, 1.0, ok, e_min),
      reward(1.0, 2.0, two_low, e_min), reward(2.0, 2.0, two_low, e_min), reward(2.0, 1.0, two_low, e_min),
  };
  const std::vector<double> want{100, 0, -300, 0, -100, -400};
  o.pass = got.size() == want.size();
  for (std::size_t i = 0; i < got.size(); ++i) o.pass = o.pass && got[i] == want[i];
  std::ostringstream ss;
  ss << "got {";
  for (std::size_t i = 0; i < got.size(); ++i) ss << (i ? ", " : "") << got[i];
  ss << "}";
  o.detail = ss.str();
  return o;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome determinism() {
  Outcome o;
  namespace fs = std::filesystem;
  const fs::path base = fs::temp_directory_path() / "wpt_acceptance_det";
  fs::remove_all(base);
  std::size_t same = 0, runs = 0;
  for (AgentKind kind : {AgentKind::TabularRollout, AgentKind::ActorCriticRollout}) {
    RunConfig cfg;
    cfg.agent = kind;
    cfg.episodes = 200;
    cfg.seed = 17;
    cfg.output = (base / "a").string();
    const std::string a = slurp(run_training(cfg).metrics_path);
    cfg.output = (base / "b").string();
    const std::string b = slurp(run_training(cfg).metrics_path);
    ++runs;
    if (a == b && !a.empty()) ++same;
  }
  fs::remove_all(base);
  o.pass = same == runs;
  o.detail = std::to_string(same) + "/" + std::to_string(runs) + " agent kinds byte-identical across reruns";
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "matched-beam gain is M^2", 1.0, matched_gain},
      {2, "sampled energy matches the expectation", 30.0, monte_carlo},
      {3, "rollout commits equal joint steps", 5.0, rollout_equivalence},
      {4, "action-space reduction counts", 5.0, action_space},
      {5, "exhaustive and sequential search agree", 10.0, separability},
      {6, "tabular rollout learning reaches the oracle", 60.0, tabular_learning},
      {7, "actor-critic sanity", 300.0, actor_critic},
      {8, "reward branches", 1.0, reward_branches},
      {9, "single-worker runs are byte-identical", 60.0, determinism},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < c.budget_s;
    const bool pass = o.pass && in_time;
    failed += !pass;
    std::printf("criterion %d: %s [%s] %s (%.2f s, limit %.0f s%s)\n", c.id, pass ? "PASS" : "FAIL", c.name,
                o.detail.c_str(), secs, c.budget_s, in_time ? "" : ", over time");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
