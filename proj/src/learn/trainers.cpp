#include "wpt/learn/trainers.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "wpt/errors.hpp"

namespace wpt::learn {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

std::size_t feasible_count(const EnvState& s, double e_min) {
  return static_cast<std::size_t>(std::count_if(s.energies.begin(), s.energies.end(), [&](double e) { return e >= e_min; }));
}

EpisodeMetrics metrics_for(std::size_t episode, const EnvState& final_state, double reward, double e_min,
                           double epsilon, Clock::time_point t0) {
  EpisodeMetrics m;
  m.episode = episode;
  m.total_energy = final_state.total();
  m.reward = reward;
  m.feasible_count = feasible_count(final_state, e_min);
  m.epsilon = epsilon;
  m.wall_ms = elapsed_ms(t0);
  return m;
}

// Tracks the committed assignments an evaluation episode passes through.
struct PeakTracker {
  GreedyEvaluation eval;
  bool seen = false;

  void observe(const EnvState& committed) {
    const double t = committed.total();
    if (!seen || t > eval.peak_total) {
      eval.peak_total = t;
      eval.peak_codes = committed.codes;
      seen = true;
    }
  }
  GreedyEvaluation finish(const EnvState& final_state) {
    eval.final_codes = final_state.codes;
    eval.final_total = final_state.total();
    return eval;
  }
};

GreedyEvaluation evaluate_rollout_policy(WptEnv& env, const AgentPolicy& policy, std::uint64_t seed) {
  PeakTracker peak;
  const std::size_t last = env.agents() - 1;
  const TransitionHook hook = [&](const EnvState&, std::size_t agent, int, double, const EnvState& to, bool) {
    if (agent == last) peak.observe(to);
  };
  const EpisodeTrace trace = rollout_episode(env, env.reset(seed), std::span<const AgentPolicy>(&policy, 1), hook);
  return peak.finish(trace.final_state);
}

}  // namespace

// ---------------------------------------------------------------- tabular

QTable train_tabular_rollout(WptEnv& env, const TabularConfig& cfg, std::size_t episodes, std::uint64_t seed,
                             const MetricsSink& sink) {
  QTable table(env.codes());
  Rng rng(derive_seed(seed, "policy"));
  for (std::size_t e = 0; e < episodes; ++e) {
    const auto t0 = Clock::now();
    const double eps = epsilon_schedule(e, cfg.epsilon);
    const AgentPolicy policy = [&](const EnvState& s, std::size_t, std::span<const double>) {
      return static_cast<int>(epsilon_greedy(table.row(rollout_key(s)), eps, rng));
    };
    const TransitionHook hook = [&](const EnvState& from, std::size_t, int action, double r, const EnvState& to, bool) {
      q_update(table, rollout_key(from), static_cast<std::size_t>(action), r, rollout_key(to), cfg.alpha, cfg.gamma);
    };
    const EpisodeTrace trace =
        rollout_episode(env, env.reset(derive_seed(seed, e)), std::span<const AgentPolicy>(&policy, 1), hook);
    if (sink) sink(metrics_for(e, trace.final_state, trace.joint_reward, env.params().e_min, eps, t0));
  }
  return table;
}

GreedyEvaluation evaluate_tabular_rollout(WptEnv& env, const QTable& table, std::uint64_t seed) {
  const AgentPolicy policy = [&](const EnvState& s, std::size_t, std::span<const double>) {
    return static_cast<int>(argmax(table.row(rollout_key(s))));
  };
  return evaluate_rollout_policy(env, policy, seed);
}

QTable train_joint_tabular(WptEnv& env, const TabularConfig& cfg, std::size_t episodes, std::uint64_t seed,
                           const MetricsSink& sink) {
  const std::size_t n = env.codes(), l = env.agents();
  const std::size_t actions = static_cast<std::size_t>(joint_assignment_count(n, l));
  QTable table(actions);
  Rng rng(derive_seed(seed, "policy"));
  for (std::size_t e = 0; e < episodes; ++e) {
    const auto t0 = Clock::now();
    const double eps = epsilon_schedule(e, cfg.epsilon);
    EnvState state = env.reset(derive_seed(seed, e));
    double reward_sum = 0.0;
    bool done = false;
    while (!done) {
      const StateKey key = rollout_key(state);
      const std::size_t a = epsilon_greedy(table.row(key), eps, rng);
      StepResult r = env.step_joint(state, decode_joint(a, n, l));
      q_update(table, key, a, r.reward, rollout_key(r.next), cfg.alpha, cfg.gamma);
      reward_sum += r.reward;
      state = std::move(r.next);
      done = r.done;
    }
    if (sink) sink(metrics_for(e, state, reward_sum, env.params().e_min, eps, t0));
  }
  return table;
}

GreedyEvaluation evaluate_joint_tabular(WptEnv& env, const QTable& table, std::uint64_t seed) {
  PeakTracker peak;
  EnvState state = env.reset(seed);
  bool done = false;
  while (!done) {
    const std::size_t a = argmax(table.row(rollout_key(state)));
    StepResult r = env.step_joint(state, decode_joint(a, env.codes(), env.agents()));
    peak.observe(r.next);
    state = std::move(r.next);
    done = r.done;
  }
  return peak.finish(state);
}

// ----------------------------------------------------------- actor-critic

FeatureScaler FeatureScaler::for_env(const WptEnv& env) {
  const LinkTable& g = env.links();
  double best = 0.0;
  for (std::size_t j = 0; j < g.receivers(); ++j) {
    double s = 0.0;
    for (std::size_t p = 0; p < g.transmitters(); ++p) {
      double m = 0.0;
      for (std::size_t i = 0; i < g.codes(); ++i) m = std::max(m, g(j, p, i));
      s += m;
    }
    best = std::max(best, env.params().transfer_time * s);
  }
  FeatureScaler f;
  f.energy_scale = best > 0.0 ? best : 1.0;
  f.code_scale = static_cast<double>(env.codes());
  f.receivers = env.receivers();
  return f;
}

std::vector<double> FeatureScaler::operator()(std::span<const double> obs) const {
  std::vector<double> x(obs.begin(), obs.end());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] /= i < receivers ? energy_scale : code_scale;
  return x;
}

namespace {

struct EpisodeGradients {
  std::vector<MlpParams> actor;
  std::vector<MlpParams> critic;
};

struct EpisodeOutcome {
  EpisodeGradients grads;
  EnvState final_state;
  double joint_reward = 0.0;
};

EpisodeOutcome run_ac_episode(const WptEnv& env, EnvState start, const ActorCriticModel& model,
                              const ActorCriticConfig& cfg, Rng& rng) {
  const AgentPolicy policy = [&](const EnvState&, std::size_t k, std::span<const double> obs) {
    const std::vector<double> probs = mlp_forward(model.for_agent(k).actor, model.scaler(obs));
    return static_cast<int>(sample_categorical(probs, rng));
  };
  const EpisodeTrace trace = rollout_episode(env, std::move(start), std::span<const AgentPolicy>(&policy, 1));

  const std::size_t n = trace.steps.size();
  const std::size_t nets = model.agents.size();
  auto net_of = [&](std::size_t i) { return nets == 1 ? std::size_t{0} : trace.steps[i].agent; };

  std::vector<std::vector<double>> xs(n);
  std::vector<double> rewards(n), values(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = model.scaler(trace.steps[i].observation);
    rewards[i] = cfg.reward_scale * trace.steps[i].reward;
    values[i] = mlp_forward(model.agents[net_of(i)].critic, xs[i])[0];
  }
  const std::vector<double> gains = discounted_gain(rewards, cfg.gamma);

  std::vector<std::vector<ActorSample>> actor_batches(nets);
  std::vector<std::vector<CriticSample>> critic_batches(nets);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t k = net_of(i);
    actor_batches[k].push_back({xs[i], static_cast<std::size_t>(trace.steps[i].action), gains[i] - values[i]});
    const double next = i + 1 < n ? values[i + 1] : 0.0;
    critic_batches[k].push_back({xs[i], rewards[i] + cfg.gamma * next});
  }

  EpisodeOutcome out;
  for (std::size_t k = 0; k < nets; ++k) {
    const AgentNetworks& net = model.agents[k];
    MlpParams ga = net.actor.zeros_like();
    MlpParams gc = net.critic.zeros_like();
    if (!actor_batches[k].empty()) {
      const double j = actor_gradient(net.actor, actor_batches[k], ga);
      const double loss = critic_gradient(net.critic, critic_batches[k], gc);
      if (!std::isfinite(j) || !std::isfinite(loss) || !ga.all_finite() || !gc.all_finite())
        throw NumericalError("actor-critic gradients became non-finite");
    }
    out.grads.actor.push_back(std::move(ga));
    out.grads.critic.push_back(std::move(gc));
  }
  out.final_state = trace.final_state;
  out.joint_reward = trace.joint_reward;
  return out;
}

void apply_gradients(ActorCriticModel& model, const EpisodeGradients& g, const ActorCriticConfig& cfg) {
  for (std::size_t k = 0; k < model.agents.size(); ++k) {
    model.agents[k].actor.add_scaled(g.actor[k], cfg.actor_lr);
    model.agents[k].critic.add_scaled(g.critic[k], -cfg.critic_lr);
    if (!model.agents[k].actor.all_finite() || !model.agents[k].critic.all_finite())
      throw NumericalError("actor-critic parameters became non-finite");
  }
}

ActorCriticModel init_model(const WptEnv& env, const ActorCriticConfig& cfg, std::uint64_t seed) {
  Rng rng(derive_seed(seed, "init"));
  ActorCriticModel model;
  model.scaler = FeatureScaler::for_env(env);
  const std::size_t nets = cfg.shared_policy ? 1 : env.agents();
  for (std::size_t k = 0; k < nets; ++k) {
    AgentNetworks net;
    net.actor = MlpParams::random(env.observation_size(), cfg.hidden, env.codes(), Head::Softmax, rng);
    net.critic = MlpParams::random(env.observation_size(), cfg.hidden, 1, Head::Linear, rng);
    model.agents.push_back(std::move(net));
  }
  return model;
}

}  // namespace

ActorCriticModel a3c_train(const EnvFactory& factory, const ActorCriticConfig& cfg, std::size_t episodes,
                           std::uint64_t seed, const MetricsSink& sink) {
  if (cfg.workers < 1) throw InvalidInput("need at least one worker");
  if (!(cfg.gamma >= 0.0 && cfg.gamma <= 1.0)) throw InvalidInput("discount must lie in [0, 1]");
  if (!(cfg.actor_lr > 0.0) || !(cfg.critic_lr > 0.0)) throw InvalidInput("learning rates must be positive");

  std::unique_ptr<WptEnv> first = factory();
  ActorCriticModel shared = init_model(*first, cfg, seed);

  if (cfg.workers == 1) {
    Rng rng(derive_seed(seed, "worker0"));
    for (std::size_t e = 0; e < episodes; ++e) {
      const auto t0 = Clock::now();
      EpisodeOutcome out = run_ac_episode(*first, first->reset(derive_seed(seed, e)), shared, cfg, rng);
      apply_gradients(shared, out.grads, cfg);
      if (sink) sink(metrics_for(e, out.final_state, out.joint_reward, first->params().e_min, 0.0, t0));
    }
    return shared;
  }

  std::mutex store;
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::size_t completed = 0;

  auto worker = [&](std::size_t w, std::unique_ptr<WptEnv> env) {
    try {
      Rng rng(derive_seed(seed, "worker" + std::to_string(w)));
      while (!failed) {
        const std::size_t e = next++;
        if (e >= episodes) break;
        const auto t0 = Clock::now();
        ActorCriticModel snapshot;
        {
          std::lock_guard lock(store);
          snapshot = shared;
        }
        EpisodeOutcome out = run_ac_episode(*env, env->reset(derive_seed(seed, e)), snapshot, cfg, rng);
        std::lock_guard lock(store);
        apply_gradients(shared, out.grads, cfg);
        if (sink) sink(metrics_for(completed, out.final_state, out.joint_reward, env->params().e_min, 0.0, t0));
        ++completed;
      }
    } catch (...) {
      std::lock_guard lock(store);
      if (!error) error = std::current_exception();
      failed = true;
    }
  };

  std::vector<std::thread> threads;
  threads.emplace_back(worker, 0, std::move(first));
  for (std::size_t w = 1; w < cfg.workers; ++w) threads.emplace_back(worker, w, factory());
  for (std::thread& t : threads) t.join();
  if (error) std::rethrow_exception(error);
  return shared;
}

GreedyEvaluation evaluate_actor_critic(WptEnv& env, const ActorCriticModel& model, std::uint64_t seed) {
  const AgentPolicy policy = [&](const EnvState&, std::size_t k, std::span<const double> obs) {
    return static_cast<int>(argmax(mlp_forward(model.for_agent(k).actor, model.scaler(obs))));
  };
  return evaluate_rollout_policy(env, policy, seed);
}

void save_model(std::ostream& out, const ActorCriticModel& model) {
  std::ostringstream os;
  os << "wpt-ac 1\nnetworks " << model.agents.size() << "\nreceivers " << model.scaler.receivers << '\n'
     << std::hexfloat << "energy_scale " << model.scaler.energy_scale << "\ncode_scale " << model.scaler.code_scale
     << '\n';
  out << os.str();
  for (const AgentNetworks& net : model.agents) {
    save_mlp(out, net.actor);
    save_mlp(out, net.critic);
  }
}

ActorCriticModel load_model(std::istream& in) {
  std::string magic, word, tok;
  int version = 0;
  std::size_t nets = 0;
  ActorCriticModel model;
  if (!(in >> magic >> version) || magic != "wpt-ac" || version != 1)
    throw InvalidInput("not a version-1 actor-critic checkpoint");
  if (!(in >> word >> nets) || word != "networks" || nets == 0) throw InvalidInput("bad network count");
  if (!(in >> word >> model.scaler.receivers) || word != "receivers") throw InvalidInput("bad receiver count");
  for (double* field : {&model.scaler.energy_scale, &model.scaler.code_scale}) {
    if (!(in >> word >> tok)) throw InvalidInput("truncated actor-critic checkpoint");
    char* end = nullptr;
    *field = std::strtod(tok.c_str(), &end);
    if (*end != '\0') throw InvalidInput("bad scale in actor-critic checkpoint");
  }
  for (std::size_t k = 0; k < nets; ++k) {
    AgentNetworks net;
    net.actor = load_mlp(in);
    net.critic = load_mlp(in);
    model.agents.push_back(std::move(net));
  }
  return model;
}

}  // namespace wpt::learn
