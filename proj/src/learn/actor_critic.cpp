#include "wpt/learn/actor_critic.hpp"

#include <cmath>

#include "wpt/errors.hpp"

namespace wpt::learn {

double critic_loss(const MlpParams& critic, std::span<const CriticSample> batch) {
  if (batch.empty()) throw InvalidInput("empty critic batch");
  double loss = 0.0;
  for (const CriticSample& s : batch) {
    const double e = mlp_forward(critic, s.obs)[0] - s.target;
    loss += e * e;
  }
  return loss / (2.0 * static_cast<double>(batch.size()));
}

double critic_gradient(const MlpParams& critic, std::span<const CriticSample> batch, MlpParams& grad) {
  if (batch.empty()) throw InvalidInput("empty critic batch");
  const double inv_n = 1.0 / static_cast<double>(batch.size());
  double loss = 0.0;
  for (const CriticSample& s : batch) {
    const ForwardPass pass = mlp_forward_pass(critic, s.obs);
    const double e = pass.output[0] - s.target;
    loss += e * e;
    const double d = e * inv_n;
    mlp_backward(critic, pass, std::span<const double>(&d, 1), grad);
  }
  return loss * inv_n / 2.0;
}

double actor_objective(const MlpParams& actor, std::span<const ActorSample> batch) {
  if (batch.empty()) throw InvalidInput("empty actor batch");
  double j = 0.0;
  for (const ActorSample& s : batch) {
    const ForwardPass pass = mlp_forward_pass(actor, s.obs);
    if (s.action >= actor.output_size()) throw IndexError("action index out of range");
    j += s.advantage * log_softmax(pass.activations.back())[s.action];
  }
  return j / static_cast<double>(batch.size());
}

double actor_gradient(const MlpParams& actor, std::span<const ActorSample> batch, MlpParams& grad) {
  if (batch.empty()) throw InvalidInput("empty actor batch");
  if (actor.head != Head::Softmax) throw InvalidInput("actor network needs a softmax head");
  const double inv_n = 1.0 / static_cast<double>(batch.size());
  double j = 0.0;
  std::vector<double> d(actor.output_size());
  for (const ActorSample& s : batch) {
    if (s.action >= actor.output_size()) throw IndexError("action index out of range");
    const ForwardPass pass = mlp_forward_pass(actor, s.obs);
    j += s.advantage * log_softmax(pass.activations.back())[s.action];
    // d ln pi(a) / d logits = onehot(a) - pi
    for (std::size_t i = 0; i < d.size(); ++i)
      d[i] = s.advantage * inv_n * ((i == s.action ? 1.0 : 0.0) - pass.output[i]);
    mlp_backward(actor, pass, d, grad);
  }
  return j * inv_n;
}

std::vector<CriticSample> bootstrap_targets(const MlpParams& critic, std::span<const Transition> trace,
                                            double gamma) {
  std::vector<CriticSample> out;
  out.reserve(trace.size());
  for (const Transition& t : trace) {
    const double next = t.terminal ? 0.0 : mlp_forward(critic, t.next_obs)[0];
    out.push_back({t.obs, t.reward + gamma * next});
  }
  return out;
}

void critic_step(MlpParams& critic, std::span<const CriticSample> batch, double lr) {
  MlpParams grad = critic.zeros_like();
  const double loss = critic_gradient(critic, batch, grad);
  if (!std::isfinite(loss) || !grad.all_finite()) throw NumericalError("critic loss diverged");
  critic.add_scaled(grad, -lr);
  if (!critic.all_finite()) throw NumericalError("critic parameters diverged");
}

void critic_step(MlpParams& critic, std::span<const Transition> trace, double gamma, double lr) {
  if (trace.empty()) throw InvalidInput("empty trace");
  const std::vector<CriticSample> batch = bootstrap_targets(critic, trace, gamma);
  critic_step(critic, batch, lr);
}

void actor_step(MlpParams& actor, std::span<const ActorSample> batch, double lr) {
  MlpParams grad = actor.zeros_like();
  const double j = actor_gradient(actor, batch, grad);
  if (!std::isfinite(j) || !grad.all_finite()) throw NumericalError("actor objective diverged");
  actor.add_scaled(grad, lr);
  if (!actor.all_finite()) throw NumericalError("actor parameters diverged");
}

}  // namespace wpt::learn
