#pragma once

// Small fully connected networks: three affine layers with tanh between
// them, ending either in a softmax (policy) or a scalar (value).

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "wpt/seeding.hpp"

namespace wpt::learn {

enum class Head { Softmax, Linear };

struct DenseLayer {
  std::size_t inputs = 0;
  std::size_t outputs = 0;
  std::vector<double> weights;  // outputs x inputs, row-major
  std::vector<double> bias;

  friend bool operator==(const DenseLayer&, const DenseLayer&) = default;
};

struct MlpParams {
  std::vector<DenseLayer> layers;
  Head head = Head::Linear;

  static MlpParams zeros(std::size_t inputs, std::size_t hidden, std::size_t outputs, Head head);
  // Uniform Glorot initialisation, biases zero.
  static MlpParams random(std::size_t inputs, std::size_t hidden, std::size_t outputs, Head head, Rng& rng);

  std::size_t input_size() const { return layers.front().inputs; }
  std::size_t output_size() const { return layers.back().outputs; }
  std::size_t parameter_count() const;

  std::vector<double> flatten() const;
  void assign(std::span<const double> flat);
  // this += scale * other (same shape)
  void add_scaled(const MlpParams& other, double scale);
  bool all_finite() const;
  MlpParams zeros_like() const;

  friend bool operator==(const MlpParams&, const MlpParams&) = default;
};

// Layer activations from one forward pass; the last entry holds the raw
// output layer (logits or value) before the head.
struct ForwardPass {
  std::vector<std::vector<double>> activations;
  std::vector<double> output;  // softmax probabilities or [value]
};

ForwardPass mlp_forward_pass(const MlpParams& params, std::span<const double> x);
std::vector<double> mlp_forward(const MlpParams& params, std::span<const double> x);

// Accumulates into `grad` the gradient given d(objective)/d(raw output).
void mlp_backward(const MlpParams& params, const ForwardPass& pass, std::span<const double> d_raw, MlpParams& grad);

std::vector<double> softmax(std::span<const double> logits);
std::vector<double> log_softmax(std::span<const double> logits);

// Text checkpoint with a dims header; doubles are written as hex floats so
// a save/load cycle is bit-exact.
void save_mlp(std::ostream& out, const MlpParams& params);
MlpParams load_mlp(std::istream& in);

}  // namespace wpt::learn
