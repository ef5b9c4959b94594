#include "wpt/learn/mlp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <string>

#include "wpt/errors.hpp"

namespace wpt::learn {

namespace {

DenseLayer make_layer(std::size_t in, std::size_t out) {
  return DenseLayer{in, out, std::vector<double>(in * out, 0.0), std::vector<double>(out, 0.0)};
}

template <typename F>
void for_each_value(MlpParams& p, F&& f) {
  for (DenseLayer& l : p.layers) {
    for (double& w : l.weights) f(w);
    for (double& b : l.bias) f(b);
  }
}

template <typename F>
void for_each_value(const MlpParams& p, F&& f) {
  for (const DenseLayer& l : p.layers) {
    for (double w : l.weights) f(w);
    for (double b : l.bias) f(b);
  }
}

}  // namespace

MlpParams MlpParams::zeros(std::size_t inputs, std::size_t hidden, std::size_t outputs, Head head) {
  if (inputs == 0 || hidden == 0 || outputs == 0) throw InvalidInput("network dimensions must be positive");
  MlpParams p;
  p.head = head;
  p.layers = {make_layer(inputs, hidden), make_layer(hidden, hidden), make_layer(hidden, outputs)};
  return p;
}

MlpParams MlpParams::random(std::size_t inputs, std::size_t hidden, std::size_t outputs, Head head, Rng& rng) {
  MlpParams p = zeros(inputs, hidden, outputs, head);
  for (DenseLayer& l : p.layers) {
    const double limit = std::sqrt(6.0 / static_cast<double>(l.inputs + l.outputs));
    std::uniform_real_distribution<double> u(-limit, limit);
    for (double& w : l.weights) w = u(rng);
  }
  return p;
}

std::size_t MlpParams::parameter_count() const {
  std::size_t n = 0;
  for (const DenseLayer& l : layers) n += l.weights.size() + l.bias.size();
  return n;
}

std::vector<double> MlpParams::flatten() const {
  std::vector<double> flat;
  flat.reserve(parameter_count());
  for_each_value(*this, [&](double v) { flat.push_back(v); });
  return flat;
}

void MlpParams::assign(std::span<const double> flat) {
  if (flat.size() != parameter_count()) throw InvalidInput("flat parameter size mismatch");
  std::size_t i = 0;
  for_each_value(*this, [&](double& v) { v = flat[i++]; });
}

void MlpParams::add_scaled(const MlpParams& other, double scale) {
  if (other.layers.size() != layers.size()) throw InvalidInput("network shape mismatch");
  for (std::size_t k = 0; k < layers.size(); ++k) {
    DenseLayer& a = layers[k];
    const DenseLayer& b = other.layers[k];
    if (a.weights.size() != b.weights.size() || a.bias.size() != b.bias.size())
      throw InvalidInput("network shape mismatch");
    for (std::size_t i = 0; i < a.weights.size(); ++i) a.weights[i] += scale * b.weights[i];
    for (std::size_t i = 0; i < a.bias.size(); ++i) a.bias[i] += scale * b.bias[i];
  }
}

bool MlpParams::all_finite() const {
  bool ok = true;
  for_each_value(*this, [&](double v) { ok = ok && std::isfinite(v); });
  return ok;
}

MlpParams MlpParams::zeros_like() const {
  MlpParams z = *this;
  for_each_value(z, [](double& v) { v = 0.0; });
  return z;
}

std::vector<double> softmax(std::span<const double> logits) {
  std::vector<double> out = log_softmax(logits);
  for (double& v : out) v = std::exp(v);
  return out;
}

std::vector<double> log_softmax(std::span<const double> logits) {
  const double top = *std::max_element(logits.begin(), logits.end());
  double z = 0.0;
  for (double v : logits) z += std::exp(v - top);
  const double lse = top + std::log(z);
  std::vector<double> out(logits.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = logits[i] - lse;
  return out;
}

ForwardPass mlp_forward_pass(const MlpParams& params, std::span<const double> x) {
  if (params.layers.empty()) throw InvalidInput("empty network");
  if (x.size() != params.input_size())
    throw InvalidInput("input has " + std::to_string(x.size()) + " entries, network expects " +
                       std::to_string(params.input_size()));
  ForwardPass pass;
  pass.activations.emplace_back(x.begin(), x.end());
  for (std::size_t k = 0; k < params.layers.size(); ++k) {
    const DenseLayer& l = params.layers[k];
    const std::vector<double>& in = pass.activations.back();
    std::vector<double> out(l.bias);
    for (std::size_t o = 0; o < l.outputs; ++o) {
      const double* w = &l.weights[o * l.inputs];
      double s = 0.0;
      for (std::size_t i = 0; i < l.inputs; ++i) s += w[i] * in[i];
      out[o] += s;
    }
    if (k + 1 < params.layers.size())
      for (double& v : out) v = std::tanh(v);
    pass.activations.push_back(std::move(out));
  }
  const std::vector<double>& raw = pass.activations.back();
  pass.output = params.head == Head::Softmax ? softmax(raw) : raw;
  return pass;
}

std::vector<double> mlp_forward(const MlpParams& params, std::span<const double> x) {
  return mlp_forward_pass(params, x).output;
}

void mlp_backward(const MlpParams& params, const ForwardPass& pass, std::span<const double> d_raw, MlpParams& grad) {
  std::vector<double> delta(d_raw.begin(), d_raw.end());
  for (std::size_t k = params.layers.size(); k-- > 0;) {
    const DenseLayer& l = params.layers[k];
    DenseLayer& g = grad.layers[k];
    const std::vector<double>& in = pass.activations[k];
    for (std::size_t o = 0; o < l.outputs; ++o) {
      g.bias[o] += delta[o];
      double* gw = &g.weights[o * l.inputs];
      for (std::size_t i = 0; i < l.inputs; ++i) gw[i] += delta[o] * in[i];
    }
    if (k == 0) break;
    std::vector<double> prev(l.inputs, 0.0);
    for (std::size_t o = 0; o < l.outputs; ++o) {
      const double* w = &l.weights[o * l.inputs];
      for (std::size_t i = 0; i < l.inputs; ++i) prev[i] += w[i] * delta[o];
    }
    // tanh'(z) = 1 - tanh(z)^2
    for (std::size_t i = 0; i < prev.size(); ++i) prev[i] *= 1.0 - in[i] * in[i];
    delta = std::move(prev);
  }
}

void save_mlp(std::ostream& out, const MlpParams& params) {
  std::ostringstream os;
  os << "wpt-mlp 1\nhead " << (params.head == Head::Softmax ? "softmax" : "linear") << "\nlayers "
     << params.layers.size() << '\n'
     << std::hexfloat;
  for (const DenseLayer& l : params.layers) {
    os << "layer " << std::dec << l.inputs << ' ' << l.outputs << '\n' << std::hexfloat;
    for (std::size_t i = 0; i < l.weights.size(); ++i) os << (i ? " " : "") << l.weights[i];
    os << '\n';
    for (std::size_t i = 0; i < l.bias.size(); ++i) os << (i ? " " : "") << l.bias[i];
    os << '\n';
  }
  out << os.str();
}

namespace {

double read_double(std::istream& in) {
  std::string tok;
  if (!(in >> tok)) throw InvalidInput("truncated network checkpoint");
  char* end = nullptr;
  const double v = std::strtod(tok.c_str(), &end);
  if (end == tok.c_str() || *end != '\0') throw InvalidInput("bad number '" + tok + "' in network checkpoint");
  return v;
}

}  // namespace

MlpParams load_mlp(std::istream& in) {
  std::string magic, word, head;
  int version = 0;
  std::size_t count = 0;
  if (!(in >> magic >> version) || magic != "wpt-mlp" || version != 1)
    throw InvalidInput("not a version-1 network checkpoint");
  if (!(in >> word >> head) || word != "head" || (head != "softmax" && head != "linear"))
    throw InvalidInput("bad head line in network checkpoint");
  if (!(in >> word >> count) || word != "layers" || count == 0) throw InvalidInput("bad layer count");
  MlpParams p;
  p.head = head == "softmax" ? Head::Softmax : Head::Linear;
  for (std::size_t k = 0; k < count; ++k) {
    std::size_t ins = 0, outs = 0;
    if (!(in >> word >> ins >> outs) || word != "layer" || ins == 0 || outs == 0)
      throw InvalidInput("bad layer header in network checkpoint");
    if (!p.layers.empty() && p.layers.back().outputs != ins) throw InvalidInput("layer dims do not chain");
    DenseLayer l = make_layer(ins, outs);
    for (double& w : l.weights) w = read_double(in);
    for (double& b : l.bias) b = read_double(in);
    p.layers.push_back(std::move(l));
  }
  return p;
}

}  // namespace wpt::learn
