#include <cmath>
#include <random>

#include "wpt/errors.hpp"
#include "wpt/kernels.hpp"
#include "wpt/seeding.hpp"
#include "kernels_detail.hpp"

namespace wpt::kernels {

namespace detail {

void decode_assignment(std::uint64_t index, std::size_t n, std::span<int> codes) {
  for (std::size_t p = codes.size(); p-- > 0;) {
    codes[p] = static_cast<int>(index % n);
    index /= n;
  }
}

std::uint64_t assignment_count(const LinkTable& t) {
  std::uint64_t count = 1;
  for (std::size_t p = 0; p < t.transmitters(); ++p) count *= t.codes();
  return count;
}

// Fills `energies` and returns the total.
double evaluate(const LinkTable& t, std::span<const int> codes, double duration, std::span<double> energies) {
  double total = 0.0;
  for (std::size_t j = 0; j < t.receivers(); ++j) {
    energies[j] = receiver_energy(t, j, codes, duration);
    total += energies[j];
  }
  return total;
}

double block_energy(std::span<const Complex> amp, std::uint64_t begin, std::uint64_t end, std::uint64_t seed,
                    std::uint64_t block, SignalModel model) {
  double sum = 0.0;
  if (model == SignalModel::Constant) {
    Complex y{0.0, 0.0};
    for (const Complex& a : amp) y += a;
    return std::norm(y) * static_cast<double>(end - begin);
  }
  Rng rng(derive_seed(seed, block));
  std::normal_distribution<double> half(0.0, std::sqrt(0.5));
  for (std::uint64_t t = begin; t < end; ++t) {
    Complex y{0.0, 0.0};
    for (const Complex& a : amp) {
      const double re = half(rng);
      const double im = half(rng);
      y += a * Complex(re, im);
    }
    sum += std::norm(y);
  }
  return sum;
}

}  // namespace detail

LinkTable gain_table_serial(std::span<const ComplexVector> link_rows, const Codebook& book, std::size_t receivers,
                            std::size_t transmitters) {
  if (link_rows.size() != receivers * transmitters) throw InvalidInput("need K x L link rows");
  LinkTable t(receivers, transmitters, book.size());
  for (std::size_t j = 0; j < receivers; ++j)
    for (std::size_t p = 0; p < transmitters; ++p)
      for (std::size_t i = 0; i < book.size(); ++i)
        t(j, p, i) = beam_power_gain(link_rows[j * transmitters + p], book.code(i));
  return t;
}

JointSearchResult exhaustive_serial(const LinkTable& t, double duration, double e_min) {
  const std::uint64_t count = detail::assignment_count(t);
  std::vector<int> codes(t.transmitters());
  std::vector<double> energies(t.receivers());
  std::uint64_t best_any = 0, best_ok = 0;
  double best_any_total = -1.0, best_ok_total = -1.0;
  bool any_ok = false;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    detail::decode_assignment(idx, t.codes(), codes);
    const double total = detail::evaluate(t, codes, duration, energies);
    if (total > best_any_total) {
      best_any_total = total;
      best_any = idx;
    }
    bool ok = true;
    for (double e : energies) ok = ok && e >= e_min;
    if (ok && total > best_ok_total) {
      best_ok_total = total;
      best_ok = idx;
      any_ok = true;
    }
  }
  JointSearchResult r;
  r.codes.resize(t.transmitters());
  detail::decode_assignment(any_ok ? best_ok : best_any, t.codes(), r.codes);
  r.total = any_ok ? best_ok_total : best_any_total;
  r.feasible = any_ok;
  r.evaluations = count;
  return r;
}

double sampled_energy_serial(std::span<const Complex> amplitudes, double duration, std::uint64_t n_samples,
                             std::uint64_t seed, SignalModel model) {
  if (n_samples == 0) throw InvalidInput("need at least one sample");
  const std::uint64_t blocks = (n_samples + kSampleBlock - 1) / kSampleBlock;
  double sum = 0.0;
  for (std::uint64_t b = 0; b < blocks; ++b) {
    const std::uint64_t begin = b * kSampleBlock;
    const std::uint64_t end = std::min<std::uint64_t>(begin + kSampleBlock, n_samples);
    sum += detail::block_energy(amplitudes, begin, end, seed, b, model);
  }
  return duration * sum / static_cast<double>(n_samples);
}

}  // namespace wpt::kernels
