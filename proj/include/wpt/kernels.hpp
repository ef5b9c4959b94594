#pragma once

// Data-parallel kernels. Each has a plain serial reference and an OpenMP
// version; both produce bit-identical results for the same inputs.

#include <cstdint>
#include <span>
#include <vector>

#include "wpt/codebook.hpp"
#include "wpt/link_table.hpp"

namespace wpt {

struct JointSearchResult {
  std::vector<int> codes;
  double total = 0.0;
  bool feasible = false;
  std::uint64_t evaluations = 0;
};

enum class SignalModel {
  ComplexGaussian,  // i.i.d. CN(0, 1)
  Constant,         // x(t) = 1
};

namespace kernels {

inline constexpr std::size_t kSampleBlock = 4096;

LinkTable gain_table_serial(std::span<const ComplexVector> link_rows, const Codebook& book,
                            std::size_t receivers, std::size_t transmitters);
LinkTable gain_table_parallel(std::span<const ComplexVector> link_rows, const Codebook& book,
                              std::size_t receivers, std::size_t transmitters);

// Enumerates all N^L assignments in lexicographic order (transmitter 0 most
// significant). Keeps the best feasible assignment and falls back to the
// unconstrained best when nothing is feasible. Ties go to the smaller index.
JointSearchResult exhaustive_serial(const LinkTable& t, double duration, double e_min);
JointSearchResult exhaustive_parallel(const LinkTable& t, double duration, double e_min);

// Sum of |sum_p amp_p x_p(t)|^2 over n samples, scaled by duration / n.
// Samples are drawn in fixed blocks seeded from (seed, block index).
double sampled_energy_serial(std::span<const Complex> amplitudes, double duration, std::uint64_t n_samples,
                             std::uint64_t seed, SignalModel model);
double sampled_energy_parallel(std::span<const Complex> amplitudes, double duration, std::uint64_t n_samples,
                               std::uint64_t seed, SignalModel model);

}  // namespace kernels
}  // namespace wpt
