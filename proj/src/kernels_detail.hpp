#pragma once

#include <cstdint>
#include <span>

#include "wpt/kernels.hpp"

namespace wpt::kernels::detail {

void decode_assignment(std::uint64_t index, std::size_t n, std::span<int> codes);
std::uint64_t assignment_count(const LinkTable& t);
double evaluate(const LinkTable& t, std::span<const int> codes, double duration, std::span<double> energies);
double block_energy(std::span<const Complex> amp, std::uint64_t begin, std::uint64_t end, std::uint64_t seed,
                    std::uint64_t block, SignalModel model);

}  // namespace wpt::kernels::detail
