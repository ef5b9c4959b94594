#pragma once

#include <cstdint>
#include <vector>

#include "wpt/kernels.hpp"
#include "wpt/link_table.hpp"

namespace wpt {

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

// Brute force over all N^L joint assignments. Maximises the total expected
// energy among assignments meeting e_min at every receiver; if none does,
// returns the unconstrained maximiser with feasible = false.
// Throws ResourceError when N^L exceeds `cap`.
JointSearchResult exhaustive_search(const LinkTable& links, double duration, double e_min,
                                    std::uint64_t cap = kDefaultEnumerationCap, Exec exec = Exec::Parallel);

struct SequentialSearchResult {
  std::vector<int> codes;
  double total = 0.0;
  std::uint64_t evaluations = 0;
};

// Transmitters pick in index order, each maximising the partial total over
// the transmitters already decided. N * L evaluations.
SequentialSearchResult greedy_sequential_search(const LinkTable& links, double duration);

// N^L, saturating at UINT64_MAX.
std::uint64_t joint_assignment_count(std::size_t codes, std::size_t transmitters);

}  // namespace wpt
