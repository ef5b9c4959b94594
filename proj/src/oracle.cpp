#include "wpt/oracle.hpp"

#include <limits>
#include <string>

#include "wpt/errors.hpp"

namespace wpt {

std::uint64_t joint_assignment_count(std::size_t codes, std::size_t transmitters) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t count = 1;
  for (std::size_t p = 0; p < transmitters; ++p) {
    if (codes != 0 && count > kMax / codes) return kMax;
    count *= codes;
  }
  return count;
}

JointSearchResult exhaustive_search(const LinkTable& links, double duration, double e_min, std::uint64_t cap,
                                    Exec exec) {
  if (links.transmitters() == 0 || links.codes() == 0 || links.receivers() == 0)
    throw InvalidInput("empty link table");
  const std::uint64_t count = joint_assignment_count(links.codes(), links.transmitters());
  if (count > cap)
    throw ResourceError("joint space of " + std::to_string(links.codes()) + "^" +
                        std::to_string(links.transmitters()) + " assignments exceeds enumeration cap " +
                        std::to_string(cap));
  return exec == Exec::Serial ? kernels::exhaustive_serial(links, duration, e_min)
                              : kernels::exhaustive_parallel(links, duration, e_min);
}

SequentialSearchResult greedy_sequential_search(const LinkTable& links, double duration) {
  const std::size_t k = links.receivers(), l = links.transmitters(), n = links.codes();
  SequentialSearchResult r;
  r.codes.assign(l, kUnset);
  // Running sum of decided transmitters' gains per receiver.
  std::vector<double> decided(k, 0.0);
  for (std::size_t p = 0; p < l; ++p) {
    int best = 0;
    double best_total = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
      double partial = 0.0;
      for (std::size_t j = 0; j < k; ++j) partial += duration * (decided[j] + links(j, p, i));
      ++r.evaluations;
      if (partial > best_total) {
        best_total = partial;
        best = static_cast<int>(i);
      }
    }
    r.codes[p] = best;
    for (std::size_t j = 0; j < k; ++j) decided[j] += links(j, p, static_cast<std::size_t>(best));
  }
  for (std::size_t j = 0; j < k; ++j) r.total += receiver_energy(links, j, r.codes, duration);
  return r;
}

}  // namespace wpt
