#include <omp.h>

#include <algorithm>

#include "kernels_detail.hpp"
#include "wpt/errors.hpp"
#include "wpt/kernels.hpp"

namespace wpt::kernels {

LinkTable gain_table_parallel(std::span<const ComplexVector> link_rows, const Codebook& book, std::size_t receivers,
                              std::size_t transmitters) {
  if (link_rows.size() != receivers * transmitters) throw InvalidInput("need K x L link rows");
  const std::size_t n = book.size();
  LinkTable t(receivers, transmitters, n);
  const std::int64_t cells = static_cast<std::int64_t>(receivers * transmitters * n);
#pragma omp parallel for schedule(static)
  for (std::int64_t c = 0; c < cells; ++c) {
    const std::size_t row = static_cast<std::size_t>(c) / n;
    const std::size_t i = static_cast<std::size_t>(c) % n;
    t(row / transmitters, row % transmitters, i) = beam_power_gain(link_rows[row], book.code(i));
  }
  return t;
}

namespace {

struct Best {
  std::uint64_t any = 0, ok = 0;
  double any_total = -1.0, ok_total = -1.0;
  bool found_ok = false;
};

// (total desc, index asc)
bool better(double total, std::uint64_t idx, double best_total, std::uint64_t best_idx) {
  return total > best_total || (total == best_total && idx < best_idx);
}

}  // namespace

JointSearchResult exhaustive_parallel(const LinkTable& t, double duration, double e_min) {
  const std::uint64_t count = detail::assignment_count(t);
  const int threads = omp_get_max_threads();
  std::vector<Best> partial(static_cast<std::size_t>(threads));

#pragma omp parallel num_threads(threads)
  {
    Best local;
    std::vector<int> codes(t.transmitters());
    std::vector<double> energies(t.receivers());
#pragma omp for schedule(static)
    for (std::int64_t s = 0; s < static_cast<std::int64_t>(count); ++s) {
      const auto idx = static_cast<std::uint64_t>(s);
      detail::decode_assignment(idx, t.codes(), codes);
      const double total = detail::evaluate(t, codes, duration, energies);
      if (total > local.any_total) {
        local.any_total = total;
        local.any = idx;
      }
      bool ok = true;
      for (double e : energies) ok = ok && e >= e_min;
      if (ok && total > local.ok_total) {
        local.ok_total = total;
        local.ok = idx;
        local.found_ok = true;
      }
    }
    partial[static_cast<std::size_t>(omp_get_thread_num())] = local;
  }

  Best best;
  bool have_any = false;
  for (const Best& b : partial) {
    if (b.any_total >= 0.0 && (!have_any || better(b.any_total, b.any, best.any_total, best.any))) {
      best.any_total = b.any_total;
      best.any = b.any;
      have_any = true;
    }
    if (b.found_ok && (!best.found_ok || better(b.ok_total, b.ok, best.ok_total, best.ok))) {
      best.ok_total = b.ok_total;
      best.ok = b.ok;
      best.found_ok = true;
    }
  }

  JointSearchResult r;
  r.codes.resize(t.transmitters());
  detail::decode_assignment(best.found_ok ? best.ok : best.any, t.codes(), r.codes);
  r.total = best.found_ok ? best.ok_total : best.any_total;
  r.feasible = best.found_ok;
  r.evaluations = count;
  return r;
}

double sampled_energy_parallel(std::span<const Complex> amplitudes, double duration, std::uint64_t n_samples,
                               std::uint64_t seed, SignalModel model) {
  if (n_samples == 0) throw InvalidInput("need at least one sample");
  const std::uint64_t blocks = (n_samples + kSampleBlock - 1) / kSampleBlock;
  std::vector<double> sums(blocks, 0.0);
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < static_cast<std::int64_t>(blocks); ++b) {
    const auto ub = static_cast<std::uint64_t>(b);
    const std::uint64_t begin = ub * kSampleBlock;
    const std::uint64_t end = std::min<std::uint64_t>(begin + kSampleBlock, n_samples);
    sums[ub] = detail::block_energy(amplitudes, begin, end, seed, ub, model);
  }
  // Block order, so the result matches the serial reference exactly.
  double sum = 0.0;
  for (double s : sums) sum += s;
  return duration * sum / static_cast<double>(n_samples);
}

}  // namespace wpt::kernels
