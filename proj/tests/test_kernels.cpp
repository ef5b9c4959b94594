#include <doctest.h>

#include "fixtures.hpp"
#include "wpt/errors.hpp"
#include "wpt/kernels.hpp"
#include "wpt/scenario.hpp"

using namespace wpt;

TEST_CASE("gain table: OpenMP kernel matches the serial reference bit for bit") {
  ScenarioParams p = testing::corner_params(4, 37, 16);
  const Scenario sc = make_scenario(p, 99, Exec::Serial);
  const LinkTable par = kernels::gain_table_parallel(sc.link_rows, sc.codebook, 37, 4);
  CHECK(par == sc.gains);
  for (double g : sc.gains.data()) CHECK(g >= 0.0);
}

TEST_CASE("exhaustive search: OpenMP kernel matches the serial reference") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const LinkTable t = testing::random_table(6, 4, 6, seed);
    for (double e_min : {0.0, 20.0, 45.0, 1e9}) {
      const JointSearchResult s = kernels::exhaustive_serial(t, 0.5, e_min);
      const JointSearchResult q = kernels::exhaustive_parallel(t, 0.5, e_min);
      CHECK(s.codes == q.codes);
      CHECK(s.total == q.total);
      CHECK(s.feasible == q.feasible);
      CHECK(s.evaluations == q.evaluations);
    }
  }
}

TEST_CASE("exhaustive search ties go to the lexicographically smallest assignment") {
  LinkTable t(1, 2, 3);  // every assignment ties
  for (Exec e : {Exec::Serial, Exec::Parallel}) {
    const JointSearchResult r =
        e == Exec::Serial ? kernels::exhaustive_serial(t, 1.0, 0.0) : kernels::exhaustive_parallel(t, 1.0, 0.0);
    CHECK(r.codes == std::vector<int>{0, 0});
    CHECK(r.feasible);
  }
}

TEST_CASE("sampled energy: OpenMP kernel matches the serial reference") {
  const std::vector<Complex> amp{{1.0, 0.5}, {-0.3, 2.0}, {0.1, 0.1}};
  for (std::uint64_t n : {1ull, 4095ull, 4096ull, 4097ull, 50000ull}) {
    CHECK(kernels::sampled_energy_serial(amp, 0.5, n, 17, SignalModel::ComplexGaussian) ==
          kernels::sampled_energy_parallel(amp, 0.5, n, 17, SignalModel::ComplexGaussian));
  }
  CHECK_THROWS_AS(kernels::sampled_energy_serial(amp, 0.5, 0, 1, SignalModel::Constant), InvalidInput);
}
