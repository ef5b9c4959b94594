#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "wpt/errors.hpp"
#include "wpt/oracle.hpp"

using namespace wpt;

TEST_CASE("single transmitter: exhaustive search is an argmax over codes") {
  const LinkTable t = testing::random_table(4, 1, 9, 2);
  const JointSearchResult r = exhaustive_search(t, 0.5, 0.0);
  std::size_t best = 0;
  double best_sum = -1;
  for (std::size_t i = 0; i < 9; ++i) {
    double s = 0;
    for (std::size_t j = 0; j < 4; ++j) s += t(j, 0, i);
    if (s > best_sum) {
      best_sum = s;
      best = i;
    }
  }
  CHECK(r.codes == std::vector<int>{static_cast<int>(best)});
  CHECK(r.evaluations == 9);
  const SequentialSearchResult g = greedy_sequential_search(t, 0.5);
  CHECK(g.codes == r.codes);
  CHECK(g.total == r.total);
}

TEST_CASE("hand-built 2x2x2 instance") {
  // g[j][p][i]        p=0: i=0 i=1   p=1: i=0 i=1
  //   receiver 0           4   1          1   2
  //   receiver 1           0   2          3   1
  const LinkTable t(2, 2, 2, {4, 1, 1, 2, 0, 2, 3, 1});
  // At P = 1:  (0,0) e=(5,3) total 8   (0,1) e=(6,1) total 7
  //            (1,0) e=(2,5) total 7   (1,1) e=(3,3) total 6
  JointSearchResult r = exhaustive_search(t, 1.0, 0.0);
  CHECK(r.codes == std::vector<int>{0, 0});
  CHECK(r.total == 8.0);
  CHECK(r.feasible);
  CHECK(r.evaluations == 4);

  // e_min = 3: (0,0) and (1,1) qualify, (0,0) is larger.
  r = exhaustive_search(t, 1.0, 3.0);
  CHECK(r.codes == std::vector<int>{0, 0});
  CHECK(r.feasible);

  // e_min = 3.5: nothing qualifies; unconstrained best, flagged.
  r = exhaustive_search(t, 1.0, 3.5);
  CHECK(r.codes == std::vector<int>{0, 0});
  CHECK(r.total == 8.0);
  CHECK_FALSE(r.feasible);
}

TEST_CASE("energy floor moves the optimum; ties resolve lexicographically") {
  //                    p=0: i=0 i=1   p=1: i=0 i=1
  //   receiver 0           4   1          3   2
  //   receiver 1           0   2          0   1
  const LinkTable t(2, 2, 2, {4, 1, 3, 2, 0, 2, 0, 1});
  // (0,0) e=(7,0) total 7   (0,1) e=(6,1) total 7
  // (1,0) e=(4,2) total 6   (1,1) e=(3,3) total 6
  JointSearchResult r = exhaustive_search(t, 1.0, 0.0);
  CHECK(r.codes == std::vector<int>{0, 0});
  CHECK(r.total == 7.0);
  r = exhaustive_search(t, 1.0, 2.0);
  CHECK(r.codes == std::vector<int>{1, 0});
  CHECK(r.total == 6.0);
  CHECK(r.feasible);
}

TEST_CASE("evaluation counts: N^L joint versus N*L sequential") {
  const LinkTable t = testing::random_table(5, 4, 8, 1);
  CHECK(exhaustive_search(t, 0.5, 0.0).evaluations == 4096);
  CHECK(greedy_sequential_search(t, 0.5).evaluations == 32);
}

TEST_CASE("enumeration cap") {
  const LinkTable t = testing::random_table(2, 4, 8, 1);
  CHECK_THROWS_AS(exhaustive_search(t, 0.5, 0.0, 4095), ResourceError);
  CHECK_NOTHROW(exhaustive_search(t, 0.5, 0.0, 4096));
  CHECK(joint_assignment_count(1000, 10) == UINT64_MAX);
}

TEST_CASE("sequential search matches exhaustive without an energy floor") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const LinkTable t = testing::random_table(5, 4, 8, seed);
    const JointSearchResult e = exhaustive_search(t, 0.5, 0.0);
    const SequentialSearchResult g = greedy_sequential_search(t, 0.5);
    CHECK(testing::close_rel(e.total, g.total, 1e-12));
  }
}

TEST_CASE("exhaustive total is never below a feasible sequential total") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const LinkTable t = testing::random_table(4, 3, 5, seed + 100);
    const SequentialSearchResult g = greedy_sequential_search(t, 0.5);
    double g_min = 1e300;
    for (std::size_t j = 0; j < 4; ++j) g_min = std::min(g_min, receiver_energy(t, j, g.codes, 0.5));
    for (double e_min : {0.0, 5.0, 8.0, 11.0}) {
      const JointSearchResult e = exhaustive_search(t, 0.5, e_min);
      if (g_min >= e_min) {
        CHECK(e.feasible);
        CHECK(e.total >= g.total);
      }
    }
  }
}

TEST_CASE("permuting receivers leaves the chosen codes unchanged") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const LinkTable t = testing::random_table(5, 3, 6, seed);
    std::vector<std::size_t> perm{3, 0, 4, 1, 2};
    LinkTable u(5, 3, 6);
    for (std::size_t j = 0; j < 5; ++j)
      for (std::size_t p = 0; p < 3; ++p)
        for (std::size_t i = 0; i < 6; ++i) u(j, p, i) = t(perm[j], p, i);
    for (double e_min : {0.0, 12.0}) CHECK(exhaustive_search(t, 0.5, e_min).codes == exhaustive_search(u, 0.5, e_min).codes);
  }
}
