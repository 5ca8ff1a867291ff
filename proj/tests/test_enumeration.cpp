#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "mmbp/enumeration.hpp"
#include "test_support.hpp"

using namespace mmbp;
using mmbp_test::k4_instance;

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < r; ++i) result = result * (n - i) / (i + 1);
  return result;
}

}  // namespace

TEST_CASE("K4 oracle optimum") {
  const SolveResult r = solve_enumeration(k4_instance());
  CHECK(r.status == SolveResult::Status::Optimal);
  CHECK(r.best_value.milli == 8000);
  CHECK(r.best_bisection.members() == std::vector<std::int32_t>{1, 4});
  CHECK(r.explored == 3);
  CHECK(r.time_to_best <= r.time_total);
}

TEST_CASE("K4 with the one-coordinate prefix") {
  // First coordinates per bisection: {1,2} cuts 6, {1,3} cuts 10, {1,4}
  // cuts 8. Dropping coordinate 2 moves the optimum to {1,3}.
  const Instance k1 = prefix_instance(k4_instance(), 1);
  const auto oracle = mmbp_test::oracle_best_bisection(k1);
  CHECK(oracle.value == 10000);
  CHECK(oracle.members == std::vector<std::int32_t>{1, 3});
  const SolveResult r = solve_enumeration(k1);
  CHECK(r.best_value.milli == 10000);
  CHECK(r.best_bisection.members() == std::vector<std::int32_t>{1, 3});
  // The fixed bisection {1,4} still cuts 8.000 on the prefix.
  CHECK(cut_weight(k1, Bisection(4, {1, 4})).weight.milli == 8000);
}

TEST_CASE("zero-edge instances scan the whole space and report 0") {
  for (std::int32_t n : {2, 4, 6, 8, 10}) {
    const Instance inst(n, 3, {}, {});
    const SolveResult r = solve_enumeration(inst);
    CHECK(r.status == SolveResult::Status::Optimal);
    CHECK(r.best_value.milli == 0);
    CHECK(r.explored == binomial(static_cast<std::uint64_t>(n) - 1,
                                 static_cast<std::uint64_t>(n) / 2 - 1));
    // Lexicographically smallest optimum.
    std::vector<std::int32_t> expect(static_cast<std::size_t>(n) / 2);
    std::iota(expect.begin(), expect.end(), 1);
    CHECK(r.best_bisection.members() == expect);
  }
}

TEST_CASE("n=2 has the single bisection {1}") {
  const Instance inst = parse_instance("2 1 1\n1 2 4.500\n");
  const SolveResult r = solve_enumeration(inst);
  CHECK(r.explored == 1);
  CHECK(r.best_value.milli == 4500);
  CHECK(r.best_bisection.members() == std::vector<std::int32_t>{1});
}

TEST_CASE("matches the bitmask oracle, value and tie-break") {
  std::uint64_t seed = 0;
  for (std::int32_t n : {4, 6, 8, 10, 12}) {
    for (std::int64_t m :
         {static_cast<std::int64_t>(n - 1),
          static_cast<std::int64_t>(n) * (n - 1) / 4,
          static_cast<std::int64_t>(n) * (n - 1) / 2}) {
      for (std::int32_t k : {1, 3}) {
        const Instance inst = mmbp_test::random_instance(n, m, k, ++seed);
        const auto oracle = mmbp_test::oracle_best_bisection(inst);
        const SolveResult r = solve_enumeration(inst);
        CAPTURE(n);
        CAPTURE(m);
        CAPTURE(k);
        CAPTURE(seed);
        CHECK(r.best_value.milli == oracle.value);
        CHECK(r.best_bisection.members() == oracle.members);
        CHECK(r.explored == oracle.candidates);
      }
    }
  }
}

TEST_CASE("each complementary pair is visited exactly once") {
  const Instance inst = mmbp_test::random_instance(8, 12, 2, 5);
  std::set<std::vector<std::int32_t>> visited;
  LeafInspector inspector = [&](std::span<const std::int32_t> members,
                                std::span<const std::int64_t>) {
    std::vector<std::int32_t> key(members.begin(), members.end());
    CHECK(key.front() == 1);  // anchoring
    CHECK(visited.insert(key).second);
    // The complement must never appear: it would not contain vertex 1.
  };
  const SolveResult r = solve_enumeration(inst, {}, inspector);
  CHECK(visited.size() == r.explored);
  CHECK(r.explored == binomial(7, 3));
}

TEST_CASE("incremental cut sums are bitwise equal to recomputation") {
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    const Instance inst = mmbp_test::random_instance(10, 28, 5, seed);
    LeafInspector inspector = [&](std::span<const std::int32_t> members,
                                  std::span<const std::int64_t> sums) {
      std::vector<std::uint8_t> mask(11, 0);
      for (const std::int32_t v : members)
        mask[static_cast<std::size_t>(v)] = 1;
      // From-scratch recomputation with plain loops.
      std::vector<std::int64_t> scratch(5, 0);
      for (std::int32_t e = 0; e < inst.edge_count(); ++e) {
        const Edge& edge = inst.edge(e);
        if (mask[static_cast<std::size_t>(edge.u)] ==
            mask[static_cast<std::size_t>(edge.v)])
          continue;
        for (std::size_t l = 0; l < 5; ++l)
          scratch[l] += inst.weight_row(e)[l];
      }
      REQUIRE(std::vector<std::int64_t>(sums.begin(), sums.end()) == scratch);
    };
    solve_enumeration(inst, {}, inspector);
  }
}

TEST_CASE("incumbent value is non-decreasing over the scan") {
  const Instance inst = mmbp_test::random_instance(10, 20, 3, 77);
  std::int64_t best_so_far = -1;
  std::int64_t running_max = -1;
  LeafInspector inspector = [&](std::span<const std::int32_t>,
                                std::span<const std::int64_t> sums) {
    std::int64_t value = sums[0];
    for (const std::int64_t s : sums)
      if (s < value) value = s;
    if (value > running_max) running_max = value;
    CHECK(running_max >= best_so_far);
    best_so_far = running_max;
  };
  const SolveResult r = solve_enumeration(inst, {}, inspector);
  CHECK(r.best_value.milli == running_max);
}

TEST_CASE("time limit returns the incumbent with TimeLimit status") {
  const Instance inst = mmbp_test::random_instance(20, 60, 5, 9);
  const SolveResult r = solve_enumeration(inst, 0.0);
  CHECK(r.status == SolveResult::Status::TimeLimit);
  CHECK(r.explored >= 1);
  CHECK(r.best_value.milli ==
        cut_weight(inst, r.best_bisection).weight.milli);
}

TEST_CASE("reported value is recomputable from the reported bisection") {
  for (std::uint64_t seed : {10ull, 20ull, 30ull}) {
    const Instance inst = mmbp_test::random_instance(8, 16, 4, seed);
    const SolveResult r = solve_enumeration(inst);
    CHECK(r.best_value.milli ==
          cut_weight(inst, r.best_bisection).weight.milli);
  }
}
