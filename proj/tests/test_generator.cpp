#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "mmbp/generator.hpp"
#include "mmbp/instance.hpp"

using namespace mmbp;

TEST_CASE("m equal to the pair count yields the complete graph") {
  for (std::uint64_t seed : {0ull, 1ull, 99ull}) {
    GenConfig config{.vertex_count = 4, .edge_count = 6, .dim = 1, .seed = seed};
    const Instance inst = generate(config);
    CHECK(inst.edge_count() == 6);
    CHECK(inst.edges() == std::vector<Edge>{{1, 2}, {1, 3}, {1, 4},
                                            {2, 3}, {2, 4}, {3, 4}});
  }
}

TEST_CASE("generation is deterministic, byte for byte") {
  GenConfig config{.vertex_count = 10, .edge_count = 15, .dim = 20, .seed = 7};
  const std::string a = serialize_instance(generate(config));
  const std::string b = serialize_instance(generate(config));
  CHECK(a == b);
  config.seed = 8;
  CHECK(serialize_instance(generate(config)) != a);
}

TEST_CASE("config validation") {
  CHECK_THROWS_AS(generate({.vertex_count = 10, .edge_count = 46, .dim = 1}),
                  std::invalid_argument);  // 46 > 45
  CHECK_THROWS_AS(generate({.vertex_count = 9, .edge_count = 5, .dim = 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(generate({.vertex_count = 4, .edge_count = 2, .dim = 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(generate({.vertex_count = 4, .edge_count = 2, .dim = 1,
                            .weight_min_milli = 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(generate({.vertex_count = 4, .edge_count = 2, .dim = 1,
                            .weight_min_milli = 5000, .weight_max_milli = 4000}),
                  std::invalid_argument);
  CHECK_NOTHROW(generate({.vertex_count = 4, .edge_count = 0, .dim = 1}));
}

TEST_CASE("weights stay on the configured 3-decimal grid") {
  GenConfig config{.vertex_count = 10, .edge_count = 45, .dim = 5, .seed = 3};
  const Instance inst = generate(config);
  std::set<std::int64_t> distinct;
  for (const std::int64_t w : inst.weights_milli()) {
    CHECK(w >= 1000);
    CHECK(w <= 9999);
    distinct.insert(w);
  }
  CHECK(distinct.size() > 50);  // 225 draws over 9000 values
}

TEST_CASE("paper suite has the 27 published shapes") {
  const auto suite = paper_suite(12345);
  REQUIRE(suite.size() == 27);

  std::map<std::int32_t, std::set<std::int64_t>> shapes;
  for (const auto& [name, config] : suite) {
    CHECK(config.dim == 20);
    CHECK(config.weight_min_milli == 1000);
    CHECK(config.weight_max_milli == 9999);
    shapes[config.vertex_count].insert(config.edge_count);
  }
  CHECK(shapes[10] == std::set<std::int64_t>{15, 25, 40});
  CHECK(shapes[20] == std::set<std::int64_t>{30, 70, 150});
  CHECK(shapes[30] == std::set<std::int64_t>{50, 150, 400});
  CHECK(shapes[50] == std::set<std::int64_t>{80, 300, 1000});
  CHECK(shapes[100] == std::set<std::int64_t>{150, 500, 3000});
  CHECK(shapes[300] == std::set<std::int64_t>{500, 2000, 10000, 30000});
  CHECK(shapes[500] == std::set<std::int64_t>{1000, 3000, 10000, 60000});
  CHECK(shapes[1000] == std::set<std::int64_t>{1500, 10000, 100000, 350000});

  CHECK(suite[0].first == "010_015");
  const auto it = std::find_if(suite.begin(), suite.end(), [](const auto& e) {
    return e.second.vertex_count == 30 && e.second.edge_count == 400;
  });
  REQUIRE(it != suite.end());
  CHECK(it->first == "030_400");

  // Distinct seeds per entry, deterministic in the base seed.
  std::set<std::uint64_t> seeds;
  for (const auto& [name, config] : suite) seeds.insert(config.seed);
  CHECK(seeds.size() == 27);
  CHECK(paper_suite(12345)[5].second.seed == suite[5].second.seed);
  CHECK(paper_suite(54321)[5].second.seed != suite[5].second.seed);
}

TEST_CASE("edge inclusion is empirically uniform") {
  // n=6 has 15 pairs; m=5 includes each with probability 1/3.
  const int trials = 3000;
  std::map<std::pair<std::int32_t, std::int32_t>, int> hits;
  for (int t = 0; t < trials; ++t) {
    GenConfig config{.vertex_count = 6, .edge_count = 5, .dim = 1,
                     .seed = static_cast<std::uint64_t>(t)};
    const Instance inst = generate(config);
    CHECK(inst.edge_count() == 5);
    for (const Edge& e : inst.edges()) ++hits[{e.u, e.v}];
  }
  CHECK(hits.size() == 15);
  for (const auto& [pair, count] : hits) {
    const double freq = static_cast<double>(count) / trials;
    CHECK(freq > 1.0 / 3.0 - 0.05);
    CHECK(freq < 1.0 / 3.0 + 0.05);
  }
}

TEST_CASE("generated instances satisfy the instance invariants by construction") {
  // A round-trip through the canonical text form re-validates everything.
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    GenConfig config{.vertex_count = 12, .edge_count = 30, .dim = 4,
                     .seed = seed};
    const Instance inst = generate(config);
    CHECK(parse_instance(serialize_instance(inst)) == inst);
  }
}
