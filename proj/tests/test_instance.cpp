#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "mmbp/instance.hpp"
#include "test_support.hpp"

using namespace mmbp;
using mmbp_test::k4_instance;

TEST_CASE("parse_instance reads the native format") {
  const Instance inst = parse_instance("4 1 2\n1 2 3.000 1.000\n");
  CHECK(inst.vertex_count() == 4);
  CHECK(inst.dim() == 2);
  CHECK(inst.edge_count() == 1);
  CHECK(inst.edge(0) == Edge{1, 2});
  CHECK(inst.weight_row(0)[0] == 3000);
  CHECK(inst.weight_row(0)[1] == 1000);
}

TEST_CASE("parse_instance rejects invalid inputs") {
  CHECK_THROWS_AS(parse_instance("3 0 1\n"), ParseError);          // odd n
  CHECK_THROWS_AS(parse_instance("0 0 1\n"), ParseError);          // empty V
  CHECK_THROWS_AS(parse_instance("4 1 1\n2 1 1.000\n"), ParseError);  // u >= v
  CHECK_THROWS_AS(parse_instance("4 1 1\n2 2 1.000\n"), ParseError);  // loop
  CHECK_THROWS_AS(parse_instance("4 1 1\n1 5 1.000\n"), ParseError);  // range
  CHECK_THROWS_AS(parse_instance("4 2 1\n1 2 1.000\n1 2 2.000\n"),
                  ParseError);                                     // duplicate
  CHECK_THROWS_AS(parse_instance("4 1 1\n1 2 0.000\n"), ParseError);  // w <= 0
  CHECK_THROWS_AS(parse_instance("4 1 2\n1 2 1.000\n"), ParseError);  // count
  CHECK_THROWS_AS(parse_instance("4 1 1\n1 2 1.0x\n"), ParseError);   // number
  CHECK_THROWS_AS(parse_instance("4 1 1\n1 2 1.0000\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("4 2 1\n1 2 1.000\n"), ParseError);  // m high
  CHECK_THROWS_AS(parse_instance("4 0 1\n1 2 1.000\n"), ParseError);  // m low
  CHECK_THROWS_AS(parse_instance("4 0 0\n"), ParseError);           // k < 1
  CHECK_THROWS_AS(parse_instance(""), ParseError);
}

TEST_CASE("parse sorts edges; serialize is canonical and byte-stable") {
  const Instance inst =
      parse_instance("4 2 1\n2 3 5.000\n1 3 2.500\n");
  CHECK(inst.edge(0) == Edge{1, 3});
  CHECK(inst.edge(1) == Edge{2, 3});
  const std::string canon = serialize_instance(inst);
  CHECK(canon == "4 2 1\n1 3 2.500\n2 3 5.000\n");
  CHECK(serialize_instance(parse_instance(canon)) == canon);
}

TEST_CASE("parse accepts short weight forms, serialize normalizes") {
  const Instance inst = parse_instance("2 1 2\n1 2 3 1.5\n");
  CHECK(inst.weight_row(0)[0] == 3000);
  CHECK(inst.weight_row(0)[1] == 1500);
  CHECK(serialize_instance(inst) == "2 1 2\n1 2 3.000 1.500\n");
}

TEST_CASE("instance constructor validates") {
  CHECK_THROWS_AS(Instance(3, 1, {}, {}), std::invalid_argument);
  CHECK_THROWS_AS(Instance(4, 0, {}, {}), std::invalid_argument);
  CHECK_THROWS_AS(Instance(4, 1, {{1, 2}}, {0}), std::invalid_argument);
  CHECK_THROWS_AS(Instance(4, 1, {{1, 2}}, {1000, 2000}),
                  std::invalid_argument);
  CHECK_NOTHROW(Instance(4, 1, {}, {}));  // isolated vertices are fine
}

TEST_CASE("bisection canonicalization and validation") {
  const Bisection s(4, {2, 3});
  CHECK(s.members() == std::vector<std::int32_t>{1, 4});  // complemented
  CHECK(Bisection(4, {4, 1}).members() == std::vector<std::int32_t>{1, 4});
  CHECK_THROWS_AS(Bisection(4, {1}), std::invalid_argument);
  CHECK_THROWS_AS(Bisection(4, {1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Bisection(4, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Bisection(4, {1, 5}), std::invalid_argument);
}

TEST_CASE("K4 oracle cuts") {
  const Instance k4 = k4_instance();

  const Bisection s14(4, {1, 4});
  CHECK(cut_edges(k4, s14) == std::vector<std::int32_t>{0, 1, 4, 5});
  const CutReport r14 = cut_weight(k4, s14);
  CHECK(r14.coordinate_sums[0].milli == 8000);
  CHECK(r14.coordinate_sums[1].milli == 8000);
  CHECK(r14.weight.milli == 8000);

  const Bisection s12(4, {1, 2});
  const CutReport r12 = cut_weight(k4, s12);
  CHECK(r12.coordinate_sums[0].milli == 6000);
  CHECK(r12.coordinate_sums[1].milli == 10000);
  CHECK(r12.weight.milli == 6000);

  // Complement symmetry: S={2,3} canonicalizes to {1,4} and cuts match.
  CHECK(cut_edges(k4, Bisection(4, {2, 3})) == cut_edges(k4, s14));
}

TEST_CASE("raw subsets: V and the empty set have empty cuts") {
  const Instance k4 = k4_instance();
  const std::vector<std::uint8_t> all(5, 1);
  CHECK(cut_edges_of_mask(k4, all).empty());
  const std::vector<std::uint8_t> none(5, 0);
  CHECK(cut_edges_of_mask(k4, none).empty());
}

TEST_CASE("empty cut has zero sums and zero weight") {
  // Two disjoint edges; S = both endpoints of the first edge.
  const Instance inst = parse_instance("4 2 2\n1 2 1.000 2.000\n3 4 3.000 4.000\n");
  const CutReport r = cut_weight(inst, Bisection(4, {1, 2}));
  CHECK(r.cut_edges.empty());
  CHECK(r.coordinate_sums[0].milli == 0);
  CHECK(r.coordinate_sums[1].milli == 0);
  CHECK(r.weight.milli == 0);
}

TEST_CASE("complement symmetry holds for arbitrary subsets") {
  const Instance inst = mmbp_test::random_instance(10, 30, 3, 42);
  SplitMix64 rng{99};
  for (int round = 0; round < 100; ++round) {
    std::vector<std::uint8_t> mask(11, 0);
    for (std::size_t v = 1; v <= 10; ++v)
      mask[v] = static_cast<std::uint8_t>(rng.next() & 1);
    std::vector<std::uint8_t> flipped(11, 0);
    for (std::size_t v = 1; v <= 10; ++v) flipped[v] = mask[v] ^ 1;
    CHECK(cut_edges_of_mask(inst, mask) == cut_edges_of_mask(inst, flipped));
  }
}

TEST_CASE("cut weight is bounded by the smallest coordinate total") {
  const Instance inst = mmbp_test::random_instance(12, 40, 4, 7);
  const std::int64_t cap =
      *std::min_element(inst.total_sums().begin(), inst.total_sums().end());
  SplitMix64 rng{5};
  for (int round = 0; round < 100; ++round) {
    std::vector<std::uint8_t> mask(13, 0);
    for (std::size_t v = 1; v <= 12; ++v)
      mask[v] = static_cast<std::uint8_t>(rng.next() & 1);
    const CutReport r = cut_report_of_mask(inst, mask);
    CHECK(r.weight.milli >= 0);
    CHECK(r.weight.milli <= cap);
    // Report is internally consistent and matches the plain-loop oracle.
    CHECK(r.weight.milli == mmbp_test::oracle_cut_value(inst, mask));
  }
}

TEST_CASE("prefix_instance keeps leading coordinates") {
  const Instance k4 = k4_instance();
  CHECK(prefix_instance(k4, 2) == k4);
  const Instance k1 = prefix_instance(k4, 1);
  CHECK(k1.dim() == 1);
  CHECK(k1.weight_row(0)[0] == 3000);
  CHECK(k1.weight_row(5)[0] == 3000);
  // S={1,4} still cuts 8.000 on the first coordinate alone.
  CHECK(cut_weight(k1, Bisection(4, {1, 4})).weight.milli == 8000);
  CHECK_THROWS_AS(prefix_instance(k4, 0), std::invalid_argument);
  CHECK_THROWS_AS(prefix_instance(k4, 3), std::invalid_argument);
}

TEST_CASE("prefix cut weight never drops as coordinates are removed") {
  const Instance inst = mmbp_test::random_instance(10, 25, 8, 123);
  SplitMix64 rng{17};
  for (int round = 0; round < 50; ++round) {
    std::vector<std::int32_t> members{1};
    for (std::int32_t v = 2; v <= 10 && members.size() < 5; ++v)
      if (rng.next() & 1) members.push_back(v);
    for (std::int32_t v = 10; members.size() < 5; --v)
      if (std::find(members.begin(), members.end(), v) == members.end())
        members.push_back(v);
    const Bisection s(10, members);
    std::int64_t previous = -1;
    for (std::int32_t kp = inst.dim(); kp >= 1; --kp) {
      const std::int64_t value =
          cut_weight(prefix_instance(inst, kp), s).weight.milli;
      if (previous >= 0) CHECK(value >= previous);
      previous = value;
    }
  }
}
