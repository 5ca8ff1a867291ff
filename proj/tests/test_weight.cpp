#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mmbp/weight.hpp"

using namespace mmbp;

TEST_CASE("format_milli prints exactly three fraction digits") {
  CHECK(format_milli(0) == "0.000");
  CHECK(format_milli(1) == "0.001");
  CHECK(format_milli(999) == "0.999");
  CHECK(format_milli(1000) == "1.000");
  CHECK(format_milli(9999) == "9.999");
  CHECK(format_milli(68708) == "68.708");
  CHECK(format_milli(986248932) == "986248.932");
}

TEST_CASE("parse_milli accepts up to three fraction digits") {
  CHECK(parse_milli("3.000") == 3000);
  CHECK(parse_milli("3") == 3000);
  CHECK(parse_milli("3.5") == 3500);
  CHECK(parse_milli("3.50") == 3500);
  CHECK(parse_milli("0.001") == 1);
  CHECK(parse_milli("9.999") == 9999);
}

TEST_CASE("parse_milli rejects malformed numbers") {
  CHECK(!parse_milli(""));
  CHECK(!parse_milli("."));
  CHECK(!parse_milli("3."));
  CHECK(!parse_milli(".5"));
  CHECK(!parse_milli("3.0001"));
  CHECK(!parse_milli("-1"));
  CHECK(!parse_milli("+1"));
  CHECK(!parse_milli("1e3"));
  CHECK(!parse_milli("1 2"));
  CHECK(!parse_milli("12345678901234567890"));
}

TEST_CASE("parse_milli_exact3 requires the canonical form") {
  CHECK(parse_milli_exact3("3.000") == 3000);
  CHECK(!parse_milli_exact3("3"));
  CHECK(!parse_milli_exact3("3.00"));
  CHECK(!parse_milli_exact3("3.0000"));
}

TEST_CASE("weight round-trips through its string form") {
  for (std::int64_t m : {0, 1, 999, 1000, 123456, 9999000}) {
    const Weight w = Weight::from_milli(m);
    CHECK(parse_milli_exact3(w.str()) == m);
  }
}
