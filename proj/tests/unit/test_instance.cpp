#include <cstdlib>

#include "doctest.h"
#include "egal/instance.hpp"
#include "helpers.hpp"

using namespace egal;
using namespace testing_helpers;
using V = std::vector<std::string>;

TEST_CASE("instance files") {
  const Instance a = parse_instance(
      R"({"issues": ["p", "q", "r"], "constraint": "r <-> p & q", "profile": ["111", "010"]})");
  CHECK(a.agenda.size() == 3);
  CHECK_FALSE(a.explicit_domain);
  CHECK(bits(a.domain()) == V{"000", "010", "100", "111"});
  CHECK(parse_instance(to_json(a)).agenda.constraint() == a.agenda.constraint());

  const Instance b = parse_instance(R"({"issues": ["a", "b"], "domain": ["11", "00"], "profile": []})");
  CHECK(bits(b.domain()) == V{"00", "11"});
  CHECK(b.profile.empty());
  const Instance round = parse_instance(to_json(b));
  CHECK(round.explicit_domain == b.explicit_domain);

  CHECK(bits(parse_instance(R"({"issues": ["a", "b"]})").domain()).size() == 4);
}

TEST_CASE("invalid instance files") {
  CHECK_THROWS_AS(parse_instance("{"), SyntaxError);
  CHECK_THROWS_AS(parse_instance("[]"), InvalidArgument);
  CHECK_THROWS_AS(parse_instance(R"({"profile": ["0"]})"), InvalidArgument);
  CHECK_THROWS_AS(parse_instance(R"({"issues": ["a"], "domain": ["0"], "constraint": "a"})"),
                  InvalidArgument);
  CHECK_THROWS_AS(parse_instance(R"({"issues": ["a", "b"], "profile": ["011"]})"), DimensionError);
  CHECK_THROWS_AS(parse_instance(R"({"issues": ["a", "b"], "domain": ["00"], "profile": ["11"]})"),
                  InvalidArgument);
  CHECK_THROWS_AS(parse_instance(R"({"issues": ["a", "b"], "constraint": "a", "profile": ["01"]})"),
                  InvalidArgument);
  CHECK_THROWS_AS(parse_instance(R"({"issues": ["a"], "colour": 1})"), InvalidArgument);
  CHECK_THROWS_AS(parse_instance(R"({"issues": ["a"], "profile": "1"})"), InvalidArgument);
  CHECK_THROWS_AS(parse_instance(R"({"issues": ["a"], "constraint": "b"})"), InvalidArgument);
  CHECK_THROWS_AS(parse_instance(R"({"issues": ["a"], "profile": ["2"]})"), SyntaxError);
}

TEST_CASE("enumeration cap from the environment") {
  ::unsetenv("EGAL_ENUM_CAP");
  CHECK(enumeration_cap_from_env() == kDefaultEnumCap);
  ::setenv("EGAL_ENUM_CAP", "24", 1);
  CHECK(enumeration_cap_from_env() == 24);
  ::setenv("EGAL_ENUM_CAP", "lots", 1);
  CHECK_THROWS_AS(enumeration_cap_from_env(), InvalidArgument);
  ::unsetenv("EGAL_ENUM_CAP");
}
