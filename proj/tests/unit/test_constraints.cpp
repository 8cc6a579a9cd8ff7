#include <random>

#include "doctest.h"
#include "egal/constraints.hpp"
#include "helpers.hpp"

using namespace egal;
using namespace testing_helpers;

namespace {

const Agenda kPQR({"p", "q", "r"}, parse_formula("r <-> (p & q)"));

Formula random_formula(std::mt19937& rng, const std::vector<std::string>& vars, int depth) {
  if (depth == 0 || rng() % 4 == 0) {
    if (rng() % 10 == 0) return Formula::constant(rng() % 2 == 0);
    return Formula::variable(vars[rng() % vars.size()]);
  }
  switch (rng() % 6) {
    case 0: return Formula::negation(random_formula(rng, vars, depth - 1));
    case 1:
      return Formula::conjunction(random_formula(rng, vars, depth - 1),
                                  random_formula(rng, vars, depth - 1));
    case 2:
      return Formula::disjunction(random_formula(rng, vars, depth - 1),
                                  random_formula(rng, vars, depth - 1));
    case 3:
      return Formula::implication(random_formula(rng, vars, depth - 1),
                                  random_formula(rng, vars, depth - 1));
    default:
      return Formula::biconditional(random_formula(rng, vars, depth - 1),
                                    random_formula(rng, vars, depth - 1));
  }
}

}  // namespace

TEST_CASE("evaluation") {
  const Formula f = *kPQR.constraint();
  CHECK(evaluate(f, J("111"), kPQR));
  CHECK_FALSE(evaluate(f, J("110"), kPQR));
  CHECK(evaluate(Formula::constant(true), J("010"), kPQR));
  CHECK_FALSE(evaluate(Formula::constant(false), J("010"), kPQR));
  CHECK_THROWS_AS(evaluate(Formula::variable("s"), J("010"), kPQR), InvalidArgument);
}

TEST_CASE("parsing") {
  CHECK(parse_formula("r <-> (p & q)") ==
        Formula::biconditional(Formula::variable("r"),
                               Formula::conjunction(Formula::variable("p"), Formula::variable("q"))));
  CHECK(parse_formula("!p | q") ==
        Formula::disjunction(Formula::negation(Formula::variable("p")), Formula::variable("q")));
  CHECK(parse_formula("a -> b -> c") ==
        Formula::implication(Formula::variable("a"),
                             Formula::implication(Formula::variable("b"), Formula::variable("c"))));
  CHECK(parse_formula("a | b & c") ==
        Formula::disjunction(Formula::variable("a"),
                             Formula::conjunction(Formula::variable("b"), Formula::variable("c"))));
  CHECK(parse_formula("a <-> b -> c") ==
        Formula::biconditional(Formula::variable("a"),
                               Formula::implication(Formula::variable("b"), Formula::variable("c"))));
  CHECK(parse_formula("true & x_1") ==
        Formula::conjunction(Formula::constant(true), Formula::variable("x_1")));
  CHECK_THROWS_AS(parse_formula("p &"), SyntaxError);
  CHECK_THROWS_AS(parse_formula("(p"), SyntaxError);
  CHECK_THROWS_AS(parse_formula("p q"), SyntaxError);
  CHECK_THROWS_AS(parse_formula("1p"), SyntaxError);
  try {
    parse_formula("p & ");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("print then parse is the identity on random trees") {
  std::mt19937 rng(11);
  const std::vector<std::string> vars{"a", "b", "c", "d"};
  for (int trial = 0; trial < 500; ++trial) {
    const Formula f = random_formula(rng, vars, 5);
    const Formula g = parse_formula(to_string(f));
    REQUIRE(g == f);
    REQUIRE(parse_formula(to_string(g)) == g);
  }
}

TEST_CASE("domain enumeration") {
  CHECK(bits(enumerate_domain(kPQR)) == std::vector<std::string>{"000", "010", "100", "111"});
  CHECK(bits(enumerate_domain(Agenda({"p", "q"}))) ==
        std::vector<std::string>{"00", "01", "10", "11"});
  CHECK_THROWS_AS(enumerate_domain(Agenda({"p"}, parse_formula("p & !p"))), InconsistentConstraint);
  try {
    enumerate_domain(Agenda({"a", "b", "c"}), 2);
    FAIL("expected a capacity error");
  } catch (const CapacityError& e) {
    CHECK(e.cap() == 2);
    CHECK(std::string(e.what()).find('2') != std::string::npos);
  }
}

TEST_CASE("enumerated domains are exactly the models") {
  std::mt19937 rng(5);
  std::vector<std::string> vars;
  for (int k = 0; k < 12; ++k) vars.push_back("v" + std::to_string(k));
  for (int trial = 0; trial < 40; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 12);
    const std::vector<std::string> used(vars.begin(), vars.begin() + m);
    const Formula f = random_formula(rng, used, 4);
    const Agenda agenda(used, f);
    const CompiledFormula compiled(f, agenda);
    std::vector<Judgment> models;
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << m); ++b) {
      const Judgment j(b, m);
      REQUIRE(compiled(j) == evaluate(f, j, agenda));
      if (evaluate(f, j, agenda)) models.push_back(j);
    }
    if (models.empty()) {
      CHECK_THROWS_AS(enumerate_domain(agenda), InconsistentConstraint);
    } else {
      REQUIRE(enumerate_domain(agenda).members() == models);
    }
  }
}
