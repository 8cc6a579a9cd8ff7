#include <algorithm>
#include <random>

#include "doctest.h"
#include "egal/constraints.hpp"
#include "egal/rules.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace egal;
using namespace testing_helpers;
using V = std::vector<std::string>;

namespace {

const Domain kDisjoint = D({"110000", "001100", "010000", "111111"});
const Domain kChain = D({"000000", "110000", "111000", "111111"});
const Domain kAntipodal = D({"00110", "00000", "01110", "10000", "11111"});

TableRule example_table() {
  TableRule t;
  t.set({J("00")}, O({"01", "11"}));
  t.set({J("11")}, O({"01", "11"}));
  t.set({J("01"), J("00")}, O({"01", "11"}));
  t.set({J("00"), J("11")}, O({"01", "11"}));
  t.set({J("01")}, O({"00", "11"}));
  t.set({J("01"), J("11")}, O({"01"}));
  t.set({J("01"), J("00"), J("11")}, O({"01"}));
  return t;
}

}  // namespace

TEST_CASE("maxdist and inequity") {
  CHECK(maxdist(P({"110000", "001100"}), J("010000")) == 3);
  CHECK(maxdist(P({"1010"}), J("1010")) == 0);
  CHECK(maxdist(P({"111000", "000000"}), J("110000")) == 2);
  CHECK(inequity(P({"110000", "001100"}), J("111111")) == 0);
  CHECK(inequity(P({"0110", "0110"}), J("1001")) == 0);
  CHECK(inequity(P({"111", "010"}), J("000")) == 2);
  CHECK_THROWS(maxdist(Profile{}, J("0")));
  const ScoreBreakdown b = score(P({"111", "010"}), J("000"));
  CHECK(b.distances == std::vector<int>{3, 1});
  CHECK(b.maxdist == 3);
  CHECK(b.mindist == 1);
  CHECK(b.inequity == 2);
}

TEST_CASE("outcomes on the worked fixtures") {
  CHECK(bits(max_ham(kDisjoint, P({"110000", "001100"}))) == V{"010000"});
  CHECK(bits(max_eq(kDisjoint, P({"110000", "001100"}))) == V{"111111"});
  CHECK(bits(max_ham(kChain, P({"111000", "000000"}))) == V{"110000"});
  CHECK(bits(max_eq(kChain, P({"111000", "000000"}))) == V{"110000"});
  CHECK(bits(max_ham(kChain, P({"111111", "000000"}))) == V{"111000"});
  CHECK(bits(max_eq(kChain, P({"111111", "000000"}))) == V{"111000"});
  CHECK(bits(max_eq(kAntipodal, P({"11111", "01110"}))) == V{"10000"});
  CHECK(bits(max_eq(kAntipodal, P({"00000", "01110"}))) == V{"00110"});
}

TEST_CASE("conjunction agenda follows the argmin definitions") {
  const Domain d = enumerate_domain(Agenda({"p", "q", "r"}, parse_formula("r <-> p & q")));
  const Profile p = P({"111", "010"});
  const V dom = bits(d);
  // 100 sits at distance 2 from both agents, so it ties for the smallest maximum.
  CHECK(bits(max_ham(d, p)) == oracle::max_ham(dom, {"111", "010"}));
  CHECK(bits(max_ham(d, p)) == V{"010", "100", "111"});
  CHECK(bits(max_eq(d, p)) == oracle::max_eq(dom, {"111", "010"}));
  CHECK(bits(max_eq(d, p)) == V{"100"});
}

TEST_CASE("lexicographic refinement") {
  const Domain d = D({"0000", "1111", "0011"});
  const Profile p = P({"0000", "1111"});
  CHECK(bits(max_eq_lex(d, p)) == oracle::max_eq_lex(bits(d), bits(p)));
  CHECK(bits(max_eq_lex(d, p)) == V{"0011"});
  CHECK(max_eq_lex(kAntipodal, P({"11111", "01110"})) == max_eq(kAntipodal, P({"11111", "01110"})));
  const Domain free3 = Domain::free(3);
  std::vector<std::vector<std::string>> profiles;
  oracle::multisets(bits(free3), 3, profiles);
  for (const auto& raw : profiles) {
    const Profile q = P(raw);
    REQUIRE(max_eq_lex(free3, q).subset_of(max_eq(free3, q)));
  }
}

TEST_CASE("table rules") {
  const RuleSpec rule = RuleSpec::table(example_table());
  const Domain d = D({"00", "01", "11"});
  CHECK(bits(apply_rule(rule, d, P({"01", "11"}))) == V{"01"});
  CHECK(bits(apply_rule(rule, d, P({"00"}))) == V{"01", "11"});
  // Quantity-insensitive keying.
  CHECK(bits(apply_rule(rule, d, P({"11", "01", "11"}))) == V{"01"});
  CHECK(bits(apply_rule(rule, d, P({"00", "00", "00"}))) == V{"01", "11"});

  TableRule partial;
  partial.set({J("00")}, O({"00"}));
  CHECK_THROWS_AS(apply_rule(RuleSpec::table(partial), d, P({"11"})), MissingTableEntry);
  TableRule outside;
  outside.set({J("00")}, O({"10"}));
  CHECK_THROWS_AS(apply_rule(RuleSpec::table(outside), d, P({"00"})), InvalidArgument);

  TableRule multi(TableRule::Keying::Multiset);
  multi.set({J("00"), J("00")}, O({"00"}));
  CHECK(bits(apply_rule(RuleSpec::table(multi), d, P({"00", "00"}))) == V{"00"});
  CHECK_THROWS_AS(apply_rule(RuleSpec::table(multi), d, P({"00"})), MissingTableEntry);
}

TEST_CASE("rule names") {
  CHECK(RuleSpec::from_name("maxham").kind() == RuleSpec::Kind::MaxHam);
  CHECK(RuleSpec::from_name("maxeq").kind() == RuleSpec::Kind::MaxEq);
  CHECK(RuleSpec::from_name("maxeq-lex").kind() == RuleSpec::Kind::MaxEqThenMaxHam);
  CHECK_THROWS_AS(RuleSpec::from_name("kemeny"), InvalidArgument);
  CHECK(apply_rule(RuleSpec::max_eq(), kDisjoint, P({"110000", "001100"})) ==
        max_eq(kDisjoint, P({"110000", "001100"})));
}

TEST_CASE("equidistance") {
  CHECK(exists_equidistant(Domain::free(4), P({"0000", "1111"})));
  CHECK(exists_equidistant(kDisjoint, P({"110000", "001100"})));
  CHECK_FALSE(exists_equidistant(D({"000", "001"}), P({"000", "001"})));
  CHECK(min_inequity(D({"000", "001"}), P({"000", "001"})) == 1);
}

TEST_CASE("profile must lie in the domain") {
  CHECK_THROWS_AS(max_ham(kDisjoint, P({"000000"})), InvalidArgument);
  CHECK_THROWS(max_eq(kDisjoint, Profile{}));
}

TEST_CASE("outcomes match the reference argmin on every small free domain") {
  for (int m = 1; m <= 4; ++m) {
    const Domain d = Domain::free(m);
    const V dom = bits(d);
    for (int n = 1; n <= 3; ++n) {
      std::vector<V> profiles;
      oracle::multisets(dom, n, profiles);
      for (const auto& raw : profiles) {
        const Profile p = P(raw);
        REQUIRE(bits(max_ham(d, p)) == oracle::max_ham(dom, raw));
        REQUIRE(bits(max_eq(d, p)) == oracle::max_eq(dom, raw));
        REQUIRE(bits(max_eq_lex(d, p)) == oracle::max_eq_lex(dom, raw));
      }
    }
  }
}

TEST_CASE("anonymity and neutrality") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 4);
    std::vector<Judgment> members;
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << m); ++b) {
      if (rng() % 2 == 0) members.emplace_back(b, m);
    }
    if (members.empty()) members.emplace_back(0, m);
    const Domain d(members);
    std::vector<Judgment> agents;
    const int n = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < n; ++i) agents.push_back(members[rng() % members.size()]);
    const Profile p(agents);
    std::vector<Judgment> shuffled = agents;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (const RuleSpec& r : {RuleSpec::max_ham(), RuleSpec::max_eq(), RuleSpec::max_eq_lex()}) {
      const Outcome base = apply_rule(r, d, p);
      REQUIRE(apply_rule(r, d, Profile(shuffled)) == base);
      REQUIRE(base.subset_of(Outcome(members)));

      std::vector<int> perm(static_cast<std::size_t>(m));
      for (int k = 0; k < m; ++k) perm[static_cast<std::size_t>(k)] = k;
      std::shuffle(perm.begin(), perm.end(), rng);
      auto permute = [&](const Judgment& j) {
        Judgment out(0, m);
        for (int k = 0; k < m; ++k) out = out.with(perm[static_cast<std::size_t>(k)], j.accepts(k));
        return out;
      };
      std::vector<Judgment> pd, pp, expected;
      for (const auto& j : members) pd.push_back(permute(j));
      for (const auto& j : agents) pp.push_back(permute(j));
      for (const auto& j : base) expected.push_back(permute(j));
      REQUIRE(apply_rule(r, Domain(pd), Profile(pp)) == Outcome(expected));
    }
  }
}

TEST_CASE("adding an agent inside every distance range changes nothing") {
  std::mt19937 rng(9);
  int exercised = 0;
  for (int trial = 0; trial < 3000 && exercised < 100; ++trial) {
    const int m = 3 + static_cast<int>(rng() % 3);
    const Domain d = Domain::free(m);
    std::vector<Judgment> agents;
    for (int i = 0; i < 2 + static_cast<int>(rng() % 2); ++i) {
      agents.emplace_back(rng() % (std::uint64_t{1} << m), m);
    }
    const Profile p(agents);
    const Judgment extra(rng() % (std::uint64_t{1} << m), m);
    bool inside = true;
    for (const auto& c : d) {
      const ScoreBreakdown s = score(p, c);
      const int h = hamming(extra, c);
      inside = inside && s.mindist <= h && h <= s.maxdist;
    }
    if (!inside) continue;
    ++exercised;
    REQUIRE(max_ham(d, p.appended(extra)) == max_ham(d, p));
    REQUIRE(max_eq(d, p.appended(extra)) == max_eq(d, p));
  }
  CHECK(exercised > 0);
}
