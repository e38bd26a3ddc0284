#include <gtest/gtest.h>

#include "dfl/direct_engine.hpp"
#include "dfl/grounder.hpp"
#include "dfl/properties.hpp"
#include "dfl/sneg.hpp"
#include "test_support.hpp"

using namespace dfl;
using dfl::testing::lit;

namespace {

// Least set closed under the printed conditions, evaluated literally.
std::set<TaggedLiteral> conditionFixpoint(const Theory& g) {
  const RuleIndex idx(g);
  const EncodedConditions cond = encodedConditions();
  const auto domain = literalDomain(g);
  std::set<TaggedLiteral> p;
  const PrefixMembership member = [&](const TaggedLiteral& t) { return p.count(t) != 0; };
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<TaggedLiteral> next;
    for (const Literal& q : domain) {
      for (Sign s : {Sign::Plus, Sign::Minus}) {
        for (Tag t : {Tag::Delta, Tag::Partial}) {
          TaggedLiteral tl{s, t, q};
          if (!p.count(tl) && holds(cond.get(s, t), idx, q, member)) next.push_back(tl);
        }
      }
    }
    for (auto& tl : next) changed = p.insert(tl).second || changed;
  }
  return p;
}

}  // namespace

TEST(DirectEngine, Example1) {
  const auto d = deriveAll(dfl::testing::loadFixture("example1.dfl"));
  EXPECT_TRUE(d.count(minusPartial(lit("pacifist"))));
  EXPECT_TRUE(d.count(minusPartial(lit("~pacifist"))));
  EXPECT_TRUE(d.count(plusPartial(lit("~antimilitary"))));
  EXPECT_TRUE(d.count(plusPartial(lit("footballfan"))));
  EXPECT_TRUE(d.count(minusDelta(lit("quaker"))));
}

TEST(DirectEngine, Example2TeamDefeat) {
  const auto d = deriveAll(dfl::testing::loadFixture("example2.dfl"));
  EXPECT_TRUE(d.count(plusPartial(lit("p"))));
  EXPECT_TRUE(d.count(minusPartial(lit("q"))));
}

TEST(DirectEngine, LoopIsNeitherProvedNorRefuted) {
  const auto d = deriveAll(dfl::testing::loadFixture("loop.dfl"));
  EXPECT_TRUE(d.count(minusDelta(lit("p"))));
  EXPECT_FALSE(d.count(plusPartial(lit("p"))));
  EXPECT_FALSE(d.count(minusPartial(lit("p"))));
}

TEST(DirectEngine, StrictChains) {
  const auto d = deriveAll(parseTheoryText("a. r1: a -> b. r2: b -> c. r3: => ~c."));
  EXPECT_TRUE(d.count(plusDelta(lit("c"))));
  EXPECT_TRUE(d.count(plusPartial(lit("c"))));
  EXPECT_TRUE(d.count(minusPartial(lit("~c"))));
}

TEST(DirectEngine, DefeaterOnlyBlocks) {
  const auto d = deriveAll(parseTheoryText("r1: => p. r2: ~> ~p. f: ~> q."));
  EXPECT_TRUE(d.count(minusPartial(lit("p"))));
  EXPECT_TRUE(d.count(minusPartial(lit("~p"))));
  EXPECT_TRUE(d.count(minusPartial(lit("q"))));
}

TEST(DirectEngine, AgreesWithPrintedConditions) {
  for (bool firstOrder : {false, true}) {
    GeneratorParams p;
    p.firstOrder = firstOrder;
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
      p.seed = seed;
      const Theory g = ground(randomTheory(p));
      ASSERT_EQ(deriveAll(g), conditionFixpoint(g)) << serializeTheory(g);
    }
  }
}

TEST(DirectEngine, EveryLineIsJustifiedByItsPrefix) {
  const EncodedConditions cond = encodedConditions();
  GeneratorParams p;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    p.seed = seed;
    const Theory g = ground(randomTheory(p));
    const RuleIndex idx(g);
    const Derivation d = derive(g);
    std::set<TaggedLiteral> prefix;
    for (std::size_t i = 0; i < d.lines().size(); ++i) {
      const TraceLine& line = d.lines()[i];
      for (std::size_t premise : line.why.premises) ASSERT_LT(premise, i);
      const auto& c = line.conclusion;
      ASSERT_TRUE(holds(cond.get(c.sign, c.tag), idx, c.literal,
                        [&](const TaggedLiteral& t) { return prefix.count(t) != 0; }))
          << toString(c) << " in\n" << serializeTheory(g);
      prefix.insert(c);
    }
  }
}

TEST(DirectEngine, JustificationNamesClauseAndAttacks) {
  const Derivation d = derive(dfl::testing::loadFixture("example1.dfl"));
  const auto at = d.lineOf(plusPartial(lit("~antimilitary")));
  ASSERT_TRUE(at);
  const Justification& why = d.lines()[*at].why;
  EXPECT_EQ(why.clause, "+d(2)");
  EXPECT_EQ(why.rule, std::optional<std::string>("r7"));
  ASSERT_EQ(why.attacks.size(), 1u);
  EXPECT_EQ(why.attacks[0].attacker, "r6");
  EXPECT_EQ(why.attacks[0].discardedBy, std::optional<Literal>(lit("pacifist")));
}

TEST(DirectEngine, ProveReturnsDependencyTrace) {
  const Theory g = dfl::testing::loadFixture("example1.dfl");
  const ProofResult r = prove(g, plusPartial(lit("~antimilitary")));
  ASSERT_EQ(r.status, Provability::Derivable);
  ASSERT_TRUE(r.trace);
  EXPECT_EQ(r.trace->back().conclusion, plusPartial(lit("~antimilitary")));
  for (std::size_t i = 0; i < r.trace->size(); ++i) {
    for (std::size_t premise : (*r.trace)[i].why.premises) EXPECT_LT(premise, i);
  }
  EXPECT_EQ(prove(g, plusPartial(lit("antimilitary"))).status, Provability::NotDerivable);
}

TEST(DirectEngine, RenderTaggedLiterals) {
  EXPECT_EQ(toString(plusDelta(lit("q"))), "+D q");
  EXPECT_EQ(toString(minusPartial(lit("~p"))), "-d ~p");
  EXPECT_EQ(toString(plusDelta(lit("q")), true), "+Δq");
}
