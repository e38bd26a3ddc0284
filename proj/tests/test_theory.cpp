#include <gtest/gtest.h>

#include "dfl/theory.hpp"
#include "test_support.hpp"

using namespace dfl;
using dfl::testing::lit;

TEST(Literal, ComplementFlipsPolarity) {
  EXPECT_EQ(complement(Literal::atom("p")), Literal::negated("p"));
  EXPECT_EQ(complement(Literal::negated("q")), Literal::atom("q"));
  const Literal f = Literal::atom("flies", {"tweety"});
  EXPECT_EQ(complement(complement(f)), f);
  EXPECT_EQ(complement(f).args, f.args);
}

TEST(Literal, AtomSortsBeforeItsComplement) {
  EXPECT_LT(Literal::atom("p"), Literal::negated("p"));
  EXPECT_LT(Literal::negated("p"), Literal::atom("q"));
}

TEST(Literal, Rendering) {
  EXPECT_EQ(toString(Literal::negated("p", {"a", "b"})), "~p(a,b)");
  EXPECT_EQ(atomText(Literal::negated("p", {"a"})), "p(a)");
  EXPECT_FALSE(Literal("p", {Term{"X"}}).isGround());
  EXPECT_TRUE(isVariableName("X"));
  EXPECT_TRUE(isVariableName("_y"));
  EXPECT_FALSE(isVariableName("x"));
}

TEST(Theory, AddHelpersHaveSetSemantics) {
  Theory t;
  t.addFact(lit("p"));
  t.addFact(lit("p"));
  t.addRule(Rule{"r", {lit("a"), lit("b"), lit("a")}, lit("c"), RuleKind::Defeasible});
  t.addSuperiority("r", "s");
  t.addSuperiority("r", "s");
  EXPECT_EQ(t.facts.size(), 1u);
  EXPECT_EQ(t.rules.front().antecedent, (std::vector<Literal>{lit("a"), lit("b")}));
  EXPECT_EQ(t.superiority.size(), 1u);
  EXPECT_TRUE(t.hasFact(lit("p")));
  EXPECT_NE(t.findRule("r"), nullptr);
  EXPECT_EQ(t.findRule("s"), nullptr);
}

TEST(Theory, DomainAddsComplements) {
  const Theory t = parseTheoryText("p. r: q => ~s.");
  const std::set<Literal> expected = {lit("p"), lit("~p"), lit("q"), lit("~q"), lit("s"), lit("~s")};
  EXPECT_EQ(literalDomain(t), expected);
}

TEST(Validate, AcceptsExampleTheory) {
  EXPECT_NO_THROW(validateTheory(dfl::testing::loadFixture("example2.dfl")));
}

TEST(Validate, RejectsDuplicateLabel) {
  try {
    validateTheory(parseTheoryText("r: => p. r: => q."));
    FAIL();
  } catch (const TheoryError& e) {
    EXPECT_EQ(e.kind(), TheoryError::Kind::DuplicateLabel);
    EXPECT_EQ(e.labels(), std::vector<std::string>{"r"});
  }
}

TEST(Validate, RejectsUnknownLabel) {
  try {
    validateTheory(parseTheoryText("r: => p. r > s."));
    FAIL();
  } catch (const TheoryError& e) {
    EXPECT_EQ(e.kind(), TheoryError::Kind::UnknownLabelInSuperiority);
    EXPECT_EQ(e.labels(), std::vector<std::string>{"s"});
  }
}

TEST(Validate, SelfLoopIsACycle) {
  try {
    validateTheory(dfl::testing::loadFixture("bad_cycle.dfl"));
    FAIL();
  } catch (const TheoryError& e) {
    EXPECT_EQ(e.kind(), TheoryError::Kind::SuperiorityCycle);
    EXPECT_NE(std::string(e.what()).find("SuperiorityCycle"), std::string::npos);
  }
}

TEST(Validate, ReportsCycleInOrder) {
  try {
    validateTheory(parseTheoryText("a: => p. b: => ~p. c: => p. a > b. b > c. c > a."));
    FAIL();
  } catch (const TheoryError& e) {
    ASSERT_EQ(e.kind(), TheoryError::Kind::SuperiorityCycle);
    const auto& l = e.labels();
    // A closed path: the first label is repeated at the end.
    ASSERT_EQ(l.size(), 4u);
    EXPECT_EQ(l.front(), l.back());
    const Theory t = parseTheoryText("a > b. b > c. c > a.");
    for (std::size_t i = 0; i < 3; ++i) {
      const Superiority edge{l[i], l[i + 1]};
      EXPECT_NE(std::find(t.superiority.begin(), t.superiority.end(), edge), t.superiority.end());
    }
  }
}

TEST(RuleIndex, ClassViews) {
  const Theory t = parseTheoryText("s1: -> p. d1: => p. f1: ~> p. d2: q => ~p. d1 > d2.");
  const RuleIndex idx(t);
  auto labels = [&](std::span<const std::size_t> ids) {
    std::vector<std::string> out;
    for (std::size_t i : ids) out.push_back(idx.rule(i).label);
    return out;
  };
  EXPECT_EQ(labels(idx.strict()), (std::vector<std::string>{"s1"}));
  EXPECT_EQ(labels(idx.supportive()), (std::vector<std::string>{"s1", "d1", "d2"}));
  EXPECT_EQ(labels(idx.defeaters()), (std::vector<std::string>{"f1"}));
  EXPECT_EQ(labels(idx.rulesFor(lit("p"))), (std::vector<std::string>{"s1", "d1", "f1"}));
  EXPECT_EQ(labels(idx.supportiveFor(lit("p"))), (std::vector<std::string>{"s1", "d1"}));
  EXPECT_EQ(labels(idx.strictFor(lit("p"))), (std::vector<std::string>{"s1"}));
  EXPECT_EQ(labels(idx.defeasibleFor(lit("p"))), (std::vector<std::string>{"d1"}));
  EXPECT_EQ(labels(idx.defeatersFor(lit("p"))), (std::vector<std::string>{"f1"}));
  EXPECT_TRUE(idx.rulesFor(lit("q")).empty());
  EXPECT_TRUE(idx.superior(*idx.indexOf("d1"), *idx.indexOf("d2")));
  EXPECT_FALSE(idx.superior(*idx.indexOf("d2"), *idx.indexOf("d1")));
}
