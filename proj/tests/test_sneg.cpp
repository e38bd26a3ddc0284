#include <gtest/gtest.h>

#include <random>

#include "dfl/sneg.hpp"
#include "test_support.hpp"

using namespace dfl;
using F = Formula;

namespace {

const LitExpr kQ{"q", false};

RuleRange strictFor(LitExpr l) { return {RuleRange::Kind::StrictFor, std::move(l), {}}; }
RuleRange bodyOf(std::string r) { return {RuleRange::Kind::Antecedent, {}, std::move(r)}; }

F randomFormula(std::mt19937_64& rng, int depth, bool withPure) {
  const int pick = static_cast<int>(rng() % (depth <= 0 ? 2 : 7));
  auto leaf = [&] {
    if (withPure && rng() % 3 == 0) {
      return F::pureAtom({rng() % 2 ? PureAtom::Kind::InFacts : PureAtom::Kind::Superior, kQ, "t", "s"});
    }
    return F::member(rng() % 2 ? Sign::Plus : Sign::Minus, rng() % 2 ? Tag::Delta : Tag::Partial,
                     LitExpr{"q", rng() % 2 == 0});
  };
  switch (pick) {
    case 0:
    case 1: return leaf();
    case 2:
    case 3: {
      std::vector<F> kids;
      for (int i = 0, n = 1 + static_cast<int>(rng() % 3); i < n; ++i) kids.push_back(randomFormula(rng, depth - 1, withPure));
      return pick == 2 ? F::conj(std::move(kids)) : F::disj(std::move(kids));
    }
    case 4: return F::exists("r", strictFor(kQ), randomFormula(rng, depth - 1, withPure));
    case 5: return F::forall("r", strictFor(kQ), randomFormula(rng, depth - 1, withPure));
    default:
      if (withPure) return F::negation(randomFormula(rng, depth - 1, withPure));
      return leaf();
  }
}

}  // namespace

TEST(Sneg, ShippedConditionsSatisfyThePrinciple) {
  const SnegReport r = verifyStrongNegation();
  EXPECT_TRUE(r.allMatch());
  EXPECT_EQ(r.toText(), "+/-D: match\n+/-d: match\n");
  EXPECT_EQ(r.toText(true), "±Δ: match\n±∂: match\n");
}

TEST(Sneg, EverySingleClauseMutationIsCaught) {
  const auto mutations = singleClauseMutations();
  EXPECT_GE(mutations.size(), 5u);
  for (const auto& m : mutations) {
    EXPECT_FALSE(verifyStrongNegation(m.conditions).allMatch()) << m.description;
  }
}

TEST(Sneg, DeletedClauseIsLocated) {
  EncodedConditions c = encodedConditions();
  auto& inner = c.minusPartial.children[1].children;
  ASSERT_EQ(inner[1].clause, "(2.2)");
  inner.erase(inner.begin() + 1);
  const SnegReport r = verifyStrongNegation(c);
  ASSERT_TRUE(r.entries[1].mismatch);
  EXPECT_EQ(r.entries[1].mismatch->clause, "(2.2)");
  EXPECT_EQ(r.entries[1].mismatch->expected, "+D ~q in P");
  EXPECT_EQ(r.entries[1].mismatch->actual, "(absent)");
  EXPECT_FALSE(r.entries[0].mismatch);
}

TEST(Sneg, InvolutionWithoutPureAtoms) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    const F g = randomFormula(rng, 4, false);
    ASSERT_TRUE(sameFormula(sneg(sneg(g)), g)) << toString(g);
  }
}

TEST(Sneg, InvolutionUpToNormalization) {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 500; ++i) {
    const F g = randomFormula(rng, 4, true);
    ASSERT_FALSE(compareNormalized(g, sneg(sneg(g)))) << toString(g);
  }
}

TEST(Sneg, NormalizeIsIdempotent) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const F n = normalize(randomFormula(rng, 4, true));
    ASSERT_TRUE(sameFormula(normalize(n), n)) << toString(n);
  }
}

TEST(Sneg, PureSubformulasAreNegatedClassically) {
  const F inF = F::pureAtom({PureAtom::Kind::InFacts, kQ, {}, {}});
  const F notInF = F::pureAtom({PureAtom::Kind::NotInFacts, kQ, {}, {}});
  EXPECT_EQ(sneg(inF).kind, F::Kind::Not);
  EXPECT_FALSE(compareNormalized(sneg(inF), notInF));
  EXPECT_FALSE(compareNormalized(F::negation(F::negation(inF)), inF));
}

TEST(Sneg, NormalizationIgnoresOrderAndBoundNames) {
  const F a = F::conj({F::member(Sign::Plus, Tag::Delta, kQ),
                       F::exists("r", strictFor(kQ), F::member(Sign::Minus, Tag::Partial, {"a", false}))});
  const F b = F::conj({F::exists("s", strictFor(kQ), F::member(Sign::Minus, Tag::Partial, {"a", false})),
                       F::member(Sign::Plus, Tag::Delta, kQ)});
  EXPECT_FALSE(compareNormalized(a, b));
  const F nested = F::conj({F::conj({F::member(Sign::Plus, Tag::Delta, kQ)}), a.children[1]});
  EXPECT_FALSE(compareNormalized(a, nested));
}

TEST(Sneg, RenderingShowsStructure) {
  const F f = F::exists("r", strictFor(kQ), F::forall("a", bodyOf("r"), F::member(Sign::Plus, Tag::Delta, {"a", false})));
  EXPECT_EQ(toString(f), "exists r in Rs[q]: forall a in A(r): +D a in P");
  EXPECT_EQ(toString(f, true), "∃r ∈ Rs[q]: ∀a ∈ A(r): +Δa ∈ P");
  EXPECT_EQ(formulaSize(f), 3u);
  EXPECT_FALSE(isPure(f));
}

TEST(Holds, EvaluatesConditionsOverATheory) {
  const Theory t = parseTheoryText("a. r1: a -> b. r2: => ~b.");
  const RuleIndex idx(t);
  const EncodedConditions c = encodedConditions();
  std::set<TaggedLiteral> prefix;
  auto in = [&](const TaggedLiteral& tl) { return prefix.count(tl) != 0; };
  const Literal a = dfl::testing::lit("a");
  const Literal b = dfl::testing::lit("b");
  EXPECT_TRUE(holds(c.plusDelta, idx, a, in));
  EXPECT_FALSE(holds(c.plusDelta, idx, b, in));
  prefix.insert(plusDelta(a));
  EXPECT_TRUE(holds(c.plusDelta, idx, b, in));
  EXPECT_FALSE(holds(c.minusDelta, idx, b, in));
  EXPECT_TRUE(holds(c.minusDelta, idx, complement(a), in));
}

TEST(Sneg, FlipsMembershipAndDualizesQuantifiers) {
  const F plus = F::member(Sign::Plus, Tag::Partial, kQ);
  EXPECT_TRUE(sameFormula(sneg(plus), F::member(Sign::Minus, Tag::Partial, kQ)));
  const F ex = F::exists("r", strictFor(kQ), plus);
  const F expected = F::forall("r", strictFor(kQ), F::member(Sign::Minus, Tag::Partial, kQ));
  EXPECT_TRUE(sameFormula(sneg(ex), expected));
}

TEST(Sneg, NodeForNodeOnPureFreeFormulas) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 300; ++i) {
    const F g = randomFormula(rng, 4, false);
    ASSERT_EQ(formulaSize(sneg(g)), formulaSize(g));
  }
}

TEST(Sneg, EncodedShapes) {
  const EncodedConditions c = encodedConditions();
  EXPECT_EQ(toString(c.plusDelta), "(q in F | exists r in Rs[q]: forall a in A(r): +D a in P)");
  EXPECT_EQ(toString(c.minusDelta), "(q notin F & forall r in Rs[q]: exists a in A(r): -D a in P)");
  ASSERT_EQ(c.minusPartial.kind, F::Kind::And);
  EXPECT_EQ(c.minusPartial.children[0].clause, "(1)");
  EXPECT_EQ(toString(c.minusPartial.children[0]), "-D q in P");
}

TEST(Sneg, DeletingPlusPartialClauseIsLocated) {
  EncodedConditions c = encodedConditions();
  auto& inner = c.plusPartial.children[1].children;
  ASSERT_EQ(inner[1].clause, "(2.2)");
  inner.erase(inner.begin() + 1);
  const SnegReport r = verifyStrongNegation(c);
  ASSERT_TRUE(r.entries[1].mismatch);
  EXPECT_EQ(r.entries[1].mismatch->clause, "(2.2)");
}
