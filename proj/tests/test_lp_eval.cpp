#include <gtest/gtest.h>

#include <random>

#include "dfl/lp_eval.hpp"
#include "dfl/properties.hpp"

using namespace dfl;

namespace {

NormalProgram program(std::size_t atoms, std::vector<NormalClause> clauses) {
  NormalProgram p;
  p.atomCount = atoms;
  p.clauses = std::move(clauses);
  return p;
}

std::string render(const ThreeValuedModel& m) {
  std::string s;
  for (Truth t : m.values()) s += truthSymbol(t);
  return s;
}

// Programs whose atoms are split into strata, with positive body atoms from
// the same or a lower stratum and negated atoms strictly lower.
NormalProgram stratifiedProgram(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto below = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  const std::size_t n = 1 + below(12);
  std::vector<std::size_t> stratum(n);
  for (auto& s : stratum) s = below(4);
  NormalProgram p;
  p.atomCount = n;
  const std::size_t clauses = below(2 * n + 1);
  for (std::size_t i = 0; i < clauses; ++i) {
    NormalClause c;
    c.head = static_cast<AtomId>(below(n));
    for (std::size_t k = below(3); k > 0; --k) {
      const AtomId a = static_cast<AtomId>(below(n));
      if (stratum[a] <= stratum[c.head]) c.positive.push_back(a);
    }
    for (std::size_t k = below(3); k > 0; --k) {
      const AtomId a = static_cast<AtomId>(below(n));
      if (stratum[a] < stratum[c.head]) c.negative.push_back(a);
    }
    p.clauses.push_back(std::move(c));
  }
  return p;
}

// Perfect model by stratum-wise least models, strata taken from the
// dependency graph: negative edges raise the stratum.
std::vector<bool> perfectModel(const NormalProgram& p) {
  const std::size_t n = p.atomCount;
  std::vector<std::size_t> level(n, 0);
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& c : p.clauses) {
      std::size_t need = 0;
      for (AtomId a : c.positive) need = std::max(need, level[a]);
      for (AtomId a : c.negative) need = std::max(need, level[a] + 1);
      if (need > level[c.head]) {
        level[c.head] = need;
        changed = true;
      }
    }
  }
  const std::size_t top = n == 0 ? 0 : *std::max_element(level.begin(), level.end());
  std::vector<bool> truth(n, false);
  for (std::size_t s = 0; s <= top; ++s) {
    for (bool changed = true; changed;) {
      changed = false;
      for (const auto& c : p.clauses) {
        if (level[c.head] != s || truth[c.head]) continue;
        bool fires = true;
        for (AtomId a : c.positive) fires = fires && truth[a];
        for (AtomId a : c.negative) fires = fires && !truth[a];
        if (fires) {
          truth[c.head] = true;
          changed = true;
        }
      }
    }
  }
  return truth;
}

}  // namespace

TEST(Fitting, FactsAndUnsupportedAtoms) {
  // a.  b :- a.  c :- not a.  d (no clauses)
  const auto p = program(4, {{0, {}, {}}, {1, {0}, {}}, {2, {}, {0}}});
  EXPECT_EQ(render(kunenEval(p)), "ttff");
  EXPECT_EQ(render(wfsEval(p)), "ttff");
}

TEST(Fitting, PositiveLoopStaysUndefined) {
  const auto p = program(1, {{0, {0}, {}}});
  EXPECT_EQ(render(kunenEval(p)), "u");
  EXPECT_EQ(render(wfsEval(p)), "f");
}

TEST(Fitting, NegativeLoopIsUndefinedInBoth) {
  // a :- not b.  b :- not a.
  const auto p = program(2, {{0, {}, {1}}, {1, {}, {0}}});
  EXPECT_EQ(render(kunenEval(p)), "uu");
  EXPECT_EQ(render(wfsEval(p)), "uu");
}

TEST(Fitting, OddLoopIsUndefined) {
  const auto p = program(1, {{0, {}, {0}}});
  EXPECT_EQ(render(kunenEval(p)), "u");
  EXPECT_EQ(render(wfsEval(p)), "u");
}

TEST(Fitting, ChainIsMonotoneInKnowledge) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const NormalProgram p = randomProgram(seed, 12);
    const auto chain = kunenChain(p);
    ASSERT_FALSE(chain.empty());
    EXPECT_EQ(chain.front(), ThreeValuedModel(p.atomCount));
    for (std::size_t i = 1; i < chain.size(); ++i) ASSERT_TRUE(chain[i - 1].knowledgeBelow(chain[i]));
    ASSERT_EQ(fittingStep(p, chain.back()), chain.back());
    ASSERT_EQ(chain.back(), kunenEval(p));
  }
}

TEST(Lp, StratifiedProgramsAgreeWithPerfectModel) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const NormalProgram p = stratifiedProgram(seed);
    const std::vector<bool> perfect = perfectModel(p);
    const ThreeValuedModel wfs = wfsEval(p);
    for (AtomId a = 0; a < p.atomCount; ++a) {
      ASSERT_EQ(wfs[a], perfect[a] ? Truth::True : Truth::False) << "seed " << seed;
    }
  }
}

TEST(Lp, AcyclicProgramsHaveTotalKunenModels) {
  // Bodies only mention lower-numbered atoms, so Kunen and WFS coincide.
  std::mt19937_64 rng(3);
  for (int round = 0; round < 200; ++round) {
    NormalProgram p;
    p.atomCount = 10;
    for (AtomId h = 1; h < 10; ++h) {
      for (int k = 0; k < 2; ++k) {
        NormalClause c{h, {}, {}};
        if (rng() % 2) c.positive.push_back(static_cast<AtomId>(rng() % h));
        if (rng() % 2) c.negative.push_back(static_cast<AtomId>(rng() % h));
        p.clauses.push_back(c);
      }
    }
    const ThreeValuedModel k = kunenEval(p);
    EXPECT_EQ(k.countTrue() + k.countFalse(), p.atomCount);
    EXPECT_EQ(k, wfsEval(p));
  }
}

TEST(Lp, WellFoundedExtendsKunen) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const NormalProgram p = randomProgram(seed, 12);
    ASSERT_TRUE(kunenEval(p).knowledgeBelow(wfsEval(p))) << seed;
  }
}

TEST(Lp, ReductLeastModel) {
  // a :- not b.  c :- a.
  const auto p = program(3, {{0, {}, {1}}, {2, {0}, {}}});
  EXPECT_EQ(reductLeastModel(p, {false, false, false}), (std::vector<bool>{true, false, true}));
  EXPECT_EQ(reductLeastModel(p, {false, true, false}), (std::vector<bool>{false, false, false}));
}

TEST(Lp, AgreesWithBruteForceOracles) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const NormalProgram p = randomProgram(seed ^ 0xABCDEFULL, 10);
    ASSERT_EQ(kunenEval(p), bruteForceKunen(p)) << seed;
    ASSERT_EQ(wfsEval(p), bruteForceWfs(p)) << seed;
  }
}

TEST(Lp, EvaluateDispatchesOnFailure) {
  const auto p = program(1, {{0, {0}, {}}});
  EXPECT_EQ(evaluate(p, Failure::Kunen), kunenEval(p));
  EXPECT_EQ(evaluate(p, Failure::WellFounded), wfsEval(p));
}
