#include <benchmark/benchmark.h>

#include "dfl/conclusions.hpp"
#include "dfl/direct_engine.hpp"
#include "dfl/grounder.hpp"
#include "dfl/parser.hpp"
#include "dfl/properties.hpp"

namespace {

using namespace dfl;

// A layered theory: n atoms, each layer attacks the previous one, with a
// superiority pair per conflict.
Theory layered(std::size_t n) {
  Theory t;
  t.addFact(Literal::atom("p0"));
  for (std::size_t i = 1; i < n; ++i) {
    const Literal prev = Literal::atom("p" + std::to_string(i - 1));
    const Literal cur = Literal::atom("p" + std::to_string(i));
    const std::string a = "a" + std::to_string(i);
    const std::string b = "b" + std::to_string(i);
    t.addRule(Rule{a, {prev}, cur, RuleKind::Defeasible});
    t.addRule(Rule{b, {}, complement(cur), RuleKind::Defeasible});
    t.addSuperiority(a, b);
  }
  return t;
}

void BM_DirectEngine(benchmark::State& state) {
  const Theory t = layered(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(deriveAll(t));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DirectEngine)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_Instantiate(benchmark::State& state) {
  const Theory t = layered(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(instantiate(t, kDefaultLogic));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Instantiate)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_Conclude(benchmark::State& state) {
  const Theory t = layered(static_cast<std::size_t>(state.range(0)));
  const VariantConfig cfg = allVariants()[static_cast<std::size_t>(state.range(1))];
  for (auto _ : state) benchmark::DoNotOptimize(conclude(t, cfg));
  state.SetLabel(toString(cfg));
}
BENCHMARK(BM_Conclude)->ArgsProduct({{64, 256}, {0, 1, 2, 3, 4, 5, 6, 7}});

void BM_KunenEval(benchmark::State& state) {
  const GroundProgram prog = instantiate(layered(static_cast<std::size_t>(state.range(0))), kDefaultLogic);
  for (auto _ : state) benchmark::DoNotOptimize(kunenEval(prog.program()));
}
BENCHMARK(BM_KunenEval)->RangeMultiplier(4)->Range(16, 1024);

void BM_WfsEval(benchmark::State& state) {
  const GroundProgram prog = instantiate(layered(static_cast<std::size_t>(state.range(0))), kDefaultLogic);
  for (auto _ : state) benchmark::DoNotOptimize(wfsEval(prog.program()));
}
BENCHMARK(BM_WfsEval)->RangeMultiplier(4)->Range(16, 1024);

void BM_ParseSerialize(benchmark::State& state) {
  const std::string text = serializeTheory(layered(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(serializeTheory(parseTheoryText(text)));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_ParseSerialize)->Range(64, 4096);

void BM_Grounding(benchmark::State& state) {
  Theory t;
  for (std::int64_t i = 0; i < state.range(0); ++i) t.addFact(Literal::atom("bird", {"c" + std::to_string(i)}));
  t.addRule(Rule{"r", {Literal("bird", {Term{"X"}})}, Literal("flies", {Term{"X"}}), RuleKind::Defeasible});
  for (auto _ : state) benchmark::DoNotOptimize(ground(t));
}
BENCHMARK(BM_Grounding)->Range(8, 1024);

void BM_RandomTheoryOracleSuite(benchmark::State& state) {
  GeneratorParams p;
  for (auto _ : state) benchmark::DoNotOptimize(runSuite(Suite::Thm1Diff, p, 50));
}
BENCHMARK(BM_RandomTheoryOracleSuite)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
