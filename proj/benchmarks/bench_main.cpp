#include <benchmark/benchmark.h>

#include "sheffer/parser.hpp"
#include "sheffer/proof.hpp"
#include "sheffer/proof_io.hpp"
#include "sheffer/semantics.hpp"
#include "sheffer/transforms.hpp"

using namespace sheffer;

namespace {

const char* kA3Prime = "(p ↓ ¬(q ↑ r)) ⊕ (¬(p ↓ q) ↑ ¬(p ↓ r))";

// ((p0 nor p1) nand (p2 nor p3)) ... balanced over n atoms.
Formula balanced(int lo, int hi, bool flip) {
  if (lo == hi) return atom("p" + std::to_string(lo));
  int mid = (lo + hi) / 2;
  return bin(flip ? Op::Nor : Op::Nand, balanced(lo, mid, !flip), balanced(mid + 1, hi, !flip));
}

void BM_Parse(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(parse(kA3Prime));
}
BENCHMARK(BM_Parse);

void BM_Render(benchmark::State& state) {
  Formula f = parse(kA3Prime);
  for (auto _ : state) benchmark::DoNotOptimize(render(f, Dialect::Unicode));
}
BENCHMARK(BM_Render);

void BM_TruthTable(benchmark::State& state) {
  Formula f = balanced(0, static_cast<int>(state.range(0)) - 1, true);
  for (auto _ : state) benchmark::DoNotOptimize(truth_table(f));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TruthTable)->DenseRange(2, 16, 2);

void BM_IsPerpendicular(benchmark::State& state) {
  Formula a = parse("(p and (q or r)) iff ((p and q) or (p and r))");
  Formula b = parse("(p nand !(q nor r)) xor (!(p nand q) nor !(p nand r))");
  for (auto _ : state) benchmark::DoNotOptimize(is_perpendicular(a, b));
}
BENCHMARK(BM_IsPerpendicular);

void BM_Upsilon(benchmark::State& state) {
  Formula f = parse(kA3Prime);
  for (auto _ : state) {
    Encrypted e = upsilon_encrypt(f);
    benchmark::DoNotOptimize(upsilon_decrypt(e.formula, e.trace));
  }
}
BENCHMARK(BM_Upsilon);

void BM_ProveMainResult(benchmark::State& state) {
  Formula goal = main_result_goals()[static_cast<std::size_t>(state.range(0))];
  std::size_t lines = 0;
  for (auto _ : state) {
    Proof p = prove_tautology(goal);
    lines = p.lines.size();
    benchmark::DoNotOptimize(p);
  }
  state.counters["lines"] = static_cast<double>(lines);
}
BENCHMARK(BM_ProveMainResult)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_CheckMainResult(benchmark::State& state) {
  Proof p = prove_tautology(main_result_goals()[static_cast<std::size_t>(state.range(0))]);
  for (auto _ : state) benchmark::DoNotOptimize(check_proof(p));
  state.counters["lines"] = static_cast<double>(p.lines.size());
}
BENCHMARK(BM_CheckMainResult)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_ProveByAtoms(benchmark::State& state) {
  // p0 or !p0, widened with extra atoms that do not matter.
  Formula f = lor(atom("p0"), neg(atom("p0")));
  for (int i = 1; i < state.range(0); ++i) {
    Formula x = atom("p" + std::to_string(i));
    f = lor(f, land(x, neg(x)));
  }
  for (auto _ : state) benchmark::DoNotOptimize(prove_tautology(f));
}
BENCHMARK(BM_ProveByAtoms)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);

void BM_ProofTextRoundTrip(benchmark::State& state) {
  Proof p = prove_tautology(main_result_goals()[0]);
  for (auto _ : state) benchmark::DoNotOptimize(read_proof_text(write_proof_text(p)));
}
BENCHMARK(BM_ProofTextRoundTrip)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
