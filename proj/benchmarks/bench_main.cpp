#include <benchmark/benchmark.h>

#include "normalcone/adic.hpp"
#include "normalcone/filtration.hpp"
#include "normalcone/perturbation.hpp"
#include "normalcone/runner.hpp"

using namespace normalcone;

namespace {

Ring ring(std::vector<std::string> vars, const std::string& relations = "") {
  auto cover = RingContext::make(Field::rationals(), vars);
  std::vector<Polynomial> rels;
  if (!relations.empty()) rels = parse_polynomials(cover, relations);
  return RingContext::make(Field::rationals(), std::move(vars), std::move(rels));
}

void BM_StandardBasis(benchmark::State& state) {
  auto R = ring({"x", "y", "z"});
  const auto gens = parse_polynomials(R, "x^2 - y^3 + z^4, x*y*z - z^5, y^2 + x*z^2");
  for (auto _ : state) {
    Ideal I(R, gens);
    benchmark::DoNotOptimize(I.standard_basis().is_unit());
  }
}
BENCHMARK(BM_StandardBasis)->Unit(benchmark::kMillisecond);

void BM_InitialIdeal(benchmark::State& state) {
  auto R = ring({"x", "y", "z"}, "x*z, y*z, z^" + std::to_string(state.range(0) + 2));
  const auto gens = parse_polynomials(R, "x + z^" + std::to_string(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(initial_ideal(Ideal(R, gens), Ideal::maximal(R)));
}
BENCHMARK(BM_InitialIdeal)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_ArtinRees(benchmark::State& state) {
  auto R = ring({"x", "y"});
  const auto gens = parse_polynomials(R, "x^2 - y^3, x*y^2");
  for (auto _ : state) benchmark::DoNotOptimize(artin_rees(Ideal(R, gens), Ideal::maximal(R)).value);
}
BENCHMARK(BM_ArtinRees)->Unit(benchmark::kMillisecond);

void BM_BoundMain(benchmark::State& state) {
  auto R = ring({"x", "y"}, "x*y, y^4");
  const auto fs = parse_polynomials(R, "x");
  for (auto _ : state) benchmark::DoNotOptimize(bound_main(fs, Ideal::maximal(R)).N);
}
BENCHMARK(BM_BoundMain)->Unit(benchmark::kMillisecond);

void BM_VerifyInvariance(benchmark::State& state) {
  auto R = ring({"x", "y"});
  const auto fs = parse_polynomials(R, "x^2 - y^3");
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_invariance(fs, Ideal::maximal(R), 3, static_cast<std::size_t>(state.range(0)), 1));
}
BENCHMARK(BM_VerifyInvariance)->Arg(5)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_WeightedArtinRees(benchmark::State& state) {
  auto R = ring({"x", "y"});
  auto W = Filtration::weighted(R, {3, 2});
  const auto gens = parse_polynomials(R, "x^2 - y^3");
  for (auto _ : state) benchmark::DoNotOptimize(artin_rees_filtration(Ideal(R, gens), W).value);
}
BENCHMARK(BM_WeightedArtinRees)->Unit(benchmark::kMillisecond);

void BM_RunScript(benchmark::State& state) {
  const std::string text =
      "ring R = Q[x, y] / (x*y, y^4);\nseq f = (x);\ncmd initial f m;\ncmd bound_main f m;\n"
      "cmd verify f m N=auto trials=5 seed=1;\n";
  RunOptions opt;
  opt.format = ReportFormat::Json;
  for (auto _ : state) benchmark::DoNotOptimize(run_script(text, opt).report);
}
BENCHMARK(BM_RunScript)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
