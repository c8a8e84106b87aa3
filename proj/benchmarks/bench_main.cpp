#include <benchmark/benchmark.h>

#include <random>

#include "normrig/document.hpp"
#include "normrig/explorer.hpp"
#include "normrig/framework.hpp"
#include "normrig/linalg.hpp"
#include "normrig/sparsity.hpp"
#include "normrig/symmetry.hpp"

using namespace normrig;

namespace {

AnalysisDocument fixture(const char* name) {
  return load_document(std::string(NORMRIG_FIXTURE_DIR) + "/" + name + ".json");
}

Matrix random_rational(std::size_t r, std::size_t c, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 16);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Real(num(rng), den(rng));
  return m;
}

}  // namespace

static void BM_ExactRank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto m = random_rational(n, n, 3);
  ScalarContext ctx{Backend::Exact, 1e-9};
  for (auto _ : state) benchmark::DoNotOptimize(rank(m, ctx));
}
BENCHMARK(BM_ExactRank)->Arg(8)->Arg(16)->Arg(32);

static void BM_FloatRank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto m = random_rational(n, n, 3);
  ScalarContext ctx{Backend::Float, 1e-9};
  for (auto _ : state) benchmark::DoNotOptimize(rank(m, ctx));
}
BENCHMARK(BM_FloatRank)->Arg(8)->Arg(16)->Arg(32);

static void BM_ClassifyFixture(benchmark::State& state) {
  auto doc = fixture(state.range(0) == 0 ? "fig1f" : "example3d");
  for (auto _ : state) benchmark::DoNotOptimize(classify_rigidity(*doc.framework, std::nullopt, 1e-9));
}
BENCHMARK(BM_ClassifyFixture)->Arg(0)->Arg(1);

static void BM_PebbleGame(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(5);
  Graph g(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (rng() % 4 == 0) g.add_edge(a, b);
  for (auto _ : state) benchmark::DoNotOptimize(is_sparse(g, {2, 3}));
}
BENCHMARK(BM_PebbleGame)->Arg(32)->Arg(128);

static void BM_CountRules(benchmark::State& state) {
  auto doc = fixture("fig1f");
  for (auto _ : state) benchmark::DoNotOptimize(symmetric_count_check(*doc.framework, *doc.group));
}
BENCHMARK(BM_CountRules);

static void BM_Enumerate(benchmark::State& state) {
  ScanConfig cfg;
  cfg.group = "c2";
  cfg.max_vertices = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_candidates(cfg));
}
BENCHMARK(BM_Enumerate)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
