// Microbenchmarks for the hot paths: canonical labeling, embedding counting,
// catalogue generation and the full decision procedure.

#include <benchmark/benchmark.h>

#include "convinv/canonical.hpp"
#include "convinv/counting.hpp"
#include "convinv/generate.hpp"
#include "convinv/invariance.hpp"

using namespace convinv;

namespace {

void BM_CanonicalFormTournament(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Tournament t = random_tournament(n, 12345);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(t.digraph()));
}
BENCHMARK(BM_CanonicalFormTournament)->Arg(6)->Arg(8)->Arg(10);

void BM_IsmTreeInTournament(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Digraph tower = Digraph::from_arcs(2, {{0, 1}});
  int head = 1;
  while (tower.order() < n) {
    tower = bridge_mirror(tower, head);
    head += tower.order() / 2;
  }
  Tournament t = random_tournament(n, 999);
  for (auto _ : state) benchmark::DoNotOptimize(ism(tower, t.digraph()));
}
BENCHMARK(BM_IsmTreeInTournament)->Arg(4)->Arg(8);

void BM_Automorphisms(benchmark::State& state) {
  Digraph star = star_orientation(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(automorphisms(star));
}
BENCHMARK(BM_Automorphisms)->Arg(5)->Arg(9);

void BM_TournamentCatalogue(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    // The catalogue caches; enumerate labeled tournaments instead to measure
    // the filter path end to end.
    std::vector<Arc> pairs;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    std::size_t classes = 0;
    std::vector<std::vector<std::uint8_t>> seen;
    std::vector<Arc> arcs(pairs.size());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
      for (std::size_t k = 0; k < pairs.size(); ++k)
        arcs[k] = (mask >> k) & 1 ? Arc{pairs[k].second, pairs[k].first} : pairs[k];
      auto key = canonical_form(Digraph::from_arcs(n, arcs)).key;
      if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
        seen.push_back(key);
        ++classes;
      }
    }
    benchmark::DoNotOptimize(classes);
  }
}
BENCHMARK(BM_TournamentCatalogue)->Arg(4)->Arg(5);

void BM_Decide(benchmark::State& state) {
  Digraph d = star_orientation(static_cast<int>(state.range(0)) - 1, 1);
  nonisomorphic_tournaments(d.order());  // build the shared catalogue up front
  for (auto _ : state) benchmark::DoNotOptimize(decide(d));
}
BENCHMARK(BM_Decide)->Arg(5)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
