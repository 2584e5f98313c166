#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "computads/counterexample.hpp"
#include "computads/verify.hpp"

using namespace computads;

namespace {

LabelMultiset distinct_labels(const char* stem, int n) {
  LabelMultiset::Counts counts;
  for (int i = 0; i < n; ++i) counts[stem + std::to_string(i)] = 1;
  return LabelMultiset(std::move(counts));
}

const PaperObjects& po() {
  static PaperObjects objects = build_paper_objects();
  return objects;
}

CoequalizerResult product_coequalizer() {
  ProductResult axb = product(po().a, po().b, "AxB");
  ProductResult exb = product(po().e, po().b, "ExB");
  Morphism a1x1 = product_of_morphisms(po().alpha1, exb, axb, "alpha1x1");
  Morphism a2x1 = product_of_morphisms(po().alpha2, exb, axb, "alpha2x1");
  return coequalizer(a1x1, a2x1, "P");
}

}  // namespace

static void BM_enumerate_pairings_distinct(benchmark::State& state) {
  LabelMultiset left = distinct_labels("x", (int)state.range(0));
  LabelMultiset right = distinct_labels("y", (int)state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_pairings(left, right));
}
BENCHMARK(BM_enumerate_pairings_distinct)->Arg(3)->Arg(5)->Arg(7);

static void BM_enumerate_pairings_repeated(benchmark::State& state) {
  int n = (int)state.range(0);
  LabelMultiset left(LabelMultiset::Counts{{"a", n}, {"b", n}});
  LabelMultiset right(LabelMultiset::Counts{{"c", n}, {"d", n}});
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_pairings(left, right));
}
BENCHMARK(BM_enumerate_pairings_repeated)->Arg(2)->Arg(4)->Arg(8);

static void BM_count_pairings_oracle(benchmark::State& state) {
  LabelMultiset left = distinct_labels("x", (int)state.range(0));
  LabelMultiset right = distinct_labels("y", (int)state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(count_pairings_oracle(left, right));
}
BENCHMARK(BM_count_pairings_oracle)->Arg(3)->Arg(5)->Arg(7);

static void BM_enumerate_homs_free(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_homs(po().e, po().a));
}
BENCHMARK(BM_enumerate_homs_free);

static void BM_enumerate_homs_constrained(benchmark::State& state) {
  ProductResult axb = product(po().a, po().b);
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_homs(axb.object, po().a));
}
BENCHMARK(BM_enumerate_homs_constrained);

static void BM_product(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(product(po().a, po().b));
}
BENCHMARK(BM_product);

static void BM_coequalizer(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(product_coequalizer());
}
BENCHMARK(BM_coequalizer);

static void BM_find_isomorphism_hit(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(find_isomorphism(po().a, po().b));
}
BENCHMARK(BM_find_isomorphism_hit);

static void BM_find_isomorphism_miss(benchmark::State& state) {
  CoequalizerResult pres = product_coequalizer();
  CoequalizerResult cres = coequalizer(po().alpha1, po().alpha2, "C");
  ProductResult cxb = product(cres.object, po().b, "CxB");
  for (auto _ : state)
    benchmark::DoNotOptimize(find_isomorphism(pres.object, cxb.object));
}
BENCHMARK(BM_find_isomorphism_miss);

static void BM_generate_family(benchmark::State& state) {
  GeneratorBounds bounds{(int)state.range(0), (int)state.range(1),
                         (int)state.range(2)};
  for (auto _ : state)
    benchmark::DoNotOptimize(generate_computads(bounds));
}
BENCHMARK(BM_generate_family)->Args({2, 1, 2})->Args({3, 1, 2})->Args({3, 2, 2});

static void BM_check_product_up(benchmark::State& state) {
  ProductResult axb = product(po().a, po().b);
  GeneratorBounds bounds{(int)state.range(0), 1, 2};
  for (auto _ : state)
    benchmark::DoNotOptimize(check_product_up(po().a, po().b, axb, bounds));
}
BENCHMARK(BM_check_product_up)->Arg(2)->Arg(3);

static void BM_check_coequalizer_up(benchmark::State& state) {
  CoequalizerResult ce = coequalizer(po().alpha1, po().alpha2, "C");
  GeneratorBounds bounds{(int)state.range(0), 2, 2};
  for (auto _ : state)
    benchmark::DoNotOptimize(
        check_coequalizer_up(po().alpha1, po().alpha2, ce, bounds));
}
BENCHMARK(BM_check_coequalizer_up)->Arg(2)->Arg(3);

static void BM_run_counterexample(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_counterexample());
}
BENCHMARK(BM_run_counterexample);

BENCHMARK_MAIN();
