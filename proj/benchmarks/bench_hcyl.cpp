#include <benchmark/benchmark.h>

#include <random>

#include "hcyl/covers.hpp"
#include "hcyl/cylinder.hpp"
#include "hcyl/forms.hpp"
#include "hcyl/infection.hpp"
#include "hcyl/knots.hpp"
#include "hcyl/lyndon.hpp"
#include "hcyl/magnus.hpp"
#include "hcyl/samples.hpp"

using namespace hcyl;

namespace {

Word random_word(SurfaceBasis B, Rng& rng, int len) {
  std::uniform_int_distribution<int> pick(1, B.rank());
  std::bernoulli_distribution neg(0.5);
  std::vector<int> raw;
  for (int i = 0; i < len; ++i) raw.push_back(neg(rng) ? -pick(rng) : pick(rng));
  return Word::reduce(raw, B);
}

void BM_Expand(benchmark::State& st) {
  Rng rng(7);
  SurfaceBasis B{1, 2};
  Word w = random_word(B, rng, static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(expand_dense(w, 5));
  st.SetComplexityN(st.range(0));
}
BENCHMARK(BM_Expand)->RangeMultiplier(4)->Range(8, 512)->Complexity();

void BM_NormalForm(benchmark::State& st) {
  Rng rng(11);
  SurfaceBasis B{0, 4};
  Word w = random_word(B, rng, 64);
  int q = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(nil_normal_form(w, q));
}
BENCHMARK(BM_NormalForm)->DenseRange(2, 5);

void BM_Compose(benchmark::State& st) {
  Rng rng(3);
  SurfaceBasis B{1, 2};
  int q = static_cast<int>(st.range(0));
  auto M = random_class(B, rng, 3), N = random_class(B, rng, 3);
  M = invert(invert(M, q), q);
  N = invert(invert(N, q), q);
  for (auto _ : st) benchmark::DoNotOptimize(compose(M, N));
}
BENCHMARK(BM_Compose)->DenseRange(2, 4);

void BM_Invert(benchmark::State& st) {
  Rng rng(5);
  SurfaceBasis B{1, 2};
  int q = static_cast<int>(st.range(0));
  auto M = random_class(B, rng, 3);
  for (auto _ : st) benchmark::DoNotOptimize(invert(M, q));
}
BENCHMARK(BM_Invert)->DenseRange(2, 4);

void BM_TowerOrder(benchmark::State& st) {
  SurfaceBasis B{0, 3};
  auto T = tower_build(B, 2, {mod_p_abelianization(base_level(B), 2), cyclic_character(2, {1, 0, 1, 0, 0})});
  for (auto _ : st) benchmark::DoNotOptimize(tower_order(T, 5));
}
BENCHMARK(BM_TowerOrder);

void BM_WittSignatures(benchmark::State& st) {
  int n = static_cast<int>(st.range(0));
  auto A = torus_2n(n);
  for (auto _ : st) benchmark::DoNotOptimize(witt_signatures(lt_matrix(A, {8, 1}), 8));
  st.SetComplexityN(n);
}
BENCHMARK(BM_WittSignatures)->Arg(3)->Arg(7)->Arg(15)->Arg(31)->Complexity();

void BM_Integral(benchmark::State& st) {
  auto A = torus_2n(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(lt_integral(A));
}
BENCHMARK(BM_Integral)->Arg(3)->Arg(9)->Arg(15);

void BM_IntegralInexact(benchmark::State& st) {
  auto A = twist_knot(-2);
  for (auto _ : st) benchmark::DoNotOptimize(lt_integral(A));
}
BENCHMARK(BM_IntegralInexact);

void BM_KnotSearch(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(knot_family_search(2, static_cast<int>(st.range(0))));
}
BENCHMARK(BM_KnotSearch)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_Certificate(benchmark::State& st) {
  static const FamilyReport fam = knot_family_search(2, 3);
  static const GammaTower gt = gamma_tower_search({0, 3}, 2, 1);
  std::vector<long> coeffs{0, 2, -1};
  for (auto _ : st) benchmark::DoNotOptimize(independence_certificate(fam, gt, coeffs));
}
BENCHMARK(BM_Certificate)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
