#include <benchmark/benchmark.h>

#include <random>

#include "lcs/forms.hpp"
#include "lcs/lcs_engine.hpp"
#include "lcs/schur.hpp"
#include "lcs/series.hpp"

using namespace lcs;

namespace {

std::vector<SparseVector> random_vectors(int count, int ambient,
                                         std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::vector<SparseVector> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    std::vector<SparseVector::Entry> entries;
    for (int j = 0; j < ambient; ++j) {
      int c = coeff(rng);
      if (c != 0) entries.emplace_back(j, rat(c));
    }
    out.push_back(SparseVector::from_entries(std::move(entries)));
  }
  return out;
}

}  // namespace

static void BM_EchelonInsert(benchmark::State& state) {
  const int ambient = static_cast<int>(state.range(0));
  auto vectors = random_vectors(ambient + 10, ambient, 99);
  for (auto _ : state) {
    EchelonSubspace space;
    for (const SparseVector& v : vectors) space.insert(v);
    benchmark::DoNotOptimize(space.dim());
  }
}
BENCHMARK(BM_EchelonInsert)->Arg(32)->Arg(96);

static void BM_SuperBracket(benchmark::State& state) {
  GeneratorSet gens{2, 1};
  GradedContext ctx(gens);
  MultiDegree d{2, 2, 1};
  const ComponentBasis& basis = ctx.basis(d);
  AlgebraElement dense(gens, d);
  for (std::size_t i = 0; i < basis.words.size(); ++i) {
    dense.add_term(basis.words[i], rat(static_cast<long>(i) + 1));
  }
  AlgebraElement x = AlgebraElement::generator(gens, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(super_bracket(x, dense).terms().size());
  }
}
BENCHMARK(BM_SuperBracket);

static void BM_ComputeLcs(benchmark::State& state) {
  const int D = static_cast<int>(state.range(0));
  for (auto _ : state) {
    SubspaceFamily family = compute_lcs(GeneratorSet{2, 0}, D, D);
    benchmark::DoNotOptimize(family.table().size());
  }
}
BENCHMARK(BM_ComputeLcs)->Arg(5)->Arg(7);

static void BM_ComputeIdeals(benchmark::State& state) {
  SubspaceFamily family = compute_lcs(GeneratorSet{2, 1}, 5, 4);
  for (auto _ : state) {
    SubspaceFamily ideals = compute_ideals(family);
    benchmark::DoNotOptimize(ideals.table().size());
  }
}
BENCHMARK(BM_ComputeIdeals);

static void BM_PhiImageComponent(benchmark::State& state) {
  GeneratorSet gens{2, 1};
  GradedContext ctx(gens);
  MultiDegree d{2, 2, 1};
  const ComponentBasis& basis = ctx.basis(d);
  EvenFormIndex ambient = even_form_index(gens, d);
  for (auto _ : state) {
    EchelonSubspace image;
    for (const Word& w : basis.words) {
      image.insert(form_to_sparse(
          phi_map(AlgebraElement::from_word(gens, w)), ambient.all));
    }
    benchmark::DoNotOptimize(image.dim());
  }
}
BENCHMARK(BM_PhiImageComponent);

static void BM_OmegaSeries(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(omega_series(2, 2, 8).coeffs().size());
  }
}
BENCHMARK(BM_OmegaSeries);

static void BM_HookSchur(benchmark::State& state) {
  Partition lambda = Partition({2}).with_unit_rows(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hook_schur(lambda, 2, 1, 8).coeffs().size());
  }
}
BENCHMARK(BM_HookSchur);

BENCHMARK_MAIN();
