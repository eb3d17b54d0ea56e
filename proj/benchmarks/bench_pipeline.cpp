#include <benchmark/benchmark.h>

#include <random>

#include "hopfkit/canonical_maps.hpp"
#include "hopfkit/cofree.hpp"
#include "hopfkit/convolution.hpp"
#include "hopfkit/envelope.hpp"
#include "hopfkit/fixtures.hpp"
#include "hopfkit/monoid.hpp"
#include "hopfkit/suite.hpp"

using namespace hopfkit;

namespace {

Matrix random_matrix(Field f, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> pick(-3, 3);
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Scalar(f, pick(rng));
  return m;
}

// Range argument: 0 = Q, otherwise the prime.
Field field_of(long code) { return code == 0 ? Field::rationals() : Field::prime(static_cast<std::uint64_t>(code)); }

}  // namespace

static void BM_Rref(benchmark::State& state) {
  const Matrix m = random_matrix(field_of(state.range(1)), static_cast<std::size_t>(state.range(0)), 42);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_Rref)->ArgsProduct({{16, 36, 64}, {0, 3}});

static void BM_BuildOslash(benchmark::State& state) {
  const Bialgebra b = monoid_bialgebra(monogenic(static_cast<std::size_t>(state.range(0)), 3), Field::rationals());
  for (auto _ : state) benchmark::DoNotOptimize(build_oslash(b).quotient_dim);
}
BENCHMARK(BM_BuildOslash)->DenseRange(1, 4);

static void BM_BuildBoxslash(benchmark::State& state) {
  const Bialgebra b = quotient_quantum_plane();
  for (auto _ : state) benchmark::DoNotOptimize(build_boxslash(b).dim());
}
BENCHMARK(BM_BuildBoxslash);

static void BM_HopfEnvelopeSkewPlane(benchmark::State& state) {
  const Bialgebra b = quotient_quantum_plane();
  for (auto _ : state) benchmark::DoNotOptimize(hopf_envelope(b).hopf.dim());
}
BENCHMARK(BM_HopfEnvelopeSkewPlane);

static void BM_CofreeSkewPlane(benchmark::State& state) {
  const Bialgebra b = quotient_quantum_plane();
  for (auto _ : state) benchmark::DoNotOptimize(cofree_hopf(b).hopf.dim());
}
BENCHMARK(BM_CofreeSkewPlane);

static void BM_CentralNAntipode(benchmark::State& state) {
  const Bialgebra b = monoid_bialgebra(monogenic(static_cast<std::size_t>(state.range(0)), 1), Field::rationals());
  for (auto _ : state) benchmark::DoNotOptimize(central_n_antipode(b).n);
}
BENCHMARK(BM_CentralNAntipode)->DenseRange(1, 4);

static void BM_EnvelopingGroup(benchmark::State& state) {
  const FiniteMonoid m = *builtin_fixture("symmetric-3").monoid;
  for (auto _ : state) benchmark::DoNotOptimize(enveloping_group(m).group.size);
}
BENCHMARK(BM_EnvelopingGroup);

static void BM_SuiteOverCorpus(benchmark::State& state) {
  const std::vector<Fixture> corpus = builtin_corpus(field_of(state.range(0)));
  for (auto _ : state)
    for (const Fixture& f : corpus) benchmark::DoNotOptimize(run_suite(f.bialgebra, f.monoid).ok());
}
BENCHMARK(BM_SuiteOverCorpus)->Arg(0)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
