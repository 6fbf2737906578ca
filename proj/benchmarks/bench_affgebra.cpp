#include <benchmark/benchmark.h>

#include <vector>

#include "affgebra/affine.hpp"
#include "affgebra/lie.hpp"
#include "affgebra/sna.hpp"

using namespace affgebra;

namespace {

std::vector<Matrix> pool(std::size_t n, std::size_t count) {
  const sna::SnaSpec spec{n, Field::rationals};
  std::vector<Matrix> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(sna::random_element(spec, k, 8));
  return out;
}

void BM_SnaBracket(benchmark::State& state) {
  const auto members = pool(static_cast<std::size_t>(state.range(0)), 16);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(lie::sna_bracket(members[i % 16], members[(i + 1) % 16]));
    ++i;
  }
}
BENCHMARK(BM_SnaBracket)->Arg(2)->Arg(3)->Arg(5);

void BM_Complete(benchmark::State& state) {
  const sna::SnaSpec spec{static_cast<std::size_t>(state.range(0)), Field::rationals};
  const auto pattern = sna::extract_pattern(sna::random_element(spec, 7, 8), spec);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sna::complete(pattern, spec));
  }
}
BENCHMARK(BM_Complete)->Arg(2)->Arg(4)->Arg(6);

void BM_BarycentricCoords(benchmark::State& state) {
  const auto members = pool(2, 16);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sna::barycentric_coords(members[i % 16]));
    ++i;
  }
}
BENCHMARK(BM_BarycentricCoords);

void BM_ReduceBracket(benchmark::State& state) {
  const auto members = pool(static_cast<std::size_t>(state.range(0)), 16);
  const auto bracket = lie::make_sna_bracket();
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        lie::reduce_bracket(bracket, members[0], members[1 + i % 14], members[2 + i % 14]));
    ++i;
  }
}
BENCHMARK(BM_ReduceBracket)->Arg(2)->Arg(3);

void BM_HeapSuite(benchmark::State& state) {
  const sna::SnaSpec spec{2, Field::rationals};
  const auto space = sna::carrier(spec);
  const auto members = pool(2, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(affine::check_heap_axioms(space, members));
  }
}
BENCHMARK(BM_HeapSuite)->Arg(16)->Arg(64);

void BM_ConstraintRank(benchmark::State& state) {
  const sna::SnaSpec spec{static_cast<std::size_t>(state.range(0)), Field::rationals};
  for (auto _ : state) {
    benchmark::DoNotOptimize(sna::dimension_from_constraints(spec));
  }
}
BENCHMARK(BM_ConstraintRank)->Arg(2)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
