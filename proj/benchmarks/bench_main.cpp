#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "multiring/chains.hpp"
#include "multiring/decomposition.hpp"
#include "multiring/ideals.hpp"
#include "multiring/multispace.hpp"

namespace {

using namespace multiring;

MultiRingSpace disjoint(const std::vector<std::size_t>& sizes) {
  std::vector<std::string> labels;
  std::vector<FiniteRing> rings;
  std::uint32_t next = 0;
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    std::vector<ElementId> carrier;
    for (std::size_t x = 0; x < sizes[k]; ++x) {
      labels.push_back(std::string(1, static_cast<char>('a' + k)) + std::to_string(x));
      carrier.push_back(element(next++));
    }
    rings.push_back(make_cyclic_ring(sizes[k], carrier));
  }
  return build_multispace(Universe::from_labels(labels), std::move(rings));
}

void BM_EnumerateIdealsClosure(benchmark::State& state) {
  const auto r = make_cyclic_ring(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_ideals(r, IdealMethod::kClosure));
}
BENCHMARK(BM_EnumerateIdealsClosure)->Arg(12)->Arg(30)->Arg(64);

void BM_EnumerateIdealsExhaustive(benchmark::State& state) {
  const auto r = make_cyclic_ring(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_ideals(r, IdealMethod::kExhaustive));
}
BENCHMARK(BM_EnumerateIdealsExhaustive)->Arg(8)->Arg(12)->Arg(16);

void BM_ValidateRing(benchmark::State& state) {
  const auto t = make_cyclic_ring(static_cast<std::size_t>(state.range(0))).tables();
  for (auto _ : state) benchmark::DoNotOptimize(validate_ring(t));
}
BENCHMARK(BM_ValidateRing)->Arg(6)->Arg(16)->Arg(32);

// Every selection of Z_4 + Z_6 under one criterion.
void BM_CriterionSweep(benchmark::State& state) {
  const auto m = disjoint({4, 6});
  const auto criterion = static_cast<SubspaceCriterion>(state.range(0));
  for (auto _ : state) {
    std::size_t holds = 0;
    for (std::uint32_t ops = 1; ops < 4; ++ops) {
      std::vector<RingIndex> op_list;
      for (RingIndex k = 0; k < 2; ++k) {
        if (ops >> k & 1) op_list.push_back(k);
      }
      for (std::uint32_t mask = 0; mask < 1024; ++mask) {
        SubsetSelection s{ElementSet(10), op_list};
        for (std::uint32_t x = 0; x < 10; ++x) {
          if (mask >> x & 1) s.elements.insert(element(x));
        }
        holds += subspace_verdict(m, s, criterion).holds;
      }
    }
    benchmark::DoNotOptimize(holds);
  }
}
BENCHMARK(BM_CriterionSweep)
    ->Arg(static_cast<int>(SubspaceCriterion::kDirect))
    ->Arg(static_cast<int>(SubspaceCriterion::kT21))
    ->Arg(static_cast<int>(SubspaceCriterion::kT22));

void BM_Chain(benchmark::State& state) {
  const auto m = disjoint({12, 10, 8});
  const auto order = OperationOrder::identity(3);
  for (auto _ : state) benchmark::DoNotOptimize(ideal_subspace_chain(m, order));
}
BENCHMARK(BM_Chain);

void BM_ChainIsValid(benchmark::State& state) {
  const auto m = disjoint({12, 10, 8});
  const auto chain = ideal_subspace_chain(m, OperationOrder::identity(3));
  for (auto _ : state) benchmark::DoNotOptimize(chain_is_valid(m, chain));
}
BENCHMARK(BM_ChainIsValid);

void BM_Decompose(benchmark::State& state) {
  const auto m = disjoint({12, 10, 6});
  for (auto _ : state) benchmark::DoNotOptimize(decompose_artin(m));
}
BENCHMARK(BM_Decompose);

}  // namespace
BENCHMARK_MAIN();
