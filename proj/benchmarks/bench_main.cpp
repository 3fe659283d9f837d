#include <benchmark/benchmark.h>

#include "ualg/entail.hpp"
#include "ualg/eqlogic.hpp"
#include "ualg/free.hpp"
#include "ualg/hom.hpp"
#include "ualg/io.hpp"

namespace {

using namespace ualg;

const Signature kBinary({{"f", 2}});

FiniteAlgebra cyclic(std::size_t n) {
  std::vector<Elem> t;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) t.push_back(static_cast<Elem>((a + b) % n));
  return FiniteAlgebra::make(kBinary, n, {t}, "z" + std::to_string(n));
}

const FiniteAlgebra kSemilattice = FiniteAlgebra::make(kBinary, 2, {{0, 0, 0, 1}}, "slat2");

void BM_BuildFreeSemilattice(benchmark::State& state) {
  const std::vector<FiniteAlgebra> k{kSemilattice};
  const auto vars = numbered_variables(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_free(k, vars).algebra().size());
}
BENCHMARK(BM_BuildFreeSemilattice)->DenseRange(2, 6);

void BM_BuildFreeCyclic(benchmark::State& state) {
  const std::vector<FiniteAlgebra> k{cyclic(static_cast<std::size_t>(state.range(0)))};
  const std::vector<std::string> xy{"x", "y"};
  for (auto _ : state) benchmark::DoNotOptimize(build_free(k, xy).algebra().size());
}
BENCHMARK(BM_BuildFreeCyclic)->DenseRange(2, 8, 2);

void BM_FindHomsCyclic(benchmark::State& state) {
  const auto a = cyclic(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(find_homs(a, a).size());
}
BENCHMARK(BM_FindHomsCyclic)->DenseRange(4, 16, 4);

void BM_TheoryUpto(benchmark::State& state) {
  const std::vector<FiniteAlgebra> k{cyclic(3)};
  const std::vector<std::string> xy{"x", "y"};
  const auto depth = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(theory_upto(kBinary, k, xy, depth).size());
}
BENCHMARK(BM_TheoryUpto)->DenseRange(1, 2);

void BM_SearchProofCommutativity(benchmark::State& state) {
  const std::vector<Equation> comm{parse_equation("f(?x,?y) = f(?y,?x)")};
  const auto goal = parse_equation("f(f(?x,?y),?z) = f(?z,f(?y,?x))");
  for (auto _ : state) benchmark::DoNotOptimize(search_proof(kBinary, comm, goal).nodes);
}
BENCHMARK(BM_SearchProofCommutativity);

}  // namespace

BENCHMARK_MAIN();
