#include <benchmark/benchmark.h>

#include "mnsr/checks.hpp"
#include "mnsr/constructions.hpp"
#include "mnsr/morphisms.hpp"

using namespace mnsr;

static void BM_verify_modular(benchmark::State& state) {
  const unsigned k = static_cast<unsigned>(state.range(0));
  mn_semiring s = modular_mn_semiring(k, 2, 2);
  for (auto _ : state) {
    property_report rep = verify_mn_semiring(s);
    benchmark::DoNotOptimize(rep.is_mn_semiring());
  }
}
BENCHMARK(BM_verify_modular)->Arg(6)->Arg(9)->Arg(12);

static void BM_associativity_ternary(benchmark::State& state) {
  const unsigned k = static_cast<unsigned>(state.range(0));
  op_table f = modular_mn_semiring(k, 3, 2).f();
  for (auto _ : state) {
    check_result r = check_associativity(f);
    benchmark::DoNotOptimize(r.ok);
  }
}
BENCHMARK(BM_associativity_ternary)->Arg(6)->Arg(9)->Arg(12);

static void BM_enumerate_congruences(benchmark::State& state) {
  const unsigned k = static_cast<unsigned>(state.range(0));
  mn_semiring s = modular_mn_semiring(k, 2, 2);
  for (auto _ : state) {
    auto found = enumerate_congruences(s);
    benchmark::DoNotOptimize(found.size());
  }
}
BENCHMARK(BM_enumerate_congruences)->Arg(6)->Arg(8)->Arg(10);

static void BM_isomorphism_search(benchmark::State& state) {
  mn_semiring z8 = modular_mn_semiring(8, 2, 2);
  // Relabeled copy: worst case has to reconstruct the permutation.
  std::vector<element> perm{3, 6, 1, 4, 7, 2, 5, 0};
  std::vector<element> inv(8);
  for (unsigned i = 0; i < 8; ++i) inv[perm[i]] = i;
  auto relabel = [&](const op_table& op) {
    return op_table::from_function(2, 8, [&](std::span<const element> a) {
      return perm[op.eval({inv[a[0]], inv[a[1]]})];
    });
  };
  mn_semiring shuffled(relabel(z8.f()), relabel(z8.g()));
  for (auto _ : state) {
    auto phi = is_isomorphic(z8, shuffled);
    benchmark::DoNotOptimize(phi.has_value());
  }
}
BENCHMARK(BM_isomorphism_search);
