#include <benchmark/benchmark.h>

#include <random>

#include "mnsr/ft_order.hpp"

using namespace mnsr;

namespace {

term deep_term(unsigned depth, unsigned width, bool series, unsigned& next_atom) {
  if (depth == 0)
    return term::atom("c" + std::to_string(next_atom++ % 6));
  std::vector<term> children;
  for (unsigned i = 0; i < width; ++i)
    children.push_back(deep_term(depth - 1, width, !series, next_atom));
  return series ? term::series(std::move(children))
                : term::parallel(std::move(children));
}

}  // namespace

static void BM_normalize(benchmark::State& state) {
  unsigned next_atom = 0;
  term t = deep_term(static_cast<unsigned>(state.range(0)), 3, true, next_atom);
  for (auto _ : state) {
    term n = normalize(t);
    benchmark::DoNotOptimize(n.node_kind());
  }
}
BENCHMARK(BM_normalize)->Arg(3)->Arg(5);

static void BM_derive_order(benchmark::State& state) {
  unsigned next_atom = 0;
  term small = deep_term(static_cast<unsigned>(state.range(0)), 2, true, next_atom);
  next_atom = 0;
  term large = deep_term(static_cast<unsigned>(state.range(0)), 3, true, next_atom);
  std::vector<std::pair<std::string, std::string>> pairs{{"c0", "c1"},
                                                         {"c2", "c3"}};
  atom_poset p({}, pairs);
  for (auto _ : state) {
    order_result r = derive_order(small, large, p);
    benchmark::DoNotOptimize(r.relation);
  }
}
BENCHMARK(BM_derive_order)->Arg(2)->Arg(3)->Arg(4);

static void BM_failure_probability(benchmark::State& state) {
  unsigned next_atom = 0;
  term t = deep_term(static_cast<unsigned>(state.range(0)), 3, true, next_atom);
  reliability_assignment r;
  for (unsigned i = 0; i < 6; ++i) {
    rational p(static_cast<unsigned long>(1 + i), 256ul);
    p.canonicalize();
    r.prob["c" + std::to_string(i)] = p;
  }
  for (auto _ : state) {
    rational value = failure_probability(t, r);
    benchmark::DoNotOptimize(value.get_d());
  }
}
BENCHMARK(BM_failure_probability)->Arg(3)->Arg(5);

static void BM_semantic_order_sampled(benchmark::State& state) {
  unsigned next_atom = 0;
  term small = deep_term(2, 2, false, next_atom);
  next_atom = 0;
  term large = deep_term(2, 3, true, next_atom);
  atom_poset p({}, {});
  for (auto _ : state) {
    semantic_order_result r = semantic_order_sampled(small, large, p, 16, 42);
    benchmark::DoNotOptimize(r.relation);
  }
}
BENCHMARK(BM_semantic_order_sampled);
