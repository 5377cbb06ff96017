// Serial vs OpenMP kernels: fraction-free elimination, minor enumeration,
// and the decision batch. Run with --benchmark_time_unit=ms.
#include <benchmark/benchmark.h>

#include "artinqp/charvar.hpp"
#include "artinqp/qpdecide.hpp"

using namespace artinqp;

namespace {

AlexMatrix big_cocyclic() {
  // Two B-blocks plus Artin rows: 3r x (2r+1) with r = 5.
  LabeledGraph g = triangle(10, 10, 4);
  return cocyclic_matrix(g, "a", 5);
}

std::vector<LabeledGraph> graph_family() {
  std::vector<LabeledGraph> out;
  std::vector<std::string> names = {"a", "b", "c", "d"};
  for (int c0 = 0; c0 < 4; ++c0)
    for (int c1 = 0; c1 < 4; ++c1)
      for (int c2 = 0; c2 < 4; ++c2)
        for (int c3 = 0; c3 < 4; ++c3) {
          std::vector<std::tuple<std::string, std::string, int>> edges;
          int cs[6] = {c0, c1, c2, c3, (c0 + c1) % 4, (c2 + c3) % 4};
          int idx = 0;
          for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
              if (cs[idx]) edges.emplace_back(names[i], names[j], 2 * cs[idx]);
              ++idx;
            }
          out.push_back(make_graph(names, edges));
        }
  return out;
}

void bm_rank(benchmark::State& state, Exec exec) {
  AlexMatrix m = big_cocyclic();
  for (auto _ : state) {
    benchmark::DoNotOptimize(generic_rank(m.entries, exec));
  }
}

void bm_minors(benchmark::State& state, Exec exec) {
  AlexMatrix m = cocyclic_matrix(triangle(8, 8, 4), "a", 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(all_minors(m.entries, 3, exec));
  }
}

void bm_decide_batch(benchmark::State& state, Exec exec) {
  (void)exec;
  std::vector<LabeledGraph> gs = graph_family();
  for (auto _ : state) {
    int not_qp = 0;
    for (const auto& g : gs)
      if (!decide_qp(g).qp) ++not_qp;
    benchmark::DoNotOptimize(not_qp);
  }
}

}  // namespace

BENCHMARK_CAPTURE(bm_rank, serial, Exec::Serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_rank, parallel, Exec::Parallel)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_minors, serial, Exec::Serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_minors, parallel, Exec::Parallel)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_decide_batch, single, Exec::Serial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
