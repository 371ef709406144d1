#include <benchmark/benchmark.h>

#include "raagspace/classify.hpp"
#include "raagspace/metric.hpp"
#include "raagspace/shear.hpp"

using namespace raagspace;

namespace {

DefiningGraph pathGraph(int n) {
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    for (int i = 0; i + 1 < n; ++i) edges.push_back({names[i], names[i + 1]});
    return DefiningGraph(names, edges);
}

DefiningGraph completeGraph(int n) {
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({names[i], names[j]});
    return DefiningGraph(names, edges);
}

DefiningGraph pathABCplusD() {
    return DefiningGraph({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}});
}

void BM_SalvettiComplete(benchmark::State& state) {
    DefiningGraph g = completeGraph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(BlowupComplex::salvetti(g));
}
BENCHMARK(BM_SalvettiComplete)->Arg(4)->Arg(6)->Arg(8);

void BM_EnumeratePartitions(benchmark::State& state) {
    DefiningGraph g = pathGraph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(enumerateAllPartitions(g));
}
BENCHMARK(BM_EnumeratePartitions)->Arg(4)->Arg(5);

void BM_BuildBlowup(benchmark::State& state) {
    DefiningGraph g = pathABCplusD();
    auto all = enumerateAllPartitions(g);
    PartitionFamily fam(g, {all[0], all[1]});
    for (auto _ : state) benchmark::DoNotOptimize(BlowupComplex::build(g, fam));
}
BENCHMARK(BM_BuildBlowup);

void BM_ClassifyHyperplanes(benchmark::State& state) {
    DefiningGraph g = pathABCplusD();
    auto all = enumerateAllPartitions(g);
    BlowupComplex b = BlowupComplex::build(g, PartitionFamily(g, {all[0]}));
    for (auto _ : state) benchmark::DoNotOptimize(classifyAll(b));
}
BENCHMARK(BM_ClassifyHyperplanes);

void BM_Straighten(benchmark::State& state) {
    DefiningGraph g = pathABCplusD();
    BlowupComplex b = BlowupComplex::salvetti(g);
    MetricStructure f = MetricStructure::standard(b);
    f = rotate(b, f, Label::vertexLabel(g.vertexId("a")), g.vertexId("b"), 1.0);
    for (auto _ : state) benchmark::DoNotOptimize(straighten(b, f, 0.5));
}
BENCHMARK(BM_Straighten);

void BM_FiberDimension(benchmark::State& state) {
    DefiningGraph g = pathABCplusD();
    auto all = enumerateAllPartitions(g);
    BlowupComplex b = BlowupComplex::build(g, PartitionFamily(g, {all[0]}));
    for (auto _ : state) benchmark::DoNotOptimize(fiberDimension(b));
}
BENCHMARK(BM_FiberDimension);

} // namespace

BENCHMARK_MAIN();
