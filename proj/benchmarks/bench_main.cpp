#include <benchmark/benchmark.h>

#include <string>

#include "rigidity/chplane/geodesic.hpp"
#include "rigidity/flatsurf/foliation.hpp"
#include "rigidity/flatsurf/io.hpp"
#include "rigidity/flatsurf/saddle_connections.hpp"
#include "rigidity/symdom/io.hpp"
#include "rigidity/symdom/monodromy.hpp"
#include "rigidity/symdom/smoothness.hpp"

namespace {

rigidity::flatsurf::Origami origami(const char* name) {
  return rigidity::flatsurf::read_origami(std::string(RIGIDITY_DATA_DIR) + "/origamis/" + name + ".json");
}

rigidity::symdom::SymdomInput symdom_input(const char* relative) {
  return rigidity::symdom::read_symdom_input(std::string(RIGIDITY_DATA_DIR) + "/" + relative);
}

void BM_SaddleConnections(benchmark::State& state) {
  const auto o = origami("staircase6");
  for (auto _ : state) {
    benchmark::DoNotOptimize(rigidity::flatsurf::saddle_connections(o, static_cast<double>(state.range(0))));
  }
}
BENCHMARK(BM_SaddleConnections)->Arg(5)->Arg(10)->Arg(20);

void BM_IntersectionProfile(benchmark::State& state) {
  const auto g = rigidity::flatsurf::core_multicurve(
      rigidity::flatsurf::cylinder_decomposition(origami("L"), {1, 0}));
  for (auto _ : state) {
    benchmark::DoNotOptimize(rigidity::flatsurf::sample_profile(g, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_IntersectionProfile)->Arg(360)->Arg(3600);

void BM_CylinderDecomposition(benchmark::State& state) {
  const auto o = origami("staircase6");
  for (auto _ : state) benchmark::DoNotOptimize(rigidity::flatsurf::cylinder_decomposition(o, {3, 5}));
}
BENCHMARK(BM_CylinderDecomposition);

void BM_Step2(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(rigidity::chplane::step2_verify());
}
BENCHMARK(BM_Step2);

void BM_Charpoly(benchmark::State& state) {
  const auto path = std::get<rigidity::symdom::PolynomialMatrixPath>(symdom_input("paths/jordan.json"));
  for (auto _ : state) benchmark::DoNotOptimize(rigidity::symdom::charpoly_path(path));
}
BENCHMARK(BM_Charpoly);

void BM_NewtonPuiseux(benchmark::State& state) {
  const auto p = std::get<rigidity::symdom::BivariatePolynomial>(symdom_input("polynomials/double_eigenvalue.json"));
  for (auto _ : state) benchmark::DoNotOptimize(rigidity::symdom::newton_puiseux_index(p));
}
BENCHMARK(BM_NewtonPuiseux);

void BM_Monodromy(benchmark::State& state) {
  const auto p = std::get<rigidity::symdom::BivariatePolynomial>(symdom_input("polynomials/double_eigenvalue.json"));
  for (auto _ : state) {
    benchmark::DoNotOptimize(rigidity::symdom::monodromy_branch_index(p, 0.01, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_Monodromy)->Arg(512)->Arg(4096);

void BM_Smoothness(benchmark::State& state) {
  const auto p = std::get<rigidity::symdom::BivariatePolynomial>(symdom_input("polynomials/double_eigenvalue.json"));
  for (auto _ : state) benchmark::DoNotOptimize(rigidity::symdom::smoothness_report(p, 0.05));
}
BENCHMARK(BM_Smoothness);

}  // namespace

BENCHMARK_MAIN();
