#include <benchmark/benchmark.h>

#include <cstdint>
#include <numeric>
#include <vector>

#include "gcdt/determinant.hpp"
#include "gcdt/gcd_tensor.hpp"
#include "gcdt/poset.hpp"
#include "gcdt/positivity.hpp"

namespace {

gcdt::IntegerSet initial_segment(std::uint64_t n) {
  std::vector<std::uint64_t> v(n);
  std::iota(v.begin(), v.end(), std::uint64_t{1});
  return gcdt::IntegerSet(v);
}

void bm_build_gcd_tensor(benchmark::State& state) {
  const gcdt::IntegerSet s = initial_segment(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gcdt::build_gcd_tensor(s, 3));
  }
}
BENCHMARK(bm_build_gcd_tensor)->Arg(4)->Arg(8)->Arg(16);

void bm_phi_decompose(benchmark::State& state) {
  const gcdt::IntegerSet s = initial_segment(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gcdt::scp_decompose(s, 2, gcdt::SchemeKind::phi_factor_closed));
  }
}
BENCHMARK(bm_phi_decompose)->Arg(8)->Arg(16)->Arg(30);

void bm_matrix_determinant(benchmark::State& state) {
  const gcdt::Tensor<gcdt::BigInt> t =
      gcdt::build_gcd_tensor(initial_segment(state.range(0)), 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gcdt::tensor_det_oracle(t));
  }
}
BENCHMARK(bm_matrix_determinant)->Arg(4)->Arg(8)->Arg(16);

void bm_resultant_determinant(benchmark::State& state) {
  const gcdt::IntegerSet s(std::vector<std::uint64_t>{1, 24});
  const gcdt::Tensor<gcdt::BigInt> t = gcdt::build_gcd_tensor(s, state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gcdt::tensor_det_oracle(t));
  }
}
BENCHMARK(bm_resultant_determinant)->Arg(3)->Arg(4)->Arg(5)->Arg(6);

void bm_extreme_form(benchmark::State& state) {
  const gcdt::Tensor<double> t =
      gcdt::to_float64(gcdt::build_gcd_tensor(initial_segment(4), 4));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        gcdt::extreme_form_on_sphere(t, gcdt::ExtremeMode::min, 4, state.range(0), 0));
  }
}
BENCHMARK(bm_extreme_form)->Arg(100)->Arg(500);

void bm_meet_tensor(benchmark::State& state) {
  const gcdt::MeetSemilattice l =
      gcdt::MeetSemilattice::divisibility(initial_segment(30));
  std::vector<std::string> labels;
  for (std::uint64_t v : initial_segment(state.range(0))) {
    labels.push_back(std::to_string(v));
  }
  gcdt::Valuation<gcdt::BigRat> g;
  for (std::uint64_t v = 1; v <= 30; ++v) g[std::to_string(v)] = gcdt::BigRat(gcdt::BigInt(v));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gcdt::build_meet_tensor(l, labels, g, 3));
  }
}
BENCHMARK(bm_meet_tensor)->Arg(4)->Arg(8);

void bm_conjecture_scan(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(gcdt::conjecture_scan(2, 2, state.range(0)));
  }
}
BENCHMARK(bm_conjecture_scan)->Arg(20)->Arg(40);

}  // namespace

BENCHMARK_MAIN();
