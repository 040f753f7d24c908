// Serial reference vs OpenMP for the two parallel kernels: chunked sums over
// a sphere rule (the inner loop of matrix_spherical) and direct 4-D
// convolution.  Both pairs must produce identical bits; the benchmark
// reports it as a counter.
#include <benchmark/benchmark.h>

#include <cmath>

#include "gelfand/convolution.hpp"
#include "gelfand/kernels.hpp"
#include "gelfand/quadrature.hpp"
#include "gelfand/spherical.hpp"

using namespace gelfand;

namespace {

struct Sum {
  EndMatrix m;
  Sum& operator+=(const Sum& o) {
    m += o.m;
    return *this;
  }
};

template <bool Parallel>
void sphere_sum(benchmark::State& state) {
  const int order = int(state.range(0)), n = 2;
  const SphereQuadrature q = sphere_quadrature(order);
  const C2 z{cdouble(0.4, -0.3), cdouble(1.1, 0.2)};
  auto body = [&](std::size_t i, Sum& acc) {
    const cdouble phase = std::polar(q.weights[i] * (n + 1), -pairing(z, q.nodes[i]));
    const Eigen::VectorXcd v = sphere_column(q.nodes[i], 1, n);
    acc.m.noalias() += (phase * v) * v.adjoint();
  };
  const Sum zero{EndMatrix::Zero(n + 1, n + 1)};
  for (auto _ : state) {
    Sum s = Parallel ? kernels::chunked_sum_omp(q.size(), zero, body) : kernels::chunked_sum_serial(q.size(), zero, body);
    benchmark::DoNotOptimize(s.m.data());
  }
  const Sum a = kernels::chunked_sum_serial(q.size(), zero, body), b = kernels::chunked_sum_omp(q.size(), zero, body);
  state.counters["nodes"] = double(q.size());
  state.counters["bitwise_equal"] = a.m == b.m;
}

GridFunction grid(int points) {
  std::vector<ClosedForm> g(2);
  g[0].terms.push_back({1.0, 0, 1.0});
  g[1].terms.push_back({0.5, 1, 1.2});
  GridSpec spec{points, 3.0};
  spec.verify = false;
  return sample_on_grid(EquivariantFunction::from_profiles(1, g), spec);
}

template <bool Parallel>
void direct_convolution(benchmark::State& state) {
  const GridFunction g = grid(int(state.range(0)));
  for (auto _ : state) {
    GridFunction c = Parallel ? convolve_grids_direct_omp(g, g) : convolve_grids_direct_serial(g, g);
    benchmark::DoNotOptimize(c.entries.data());
  }
  state.counters["bitwise_equal"] = convolve_grids_direct_omp(g, g).entries == convolve_grids_direct_serial(g, g).entries;
}

void fft_convolution(benchmark::State& state) {
  const GridFunction g = grid(int(state.range(0)));
  for (auto _ : state) {
    GridFunction c = convolve_grids_fft(g, g);
    benchmark::DoNotOptimize(c.entries.data());
  }
}

}  // namespace

BENCHMARK(sphere_sum<false>)->Name("sphere_sum/serial")->Arg(24)->Arg(48)->Unit(benchmark::kMillisecond);
BENCHMARK(sphere_sum<true>)->Name("sphere_sum/omp")->Arg(24)->Arg(48)->Unit(benchmark::kMillisecond);
BENCHMARK(direct_convolution<false>)->Name("convolution_direct/serial")->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(direct_convolution<true>)->Name("convolution_direct/omp")->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(fft_convolution)->Name("convolution_fft")->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
