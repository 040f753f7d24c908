#include <doctest.h>

#include <cmath>
#include <complex>

#include "gelfand/kernels.hpp"
#include "gelfand/quadrature.hpp"
#include "gelfand/spherical.hpp"

using namespace gelfand;

TEST_CASE("chunked sums: serial and OpenMP give identical bits") {
  const SphereQuadrature q = sphere_quadrature(30);
  REQUIRE(q.size() > 3 * kernels::kChunk);
  auto body = [&](std::size_t i, cdouble& acc) {
    acc += q.weights[i] * std::polar(1.0, -2.7 * q.nodes[i][1].real()) * std::norm(sphere_column(q.nodes[i], 1, 2)(0));
  };
  const cdouble a = kernels::chunked_sum_serial(q.size(), cdouble(0), body);
  const cdouble b = kernels::chunked_sum_omp(q.size(), cdouble(0), body);
  CHECK(a == b);
  CHECK(kernels::chunked_sum_serial(0, 1.5, [](std::size_t, double&) {}) == 1.5);
}

TEST_CASE("maps: serial and OpenMP agree") {
  std::vector<double> a, b;
  auto f = [](std::size_t i) { return std::sin(double(i)) * std::exp(-1e-3 * double(i)); };
  kernels::map_serial(1000, a, f);
  kernels::map_omp(1000, b, f);
  CHECK(a == b);
}
