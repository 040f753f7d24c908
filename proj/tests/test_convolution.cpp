#include <cmath>
#include <random>

#include "doctest.h"
#include "gelfand/convolution.hpp"
#include "gelfand/errors.hpp"
#include "gelfand/transform.hpp"
#include "support.hpp"

using namespace gelfand;
using testing_support::gaussian_identity;
using testing_support::random_closed_form;

namespace {
const double kPi = std::acos(-1.0);

double max_entry_diff(const GridFunction& a, const GridFunction& b) {
  double d = 0;
  for (std::size_t e = 0; e < a.entries.size(); ++e)
    for (std::size_t i = 0; i < a.entries[e].size(); ++i) d = std::max(d, std::abs(a.entries[e][i] - b.entries[e][i]));
  return d;
}
}  // namespace

TEST_CASE("fft-friendly sizes") {
  CHECK(fft_friendly_size(33) == 35);
  CHECK(fft_friendly_size(41) == 42);
  CHECK(fft_friendly_size(64) == 64);
  CHECK(fft_friendly_size(11) == 12);
}

TEST_CASE("FFT convolution matches the direct sums, serial and parallel alike") {
  std::mt19937_64 rng(1);
  GridSpec spec{5, 2.0, false};
  auto g1 = sample_on_grid(random_closed_form(rng, 1), spec);
  auto g2 = sample_on_grid(random_closed_form(rng, 1), spec);
  auto fft = convolve_grids_fft(g1, g2);
  auto ser = convolve_grids_direct_serial(g1, g2);
  auto par = convolve_grids_direct_omp(g1, g2);
  CHECK(fft.points == 9);
  CHECK(max_entry_diff(ser, par) == 0.0);
  CHECK(max_entry_diff(fft, ser) < 1e-12);
}

TEST_CASE("Gaussian convolution is a Gaussian") {
  // e^{-a|x|^2} * e^{-b|x|^2} = (pi/(a+b))^2 e^{-ab/(a+b)|x|^2} in R^4.
  const double a = 1.0, b = 1.5;
  // Spacing 1/3: the trapezoid error of the w-integral is ~ e^{-pi^2/(h^2(a+b))}.
  GridSpec spec{25, 4.0};
  auto c = convolve(gaussian_identity(0, a), gaussian_identity(0, b), spec);
  double worst = 0;
  for (int i0 = 18; i0 <= 30; ++i0)
    for (int i2 = 18; i2 <= 30; ++i2)
      for (int i3 = 18; i3 <= 30; i3 += 4) {
        const std::array<int, 4> idx{i0, 24, i2, i3};
        const double s = std::norm(c.point(idx)[0]) + std::norm(c.point(idx)[1]);
        const double want = std::pow(kPi / (a + b), 2) * std::exp(-a * b / (a + b) * s);
        worst = std::max(worst, std::abs(c.at(idx)(0, 0) - want));
      }
  CHECK(worst < 1e-8);
}

TEST_CASE("convolving with a narrow normalized Gaussian is close to the identity") {
  std::vector<ClosedForm> p(2);
  // The leading error is the heat-kernel term |Delta F1| / (4a), about 3e-4 here.
  p[0].terms.push_back({1.0, 0, 0.005});
  p[1].terms.push_back({0.5, 0, 0.005});
  auto f1 = EquivariantFunction::from_profiles(1, p);
  const double a = 40;
  std::vector<ClosedForm> q(2);
  q[0].terms.push_back({a * a / (kPi * kPi), 0, a});
  auto f2 = EquivariantFunction::from_profiles(1, q);
  // f1 does not decay inside the box, so the Fourier check does not apply.
  GridSpec spec{21, 1.25, false};
  auto c = convolve(f1, f2, spec);
  double worst = 0;
  const int mid = c.points / 2;  // output index of the origin
  for (int d0 = -6; d0 <= 6; d0 += 2)
    for (int d1 = -6; d1 <= 6; d1 += 3)
      for (int d2 = -6; d2 <= 6; d2 += 2)
        for (int d3 = -6; d3 <= 6; d3 += 3) {
          const std::array<int, 4> idx{mid + d0, mid + d1, mid + d2, mid + d3};
          worst = std::max(worst, (c.at(idx) - f1(c.point(idx))).cwiseAbs().maxCoeff());
        }
  CHECK(worst < 1e-3);
}

TEST_CASE("equivariant functions commute under convolution and G_n is multiplicative") {
  std::mt19937_64 rng(17);
  auto f1 = random_closed_form(rng, 1, 0.8, 1.2), f2 = random_closed_form(rng, 1, 0.8, 1.2);
  {
    // The cubic grid is not K-invariant, so near-Nyquist aliasing spoils
    // commutativity on coarse grids; spacing 0.45 pushes it below 1e-6.
    GridSpec fine{21, 4.5};
    CHECK(max_entry_diff(convolve(f1, f2, fine), convolve(f2, f1, fine)) < 1e-6);
  }
  GridSpec spec{17, 4.5};
  auto c12 = convolve(f1, f2, spec);
  auto e1 = forward_transform_exact(f1), e2 = forward_transform_exact(f2);
  double scale = 0;
  for (int j = 0; j <= 1; ++j) scale = std::max(scale, std::abs(e1(j, 0) * e2(j, 0)));
  for (double xi : {0.0, 0.5, 1.0, 2.0, 4.0}) {
    const EndMatrix m = discrete_fourier_on_ray(c12, std::sqrt(xi));
    for (int j = 0; j <= 1; ++j) CHECK(std::abs(m(j, j) - e1(j, xi) * e2(j, xi)) < 1e-4 * scale);
    CHECK(off_diagonal_mass(m) < 1e-4 * scale);
  }
}

TEST_CASE("a grid that is too coarse is reported") {
  GridSpec spec{5, 5.0};
  CHECK_THROWS_AS(convolve(gaussian_identity(0, 1.0), gaussian_identity(0, 1.0), spec), GridResolutionError);
  CHECK_THROWS_AS(convolve(gaussian_identity(0, 1.0), gaussian_identity(1, 1.0), spec), InvalidArgument);
}
