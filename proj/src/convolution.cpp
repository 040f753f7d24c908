#include "gelfand/convolution.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>

#include "gelfand/errors.hpp"
#include "gelfand/transform.hpp"

namespace gelfand {

EndMatrix GridFunction::at(std::size_t idx) const {
  EndMatrix m(n + 1, n + 1);
  for (int i = 0; i <= n; ++i)
    for (int k = 0; k <= n; ++k) m(i, k) = entries[i * (n + 1) + k][idx];
  return m;
}

EndMatrix GridFunction::at(const std::array<int, 4>& i) const { return at(flat(i)); }

int fft_friendly_size(int m) {
  for (int s = std::max(m, 1);; ++s) {
    int r = s;
    for (int p : {2, 3, 5, 7})
      while (r % p == 0) r /= p;
    if (r == 1) return s;
  }
}

GridFunction sample_on_grid(const EquivariantFunction& f, const GridSpec& spec) {
  if (spec.points < 2 || !(spec.half_width > 0)) throw InvalidArgument("grid needs >= 2 points and a positive width");
  const int n = f.n(), N = spec.points;
  GridFunction g{n, N, 2 * spec.half_width / (N - 1), -spec.half_width, {}};
  const std::size_t total = std::size_t(N) * N * N * N;
  g.entries.assign((n + 1) * (n + 1), std::vector<cdouble>(total));
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t idx = 0; idx < std::ptrdiff_t(total); ++idx) {
    std::size_t r = std::size_t(idx);
    std::array<int, 4> i{};
    for (int a = 3; a >= 0; --a) {
      i[a] = int(r % N);
      r /= N;
    }
    const EndMatrix v = f(g.point(i));
    for (int p = 0; p <= n; ++p)
      for (int q = 0; q <= n; ++q) g.entries[p * (n + 1) + q][idx] = v(p, q);
  }
  return g;
}

namespace {

void check_compatible(const GridFunction& a, const GridFunction& b) {
  if (a.n != b.n || a.points != b.points || std::abs(a.h - b.h) > 1e-14 * a.h || std::abs(a.x0 - b.x0) > 1e-12)
    throw InvalidArgument("grid functions live on different grids");
}

GridFunction output_grid(const GridFunction& a) {
  const int M = 2 * a.points - 1;
  GridFunction o{a.n, M, a.h, 2 * a.x0, {}};
  o.entries.assign((a.n + 1) * (a.n + 1), std::vector<cdouble>(std::size_t(M) * M * M * M, 0.0));
  return o;
}

// FFTW planning is not thread safe.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftBuffer {
  fftw_complex* data = nullptr;
  std::size_t size = 0;
  explicit FftBuffer(std::size_t s) : data(fftw_alloc_complex(s)), size(s) {
    if (!data) throw Error("FFTW allocation failed");
  }
  ~FftBuffer() { fftw_free(data); }
  FftBuffer(const FftBuffer&) = delete;
  FftBuffer& operator=(const FftBuffer&) = delete;
  cdouble* c() { return reinterpret_cast<cdouble*>(data); }
};

void transform_in_place(FftBuffer& buf, int P, int sign) {
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    const int dims[4] = {P, P, P, P};
    plan = fftw_plan_dft(4, dims, buf.data, buf.data, sign, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  std::lock_guard<std::mutex> lock(planner_mutex());
  fftw_destroy_plan(plan);
}

}  // namespace

GridFunction convolve_grids_fft(const GridFunction& g1, const GridFunction& g2) {
  check_compatible(g1, g2);
  const int n = g1.n, N = g1.points, e = (n + 1) * (n + 1);
  const int P = fft_friendly_size(2 * N - 1);
  const std::size_t PP = std::size_t(P) * P * P * P;
  auto load = [&](const std::vector<cdouble>& src) {
    auto buf = std::make_unique<FftBuffer>(PP);
    std::fill(buf->c(), buf->c() + PP, cdouble(0));
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b)
        for (int c = 0; c < N; ++c)
          for (int d = 0; d < N; ++d)
            buf->c()[((std::size_t(a) * P + b) * P + c) * P + d] = src[((std::size_t(a) * N + b) * N + c) * N + d];
    transform_in_place(*buf, P, FFTW_FORWARD);
    return buf;
  };
  std::vector<std::unique_ptr<FftBuffer>> f1, f2;
  for (int i = 0; i < e; ++i) {
    f1.push_back(load(g1.entries[i]));
    f2.push_back(load(g2.entries[i]));
  }
  std::vector<std::unique_ptr<FftBuffer>> out;
  for (int i = 0; i < e; ++i) out.push_back(std::make_unique<FftBuffer>(PP));
  // Pointwise matrix product F2hat F1hat.
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t idx = 0; idx < std::ptrdiff_t(PP); ++idx)
    for (int i = 0; i <= n; ++i)
      for (int k = 0; k <= n; ++k) {
        cdouble s = 0;
        for (int c = 0; c <= n; ++c) s += f2[i * (n + 1) + c]->c()[idx] * f1[c * (n + 1) + k]->c()[idx];
        out[i * (n + 1) + k]->c()[idx] = s;
      }
  f1.clear();
  f2.clear();
  GridFunction o = output_grid(g1);
  const int M = o.points;
  const double scale = std::pow(g1.h, 4) / double(PP);
  for (int i = 0; i < e; ++i) {
    transform_in_place(*out[i], P, FFTW_BACKWARD);
    auto& dst = o.entries[i];
    const cdouble* src = out[i]->c();
    for (int a = 0; a < M; ++a)
      for (int b = 0; b < M; ++b)
        for (int c = 0; c < M; ++c)
          for (int d = 0; d < M; ++d)
            dst[((std::size_t(a) * M + b) * M + c) * M + d] = scale * src[((std::size_t(a) * P + b) * P + c) * P + d];
    out[i].reset();
  }
  return o;
}

namespace {

EndMatrix direct_point(const GridFunction& g1, const GridFunction& g2, const std::array<int, 4>& m) {
  const int N = g1.points;
  EndMatrix s = EndMatrix::Zero(g1.n + 1, g1.n + 1);
  int lo[4], hi[4];
  for (int a = 0; a < 4; ++a) {
    lo[a] = std::max(0, m[a] - (N - 1));
    hi[a] = std::min(N - 1, m[a]);
  }
  for (int a = lo[0]; a <= hi[0]; ++a)
    for (int b = lo[1]; b <= hi[1]; ++b)
      for (int c = lo[2]; c <= hi[2]; ++c)
        for (int d = lo[3]; d <= hi[3]; ++d)
          s.noalias() += g2.at({m[0] - a, m[1] - b, m[2] - c, m[3] - d}) * g1.at({a, b, c, d});
  return s * std::pow(g1.h, 4);
}

template <bool Parallel>
GridFunction convolve_direct(const GridFunction& g1, const GridFunction& g2) {
  check_compatible(g1, g2);
  GridFunction o = output_grid(g1);
  const int M = o.points, n = g1.n;
  const std::ptrdiff_t total = std::ptrdiff_t(o.size());
  auto body = [&](std::ptrdiff_t idx) {
    std::size_t r = std::size_t(idx);
    std::array<int, 4> m{};
    for (int a = 3; a >= 0; --a) {
      m[a] = int(r % M);
      r /= M;
    }
    const EndMatrix v = direct_point(g1, g2, m);
    for (int i = 0; i <= n; ++i)
      for (int k = 0; k <= n; ++k) o.entries[i * (n + 1) + k][idx] = v(i, k);
  };
  if constexpr (Parallel) {
#pragma omp parallel for schedule(dynamic, 64)
    for (std::ptrdiff_t idx = 0; idx < total; ++idx) body(idx);
  } else {
    for (std::ptrdiff_t idx = 0; idx < total; ++idx) body(idx);
  }
  return o;
}

}  // namespace

GridFunction convolve_grids_direct_serial(const GridFunction& g1, const GridFunction& g2) {
  return convolve_direct<false>(g1, g2);
}

GridFunction convolve_grids_direct_omp(const GridFunction& g1, const GridFunction& g2) {
  return convolve_direct<true>(g1, g2);
}

EndMatrix discrete_fourier_on_ray(const GridFunction& g, double rho) {
  const int n = g.n, N = g.points;
  EndMatrix out = EndMatrix::Zero(n + 1, n + 1);
  // The phase depends on the x2 coordinate only: marginalize the rest first.
  for (int e = 0; e < (n + 1) * (n + 1); ++e) {
    std::vector<cdouble> marginal(N, 0.0);
    const auto& v = g.entries[e];
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b)
        for (int c = 0; c < N; ++c)
          for (int d = 0; d < N; ++d) marginal[c] += v[((std::size_t(a) * N + b) * N + c) * N + d];
    cdouble s = 0;
    for (int c = 0; c < N; ++c) s += marginal[c] * std::polar(1.0, -rho * (g.x0 + g.h * c));
    out(e / (n + 1), e % (n + 1)) = s * std::pow(g.h, 4);
  }
  return out;
}

namespace {

void verify_resolution(const EquivariantFunction& f, const GridFunction& g, const GridSpec& spec, const char* name) {
  const int n = f.n();
  const SpectralFunction exact = forward_transform_exact(f);
  double scale = 0;
  for (int j = 0; j <= n; ++j) scale = std::max(scale, std::abs(exact(j, 0.0)));
  // Checked band [0, pi / 4h]: beyond it the aliased copies of polynomial
  // times Gaussian transforms dominate long before the grid is useless.
  const double band = M_PI / (4 * g.h);
  for (double rho : {0.0, band / 4, band / 2, 3 * band / 4, band}) {
    const EndMatrix d = discrete_fourier_on_ray(g, rho);
    double err = 0;
    for (int i = 0; i <= n; ++i)
      for (int k = 0; k <= n; ++k) {
        const double want = i == k ? exact(i, rho * rho) : 0.0;
        err = std::max(err, std::abs(d(i, k) - want));
      }
    if (err > spec.verify_tol * std::max(scale, 1e-300))
      throw GridResolutionError(std::string(name) + ": grid Fourier sum misses the transform by " +
                                std::to_string(err) + " at rho = " + std::to_string(rho));
  }
}

}  // namespace

GridFunction convolve(const EquivariantFunction& f1, const EquivariantFunction& f2, const GridSpec& spec) {
  if (f1.n() != f2.n()) throw InvalidArgument("convolving functions of different n");
  const GridFunction g1 = sample_on_grid(f1, spec), g2 = sample_on_grid(f2, spec);
  if (spec.verify) {
    verify_resolution(f1, g1, spec, "first factor");
    verify_resolution(f2, g2, spec, "second factor");
  }
  return convolve_grids_fft(g1, g2);
}

}  // namespace gelfand
