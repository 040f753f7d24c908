#include "gelfand/quadrature.hpp"

#include <cmath>

#include "gelfand/errors.hpp"

namespace gelfand {

GaussRule gauss_legendre(int n, double a, double b) {
  if (n < 1) throw InvalidArgument("Gauss-Legendre needs at least one node");
  GaussRule g;
  g.x.resize(n);
  g.w.resize(n);
  const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 1;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1;
      dp = n * (x * p1 - p0) / (x * x - 1);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    {
      // Recompute the derivative at the converged node for the weight.
      double p0 = 1, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1);
    }
    double w = 2 / ((1 - x * x) * dp * dp);
    g.x[i] = mid - half * x;
    g.x[n - 1 - i] = mid + half * x;
    g.w[i] = g.w[n - 1 - i] = half * w;
  }
  if (n % 2 == 1) g.x[n / 2] = mid;
  return g;
}

GaussRule radial_rule(double R, int panels, int per_panel) {
  if (R <= 0 || panels < 1) throw InvalidArgument("radial rule needs R > 0 and a panel");
  GaussRule base = gauss_legendre(per_panel, 0, 1);
  GaussRule g;
  const double h = R / panels;
  for (int p = 0; p < panels; ++p)
    for (int i = 0; i < per_panel; ++i) {
      g.x.push_back((p + base.x[i]) * h);
      g.w.push_back(base.w[i] * h);
    }
  return g;
}

SphereQuadrature sphere_quadrature(int n_u, int n_alpha, int n_beta) {
  if (n_u < 1 || n_alpha < 1 || n_beta < 1) throw InvalidArgument("empty sphere rule");
  SphereQuadrature q;
  q.n_u = n_u;
  q.n_alpha = n_alpha;
  q.n_beta = n_beta;
  GaussRule gu = gauss_legendre(n_u, 0, 1);
  q.nodes.reserve(std::size_t(n_u) * n_alpha * n_beta);
  q.weights.reserve(q.nodes.capacity());
  for (int a = 0; a < n_u; ++a) {
    const double r1 = std::sqrt(gu.x[a]), r2 = std::sqrt(1 - gu.x[a]);
    for (int i = 0; i < n_alpha; ++i) {
      const cdouble e1 = std::polar(r1, 2 * M_PI * i / n_alpha);
      for (int k = 0; k < n_beta; ++k) {
        q.nodes.push_back({e1, std::polar(r2, 2 * M_PI * k / n_beta)});
        q.weights.push_back(gu.w[a] / (double(n_alpha) * n_beta));
      }
    }
  }
  return q;
}

SphereQuadrature sphere_quadrature(int order) {
  if (order < 1) throw InvalidArgument("sphere quadrature order must be >= 1");
  SphereQuadrature q = sphere_quadrature((order + 2) / 2, order + 1, order + 1);
  q.order = order;
  return q;
}

double sphere_moment(int a, int b, int c, int d) {
  if (a != c || b != d) return 0;
  // int u^a (1-u)^b du = a! b! / (a+b+1)!
  double r = 1;
  for (int i = 1; i <= b; ++i) r *= double(i) / (a + i);
  return r / (a + b + 1);
}

}  // namespace gelfand
