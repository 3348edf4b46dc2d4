#include "ffb/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace ffb {

GaussRule gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  GaussRule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  const double eps = 1e-15;
  int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Chebyshev-like initial guess for the i-th root of P_n.
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < eps) break;
    }
    r.nodes[i] = -x;
    r.nodes[n - 1 - i] = x;
    double w = 2.0 / ((1.0 - x * x) * pp * pp);
    r.weights[i] = w;
    r.weights[n - 1 - i] = w;
  }
  return r;
}

GaussRule gauss_legendre(int n, double a, double b) {
  GaussRule r = gauss_legendre(n);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  for (int i = 0; i < n; ++i) {
    r.nodes[i] = mid + half * r.nodes[i];
    r.weights[i] *= half;
  }
  return r;
}

namespace {

// 20-point rule cached for the adaptive scheme.
const GaussRule& rule20() {
  static const GaussRule r = gauss_legendre(20);
  return r;
}

cplx gl20_on(const std::function<cplx(cplx)>& f, cplx w, double t0, double t1) {
  const GaussRule& r = rule20();
  const double mid = 0.5 * (t0 + t1), half = 0.5 * (t1 - t0);
  cplx acc = 0.0;
  for (int i = 0; i < 20; ++i) {
    double t = mid + half * r.nodes[i];
    acc += r.weights[i] * f(t * w);
  }
  return acc * half * w;
}

cplx adapt(const std::function<cplx(cplx)>& f, cplx w, double t0, double t1, cplx whole,
           double tol, int depth) {
  double tm = 0.5 * (t0 + t1);
  cplx left = gl20_on(f, w, t0, tm);
  cplx right = gl20_on(f, w, tm, t1);
  if (std::abs(left + right - whole) <= tol || depth > 24) return left + right;
  return adapt(f, w, t0, tm, left, 0.5 * tol, depth + 1) +
         adapt(f, w, tm, t1, right, 0.5 * tol, depth + 1);
}

}  // namespace

cplx integrate_segment(const std::function<cplx(cplx)>& f, cplx w, double tol) {
  if (w == cplx(0.0)) return 0.0;
  cplx whole = gl20_on(f, w, 0.0, 1.0);
  return adapt(f, w, 0.0, 1.0, whole, tol * (1.0 + std::abs(whole)), 0);
}

std::vector<double> barycentric_weights(const std::vector<double>& nodes) {
  const int n = static_cast<int>(nodes.size());
  std::vector<double> w(n, 1.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j != i) w[i] /= (nodes[i] - nodes[j]);
    }
  }
  // Rescale to avoid under/overflow for larger n.
  double mx = 0.0;
  for (double v : w) mx = std::max(mx, std::abs(v));
  for (double& v : w) v /= mx;
  return w;
}

double barycentric_eval(const std::vector<double>& nodes, const std::vector<double>& bw,
                        const std::vector<double>& values, double x) {
  double num = 0.0, den = 0.0;
  for (size_t i = 0; i < nodes.size(); ++i) {
    double d = x - nodes[i];
    if (d == 0.0) return values[i];
    double c = bw[i] / d;
    num += c * values[i];
    den += c;
  }
  return num / den;
}

}  // namespace ffb
