#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace ffb {

using cplx = std::complex<double>;

// Nodes and weights on [-1,1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss-Legendre rule of order n (Newton iteration on Legendre polynomials).
GaussRule gauss_legendre(int n);

// Rule mapped to [a,b].
GaussRule gauss_legendre(int n, double a, double b);

// Adaptive Gauss-Legendre for a complex-valued integrand along the straight
// segment from 0 to w, parametrised as f(t), t in [0,1], times |segment| * w.
cplx integrate_segment(const std::function<cplx(cplx)>& f, cplx w, double tol = 1e-13);

// Barycentric Lagrange interpolation weights for arbitrary distinct nodes.
std::vector<double> barycentric_weights(const std::vector<double>& nodes);

double barycentric_eval(const std::vector<double>& nodes, const std::vector<double>& bw,
                        const std::vector<double>& values, double x);

}  // namespace ffb
