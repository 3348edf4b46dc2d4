#pragma once

#include <complex>

#include "ffb/errors.hpp"

namespace ffb {

using cplx = std::complex<double>;

// Discretization of the nested circle contours, radii relative to |omega|.
struct ContourSpec {
  double outer_radius = 2.0;
  double inner_radius = 0.5;
  int points_per_circle = 512;
};

void validate(const ContourSpec& spec);

// I1_{ht}(nu|omega) = sin(pi nu) omega^{h-t} / (pi (t-h+nu)) *
//                     Gamma(h-nu, t+nu | h, t).
cplx I1_closed(int h, int t, cplx nu, cplx omega);

// I2_{hp}(nu|omega) = sin(pi nu) omega^{1-h-p} / (pi (h+p-1)) *
//                     Gamma(h+nu, p-nu | h, p).
cplx I2_closed(int h, int p, cplx nu, cplx omega);

// Plain double trapezoid quadrature on nested circles, spectral accuracy.
// Radii must respect |zeta| > |omega| > |tau| for I1 and
// |omega| > |zeta| > |tau| for I2.
cplx I1_quadrature(int h, int t, cplx nu, cplx omega, const ContourSpec& spec = {});
cplx I2_quadrature(int h, int p, cplx nu, cplx omega, const ContourSpec& spec = {0.5, 0.25, 512});

// Itilde1(nu) = I1(-nu); Itilde2_{ph}(nu) = omega^{2(p+h-1)} I2_{hp}(-nu).
cplx tilde_I1(int h, int t, cplx nu, cplx omega);
cplx tilde_I2(int p, int h, cplx nu, cplx omega);

// Direct quadrature of the Itilde2 display on |tau| > |zeta| > |omega|.
cplx tilde_I2_quadrature(int p, int h, cplx nu, cplx omega,
                         const ContourSpec& spec = {4.0, 2.0, 512});

}  // namespace ffb
