#include "ffb/integrals.hpp"

#include <cmath>
#include <functional>

#include "ffb/specialfn.hpp"

namespace ffb {

namespace {

cplx ipow(cplx base, long e) {
  if (e == 0) return 1.0;
  if (e < 0) return 1.0 / ipow(base, -e);
  cplx acc = 1.0, b = base;
  while (e) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

// Double trapezoid over zeta-circle radius R1 and tau-circle radius R2 of
// f(zeta, tau) d zeta d tau / (2 i pi)^2.
cplx circle_quadrature(double R1, double R2, int m,
                       const std::function<cplx(cplx, cplx)>& f) {
  cplx acc = 0.0;
  for (int a = 0; a < m; ++a) {
    double ta = 2.0 * M_PI * a / m;
    cplx zeta = R1 * std::exp(cplx(0.0, ta));
    cplx inner = 0.0;
    for (int b = 0; b < m; ++b) {
      double tb = 2.0 * M_PI * b / m;
      cplx tau = R2 * std::exp(cplx(0.0, tb));
      inner += f(zeta, tau) * tau;
    }
    acc += inner * zeta;
  }
  return acc / static_cast<double>(m) / static_cast<double>(m);
}

cplx principal_pow(cplx base, cplx expo) { return std::exp(expo * std::log(base)); }

}  // namespace

void validate(const ContourSpec& spec) {
  if (!(spec.outer_radius > spec.inner_radius && spec.inner_radius > 0.0)) {
    throw ordering_error("ContourSpec: need outer_radius > inner_radius > 0");
  }
  if (spec.points_per_circle < 64) {
    throw std::invalid_argument("ContourSpec: points_per_circle must be >= 64");
  }
}

cplx I1_closed(int h, int t, cplx nu, cplx omega) {
  if (h < 1 || t < 1) throw std::invalid_argument("I1_closed: indices must be >= 1");
  cplx den = static_cast<double>(t) - static_cast<double>(h) + nu;
  if (std::abs(den) < 1e-12) throw pole_error("I1_closed: t - h + nu = 0");
  RatioSpec rs;
  rs.numerators = {static_cast<double>(h) - nu, static_cast<double>(t) + nu};
  rs.denominators = {cplx(static_cast<double>(h)), cplx(static_cast<double>(t))};
  return std::sin(M_PI * nu) * ipow(omega, h - t) / (M_PI * den) * gamma_ratio(rs);
}

cplx I2_closed(int h, int p, cplx nu, cplx omega) {
  if (h < 1 || p < 1) throw std::invalid_argument("I2_closed: indices must be >= 1");
  RatioSpec rs;
  rs.numerators = {static_cast<double>(h) + nu, static_cast<double>(p) - nu};
  rs.denominators = {cplx(static_cast<double>(h)), cplx(static_cast<double>(p))};
  return std::sin(M_PI * nu) * ipow(omega, 1 - h - p) / (M_PI * (h + p - 1.0)) * gamma_ratio(rs);
}

cplx I1_quadrature(int h, int t, cplx nu, cplx omega, const ContourSpec& spec) {
  validate(spec);
  if (!(spec.outer_radius > 1.0 && spec.inner_radius < 1.0)) {
    throw ordering_error("I1_quadrature: need |zeta| > |omega| > |tau|");
  }
  const double R1 = spec.outer_radius * std::abs(omega);
  const double R2 = spec.inner_radius * std::abs(omega);
  return circle_quadrature(R1, R2, spec.points_per_circle, [&](cplx zeta, cplx tau) {
    return ipow(tau, -t) * ipow(zeta, h - 1) / (zeta - tau) *
           principal_pow(1.0 - omega / zeta, nu) / principal_pow(1.0 - tau / omega, nu);
  });
}

cplx I2_quadrature(int h, int p, cplx nu, cplx omega, const ContourSpec& spec) {
  validate(spec);
  if (!(spec.outer_radius < 1.0)) {
    throw ordering_error("I2_quadrature: need |omega| > |zeta| > |tau|");
  }
  const double R1 = spec.outer_radius * std::abs(omega);
  const double R2 = spec.inner_radius * std::abs(omega);
  return circle_quadrature(R1, R2, spec.points_per_circle, [&](cplx zeta, cplx tau) {
    return ipow(tau, -p) * ipow(zeta, -h) / (zeta - tau) *
           principal_pow(1.0 - tau / omega, nu) / principal_pow(1.0 - zeta / omega, nu);
  });
}

cplx tilde_I1(int h, int t, cplx nu, cplx omega) { return I1_closed(h, t, -nu, omega); }

cplx tilde_I2(int p, int h, cplx nu, cplx omega) {
  return ipow(omega, 2 * (p + h - 1)) * I2_closed(h, p, -nu, omega);
}

cplx tilde_I2_quadrature(int p, int h, cplx nu, cplx omega, const ContourSpec& spec) {
  validate(spec);
  if (!(spec.inner_radius > 1.0)) {
    throw ordering_error("tilde_I2_quadrature: need |tau| > |zeta| > |omega|");
  }
  const double Rtau = spec.outer_radius * std::abs(omega);
  const double Rzeta = spec.inner_radius * std::abs(omega);
  // Outer variable is tau here.
  return circle_quadrature(Rtau, Rzeta, spec.points_per_circle, [&](cplx tau, cplx zeta) {
    return ipow(tau, p - 1) * ipow(zeta, h - 1) / (tau - zeta) *
           principal_pow(1.0 - omega / zeta, nu) / principal_pow(1.0 - omega / tau, nu);
  });
}

}  // namespace ffb
