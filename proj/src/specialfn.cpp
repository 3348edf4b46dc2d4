#include "ffb/specialfn.hpp"

#include <cmath>
#include <limits>

#include "ffb/quadrature.hpp"

namespace ffb {

namespace {

// Lanczos g = 7, n = 9 coefficients.
const double kLanczos[9] = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

cplx log_gamma_core(cplx z) {
  // Requires Re z >= 0.5.
  z -= 1.0;
  cplx x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + static_cast<double>(i));
  cplx t = z + 7.5;
  return 0.5 * std::log(2.0 * M_PI) + (z + 0.5) * std::log(t) - t + std::log(x);
}

}  // namespace

bool near_nonpositive_integer(cplx z, double tol) {
  if (z.real() > 0.5) return false;
  double r = std::round(z.real());
  return r <= 0.0 && std::abs(z.real() - r) <= tol && std::abs(z.imag()) <= tol;
}

cplx log_gamma(cplx z) {
  if (near_nonpositive_integer(z, 0.0)) throw pole_error("log_gamma: pole at nonpositive integer");
  if (z.real() < 0.5) {
    // Reflection: log Gamma(z) = log(pi / sin(pi z)) - log Gamma(1 - z).
    return std::log(M_PI) - std::log(std::sin(M_PI * z)) - log_gamma_core(1.0 - z);
  }
  return log_gamma_core(z);
}

cplx gamma_fn(cplx z) { return std::exp(log_gamma(z)); }

cplx gamma_ratio(const RatioSpec& spec) {
  cplx acc = 0.0;
  for (const cplx& v : spec.numerators) {
    if (near_nonpositive_integer(v)) throw pole_error("gamma_ratio: numerator at Gamma pole");
    acc += log_gamma(v);
  }
  for (const cplx& v : spec.denominators) {
    if (near_nonpositive_integer(v)) throw pole_error("gamma_ratio: denominator at Gamma pole");
    acc -= log_gamma(v);
  }
  return std::exp(acc);
}

cplx log_barnes_g(cplx z) {
  if (near_nonpositive_integer(z, 0.0)) {
    return cplx(-std::numeric_limits<double>::infinity(), 0.0);
  }
  // Shift into Re z >= 1 with log G(z) = log G(z+1) - log Gamma(z).
  cplx shift = 0.0;
  while (z.real() < 1.0) {
    shift -= log_gamma(z);
    z += 1.0;
  }
  const cplx w = z - 1.0;
  if (w == cplx(0.0)) return shift;
  // log G(1+w) = (w/2) log(2 pi) + w log Gamma(1+w) - w(1+w)/2
  //              - int_0^w log Gamma(1+s) ds,
  // the integral running along the straight segment (Re s >= 0 throughout).
  cplx integral = integrate_segment([](cplx s) { return log_gamma(1.0 + s); }, w);
  cplx lg = 0.5 * w * std::log(2.0 * M_PI) + w * log_gamma(1.0 + w) - 0.5 * w * (1.0 + w) - integral;
  return lg + shift;
}

cplx barnes_g_ratio(const std::vector<cplx>& num, const std::vector<cplx>& den) {
  cplx acc = 0.0;
  for (const cplx& v : num) {
    cplx lg = log_barnes_g(v);
    if (std::isinf(lg.real())) return 0.0;  // zero of G upstairs
    acc += lg;
  }
  for (const cplx& v : den) {
    cplx lg = log_barnes_g(v);
    if (std::isinf(lg.real())) throw pole_error("barnes_g_ratio: G zero in denominator");
    acc -= lg;
  }
  return std::exp(acc);
}

cplx barnes_reduction(cplx z, int ell) {
  const cplx num1 = 1.0 + z, num2 = 1.0 - z - static_cast<double>(ell);
  const cplx den1 = 1.0 - z, den2 = 1.0 + z + static_cast<double>(ell);
  if (ell < 0 && (near_nonpositive_integer(den2) || near_nonpositive_integer(den1))) {
    throw pole_error("barnes_reduction: integer z with ell < 0");
  }
  return barnes_g_ratio({num1, num2}, {den1, den2});
}

}  // namespace ffb
