#pragma once

#include <complex>
#include <vector>

#include "ffb/errors.hpp"

namespace ffb {

using cplx = std::complex<double>;

// Product of Gamma factors: prod Gamma(numerators) / prod Gamma(denominators).
struct RatioSpec {
  std::vector<cplx> numerators;
  std::vector<cplx> denominators;
};

bool near_nonpositive_integer(cplx z, double tol = 1e-8);

// Principal-branch log Gamma (Lanczos approximation, reflection for Re z < 0.5).
cplx log_gamma(cplx z);

cplx gamma_fn(cplx z);

// Evaluates the RatioSpec in the log domain.  Throws pole_error if any
// argument sits on a Gamma pole.
cplx gamma_ratio(const RatioSpec& spec);

// log G(z), Barnes G.  Returns {-inf, 0} at the zeros z = 0, -1, -2, ...
// Computed from the integral representation of G(1+w) after shifting the
// argument into Re z >= 1 with G(z+1) = Gamma(z) G(z).
cplx log_barnes_g(cplx z);

// prod G(num) / prod G(den) as a value (log-domain accumulation).
cplx barnes_g_ratio(const std::vector<cplx>& num, const std::vector<cplx>& den);

// G(1+z, 1-z-l | 1-z, 1+z+l); equals (sin(pi z)/pi)^l * (-1)^{l(l+1)/2}.
cplx barnes_reduction(cplx z, int ell);

}  // namespace ffb
