#pragma once

#include <complex>
#include <functional>
#include <utility>
#include <vector>

#include "ffb/errors.hpp"

namespace ffb {

// Anisotropy Delta = cos(zeta), Fermi boundary q, quadrature size.
struct XxzParams {
  double zeta = 0.0;
  double q = 1.0;
  int grid_size = 64;
  double h_field = 0.0;  // unused metadata; q is the primary input
};

void validate(const XxzParams& params);

// Bare phase theta(x) = i ln( sinh(i zeta + x) / sinh(i zeta - x) ),
// principal branch, real odd smooth; theta_prime is its derivative.
double xxz_theta(double zeta, double x);
double xxz_theta_prime(double zeta, double x);

// Solution of the three linear integral equations on [-q, q]:
//   Z + K Z = 1,
//   phi(.,nu) + K phi(.,nu) = theta(.-nu)/(2 pi),
//   p + K p + boundary terms = theta_{zeta/2}, after one integration by parts.
class XxzSolution {
 public:
  XxzSolution(const XxzParams& params);

  const XxzParams& params() const { return params_; }
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }

  double Z(double lambda) const;
  double phi(double lambda, double nu) const;
  double p(double lambda) const;
  double p_prime(double lambda) const;
  double p_F() const { return pF_; }
  double alpha_plus() const { return alpha_plus_; }
  double alpha_minus() const { return alpha_minus_; }
  double density() const { return density_; }       // D = p(q)/pi
  double xi(double lambda) const;                   // p/(2 pi) + D/2
  double xi_prime(double lambda) const;

  // Residual of the discretized equations at an off-grid collocation point.
  double residual_Z(double lambda) const;
  double residual_phi(double lambda, double nu) const;
  double residual_p(double lambda) const;

 private:
  std::vector<double> solve_linear(const std::vector<double>& rhs) const;
  std::vector<double> phi_nodes(double nu) const;

  XxzParams params_;
  std::vector<double> nodes_, weights_;
  std::vector<std::vector<double>> lu_;  // factored Nystrom matrix
  std::vector<int> piv_;
  std::vector<double> z_nodes_, p_nodes_;
  mutable std::vector<std::pair<double, std::vector<double>>> phi_cache_;
  double pq_ = 0.0, pF_ = 0.0, alpha_plus_ = 0.0, alpha_minus_ = 0.0, density_ = 0.0;
};

XxzSolution solve_lieb(const XxzParams& params);

// F(lambda) = s (phi(lambda,q) - Z(lambda)/2) + sum [phi(lambda,mu_p) - phi(lambda,mu_h)].
std::function<double(double)> shift_function(const XxzSolution& sol, int s,
                                             const std::vector<std::pair<double, double>>& excitations);

struct RelativeNu {
  double nu_at_q = 0.0;
  double nu_at_minus_q = 0.0;
  double identity_residual_q = 0.0;        // nu(q)+k-o - (k Z(q) - o/(2 Z(q)))
  double identity_residual_minus_q = 0.0;  // nu(-q)+k - (k Z(q) + o/(2 Z(q)))
};

// nu_s(lambda) = o_s (Z/2 - phi(lambda,q)) + kappa (Z - 1), with the exact
// boundary identities checked against the dressed charge.
RelativeNu relative_nu(const XxzSolution& sol, int o_s, int kappa, double tol = 1e-8);

double scaling_dimension(double nu);
std::complex<double> scaling_dimension(std::complex<double> nu);

struct LuttingerReport {
  double vK = 0.0;        // F_umkp(-q)
  double v_over_K = 0.0;  // F_spn(-q)
  double nu_at_minus_q = 0.0;
  double nu_at_q = 0.0;
  double reflection_residual = 0.0;  // nu^{(k)}(q) - (o_r - nu^{(-k)}(-q))
};

// Umklapp and spin shift-function boundary data and the reflection check;
// the reflected transition carries the opposite umklapp number.
LuttingerReport luttinger_check(const XxzSolution& sol, int o_r, int kappa, double tol = 1e-8);

}  // namespace ffb
