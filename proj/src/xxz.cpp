#include "ffb/xxz.hpp"

#include <cmath>

#include "ffb/quadrature.hpp"

namespace ffb {

namespace {

double theta_second(double zeta, double x) {
  double s = std::sinh(x), c = std::cosh(x);
  double d = s * s + std::sin(zeta) * std::sin(zeta);
  return -std::sin(2.0 * zeta) * 2.0 * s * c / (d * d);
}

}  // namespace

void validate(const XxzParams& params) {
  if (!(params.zeta > 1e-3 && params.zeta < M_PI - 1e-3)) {
    throw std::invalid_argument("XxzParams: zeta must lie in (0, pi), away from the endpoints");
  }
  if (!(params.q > 0.0)) throw std::invalid_argument("XxzParams: q must be positive");
  if (params.grid_size < 16) throw std::invalid_argument("XxzParams: grid_size must be >= 16");
}

double xxz_theta(double zeta, double x) {
  std::complex<double> num = std::sinh(std::complex<double>(x, zeta));
  std::complex<double> den = std::sinh(std::complex<double>(-x, zeta));
  return -std::arg(num / den);
}

double xxz_theta_prime(double zeta, double x) {
  return std::sin(2.0 * zeta) / (std::sinh(x) * std::sinh(x) + std::sin(zeta) * std::sin(zeta));
}

XxzSolution::XxzSolution(const XxzParams& params) : params_(params) {
  validate(params);
  const int n = params.grid_size;
  const double q = params.q;
  const double zeta = params.zeta;
  GaussRule rule = gauss_legendre(n, -q, q);
  nodes_ = rule.nodes;
  weights_ = rule.weights;

  // Nystrom matrix A = I + K, K_ij = theta'(x_i - x_j) w_j / (2 pi).
  lu_.assign(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      lu_[i][j] = (i == j ? 1.0 : 0.0) +
                  xxz_theta_prime(zeta, nodes_[i] - nodes_[j]) * weights_[j] / (2.0 * M_PI);
    }
  }
  // LU factorization with partial pivoting.
  piv_.resize(n);
  for (int c = 0; c < n; ++c) {
    int p = c;
    for (int r = c + 1; r < n; ++r)
      if (std::abs(lu_[r][c]) > std::abs(lu_[p][c])) p = r;
    if (std::abs(lu_[p][c]) < 1e-14) throw singular_kernel("XxzSolution: Nystrom matrix singular");
    piv_[c] = p;
    if (p != c) std::swap(lu_[p], lu_[c]);
    for (int r = c + 1; r < n; ++r) {
      lu_[r][c] /= lu_[c][c];
      for (int cc = c + 1; cc < n; ++cc) lu_[r][cc] -= lu_[r][c] * lu_[c][cc];
    }
  }

  // Dressed charge.
  z_nodes_ = solve_linear(std::vector<double>(n, 1.0));

  // Dressed momentum after one integration by parts:
  //   p(l) + (1/2pi) int theta'(l-m) p(m) dm + (p(q)/2pi)[theta(l-q)+theta(l+q)] = p0(l),
  // using p(-q) = -p(q).  Solve u = A^{-1} p0 and w = A^{-1} of the boundary
  // profile, then fix p(q) by self-consistency.
  std::vector<double> p0(n), bprof(n);
  for (int i = 0; i < n; ++i) {
    p0[i] = xxz_theta(zeta / 2.0, nodes_[i]);
    bprof[i] = -(xxz_theta(zeta, nodes_[i] - q) + xxz_theta(zeta, nodes_[i] + q)) / (2.0 * M_PI);
  }
  std::vector<double> u = solve_linear(p0);
  std::vector<double> w = solve_linear(bprof);
  auto nystrom_eval = [&](const std::vector<double>& f, double lam, auto driving) {
    double acc = driving(lam);
    for (int j = 0; j < n; ++j) {
      acc -= xxz_theta_prime(zeta, lam - nodes_[j]) * f[j] * weights_[j] / (2.0 * M_PI);
    }
    return acc;
  };
  double uq = nystrom_eval(u, q, [&](double l) { return xxz_theta(zeta / 2.0, l); });
  double wq = nystrom_eval(w, q, [&](double l) {
    return -(xxz_theta(zeta, l - q) + xxz_theta(zeta, l + q)) / (2.0 * M_PI);
  });
  if (std::abs(1.0 - wq) < 1e-12) throw singular_kernel("XxzSolution: boundary self-consistency singular");
  pq_ = uq / (1.0 - wq);
  p_nodes_.resize(n);
  for (int i = 0; i < n; ++i) p_nodes_[i] = u[i] + pq_ * w[i];
  pF_ = pq_;
  density_ = pq_ / M_PI;
  alpha_plus_ = p_prime(q) / (2.0 * M_PI) / xi_prime(q);
  alpha_minus_ = p_prime(-q) / (2.0 * M_PI) / xi_prime(-q);
}

std::vector<double> XxzSolution::solve_linear(const std::vector<double>& rhs) const {
  const int n = static_cast<int>(rhs.size());
  std::vector<double> x = rhs;
  for (int c = 0; c < n; ++c) {
    if (piv_[c] != c) std::swap(x[piv_[c]], x[c]);
    for (int r = c + 1; r < n; ++r) x[r] -= lu_[r][c] * x[c];
  }
  for (int c = n - 1; c >= 0; --c) {
    for (int cc = c + 1; cc < n; ++cc) x[c] -= lu_[c][cc] * x[cc];
    x[c] /= lu_[c][c];
  }
  return x;
}

std::vector<double> XxzSolution::phi_nodes(double nu) const {
  for (const auto& [key, vals] : phi_cache_) {
    if (key == nu) return vals;
  }
  const int n = params_.grid_size;
  std::vector<double> rhs(n);
  for (int i = 0; i < n; ++i) rhs[i] = xxz_theta(params_.zeta, nodes_[i] - nu) / (2.0 * M_PI);
  auto sol = solve_linear(rhs);
  phi_cache_.emplace_back(nu, sol);
  return sol;
}

double XxzSolution::Z(double lambda) const {
  double acc = 1.0;
  for (size_t j = 0; j < nodes_.size(); ++j) {
    acc -= xxz_theta_prime(params_.zeta, lambda - nodes_[j]) * z_nodes_[j] * weights_[j] / (2.0 * M_PI);
  }
  return acc;
}

double XxzSolution::phi(double lambda, double nu) const {
  auto f = phi_nodes(nu);
  double acc = xxz_theta(params_.zeta, lambda - nu) / (2.0 * M_PI);
  for (size_t j = 0; j < nodes_.size(); ++j) {
    acc -= xxz_theta_prime(params_.zeta, lambda - nodes_[j]) * f[j] * weights_[j] / (2.0 * M_PI);
  }
  return acc;
}

double XxzSolution::p(double lambda) const {
  const double q = params_.q, zeta = params_.zeta;
  double acc = xxz_theta(zeta / 2.0, lambda) -
               pq_ * (xxz_theta(zeta, lambda - q) + xxz_theta(zeta, lambda + q)) / (2.0 * M_PI);
  for (size_t j = 0; j < nodes_.size(); ++j) {
    acc -= xxz_theta_prime(zeta, lambda - nodes_[j]) * p_nodes_[j] * weights_[j] / (2.0 * M_PI);
  }
  return acc;
}

double XxzSolution::p_prime(double lambda) const {
  const double q = params_.q, zeta = params_.zeta;
  double acc = xxz_theta_prime(zeta / 2.0, lambda) -
               pq_ * (xxz_theta_prime(zeta, lambda - q) + xxz_theta_prime(zeta, lambda + q)) / (2.0 * M_PI);
  for (size_t j = 0; j < nodes_.size(); ++j) {
    acc -= theta_second(zeta, lambda - nodes_[j]) * p_nodes_[j] * weights_[j] / (2.0 * M_PI);
  }
  return acc;
}

double XxzSolution::xi(double lambda) const { return p(lambda) / (2.0 * M_PI) + density_ / 2.0; }

double XxzSolution::xi_prime(double lambda) const { return p_prime(lambda) / (2.0 * M_PI); }

double XxzSolution::residual_Z(double lambda) const {
  // Plug the interpolated solution back into the equation.
  double integral = 0.0;
  for (size_t j = 0; j < nodes_.size(); ++j) {
    integral += xxz_theta_prime(params_.zeta, lambda - nodes_[j]) * z_nodes_[j] * weights_[j];
  }
  return Z(lambda) + integral / (2.0 * M_PI) - 1.0;
}

double XxzSolution::residual_phi(double lambda, double nu) const {
  auto f = phi_nodes(nu);
  double integral = 0.0;
  for (size_t j = 0; j < nodes_.size(); ++j) {
    integral += xxz_theta_prime(params_.zeta, lambda - nodes_[j]) * f[j] * weights_[j];
  }
  return phi(lambda, nu) + integral / (2.0 * M_PI) - xxz_theta(params_.zeta, lambda - nu) / (2.0 * M_PI);
}

double XxzSolution::residual_p(double lambda) const {
  const double q = params_.q, zeta = params_.zeta;
  double integral = 0.0;
  for (size_t j = 0; j < nodes_.size(); ++j) {
    integral += xxz_theta_prime(zeta, lambda - nodes_[j]) * p_nodes_[j] * weights_[j];
  }
  return p(lambda) + integral / (2.0 * M_PI) +
         pq_ * (xxz_theta(zeta, lambda - q) + xxz_theta(zeta, lambda + q)) / (2.0 * M_PI) -
         xxz_theta(zeta / 2.0, lambda);
}

XxzSolution solve_lieb(const XxzParams& params) { return XxzSolution(params); }

std::function<double(double)> shift_function(
    const XxzSolution& sol, int s, const std::vector<std::pair<double, double>>& excitations) {
  const double q = sol.params().q;
  const double range = 1.5 * q;
  return [&sol, s, excitations, q, range](double lambda) {
    if (std::abs(lambda) > range) throw range_error("shift_function: lambda outside extended grid");
    double val = s * (sol.phi(lambda, q) - sol.Z(lambda) / 2.0);
    for (const auto& [mp, mh] : excitations) {
      val += sol.phi(lambda, mp) - sol.phi(lambda, mh);
    }
    return val;
  };
}

RelativeNu relative_nu(const XxzSolution& sol, int o_s, int kappa, double tol) {
  const double q = sol.params().q;
  const double Zq = sol.Z(q);
  auto nu = [&](double lam) {
    return o_s * (sol.Z(lam) / 2.0 - sol.phi(lam, q)) + kappa * (sol.Z(lam) - 1.0);
  };
  RelativeNu out;
  out.nu_at_q = nu(q);
  out.nu_at_minus_q = nu(-q);
  out.identity_residual_q = out.nu_at_q + kappa - o_s - (kappa * Zq - o_s / (2.0 * Zq));
  out.identity_residual_minus_q = out.nu_at_minus_q + kappa - (kappa * Zq + o_s / (2.0 * Zq));
  if (std::abs(out.identity_residual_q) > tol || std::abs(out.identity_residual_minus_q) > tol) {
    throw identity_violation("relative_nu: dressed-charge boundary identity violated",
                             std::max(std::abs(out.identity_residual_q),
                                      std::abs(out.identity_residual_minus_q)));
  }
  return out;
}

double scaling_dimension(double nu) { return nu * nu / 2.0; }
std::complex<double> scaling_dimension(std::complex<double> nu) { return nu * nu / 2.0; }

LuttingerReport luttinger_check(const XxzSolution& sol, int o_r, int kappa, double tol) {
  const double q = sol.params().q;
  auto F_umkp = shift_function(sol, 0, {{q, -q}});
  auto F_spn = shift_function(sol, 1, {});
  LuttingerReport rep;
  rep.vK = F_umkp(-q);
  rep.v_over_K = F_spn(-q);
  auto nu_of = [&](int kap, double lam) { return kap * F_umkp(lam) - o_r * F_spn(lam); };
  rep.nu_at_minus_q = nu_of(kappa, -q);
  rep.nu_at_q = nu_of(kappa, q);
  // Reflecting the Fermi surface reverses the umklapp number.
  rep.reflection_residual = rep.nu_at_q - (o_r - nu_of(-kappa, -q));
  if (std::abs(rep.reflection_residual) > tol) {
    throw identity_violation("luttinger_check: reflection identity violated",
                             std::abs(rep.reflection_residual));
  }
  return rep;
}

}  // namespace ffb
