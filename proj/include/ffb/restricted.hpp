#pragma once

#include <string>
#include <vector>

#include "ffb/closedform.hpp"
#include "ffb/current.hpp"
#include "ffb/fock.hpp"

namespace ffb {

// Chain of vertex insertions at positions z_1, ..., z_r with parameters
// nu_s and intermediate charge levels ell_1 ... ell_{r-1} (ell_0 = ell_r = 0).
// kappa_s = ell_{s-1} - ell_s, so sum kappa_s = 0 automatically.
struct VertexChain {
  std::vector<cplx> nus;
  std::vector<cplx> zs;    // strictly decreasing moduli
  std::vector<int> ells;   // size r-1

  int order() const { return static_cast<int>(nus.size()); }
  int ell(int s) const {  // s in [0, r]
    if (s <= 0 || s >= order()) return 0;
    return ells[s - 1];
  }
  int kappa(int s) const { return ell(s - 1) - ell(s); }  // s in [1, r]
};

void validate(const VertexChain& chain);

// R(J | nu, eta; z): the one-slot kernel pairing consecutive vertices.
cplx r_kernel(const ParticleHoleSet& j, cplx nu, cplx eta, cplx z);

struct TruncatedSum {
  cplx value = 0.0;
  double last_shell = 0.0;       // magnitude of the last degree shell
  double tail_estimate = 0.0;    // geometric bound from the last two shells
  bool converged = true;
  std::string warning;
};

// LHS of the multi-point summation identity, truncated per intermediate slot
// to sets of degree <= max_degree; shells accumulated in increasing total
// degree.  Sets warning if the last shell magnitude exceeds tol.
TruncatedSum restricted_sum_truncated(const VertexChain& chain, int max_degree,
                                      double tol = 1e-9);

// Closed-form RHS: ratio powers, Barnes G ratios and the pair product.
cplx restricted_sum_closed(const VertexChain& chain);

// <0| V(nu_1,kappa_1|z_1) ... V(nu_r,kappa_r|z_r) |0> =
//     prod_{b>a} (1 - z_b/z_a)^{(nu_a+kappa_a)(nu_b+kappa_b)}.
cplx vertex_product(const VertexChain& chain);

// Same pair product with explicit exponent parameters x_s; used for edge
// factors where the exponent is nu_s + kappa_s with externally supplied data.
cplx pair_product(const std::vector<cplx>& xs, const std::vector<cplx>& zs);

// The constant bridging the vertex product and the restricted sum:
// vertex_product * bridge == restricted_sum_closed.
cplx chain_bridge_constant(const VertexChain& chain);

// Scalar of the current-exponent exchange relation:
// e^{J_+(nu,omega)} e^{J_-(mu,z)} = (1 - z/omega)^{mu nu} e^{J_-} e^{J_+}.
cplx exchange_JplusJminus(cplx nu, cplx omega, cplx mu, cplx z);

// Insertion-route evaluation of <0| V_1 V_2 |0> over one resolution of
// identity, truncated by intermediate degree.
cplx vertex_pair_insertion(const VertexChain& chain, int max_degree);

// Insertion-route evaluation of <0| V_1 V_2 V_3 |0> with a single resolution
// of identity (the left pair merged through the exchange relation).
cplx vertex_triple_insertion(const VertexChain& chain, int max_degree);

}  // namespace ffb
