#pragma once

#include <vector>

#include "ffb/current.hpp"
#include "ffb/fock.hpp"
#include "ffb/specialfn.hpp"

namespace ffb {

// Rejects nu within 1e-8 of an integer where sin(pi nu) would vanish.
void require_generic_nu(cplx nu);

// Double product pairing the two sets; poles reported with the offending pair.
cplx varpi(const ParticleHoleSet& j1, const ParticleHoleSet& j2, cplx nu);

// Single-set product D(J | nu, omega): sin, omega powers, Gamma ratios,
// Vandermonde and Cauchy factors.
cplx dee(const ParticleHoleSet& j, cplx nu, cplx omega);

// Full discrete form factor F(J1; J2 | nu, omega).
cplx discrete_ff(const ParticleHoleSet& j1, const ParticleHoleSet& j2, cplx nu, cplx omega);

// Closed form of <J1| e^{J_-} e^{J_+} |J2>: charge delta times discrete_ff.
cplx current_exp_me_closed(const ParticleHoleSet& bra, const ParticleHoleSet& ket, cplx nu,
                           cplx omega);

// Closed form of the shifted vertex-operator form factor
// <J1| e^{J_-(nu+r)} e^{J_+(nu+r)} e^{rP} |J2>, any integer r = vp.kappa.
cplx vertex_ff_closed(const ParticleHoleSet& bra, const ParticleHoleSet& ket,
                      const VertexParams& vp);

// Documented global sign s(r) relating vertex_ff_closed to the oracle:
// vertex_ff_closed = s(r) * me_vertex_bruteforce.  Measured: s(r) = +1 for
// every r; see docs/sign-conventions.md.
int vertex_sign_convention(int r);

// Barnes-G normalization G(1+nu-, 1-nu+ | 1+nu-+kappa, 1-nu+-kappa).
cplx edge_normalization(int kappa, cplx nu_plus, cplx nu_minus);

// det over Itilde2_{p_a h_b}(nu|omega) for a balanced set (n_p = n_h);
// third route for <J| e^{J_-} e^{J_+} |0>.
cplx vacuum_me_determinant(const ParticleHoleSet& j, cplx nu, cplx omega);

// Explicit inverse of N_{ab} = Itilde2_{p_a h_b}(nu|omega); entry (a,b) is
// indexed by (h_a, p_b).
std::vector<std::vector<cplx>> cauchy_inverse(const std::vector<int>& p_list,
                                              const std::vector<int>& h_list, cplx nu, cplx omega);

}  // namespace ffb
