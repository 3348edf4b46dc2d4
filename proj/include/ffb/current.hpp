#pragma once

#include "ffb/fock.hpp"

namespace ffb {

// Parameters (nu, omega) of the current exponents J_pm(nu, omega).
struct CurrentParams {
  cplx nu;
  cplx omega;
};

// Vertex parameters: J_pm carry nu + kappa, then the charge shift e^{kappa P}.
struct VertexParams {
  cplx nu;
  int kappa = 0;
  cplx omega = 1.0;
};

// J_k = sum_j psi_j psi*_{j+k}, k != 0.  Exact on finite vectors.
FockVector apply_J(int k, const FockVector& v);

// e^{J_+(nu,omega)} v with J_+ = -nu sum_{k>=1} omega^{-k}/k J_k.
// The series terminates: each J_k lowers the degree by k.
FockVector apply_exp_Jplus(const CurrentParams& params, const FockVector& v);

// Right action <v| e^{J_-(nu,omega)} on a bra, via the transpose
// J_-(nu,omega)^T = J_+(-nu, 1/omega) acting on the coefficient vector.
FockVector apply_exp_Jminus_to_bra(const CurrentParams& params, const FockVector& bra);

// <bra| e^{J_-} e^{J_+} |ket> by exact finite application on both sides.
cplx me_bruteforce(const ParticleHoleSet& bra, const ParticleHoleSet& ket,
                   const CurrentParams& params);

// <bra| e^{J_-(nu+r)} e^{J_+(nu+r)} e^{rP} |ket> with the normative shift.
cplx me_vertex_bruteforce(const ChargedPHSet& bra, const ChargedPHSet& ket,
                          const VertexParams& vp);

}  // namespace ffb
