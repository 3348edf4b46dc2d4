#include "ffb/current.hpp"

#include <cmath>

namespace ffb {

FockVector apply_J(int k, const FockVector& v) {
  if (k == 0) throw std::invalid_argument("apply_J: k must be nonzero");
  FockVector out(v.sector_charge());
  for (const auto& [s, amp] : v.terms()) {
    // psi_j psi*_{j+k}: psi*_{j+k} acts first.  Only finitely many j
    // contribute: psi*_{j+k} must hit an occupied particle (j+k >= 0) or
    // create a hole (j+k < 0 absent), and psi_j must then act nontrivially.
    // Candidate j values: j+k = p-1 for particles p, and j+k = -h for any
    // hole index h that is not yet present (hole creation).
    FockVector single = FockVector::basis_state(s, amp);
    std::vector<int> modes;
    for (int p : s.particles) modes.push_back(p - 1 - k);
    // Hole creation at -h requires psi_j to then annihilate or create; psi_j
    // acts nontrivially unless it kills the state, which apply_psi handles.
    // Bound hole candidates by the degrees involved: creating hole h costs
    // degree h, compensated by psi_j removing at most max degree present.
    int dmax = s.degree() + std::abs(k) + 1;
    for (int h = 1; h <= dmax; ++h) {
      bool present = std::binary_search(s.holes.begin(), s.holes.end(), h);
      if (!present) modes.push_back(-h - k);
    }
    for (int j : modes) {
      FockVector w = apply_psi_star(j + k, single);
      if (w.empty()) continue;
      w = apply_psi(j, w);
      out += w;
    }
  }
  out.prune();
  return out;
}

FockVector apply_exp_Jplus(const CurrentParams& params, const FockVector& v) {
  if (params.omega == cplx(0.0)) throw std::invalid_argument("apply_exp_Jplus: omega must be nonzero");
  // J_+ = -nu sum_{k>=1} omega^{-k}/k J_k strictly lowers the degree, so the
  // exponential series terminates exactly.
  FockVector total = v;
  FockVector layer = v;
  int order = 1;
  while (!layer.empty()) {
    FockVector next(layer.sector_charge());
    int dmax = layer.max_degree();
    bool any = false;
    for (int k = 1; k <= dmax; ++k) {
      FockVector jk = apply_J(k, layer);
      if (jk.empty()) continue;
      cplx coeff = -params.nu * std::pow(params.omega, -k) / static_cast<double>(k);
      jk *= coeff;
      if (!any) {
        next = jk;
        any = true;
      } else {
        next += jk;
      }
    }
    if (!any) break;
    next *= cplx(1.0 / order, 0.0);
    next.prune(0.0);
    if (next.empty()) break;
    total += next;
    layer = next;
    ++order;
  }
  total.prune();
  return total;
}

FockVector apply_exp_Jminus_to_bra(const CurrentParams& params, const FockVector& bra) {
  // <v| e^{J_-(nu,omega)} = bra( e^{J_+(-nu, 1/omega)} v ) on coefficients.
  return apply_exp_Jplus({-params.nu, 1.0 / params.omega}, bra);
}

cplx me_bruteforce(const ParticleHoleSet& bra, const ParticleHoleSet& ket,
                   const CurrentParams& params) {
  if (bra.charge() != ket.charge()) return 0.0;
  FockVector b = apply_exp_Jminus_to_bra(params, FockVector::basis_state(bra));
  FockVector k = apply_exp_Jplus(params, FockVector::basis_state(ket));
  return inner_product(b, k);
}

cplx me_vertex_bruteforce(const ChargedPHSet& bra, const ChargedPHSet& ket,
                          const VertexParams& vp) {
  auto [shift_sign, shifted] = shift_apply_oracle(vp.kappa, ket);
  FockVector braCanon = charged_to_canonical(bra);
  const auto& [bset, bamp] = *braCanon.terms().begin();
  if (bset.charge() != shifted.ph.charge()) return 0.0;
  CurrentParams cp{vp.nu + static_cast<double>(vp.kappa), vp.omega};
  return bamp * static_cast<double>(shift_sign) * me_bruteforce(bset, shifted.ph, cp);
}

}  // namespace ffb
