#pragma once

#include <map>
#include <string>
#include <vector>

#include "ffb/closedform.hpp"
#include "ffb/fock.hpp"
#include "ffb/restricted.hpp"

namespace ffb {

// Critical excited state: spin sector, edge excitation content and the
// umklapp index ell = n_{p,+} - n_{h,+} = n_{h,-} - n_{p,-}.
struct CriticalState {
  int s = 0;
  ParticleHoleSet left;    // minus edge
  ParticleHoleSet right;   // plus edge
  int ell = 0;
};

CriticalState make_critical(int s, ParticleHoleSet left, ParticleHoleSet right);

// Fundamental representative of the ell class in spin sector s.
CriticalState fundamental_representative(int ell, int s);

// Operator data: spin o_r, amplitude tower over kappa, boundary shift values.
struct OperatorSpec {
  int o_r = 0;
  std::map<int, cplx> amplitudes;   // kappa -> F_kappa
  double nu_plus = 0.0;             // nu_r(q) - o_r
  double nu_minus = 0.0;            // nu_r(-q)
};

OperatorSpec default_operator(int o_r, double nu_plus, double nu_minus, int kappa_support = 2);

struct MacroParams {
  double L = 1e4;
  double p_F = 0.0;
  double alpha_plus = 1.0;
  double alpha_minus = 1.0;
};

// Splits raw particle/hole integers of an N+s quasiparticle state into the
// near-edge windows; throws not_critical if an integer sits outside both.
CriticalState ell_decompose(const std::vector<int>& particles, const std::vector<int>& holes,
                            int N, int s, int window);

// Raw integers of the state relative to (N, s); inverse of ell_decompose.
std::pair<std::vector<int>, std::vector<int>> critical_compose(const CriticalState& st, int N);

// Finite-volume relative excitation momentum of the critical state.
double excitation_momentum(const CriticalState& state, const MacroParams& macro);

// Leading-order form factor between two critical states.
cplx critical_ff(const CriticalState& out, const CriticalState& in, const OperatorSpec& op,
                 double x, const MacroParams& macro);

// Tensor-product matrix element of the effective operator; satisfies
// critical_ff = (-1)^{kappa} * effective_me.
cplx effective_me(const CriticalState& out, const CriticalState& in, const OperatorSpec& op,
                  double x, const MacroParams& macro);

struct HarmonicRow {
  std::vector<int> kappas;
  cplx phase = 1.0;
  cplx amplitude = 1.0;
  double L_power = 0.0;     // exponent of (2 pi / L)
  cplx edge_factor = 1.0;   // product of both Fermi-edge pair factors
  cplx total = 0.0;
};

struct RpointResult {
  std::vector<HarmonicRow> rows;
  cplx sum = 0.0;
  bool selection_ok = true;  // sum of operator spins vanishes
  std::string warning;
};

// Ground-to-ground r-point asymptotics, harmonic by harmonic over kappa
// assignments with sum kappa = 0 and |kappa_s| <= kappa_cutoff.
RpointResult rpoint_asymptotics(const std::vector<OperatorSpec>& ops, const std::vector<double>& xs,
                                const MacroParams& macro, int kappa_cutoff, int degree_cutoff);

}  // namespace ffb
