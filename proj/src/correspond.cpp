#include "ffb/correspond.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "ffb/xxz.hpp"

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

int sum_p_minus_one_plus_h(const ParticleHoleSet& s) {
  int acc = 0;
  for (int p : s.particles) acc += p - 1;
  for (int h : s.holes) acc += h;
  return acc;
}

}  // namespace

CriticalState make_critical(int s, ParticleHoleSet left, ParticleHoleSet right) {
  validate(left);
  validate(right);
  int ell_right = right.charge();
  int ell_left = -left.charge();
  if (ell_right != ell_left) {
    throw std::invalid_argument("CriticalState: edge charges inconsistent, need n_{p,+}-n_{h,+} = n_{h,-}-n_{p,-}");
  }
  return CriticalState{s, std::move(left), std::move(right), ell_right};
}

CriticalState fundamental_representative(int ell, int s) {
  ParticleHoleSet left, right;
  if (ell >= 0) {
    for (int a = 1; a <= ell; ++a) {
      right.particles.push_back(a);
      left.holes.push_back(a);
    }
  } else {
    for (int a = 1; a <= -ell; ++a) {
      right.holes.push_back(a);
      left.particles.push_back(a);
    }
  }
  return make_critical(s, left, right);
}

OperatorSpec default_operator(int o_r, double nu_plus, double nu_minus, int kappa_support) {
  OperatorSpec op;
  op.o_r = o_r;
  op.nu_plus = nu_plus;
  op.nu_minus = nu_minus;
  for (int k = -kappa_support; k <= kappa_support; ++k) op.amplitudes[k] = 1.0;
  return op;
}

CriticalState ell_decompose(const std::vector<int>& particles, const std::vector<int>& holes,
                            int N, int s, int window) {
  const int top = N + s;
  ParticleHoleSet left, right;
  for (int p : particles) {
    if (p > top && p <= top + window) {
      right.particles.push_back(p - top);
    } else if (p <= 0 && p > -window) {
      left.particles.push_back(1 - p);
    } else {
      throw not_critical("ell_decompose: particle integer outside both edge windows");
    }
  }
  for (int h : holes) {
    if (h >= 1 && h <= window) {
      left.holes.push_back(h);
    } else if (h <= top && h > top - window) {
      right.holes.push_back(top + 1 - h);
    } else {
      throw not_critical("ell_decompose: hole integer outside both edge windows");
    }
  }
  std::sort(left.particles.begin(), left.particles.end());
  std::sort(left.holes.begin(), left.holes.end());
  std::sort(right.particles.begin(), right.particles.end());
  std::sort(right.holes.begin(), right.holes.end());
  return make_critical(s, left, right);
}

std::pair<std::vector<int>, std::vector<int>> critical_compose(const CriticalState& st, int N) {
  const int top = N + st.s;
  std::vector<int> particles, holes;
  for (int p : st.right.particles) particles.push_back(top + p);
  for (int p : st.left.particles) particles.push_back(1 - p);
  for (int h : st.right.holes) holes.push_back(top + 1 - h);
  for (int h : st.left.holes) holes.push_back(h);
  std::sort(particles.begin(), particles.end());
  std::sort(holes.begin(), holes.end());
  return {particles, holes};
}

double excitation_momentum(const CriticalState& state, const MacroParams& macro) {
  const double twopiL = 2.0 * M_PI / macro.L;
  const double ell = state.ell;
  double val = 2.0 * ell * macro.p_F;
  val += twopiL * macro.alpha_plus * sum_p_minus_one_plus_h(state.right);
  val -= twopiL * macro.alpha_minus * sum_p_minus_one_plus_h(state.left);
  val += twopiL * (macro.alpha_minus * ell * (ell + 1.0) / 2.0 -
                   macro.alpha_plus * ell * (ell - 1.0) / 2.0);
  return val;
}

cplx critical_ff(const CriticalState& out, const CriticalState& in, const OperatorSpec& op,
                 double x, const MacroParams& macro) {
  if (in.s - out.s != op.o_r) return 0.0;
  const int kappa = out.ell - in.ell;
  auto it = op.amplitudes.find(kappa);
  if (it == op.amplitudes.end()) {
    throw missing_amplitude("critical_ff: no amplitude for kappa = " + std::to_string(kappa));
  }
  const cplx omega_p = std::exp(cplx(0.0, 2.0 * M_PI * macro.alpha_plus * x / macro.L));
  const cplx omega_m = std::exp(cplx(0.0, -2.0 * M_PI * macro.alpha_minus * x / macro.L));
  const double nup = op.nu_plus, num = op.nu_minus;

  cplx val = std::exp(cplx(0.0, 2.0 * macro.p_F * x * kappa));
  val *= edge_normalization(kappa, nup, num);
  val *= it->second;
  double rho_sum = scaling_dimension(nup + kappa) + scaling_dimension(num + kappa);
  val *= std::pow(2.0 * M_PI / macro.L, rho_sum);
  val *= discrete_ff(out.right, in.right, nup, omega_p);
  val *= discrete_ff(out.left, in.left, -num, omega_m);
  const long li = in.ell, lo = out.ell;
  val *= ipow(omega_p, li * (li - 1) / 2 - lo * (lo - 1) / 2);
  val *= ipow(omega_m, li * (li + 1) / 2 - lo * (lo + 1) / 2);
  return val;
}

cplx effective_me(const CriticalState& out, const CriticalState& in, const OperatorSpec& op,
                  double x, const MacroParams& macro) {
  if (in.s - out.s != op.o_r) return 0.0;
  const int kappa = out.ell - in.ell;
  auto it = op.amplitudes.find(kappa);
  if (it == op.amplitudes.end()) return 0.0;
  const cplx omega_p = std::exp(cplx(0.0, 2.0 * M_PI * macro.alpha_plus * x / macro.L));
  const cplx omega_m = std::exp(cplx(0.0, -2.0 * M_PI * macro.alpha_minus * x / macro.L));
  const double nup = op.nu_plus, num = op.nu_minus;

  cplx val = it->second;
  val *= std::pow(2.0 * M_PI / macro.L,
                  scaling_dimension(nup + kappa) + scaling_dimension(num + kappa));
  val *= std::exp(cplx(0.0, 2.0 * macro.p_F * x * kappa));
  // Left factor: vertex with (-nu_minus, -kappa) at omega_minus; right factor
  // carries the charge-absorbed parameters (nu_plus, kappa) at omega_plus.
  val *= vertex_ff_closed(out.left, in.left, VertexParams{-num, -kappa, omega_m});
  val *= vertex_ff_closed(out.right, in.right, VertexParams{nup, kappa, omega_p});
  return val;
}

RpointResult rpoint_asymptotics(const std::vector<OperatorSpec>& ops, const std::vector<double>& xs,
                                const MacroParams& macro, int kappa_cutoff, int degree_cutoff) {
  (void)degree_cutoff;  // reserved for truncated-sum cross checks of the edges
  if (ops.size() != xs.size() || ops.empty()) {
    throw std::invalid_argument("rpoint_asymptotics: ops and xs must have equal nonzero length");
  }
  for (size_t i = 1; i < xs.size(); ++i) {
    if (!(xs[i] > xs[i - 1])) throw std::invalid_argument("rpoint_asymptotics: xs must be increasing");
  }
  RpointResult res;
  int ospin = 0;
  for (const auto& op : ops) ospin += op.o_r;
  if (ospin != 0) {
    res.selection_ok = false;
    res.warning = "sum of operator spins nonzero; ground-to-ground selection rule gives an empty result";
    return res;
  }
  const int r = static_cast<int>(ops.size());
  std::vector<cplx> omega_p(r), omega_m(r);
  for (int s = 0; s < r; ++s) {
    omega_p[s] = std::exp(cplx(0.0, 2.0 * M_PI * macro.alpha_plus * xs[s] / macro.L));
    omega_m[s] = std::exp(cplx(0.0, -2.0 * M_PI * macro.alpha_minus * xs[s] / macro.L));
  }

  std::vector<int> kappas(r, 0);
  std::function<void(int, int)> rec = [&](int s, int partial) {
    if (s == r - 1) {
      int last = -partial;
      if (std::abs(last) > kappa_cutoff) return;
      if (!ops[s].amplitudes.count(last)) return;
      kappas[s] = last;
      HarmonicRow row;
      row.kappas = kappas;
      double phase_arg = 0.0, rho_sum = 0.0;
      row.amplitude = 1.0;
      std::vector<cplx> xp(r), xm(r);
      for (int u = 0; u < r; ++u) {
        row.amplitude *= ops[u].amplitudes.at(kappas[u]);
        phase_arg += 2.0 * macro.p_F * kappas[u] * xs[u];
        rho_sum += scaling_dimension(ops[u].nu_plus + kappas[u]) +
                   scaling_dimension(ops[u].nu_minus + kappas[u]);
        xp[u] = ops[u].nu_plus + static_cast<double>(kappas[u]);
        xm[u] = ops[u].nu_minus + static_cast<double>(kappas[u]);
      }
      row.phase = std::exp(cplx(0.0, phase_arg));
      row.L_power = rho_sum;
      row.edge_factor = pair_product(xp, omega_p) * pair_product(xm, omega_m);
      row.total = row.amplitude * row.phase * std::pow(2.0 * M_PI / macro.L, rho_sum) *
                  row.edge_factor;
      res.rows.push_back(row);
      res.sum += row.total;
      return;
    }
    for (int k = -kappa_cutoff; k <= kappa_cutoff; ++k) {
      if (!ops[s].amplitudes.count(k)) continue;
      kappas[s] = k;
      rec(s + 1, partial + k);
    }
  };
  rec(0, 0);
  // Deterministic lexicographic order over kappa assignments.
  std::sort(res.rows.begin(), res.rows.end(),
            [](const HarmonicRow& a, const HarmonicRow& b) { return a.kappas < b.kappas; });
  return res;
}

}  // namespace ffb
