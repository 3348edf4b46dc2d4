// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line per criterion.  Exit code 0 iff all pass.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <string>
#include <vector>

#include "ffb/closedform.hpp"
#include "ffb/correspond.hpp"
#include "ffb/current.hpp"
#include "ffb/integrals.hpp"
#include "ffb/restricted.hpp"
#include "ffb/specialfn.hpp"
#include "ffb/verify.hpp"
#include "ffb/xxz.hpp"

using ffb::cplx;
using ffb::ParticleHoleSet;

namespace {

int g_failures = 0;

void report(int idx, const std::string& name, bool pass, const std::string& detail) {
  std::printf("[%2d] %-34s %s  (%s)\n", idx, name.c_str(), pass ? "PASS" : "FAIL",
              detail.c_str());
  if (!pass) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3e", x);
  return buf;
}

const std::vector<cplx> kNus = {cplx(0.17), cplx(0.5), cplx(0.83)};
const std::vector<cplx> kOmegas = {std::exp(cplx(0.0, M_PI / 3.0)),
                                   0.7 * std::exp(cplx(0.0, -0.4))};

// 1. Oracle equivalence of the closed current-exponent matrix element.
void criterion_1() {
  auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  long pairs = 0;
  for (int c = -2; c <= 2; ++c) {
    auto basis = ffb::enumerate_basis(c, 8);
    for (const auto& b : basis) {
      for (const auto& k : basis) {
        ++pairs;
        for (cplx nu : kNus) {
          for (cplx omega : kOmegas) {
            cplx closed = ffb::current_exp_me_closed(b, k, nu, omega);
            cplx brute = ffb::me_bruteforce(b, k, {nu, omega});
            worst = std::max(worst,
                             std::abs(closed - brute) / std::max(1.0, std::abs(brute)));
          }
        }
      }
    }
  }
  double dt = seconds_since(t0);
  bool pass = worst <= 1e-10 && pairs >= 200 && dt <= 60.0;
  report(1, "current-me oracle equivalence", pass,
         std::to_string(pairs) + " pairs, worst " + fmt(worst) + ", " + fmt(dt) + " s");
}

// 2. Shifted vertex closed form vs oracle modulo one global sign s(r).
void criterion_2() {
  double worst_mag = 0.0, worst_phase = 0.0;
  for (int r = -2; r <= 2; ++r) {
    bool have = false;
    cplx ratio_ref = 0.0;
    for (int c = -2; c <= 2; ++c) {
      auto kets = ffb::enumerate_basis(c, 8);
      auto bras = ffb::enumerate_basis(c + r, 8);
      for (const auto& b : bras) {
        for (const auto& k : kets) {
          for (cplx nu : kNus) {
            for (cplx omega : kOmegas) {
              ffb::VertexParams vp{nu, r, omega};
              cplx closed = ffb::vertex_ff_closed(b, k, vp);
              cplx brute = ffb::me_vertex_bruteforce({0, b}, {0, k}, vp);
              if (std::abs(brute) < 1e-8) continue;
              worst_mag = std::max(worst_mag, std::abs(std::abs(closed) - std::abs(brute)) /
                                                  std::max(1.0, std::abs(brute)));
              cplx ratio = closed / brute;
              if (!have) {
                ratio_ref = ratio;
                have = true;
              }
              worst_phase = std::max(worst_phase, std::abs(ratio - ratio_ref));
            }
          }
        }
      }
    }
  }
  bool pass = worst_mag <= 1e-10 && worst_phase <= 1e-10;
  report(2, "vertex-ff oracle equivalence", pass,
         "worst |mag| " + fmt(worst_mag) + ", phase spread " + fmt(worst_phase));
}

// 3. Fast-path shift map vs the normative oracle.
void criterion_3() {
  bool sets_ok = true, sign_fn_of_r = true;
  for (int r = 0; r <= 3; ++r) {
    bool have = false;
    int ratio_ref = 0;
    for (int c = -3; c <= 3; ++c) {
      for (const auto& s : ffb::enumerate_basis(c, 6)) {
        auto [ls, lset] = ffb::shift_apply_lemma(r, s);
        auto [os, oset] = ffb::shift_apply_oracle(r, {0, s});
        if (!(lset == oset.ph)) sets_ok = false;
        int ratio = ls * os;
        if (!have) {
          ratio_ref = ratio;
          have = true;
        } else if (ratio != ratio_ref) {
          sign_fn_of_r = false;
        }
      }
    }
  }
  report(3, "shift fast path vs oracle", sets_ok && sign_fn_of_r,
         std::string("sets ") + (sets_ok ? "match" : "differ") + ", sign ratio " +
             (sign_fn_of_r ? "depends on r only" : "state-dependent"));
}

// 4. Contour integrals: closed forms vs quadrature; two-point Fock identity.
void criterion_4() {
  const cplx omega = 0.9 * std::exp(cplx(0.0, M_PI / 5.0));
  double worst_quad = 0.0;
  for (cplx nu : kNus) {
    for (int h = 1; h <= 5; ++h) {
      for (int t = 1; t <= 5; ++t) {
        cplx c1 = ffb::I1_closed(h, t, nu, omega);
        cplx q1 = ffb::I1_quadrature(h, t, nu, omega);
        worst_quad = std::max(worst_quad, std::abs(c1 - q1) / std::max(1.0, std::abs(c1)));
        cplx c2 = ffb::I2_closed(h, t, nu, omega);
        cplx q2 = ffb::I2_quadrature(h, t, nu, omega);
        worst_quad = std::max(worst_quad, std::abs(c2 - q2) / std::max(1.0, std::abs(c2)));
      }
    }
  }
  double worst_fock = 0.0;
  const cplx nu2 = 0.37;
  for (int p = 1; p <= 4; ++p) {
    for (int h = 1; h <= 4; ++h) {
      ffb::FockVector bra = ffb::FockVector::vacuum();
      bra = ffb::apply_psi(p - 1, bra);
      bra = ffb::apply_psi_star(-h, bra);
      bra = ffb::apply_exp_Jminus_to_bra({nu2, omega}, bra);
      cplx lhs = bra.coeff(ParticleHoleSet{});
      cplx rhs = ffb::tilde_I2(p, h, nu2, omega);
      worst_fock = std::max(worst_fock, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
    }
  }
  bool pass = worst_quad <= 1e-8 && worst_fock <= 1e-10;
  report(4, "contour integrals", pass,
         "quad " + fmt(worst_quad) + ", two-point " + fmt(worst_fock));
}

// 5. Determinant route and explicit Cauchy-type inverse.
void criterion_5() {
  const cplx omega = 0.7 * std::exp(cplx(0.0, -0.4));
  double worst_det = 0.0;
  for (cplx nu : kNus) {
    for (const auto& j : ffb::enumerate_basis(0, 12)) {
      if (j.particles.size() > 3 || j.particles.size() != j.holes.size()) continue;
      cplx det = ffb::vacuum_me_determinant(j, nu, omega);
      cplx closed = ffb::current_exp_me_closed(j, {}, nu, omega);
      worst_det = std::max(worst_det, std::abs(det - closed) / std::max(1.0, std::abs(closed)));
    }
  }
  double worst_inv = 0.0;
  {
    const cplx nu = 0.41;
    std::vector<std::vector<int>> plists = {{1}, {1, 2}, {1, 3, 4}, {1, 2, 4, 7}};
    std::vector<std::vector<int>> hlists = {{1}, {2, 3}, {1, 2, 5}, {2, 3, 5, 6}};
    for (size_t t = 0; t < plists.size(); ++t) {
      const auto& p = plists[t];
      const auto& h = hlists[t];
      const int n = static_cast<int>(p.size());
      auto inv = ffb::cauchy_inverse(p, h, nu, omega);
      for (int a = 0; a < n; ++a) {
        for (int c = 0; c < n; ++c) {
          cplx acc = 0.0;
          for (int b = 0; b < n; ++b) acc += ffb::tilde_I2(p[a], h[b], nu, omega) * inv[b][c];
          worst_inv = std::max(worst_inv, std::abs(acc - (a == c ? 1.0 : 0.0)));
        }
      }
    }
  }
  bool pass = worst_det <= 1e-10 && worst_inv <= 1e-10;
  report(5, "determinant route + Cauchy inverse", pass,
         "det " + fmt(worst_det) + ", inverse " + fmt(worst_inv));
}

// 6. Restricted sums: truncated LHS vs closed RHS.
void criterion_6() {
  auto t0 = std::chrono::steady_clock::now();
  double worst_r2 = 0.0, worst_r3 = 0.0;
  for (int ell : {-1, 0, 1}) {
    ffb::VertexChain chain{{0.31, -0.22}, {1.0, 0.5}, {ell}};
    auto lhs = ffb::restricted_sum_truncated(chain, 20);
    cplx rhs = ffb::restricted_sum_closed(chain);
    worst_r2 = std::max(worst_r2, std::abs(lhs.value - rhs) / std::max(1.0, std::abs(rhs)));
  }
  {
    ffb::VertexChain chain{{0.31, -0.22, 0.18}, {1.0, 0.5, 0.25}, {1, 0}};
    auto lhs = ffb::restricted_sum_truncated(chain, 16);
    cplx rhs = ffb::restricted_sum_closed(chain);
    worst_r3 = std::abs(lhs.value - rhs) / std::max(1.0, std::abs(rhs));
  }
  double dt = seconds_since(t0);
  bool pass = worst_r2 <= 1e-6 && worst_r3 <= 1e-5 && dt <= 300.0;
  report(6, "restricted sums", pass,
         "r2 " + fmt(worst_r2) + ", r3 " + fmt(worst_r3) + ", " + fmt(dt) + " s");
}

// 7. Vertex product vs the Fock insertion oracle.
void criterion_7() {
  ffb::VertexChain chain{{0.23, 0.41, -0.35}, {1.0, 0.5, 0.25}, {1, 0}};
  cplx closed = ffb::vertex_product(chain);
  cplx ins = ffb::vertex_triple_insertion(chain, 22);
  double res = std::abs(ins - closed) / std::max(1.0, std::abs(closed));
  report(7, "vertex product vs insertion", res <= 1e-6, "residual " + fmt(res));
}

// 8. Barnes functional equation and reduction identity.
void criterion_8() {
  double worst_fe = 0.0;
  for (double re = 0.2; re < 2.0; re += 0.2) {
    for (double im = -0.9; im <= 0.9; im += 0.3) {
      cplx z(re, im);
      cplx lhs = std::exp(ffb::log_barnes_g(z + 1.0));
      cplx rhs = ffb::gamma_fn(z) * std::exp(ffb::log_barnes_g(z));
      worst_fe = std::max(worst_fe, std::abs(lhs - rhs) / std::abs(lhs));
    }
  }
  double worst_red = 0.0;
  for (int ell = -3; ell <= 3; ++ell) {
    for (double z = 0.1; z < 0.95; z += 0.1) {
      cplx lhs = ffb::barnes_reduction(z, ell);
      double sgn = ((static_cast<long>(ell) * (ell + 1) / 2) % 2) ? -1.0 : 1.0;
      cplx ref = std::pow(std::sin(M_PI * z) / M_PI, ell) * sgn;
      worst_red = std::max(worst_red, std::abs(lhs - ref) / std::max(1.0, std::abs(ref)));
    }
  }
  bool pass = worst_fe <= 1e-9 && worst_red <= 1e-9;
  report(8, "special functions", pass,
         "functional eq " + fmt(worst_fe) + ", reduction " + fmt(worst_red));
}

// 9. Current algebra as exact operator identities.
void criterion_9() {
  double worst = 0.0;
  for (int c = -2; c <= 2; ++c) {
    for (const auto& s : ffb::enumerate_basis(c, 6)) {
      ffb::FockVector v = ffb::FockVector::basis_state(s);
      for (int k = -3; k <= 3; ++k) {
        if (k == 0) continue;
        for (int l = -3; l <= 3; ++l) {
          if (l == 0) continue;
          ffb::FockVector comm =
              ffb::apply_J(k, ffb::apply_J(l, v)) - ffb::apply_J(l, ffb::apply_J(k, v));
          if (k == -l) comm = comm - cplx(k) * v;
          worst = std::max(worst, comm.norm_inf());
        }
        for (int l = -4; l <= 4; ++l) {
          ffb::FockVector lhs =
              ffb::apply_J(k, ffb::apply_psi(l, v)) - ffb::apply_psi(l, ffb::apply_J(k, v));
          worst = std::max(worst, (lhs - ffb::apply_psi(l - k, v)).norm_inf());
          ffb::FockVector lhs2 = ffb::apply_J(k, ffb::apply_psi_star(l, v)) -
                                 ffb::apply_psi_star(l, ffb::apply_J(k, v));
          ffb::FockVector rhs2 = cplx(-1.0) * ffb::apply_psi_star(l + k, v);
          worst = std::max(worst, (lhs2 - rhs2).norm_inf());
        }
      }
    }
  }
  report(9, "current algebra", worst <= 1e-12, "worst residual " + fmt(worst));
}

// 10. XXZ free-fermion point.
void criterion_10() {
  ffb::XxzSolution sol({M_PI / 2.0, 1.0, 64});
  double worstZ = 0.0, worstPhi = 0.0, worstP = 0.0;
  for (double lam = -1.0; lam <= 1.0001; lam += 0.0625) {
    worstZ = std::max(worstZ, std::abs(sol.Z(lam) - 1.0));
    worstPhi = std::max(worstPhi, std::abs(sol.phi(lam, 1.0)));
    worstP = std::max(worstP, std::abs(sol.p(lam) - ffb::xxz_theta(M_PI / 4.0, lam)));
  }
  bool pass = worstZ <= 1e-10 && worstPhi <= 1e-10 && worstP <= 1e-10;
  report(10, "xxz free-fermion point", pass,
         "Z " + fmt(worstZ) + ", phi " + fmt(worstPhi) + ", p " + fmt(worstP));
}

// 11. XXZ dressed-charge identities and reflection at zeta = 2 pi / 5.
void criterion_11() {
  auto t0 = std::chrono::steady_clock::now();
  ffb::XxzSolution sol({2.0 * M_PI / 5.0, 1.0, 64});
  ffb::XxzSolution sol2({2.0 * M_PI / 5.0, 1.0, 128});
  double worst_id = 0.0, worst_refl = 0.0, worst_stab = 0.0;
  for (int o : {0, 1, 2}) {
    for (int k : {-2, -1, 0, 1, 2}) {
      auto rn = ffb::relative_nu(sol, o, k, 1e-8);
      worst_id = std::max(worst_id, std::abs(rn.identity_residual_q));
      auto lut = ffb::luttinger_check(sol, o, k, 1e-8);
      worst_refl = std::max(worst_refl, std::abs(lut.reflection_residual));
      auto rn2 = ffb::relative_nu(sol2, o, k, 1e-8);
      worst_stab = std::max(worst_stab, std::abs(rn.nu_at_q - rn2.nu_at_q));
    }
  }
  worst_stab = std::max(worst_stab, std::abs(sol.Z(1.0) - sol2.Z(1.0)));
  worst_stab = std::max(worst_stab, std::abs(sol.p_F() - sol2.p_F()));
  double dt = seconds_since(t0);
  bool pass = worst_id <= 1e-8 && worst_refl <= 1e-8 && worst_stab <= 1e-8 && dt <= 10.0;
  report(11, "xxz dressed-charge identities", pass,
         "identity " + fmt(worst_id) + ", reflection " + fmt(worst_refl) + ", stability " +
             fmt(worst_stab) + ", " + fmt(dt) + " s");
}

// 12. Correspondence between the direct and effective assemblies.
void criterion_12() {
  ffb::MacroParams macro;
  macro.L = 1e4;
  macro.p_F = 0.77;
  macro.alpha_plus = 1.0;
  macro.alpha_minus = 1.0;
  const double x = 217.0;
  double worst = 0.0;
  std::vector<ffb::CriticalState> states;
  for (int ell = -2; ell <= 2; ++ell) {
    for (const auto& right : ffb::enumerate_basis(ell, 5)) {
      for (const auto& left : ffb::enumerate_basis(-ell, 5)) {
        states.push_back(ffb::make_critical(0, left, right));
      }
    }
  }
  for (int o_r : {0, 1}) {
    ffb::OperatorSpec op = ffb::default_operator(o_r, 0.27, -0.34, 2);
    for (const auto& out : states) {
      for (const auto& inBase : states) {
        int kappa = out.ell - inBase.ell;
        if (std::abs(kappa) > 2) continue;
        ffb::CriticalState in = inBase;
        in.s = out.s + o_r;
        cplx a = ffb::critical_ff(out, in, op, x, macro);
        cplx b = ffb::effective_me(out, in, op, x, macro);
        cplx rhs = (kappa % 2 ? -1.0 : 1.0) * b;
        worst = std::max(worst, std::abs(a - rhs) / std::max(std::abs(a), 1e-12));
      }
    }
  }
  // Two-point single harmonic vs the hand-assembled closed product.
  ffb::OperatorSpec op1 = ffb::default_operator(1, 0.27, -0.34, 2);
  ffb::OperatorSpec op2 = ffb::default_operator(-1, -0.41, 0.18, 2);
  std::vector<double> xs = {100.0, 400.0};
  auto res = ffb::rpoint_asymptotics({op1, op2}, xs, macro, 2, 12);
  cplx row00 = 0.0;
  for (const auto& row : res.rows) {
    if (row.kappas == std::vector<int>{0, 0}) row00 = row.total;
  }
  cplx o1p = std::exp(cplx(0.0, 2.0 * M_PI * macro.alpha_plus * xs[0] / macro.L));
  cplx o2p = std::exp(cplx(0.0, 2.0 * M_PI * macro.alpha_plus * xs[1] / macro.L));
  cplx o1m = std::exp(cplx(0.0, -2.0 * M_PI * macro.alpha_minus * xs[0] / macro.L));
  cplx o2m = std::exp(cplx(0.0, -2.0 * M_PI * macro.alpha_minus * xs[1] / macro.L));
  double rho = ffb::scaling_dimension(op1.nu_plus) + ffb::scaling_dimension(op1.nu_minus) +
               ffb::scaling_dimension(op2.nu_plus) + ffb::scaling_dimension(op2.nu_minus);
  cplx hand = std::pow(2.0 * M_PI / macro.L, rho) *
              std::exp(cplx(op1.nu_plus * op2.nu_plus) * std::log(1.0 - o2p / o1p)) *
              std::exp(cplx(op1.nu_minus * op2.nu_minus) * std::log(1.0 - o2m / o1m));
  double res2 = std::abs(row00 - hand) / std::abs(hand);
  bool pass = worst <= 1e-12 && res2 <= 1e-6;
  report(12, "correspondence dual route", pass,
         "dual route " + fmt(worst) + ", two-point harmonic " + fmt(res2));
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  criterion_12();
  if (g_failures) {
    std::printf("%d criterion(s) FAILED\n", g_failures);
    return 1;
  }
  std::printf("all 12 criteria passed\n");
  return 0;
}
