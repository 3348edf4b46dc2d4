#include "ffb/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <sstream>
#include <thread>

#include "ffb/closedform.hpp"
#include "ffb/correspond.hpp"
#include "ffb/current.hpp"
#include "ffb/fock.hpp"
#include "ffb/integrals.hpp"
#include "ffb/restricted.hpp"
#include "ffb/specialfn.hpp"
#include "ffb/xxz.hpp"

namespace ffb {

namespace {

std::string cstr(cplx z) {
  std::ostringstream os;
  os.precision(12);
  os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return os.str();
}

void add_case(VerifyReport& rep, std::string id, std::string inputs, cplx lhs, cplx rhs,
              double residual, double tol) {
  VerifyCase c;
  c.id = std::move(id);
  c.inputs = std::move(inputs);
  c.lhs = lhs;
  c.rhs = rhs;
  c.residual = residual;
  c.pass = residual <= tol;
  rep.cases.push_back(std::move(c));
}

double rel_residual(cplx a, cplx b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

// Deterministic parallel map: results land at their index.
template <typename Job>
void parallel_for(int n, int threads, const Job& job) {
  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  threads = std::max(1, std::min(threads, n));
  if (threads == 1) {
    for (int i = 0; i < n; ++i) job(i);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<int> next{0};
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&]() {
      for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) job(i);
    });
  }
  for (auto& th : pool) th.join();
}

std::vector<cplx> default_nus(const VerifyOptions& opt) {
  if (!opt.nus.empty()) return opt.nus;
  return {cplx(0.17), cplx(0.5), cplx(0.83)};
}

std::vector<cplx> default_omegas(const VerifyOptions& opt) {
  if (!opt.omegas.empty()) return opt.omegas;
  return {std::exp(cplx(0.0, M_PI / 3.0)), 0.7 * std::exp(cplx(0.0, -0.4))};
}

std::vector<std::pair<ParticleHoleSet, ParticleHoleSet>> charge_pairs(int max_degree,
                                                                      int charge_window,
                                                                      int charge_offset) {
  std::vector<std::pair<ParticleHoleSet, ParticleHoleSet>> pairs;
  for (int c = -charge_window; c <= charge_window; ++c) {
    auto kets = enumerate_basis(c, max_degree);
    auto bras = enumerate_basis(c + charge_offset, max_degree);
    for (const auto& b : bras)
      for (const auto& k : kets) pairs.emplace_back(b, k);
  }
  return pairs;
}

VerifyReport suite_current_me(const VerifyOptions& opt) {
  VerifyReport rep;
  rep.suite = "prop21";
  rep.params["max_degree"] = std::to_string(opt.max_degree);
  rep.params["charge_window"] = std::to_string(opt.charge_window);
  auto pairs = charge_pairs(opt.max_degree, opt.charge_window, 0);
  auto nus = default_nus(opt);
  auto omegas = default_omegas(opt);
  struct Item {
    const ParticleHoleSet* b;
    const ParticleHoleSet* k;
    cplx nu, omega;
  };
  std::vector<Item> items;
  for (const auto& [b, k] : pairs)
    for (cplx nu : nus)
      for (cplx omega : omegas) items.push_back({&b, &k, nu, omega});
  std::vector<VerifyCase> out(items.size());
  parallel_for(static_cast<int>(items.size()), opt.threads, [&](int i) {
    const auto& it = items[i];
    cplx closed = current_exp_me_closed(*it.b, *it.k, it.nu, it.omega);
    cplx brute = me_bruteforce(*it.b, *it.k, {it.nu, it.omega});
    double res = std::abs(closed - brute) / std::max(1.0, std::abs(brute));
    VerifyCase c;
    c.id = "me[" + std::to_string(i) + "]";
    c.inputs = it.b->str() + ";" + it.k->str() + ";nu=" + cstr(it.nu) + ";omega=" + cstr(it.omega);
    c.lhs = closed;
    c.rhs = brute;
    c.residual = res;
    c.pass = res <= opt.tol;
    out[i] = std::move(c);
  });
  rep.cases = std::move(out);
  finalize(rep);
  return rep;
}

VerifyReport suite_vertex_me(const VerifyOptions& opt) {
  VerifyReport rep;
  rep.suite = "thm22";
  rep.params["max_degree"] = std::to_string(opt.max_degree);
  rep.params["r_range"] = std::to_string(opt.r_min) + ".." + std::to_string(opt.r_max);
  auto nus = default_nus(opt);
  auto omegas = default_omegas(opt);
  for (int r = opt.r_min; r <= opt.r_max; ++r) {
    auto pairs = charge_pairs(opt.max_degree, opt.charge_window, r);
    bool have_ratio = false;
    cplx ratio_ref = 0.0;
    double worst_mag = 0.0, worst_phase = 0.0;
    int count = 0;
    for (const auto& [b, k] : pairs) {
      for (cplx nu : nus) {
        for (cplx omega : omegas) {
          VertexParams vp{nu, r, omega};
          cplx closed = vertex_ff_closed(b, k, vp);
          cplx brute = me_vertex_bruteforce({0, b}, {0, k}, vp);
          ++count;
          if (std::abs(brute) < 1e-13 && std::abs(closed) < 1e-13) continue;
          double mag_res = std::abs(std::abs(closed) - std::abs(brute)) /
                           std::max(1.0, std::abs(brute));
          worst_mag = std::max(worst_mag, mag_res);
          cplx ratio = closed / brute;
          if (!have_ratio) {
            ratio_ref = ratio;
            have_ratio = true;
          }
          worst_phase = std::max(worst_phase, std::abs(ratio - ratio_ref));
        }
      }
    }
    std::ostringstream id;
    id << "r=" << r;
    add_case(rep, id.str() + ":magnitude", std::to_string(count) + " cases", worst_mag, 0.0,
             worst_mag, opt.tol);
    add_case(rep, id.str() + ":phase-constancy", "ratio ref " + cstr(ratio_ref), worst_phase, 0.0,
             worst_phase, opt.tol);
    if (have_ratio) {
      double conv = std::abs(ratio_ref - static_cast<double>(vertex_sign_convention(r)));
      add_case(rep, id.str() + ":sign-convention", "s(r) vs measured ratio", ratio_ref,
               cplx(vertex_sign_convention(r)), conv, opt.tol);
    }
  }
  finalize(rep);
  return rep;
}

VerifyReport suite_shift(const VerifyOptions& opt) {
  VerifyReport rep;
  rep.suite = "lemma23";
  rep.params["degree"] = std::to_string(opt.shift_degree);
  rep.params["r_max"] = std::to_string(opt.shift_rmax);
  for (int r = 0; r <= opt.shift_rmax; ++r) {
    bool have_ratio = false;
    int ratio_ref = 0;
    bool sets_ok = true, signs_ok = true;
    int count = 0;
    for (int c = -3; c <= 3; ++c) {
      for (const auto& s : enumerate_basis(c, opt.shift_degree)) {
        auto [lsign, lset] = shift_apply_lemma(r, s);
        auto [osign, oset] = shift_apply_oracle(r, {0, s});
        ++count;
        if (!(lset == oset.ph)) sets_ok = false;
        int ratio = lsign * osign;
        if (!have_ratio) {
          ratio_ref = ratio;
          have_ratio = true;
        }
        if (ratio != ratio_ref) signs_ok = false;
      }
    }
    add_case(rep, "r=" + std::to_string(r) + ":set-map", std::to_string(count) + " states",
             sets_ok ? 1.0 : 0.0, 1.0, sets_ok ? 0.0 : 1.0, 0.5);
    add_case(rep, "r=" + std::to_string(r) + ":sign-ratio-constant",
             "lemma/oracle = " + std::to_string(ratio_ref), signs_ok ? 1.0 : 0.0, 1.0,
             signs_ok ? 0.0 : 1.0, 0.5);
    rep.notes.push_back("r=" + std::to_string(r) +
                        ": lemma/oracle sign ratio = " + std::to_string(ratio_ref));
  }
  finalize(rep);
  return rep;
}

VerifyReport suite_integrals(const VerifyOptions& opt) {
  VerifyReport rep;
  rep.suite = "integrals";
  rep.params["index_max"] = std::to_string(opt.index_max);
  auto nus = default_nus(opt);
  const cplx omega = 0.9 * std::exp(cplx(0.0, M_PI / 5.0));
  ContourSpec s1{2.0, 0.5, opt.points_per_circle};
  ContourSpec s2{0.5, 0.25, opt.points_per_circle};
  for (cplx nu : nus) {
    for (int h = 1; h <= opt.index_max; ++h) {
      for (int t = 1; t <= opt.index_max; ++t) {
        cplx closed = I1_closed(h, t, nu, omega);
        cplx quad = I1_quadrature(h, t, nu, omega, s1);
        double res = std::abs(closed - quad) / std::max(1.0, std::abs(closed));
        add_case(rep, "I1[" + std::to_string(h) + "," + std::to_string(t) + "]",
                 "nu=" + cstr(nu), closed, quad, res, opt.tol_integrals);
        closed = I2_closed(h, t, nu, omega);
        quad = I2_quadrature(h, t, nu, omega, s2);
        res = std::abs(closed - quad) / std::max(1.0, std::abs(closed));
        add_case(rep, "I2[" + std::to_string(h) + "," + std::to_string(t) + "]",
                 "nu=" + cstr(nu), closed, quad, res, opt.tol_integrals);
      }
    }
  }
  // Two-point identity <0| psi*_{p-1} psi_{-h} e^{J_-} |0> = Itilde2_{ph}.
  const cplx nu2 = 0.37;
  for (int p = 1; p <= 4; ++p) {
    for (int h = 1; h <= 4; ++h) {
      FockVector bra = FockVector::vacuum();
      bra = apply_psi(p - 1, bra);       // right action of psi*_{p-1} on <0|
      bra = apply_psi_star(-h, bra);     // right action of psi_{-h}
      bra = apply_exp_Jminus_to_bra({nu2, omega}, bra);
      cplx lhs = bra.coeff(ParticleHoleSet{});
      cplx rhs = tilde_I2(p, h, nu2, omega);
      double res = std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));
      add_case(rep, "two-point[" + std::to_string(p) + "," + std::to_string(h) + "]",
               "nu=" + cstr(nu2), lhs, rhs, res, opt.tol);
    }
  }
  // Tilde integral against its own direct quadrature.
  for (int p = 1; p <= 3; ++p) {
    for (int h = 1; h <= 3; ++h) {
      cplx lhs = tilde_I2(p, h, nu2, omega);
      cplx rhs = tilde_I2_quadrature(p, h, nu2, omega, {4.0, 2.0, opt.points_per_circle});
      double res = std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs));
      add_case(rep, "tildeI2-quad[" + std::to_string(p) + "," + std::to_string(h) + "]",
               "nu=" + cstr(nu2), lhs, rhs, res, opt.tol_integrals);
    }
  }
  // Quadrature self-convergence under point doubling.
  {
    cplx a = I1_quadrature(3, 2, 0.5, omega, {2.0, 0.5, opt.points_per_circle});
    cplx b = I1_quadrature(3, 2, 0.5, omega, {2.0, 0.5, 2 * opt.points_per_circle});
    add_case(rep, "I1-convergence", "doubling points", a, b, std::abs(a - b), 1e-10);
  }
  finalize(rep);
  return rep;
}

VerifyReport suite_restricted(const VerifyOptions& opt) {
  VerifyReport rep;
  rep.suite = "restricted";
  const cplx z1 = 1.0, z2 = 0.5;
  std::vector<cplx> nus2 = {0.31, -0.22};
  for (int ell : {-1, 0, 1}) {
    VertexChain chain{{nus2[0], nus2[1]}, {z1, z2}, {ell}};
    auto lhs = restricted_sum_truncated(chain, opt.restricted_degree_r2);
    cplx rhs = restricted_sum_closed(chain);
    double res = std::abs(lhs.value - rhs) / std::max(1.0, std::abs(rhs));
    add_case(rep, "r2[ell=" + std::to_string(ell) + "]",
             "deg<=" + std::to_string(opt.restricted_degree_r2), lhs.value, rhs, res,
             opt.tol_restricted_r2);
  }
  {
    VertexChain chain{{0.31, -0.22, 0.18}, {1.0, 0.5, 0.25}, {1, 0}};
    auto lhs = restricted_sum_truncated(chain, opt.restricted_degree_r3);
    cplx rhs = restricted_sum_closed(chain);
    double res = std::abs(lhs.value - rhs) / std::max(1.0, std::abs(rhs));
    add_case(rep, "r3[ell=(1,0)]", "deg<=" + std::to_string(opt.restricted_degree_r3), lhs.value,
             rhs, res, opt.tol_restricted_r3);
  }
  // Bridge identity: closed == bridge * vertex_product, algebraically.
  {
    VertexChain chain{{0.31, -0.22, 0.18}, {1.0, 0.5, 0.25}, {1, -1}};
    cplx lhs = restricted_sum_closed(chain);
    cplx rhs = chain_bridge_constant(chain) * vertex_product(chain);
    add_case(rep, "bridge-identity", "r=3", lhs, rhs, rel_residual(lhs, rhs), 1e-12);
  }
  // Insertion oracles.
  {
    VertexChain chain{{0.23, 0.41}, {1.0, 0.45}, {1}};
    cplx closed = vertex_product(chain);
    cplx ins = vertex_pair_insertion(chain, opt.insertion_degree);
    add_case(rep, "insertion-r2", "deg<=" + std::to_string(opt.insertion_degree), ins, closed,
             rel_residual(ins, closed), opt.tol_restricted_r2);
  }
  {
    VertexChain chain{{0.23, 0.41, -0.35}, {1.0, 0.5, 0.25}, {1, 0}};
    cplx closed = vertex_product(chain);
    cplx ins = vertex_triple_insertion(chain, opt.insertion_degree);
    add_case(rep, "insertion-r3", "deg<=" + std::to_string(opt.insertion_degree), ins, closed,
             rel_residual(ins, closed), opt.tol_restricted_r2);
  }
  // Exchange relation at the operator level, degree <= 5 basis.  The product
  // e^{J_+} e^{J_-} is resolved through a middle identity truncated deep
  // enough that the geometric tail in |z/omega| is negligible.
  {
    const cplx nu = 0.37, omega = 1.0, mu = -0.29, z = 0.3;
    cplx scalar = exchange_JplusJminus(nu, omega, mu, z);
    const int outer_deg = 5, mid_deg = outer_deg + 26;
    double worst = 0.0;
    for (int c = -1; c <= 1; ++c) {
      auto outer = enumerate_basis(c, outer_deg);
      const int n = static_cast<int>(outer.size());
      std::vector<std::vector<cplx>> lhs(n, std::vector<cplx>(n, 0.0));
      for (const auto& mid : enumerate_basis(c, mid_deg)) {
        FockVector mk = apply_exp_Jplus({nu, omega}, FockVector::basis_state(mid));
        FockVector mb = apply_exp_Jminus_to_bra({mu, z}, FockVector::basis_state(mid));
        for (int ib = 0; ib < n; ++ib) {
          cplx left = mk.coeff(outer[ib]);  // <bra| e^{J_+} |mid>
          if (left == cplx(0.0)) continue;
          for (int ik = 0; ik < n; ++ik) {
            cplx right = mb.coeff(outer[ik]);  // <mid| e^{J_-} |ket>
            if (right != cplx(0.0)) lhs[ib][ik] += left * right;
          }
        }
      }
      for (int ib = 0; ib < n; ++ib) {
        FockVector bv = apply_exp_Jminus_to_bra({mu, z}, FockVector::basis_state(outer[ib]));
        for (int ik = 0; ik < n; ++ik) {
          FockVector kv = apply_exp_Jplus({nu, omega}, FockVector::basis_state(outer[ik]));
          cplx rhs = scalar * inner_product(bv, kv);
          worst = std::max(worst, std::abs(lhs[ib][ik] - rhs) / std::max(1.0, std::abs(rhs)));
        }
      }
    }
    add_case(rep, "exchange-operator-level", "degree<=5", worst, 0.0, worst, opt.tol);
  }
  finalize(rep);
  return rep;
}

VerifyReport suite_barnes(const VerifyOptions& opt) {
  VerifyReport rep;
  rep.suite = "barnes";
  // Functional equation on a grid over (0,2) x (-1,1)i.
  double worst = 0.0;
  for (double re = 0.2; re < 2.0; re += 0.3) {
    for (double im = -0.9; im <= 0.9; im += 0.3) {
      cplx z(re, im);
      cplx lhs = std::exp(log_barnes_g(z + 1.0));
      cplx rhs = gamma_fn(z) * std::exp(log_barnes_g(z));
      worst = std::max(worst, std::abs(lhs - rhs) / std::abs(lhs));
    }
  }
  add_case(rep, "functional-equation", "grid (0,2)x(-1,1)i", worst, 0.0, worst, 1e-10);
  // Reduction identity.
  for (int ell = -3; ell <= 3; ++ell) {
    double w = 0.0;
    for (double zr = 0.1; zr <= 0.95; zr += 0.1) {
      cplx lhs = barnes_reduction(zr, ell);
      cplx ref = std::pow(std::sin(M_PI * zr) / M_PI, ell) *
                 (((static_cast<long>(ell) * (ell + 1) / 2) % 2) ? -1.0 : 1.0);
      w = std::max(w, std::abs(lhs - ref) / std::max(1.0, std::abs(ref)));
    }
    add_case(rep, "reduction[ell=" + std::to_string(ell) + "]", "z=0.1..0.9", w, 0.0, w,
             opt.tol_barnes);
  }
  // gamma_ratio permutation invariance.
  {
    RatioSpec a{{cplx(1.3, 0.2), cplx(0.7, -0.1), cplx(2.1)}, {cplx(1.1), cplx(0.9, 0.3)}};
    RatioSpec b{{cplx(2.1), cplx(1.3, 0.2), cplx(0.7, -0.1)}, {cplx(0.9, 0.3), cplx(1.1)}};
    cplx va = gamma_ratio(a), vb = gamma_ratio(b);
    add_case(rep, "ratio-permutation", "3 up, 2 down", va, vb, rel_residual(va, vb), 1e-14);
  }
  finalize(rep);
  return rep;
}

VerifyReport suite_commutators(const VerifyOptions& opt) {
  VerifyReport rep;
  rep.suite = "commutators";
  double worst_jj = 0.0, worst_jpsi = 0.0, worst_jpsistar = 0.0;
  for (int c = -2; c <= 2; ++c) {
    for (const auto& s : enumerate_basis(c, 6)) {
      FockVector v = FockVector::basis_state(s);
      for (int k = -3; k <= 3; ++k) {
        if (k == 0) continue;
        for (int l = -3; l <= 3; ++l) {
          if (l == 0) continue;
          FockVector ab = apply_J(k, apply_J(l, v));
          FockVector ba = apply_J(l, apply_J(k, v));
          FockVector comm = ab - ba;
          if (k == -l) comm = comm - (cplx(k) * v);
          worst_jj = std::max(worst_jj, comm.norm_inf());
        }
        for (int l = -4; l <= 4; ++l) {
          // [J_k, psi_l] = psi_{l-k}
          FockVector lhs = apply_J(k, apply_psi(l, v)) - apply_psi(l, apply_J(k, v));
          FockVector rhs = apply_psi(l - k, v);
          worst_jpsi = std::max(worst_jpsi, (lhs - rhs).norm_inf());
          // [J_k, psi*_l] = -psi*_{l+k}
          FockVector lhs2 = apply_J(k, apply_psi_star(l, v)) - apply_psi_star(l, apply_J(k, v));
          FockVector rhs2 = cplx(-1.0) * apply_psi_star(l + k, v);
          worst_jpsistar = std::max(worst_jpsistar, (lhs2 - rhs2).norm_inf());
        }
      }
    }
  }
  add_case(rep, "JJ-commutator", "degree<=6, |k|,|l|<=3", worst_jj, 0.0, worst_jj,
           opt.tol_commutators);
  add_case(rep, "Jpsi-commutator", "degree<=6", worst_jpsi, 0.0, worst_jpsi, opt.tol_commutators);
  add_case(rep, "Jpsistar-commutator", "degree<=6", worst_jpsistar, 0.0, worst_jpsistar,
           opt.tol_commutators);
  // Exchange relation in mode form: psi_j e^{J_+} v = sum_m C_m e^{J_+} psi_{j-m} v
  // with C_m the Taylor coefficients of (1-z/omega)^{-nu}.
  {
    const cplx nu = 0.43, omega = cplx(0.8, 0.3);
    const CurrentParams cp{nu, omega};
    double worst = 0.0;
    for (int c = -1; c <= 1; ++c) {
      for (const auto& s : enumerate_basis(c, 5)) {
        FockVector v = FockVector::basis_state(s);
        FockVector ev = apply_exp_Jplus(cp, v);
        for (int j = -4; j <= 4; ++j) {
          FockVector lhs = apply_psi(j, ev);
          FockVector rhs(v.sector_charge() - 1);
          cplx coeff = 1.0;  // binom(-nu, m) (-1/omega)^m accumulated iteratively
          for (int m = 0; m <= j + 10; ++m) {
            if (m > 0) coeff *= (-nu - static_cast<double>(m - 1)) / static_cast<double>(m) *
                                (-1.0 / omega);
            FockVector term = apply_psi(j - m, v);
            if (!term.empty()) rhs += coeff * apply_exp_Jplus(cp, term);
          }
          worst = std::max(worst, (lhs - rhs).norm_inf());
          // psi*_j e^{J_+} v = sum_m D_m e^{J_+} psi*_{j+m} v, D_m from (1-z/omega)^{nu}.
          FockVector lhs2 = apply_psi_star(j, ev);
          FockVector rhs2(v.sector_charge() + 1);
          cplx dcoeff = 1.0;
          for (int m = 0; m <= 10 - j; ++m) {
            if (m > 0) dcoeff *= (nu - static_cast<double>(m - 1)) / static_cast<double>(m) *
                                 (-1.0 / omega);
            FockVector term = apply_psi_star(j + m, v);
            if (!term.empty()) rhs2 += dcoeff * apply_exp_Jplus(cp, term);
          }
          worst = std::max(worst, (lhs2 - rhs2).norm_inf());
        }
      }
    }
    add_case(rep, "mode-exchange-binomials", "degree<=5", worst, 0.0, worst, 1e-12);
  }
  // Anticommutators on the degree <= 6 basis.
  {
    double worst = 0.0;
    for (int c = -2; c <= 2; ++c) {
      for (const auto& s : enumerate_basis(c, 6)) {
        FockVector v = FockVector::basis_state(s);
        for (int m = -4; m <= 4; ++m) {
          for (int n = -4; n <= 4; ++n) {
            FockVector a1 = apply_psi(m, apply_psi(n, v)) + apply_psi(n, apply_psi(m, v));
            worst = std::max(worst, a1.norm_inf());
            FockVector a2 =
                apply_psi_star(m, apply_psi_star(n, v)) + apply_psi_star(n, apply_psi_star(m, v));
            worst = std::max(worst, a2.norm_inf());
            FockVector a3 = apply_psi(m, apply_psi_star(n, v)) + apply_psi_star(n, apply_psi(m, v));
            if (m == n) a3 = a3 - v;
            worst = std::max(worst, a3.norm_inf());
          }
        }
      }
    }
    add_case(rep, "anticommutators", "degree<=6, |m|,|n|<=4", worst, 0.0, worst, 0.0);
  }
  finalize(rep);
  return rep;
}

VerifyReport suite_correspondence(const VerifyOptions& opt) {
  VerifyReport rep;
  rep.suite = "correspondence";
  MacroParams macro;
  macro.L = 1e4;
  macro.p_F = 0.77;
  macro.alpha_plus = 1.0;
  macro.alpha_minus = 1.0;
  const double x = 217.0;
  double worst = 0.0;
  int count = 0;
  const int edge_deg = 5;
  // All critical state pairs with |kappa| <= 2 and edge degree <= 5.
  std::vector<CriticalState> states;
  for (int ell = -2; ell <= 2; ++ell) {
    for (const auto& right : enumerate_basis(ell, edge_deg)) {
      for (const auto& left : enumerate_basis(-ell, edge_deg)) {
        states.push_back(make_critical(0, left, right));
      }
    }
  }
  for (const auto& out : states) {
    for (const auto& in : states) {
      int kappa = out.ell - in.ell;
      if (std::abs(kappa) > 2) continue;
      for (int o_r : {0, 1}) {
        OperatorSpec op = default_operator(o_r, 0.27, -0.34, 2);
        CriticalState in_shift = in;
        in_shift.s = out.s + o_r;
        cplx a = critical_ff(out, in_shift, op, x, macro);
        cplx b = effective_me(out, in_shift, op, x, macro);
        cplx rhs = (kappa % 2 ? -1.0 : 1.0) * b;
        double res = std::abs(a - rhs) / std::max(std::abs(a), 1e-300);
        worst = std::max(worst, res);
        ++count;
      }
    }
  }
  add_case(rep, "dual-route", std::to_string(count) + " state pairs", worst, 0.0, worst,
           opt.tol_correspondence);
  // Selection rules.
  {
    OperatorSpec op = default_operator(1, 0.27, -0.34, 2);
    CriticalState gs = fundamental_representative(0, 0);
    CriticalState other = fundamental_representative(1, 0);  // same spin: mismatch
    cplx a = critical_ff(gs, other, op, x, macro);
    cplx b = effective_me(gs, other, op, x, macro);
    add_case(rep, "spin-selection", "o_r=1, equal spins", a, b,
             std::abs(a) + std::abs(b), 0.0);
  }
  // Two-point single harmonic vs hand-assembled product.
  {
    OperatorSpec op1 = default_operator(1, 0.27, -0.34, 2);
    OperatorSpec op2 = default_operator(-1, -0.41, 0.18, 2);
    std::vector<double> xs = {100.0, 400.0};
    auto res = rpoint_asymptotics({op1, op2}, xs, macro, 2, 12);
    cplx row00 = 0.0;
    for (const auto& row : res.rows) {
      if (row.kappas == std::vector<int>{0, 0}) row00 = row.total;
    }
    cplx omega1p = std::exp(cplx(0.0, 2.0 * M_PI * macro.alpha_plus * xs[0] / macro.L));
    cplx omega2p = std::exp(cplx(0.0, 2.0 * M_PI * macro.alpha_plus * xs[1] / macro.L));
    cplx omega1m = std::exp(cplx(0.0, -2.0 * M_PI * macro.alpha_minus * xs[0] / macro.L));
    cplx omega2m = std::exp(cplx(0.0, -2.0 * M_PI * macro.alpha_minus * xs[1] / macro.L));
    double rho = scaling_dimension(op1.nu_plus) + scaling_dimension(op1.nu_minus) +
                 scaling_dimension(op2.nu_plus) + scaling_dimension(op2.nu_minus);
    cplx hand = std::pow(2.0 * M_PI / macro.L, rho) *
                std::exp(cplx(op1.nu_plus * op2.nu_plus) * std::log(1.0 - omega2p / omega1p)) *
                std::exp(cplx(op1.nu_minus * op2.nu_minus) * std::log(1.0 - omega2m / omega1m));
    add_case(rep, "two-point-harmonic-0", "hand-assembled", row00, hand,
             rel_residual(row00, hand), opt.tol_restricted_r2);
  }
  // Excitation momentum: for fundamental representatives the 1/L bracket
  // cancels exactly, leaving 2 ell p_F; a shifted representative picks up
  // the alpha-weighted edge sum at order 1/L.
  {
    double w = 0.0;
    for (int ell = -2; ell <= 2; ++ell) {
      CriticalState st = fundamental_representative(ell, 0);
      double dp = excitation_momentum(st, macro);
      w = std::max(w, std::abs(dp - 2.0 * ell * macro.p_F));
    }
    add_case(rep, "momentum-fundamental", "ell=-2..2", w, 0.0, w, 1e-12);
    CriticalState st = fundamental_representative(1, 0);
    st.right.particles = {2};  // move the edge particle out by one slot
    double dp = excitation_momentum(st, macro);
    double expected = 2.0 * macro.p_F + (2.0 * M_PI / macro.L) * macro.alpha_plus * 1.0;
    add_case(rep, "momentum-1-over-L", "shifted representative", dp, expected,
             std::abs(dp - expected), 1e-12);
  }
  finalize(rep);
  return rep;
}

}  // namespace

const std::vector<std::string>& known_suites() {
  static const std::vector<std::string> names = {"prop21",     "thm22",      "lemma23",
                                                 "integrals",  "restricted", "barnes",
                                                 "commutators", "correspondence"};
  return names;
}

VerifyReport run_suite(const std::string& suite, const VerifyOptions& opt) {
  if (suite == "prop21") return suite_current_me(opt);
  if (suite == "thm22") return suite_vertex_me(opt);
  if (suite == "lemma23") return suite_shift(opt);
  if (suite == "integrals") return suite_integrals(opt);
  if (suite == "restricted") return suite_restricted(opt);
  if (suite == "barnes") return suite_barnes(opt);
  if (suite == "commutators") return suite_commutators(opt);
  if (suite == "correspondence") return suite_correspondence(opt);
  throw std::invalid_argument("unknown suite: " + suite);
}

void finalize(VerifyReport& report) {
  report.summary = {};
  for (const auto& c : report.cases) {
    ++report.summary.total;
    if (c.pass) ++report.summary.passed;
    else ++report.summary.failed;
    report.summary.max_residual = std::max(report.summary.max_residual, c.residual);
  }
}

}  // namespace ffb
