#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "ffb/correspond.hpp"
#include "ffb/xxz.hpp"

using ffb::cplx;
using ffb::CriticalState;
using ffb::MacroParams;
using ffb::OperatorSpec;
using ffb::ParticleHoleSet;

namespace {
MacroParams macro() {
  MacroParams m;
  m.L = 1e4;
  m.p_F = 0.77;
  m.alpha_plus = 1.0;
  m.alpha_minus = 1.0;
  return m;
}
}  // namespace

TEST_CASE("ell decomposition") {
  auto gs = ffb::ell_decompose({}, {}, 100, 0, 10);
  CHECK(gs.ell == 0);
  CHECK(gs.left == ParticleHoleSet{});
  CHECK(gs.right == ParticleHoleSet{});

  // particle {N+s+1}, hole {1}: the unit umklapp.
  auto um = ffb::ell_decompose({101}, {1}, 100, 0, 10);
  CHECK(um.ell == 1);
  CHECK(um.right == ParticleHoleSet{{1}, {}});
  CHECK(um.left == ParticleHoleSet{{}, {1}});

  // fundamental representative at ell = 2.
  auto f2 = ffb::fundamental_representative(2, 0);
  CHECK(f2.right.particles == std::vector<int>{1, 2});
  CHECK(f2.left.holes == std::vector<int>{1, 2});
  auto [praw, hraw] = ffb::critical_compose(f2, 100);
  auto back = ffb::ell_decompose(praw, hraw, 100, 0, 10);
  CHECK(back.ell == 2);
  CHECK(back.right == f2.right);
  CHECK(back.left == f2.left);

  CHECK_THROWS_AS(ffb::ell_decompose({50}, {50}, 100, 0, 10), ffb::not_critical);
}

TEST_CASE("excitation momentum") {
  MacroParams m = macro();
  CHECK(ffb::excitation_momentum(ffb::fundamental_representative(0, 0), m) == 0.0);
  // Fundamental representatives carry exactly 2 ell p_F.
  for (int ell = -2; ell <= 2; ++ell) {
    double dp = ffb::excitation_momentum(ffb::fundamental_representative(ell, 0), m);
    CHECK(std::abs(dp - 2.0 * ell * m.p_F) <= 1e-12);
  }
  // ell = 0 with one right particle at p = 2, right hole at h = 1.
  CriticalState st = ffb::make_critical(0, {}, ParticleHoleSet{{2}, {1}});
  double dp = ffb::excitation_momentum(st, m);
  CHECK(std::abs(dp - (2.0 * M_PI / m.L) * m.alpha_plus * 2.0) <= 1e-15);
}

TEST_CASE("critical_ff ground to ground") {
  MacroParams m = macro();
  OperatorSpec op = ffb::default_operator(0, 0.27, -0.34, 2);
  CriticalState gs = ffb::fundamental_representative(0, 0);
  cplx v = ffb::critical_ff(gs, gs, op, 250.0, m);
  double rho = ffb::scaling_dimension(op.nu_plus) + ffb::scaling_dimension(op.nu_minus);
  cplx expect = op.amplitudes.at(0) * std::pow(2.0 * M_PI / m.L, rho);
  CHECK(std::abs(v - expect) <= 1e-12 * std::abs(expect));
}

TEST_CASE("selection rules") {
  MacroParams m = macro();
  OperatorSpec op = ffb::default_operator(1, 0.27, -0.34, 2);
  CriticalState gs = ffb::fundamental_representative(0, 0);
  CriticalState in = gs;  // same spin: mismatch with o_r = 1
  CHECK(ffb::critical_ff(gs, in, op, 100.0, m) == cplx(0.0));
  CHECK(ffb::effective_me(gs, in, op, 100.0, m) == cplx(0.0));
  // kappa outside the amplitude support: zero on the operator route, error on
  // the direct route.
  OperatorSpec narrow = ffb::default_operator(0, 0.27, -0.34, 0);
  CriticalState out1 = ffb::fundamental_representative(1, 0);
  CriticalState in1 = ffb::fundamental_representative(0, 0);
  CHECK(ffb::effective_me(out1, in1, narrow, 100.0, m) == cplx(0.0));
  CHECK_THROWS_AS(ffb::critical_ff(out1, in1, narrow, 100.0, m), ffb::missing_amplitude);
}

TEST_CASE("two routes agree on the kappa = 1 fundamental transition") {
  MacroParams m = macro();
  OperatorSpec op = ffb::default_operator(1, 0.27, -0.34, 2);
  CriticalState out = ffb::fundamental_representative(1, 0);
  CriticalState in = ffb::fundamental_representative(0, 1);
  cplx a = ffb::critical_ff(out, in, op, 180.0, m);
  cplx b = ffb::effective_me(out, in, op, 180.0, m);
  int kappa = out.ell - in.ell;
  cplx rhs = (kappa % 2 ? -1.0 : 1.0) * b;
  CHECK(std::abs(a - rhs) <= 1e-12 * std::abs(a));
}

TEST_CASE("dual route across edge content") {
  MacroParams m = macro();
  const double x = 217.0;
  std::vector<CriticalState> states;
  for (int ell = -2; ell <= 2; ++ell) {
    for (const auto& right : ffb::enumerate_basis(ell, 4)) {
      for (const auto& left : ffb::enumerate_basis(-ell, 4)) {
        states.push_back(ffb::make_critical(0, left, right));
      }
    }
  }
  for (int o_r : {0, 1}) {
    OperatorSpec op = ffb::default_operator(o_r, 0.27, -0.34, 2);
    for (const auto& out : states) {
      for (const auto& inBase : states) {
        int kappa = out.ell - inBase.ell;
        if (std::abs(kappa) > 2) continue;
        CriticalState in = inBase;
        in.s = out.s + o_r;
        cplx a = ffb::critical_ff(out, in, op, x, m);
        cplx b = ffb::effective_me(out, in, op, x, m);
        cplx rhs = (kappa % 2 ? -1.0 : 1.0) * b;
        CHECK(std::abs(a - rhs) <= 1e-12 * std::max(std::abs(a), 1e-12));
      }
    }
  }
}

TEST_CASE("rpoint asymptotics two-point structure") {
  MacroParams m = macro();
  OperatorSpec op1 = ffb::default_operator(1, 0.27, -0.34, 2);
  OperatorSpec op2 = ffb::default_operator(-1, -0.41, 0.18, 2);
  auto res = ffb::rpoint_asymptotics({op1, op2}, {100.0, 400.0}, m, 2, 12);
  REQUIRE(res.selection_ok);
  REQUIRE(res.rows.size() == 5);  // kappa = (-2..2, mirrored)
  // kappa = (1,-1) harmonic carries the phase e^{2 i p_F (x_1 - x_2)}.
  for (const auto& row : res.rows) {
    if (row.kappas == std::vector<int>{1, -1}) {
      cplx expect = std::exp(cplx(0.0, 2.0 * m.p_F * (100.0 - 400.0)));
      CHECK(std::abs(row.phase - expect) < 1e-12);
    }
  }
  // Hand-assembled kappa = 0 harmonic.
  cplx o1p = std::exp(cplx(0.0, 2.0 * M_PI * m.alpha_plus * 100.0 / m.L));
  cplx o2p = std::exp(cplx(0.0, 2.0 * M_PI * m.alpha_plus * 400.0 / m.L));
  cplx o1m = std::exp(cplx(0.0, -2.0 * M_PI * m.alpha_minus * 100.0 / m.L));
  cplx o2m = std::exp(cplx(0.0, -2.0 * M_PI * m.alpha_minus * 400.0 / m.L));
  double rho = ffb::scaling_dimension(op1.nu_plus) + ffb::scaling_dimension(op1.nu_minus) +
               ffb::scaling_dimension(op2.nu_plus) + ffb::scaling_dimension(op2.nu_minus);
  cplx hand = std::pow(2.0 * M_PI / m.L, rho) *
              std::exp(cplx(op1.nu_plus * op2.nu_plus) * std::log(1.0 - o2p / o1p)) *
              std::exp(cplx(op1.nu_minus * op2.nu_minus) * std::log(1.0 - o2m / o1m));
  for (const auto& row : res.rows) {
    if (row.kappas == std::vector<int>{0, 0}) {
      CHECK(std::abs(row.total - hand) <= 1e-12 * std::abs(hand));
    }
  }
}

TEST_CASE("rpoint selection rule on spins") {
  MacroParams m = macro();
  OperatorSpec op1 = ffb::default_operator(1, 0.27, -0.34, 2);
  auto res = ffb::rpoint_asymptotics({op1, op1}, {100.0, 400.0}, m, 2, 12);
  CHECK_FALSE(res.selection_ok);
  CHECK(res.rows.empty());
}

TEST_CASE("rpoint all-zero amplitudes") {
  MacroParams m = macro();
  OperatorSpec op1 = ffb::default_operator(1, 0.27, -0.34, 2);
  OperatorSpec op2 = ffb::default_operator(-1, -0.41, 0.18, 2);
  for (auto& [k, v] : op1.amplitudes) v = 0.0;
  auto res = ffb::rpoint_asymptotics({op1, op2}, {100.0, 400.0}, m, 2, 12);
  CHECK(std::abs(res.sum) == 0.0);
}

TEST_CASE("three-point harmonics keyed by assignments") {
  MacroParams m = macro();
  OperatorSpec a = ffb::default_operator(1, 0.2, -0.3, 1);
  OperatorSpec b = ffb::default_operator(0, 0.15, 0.1, 1);
  OperatorSpec c = ffb::default_operator(-1, -0.25, 0.05, 1);
  auto res = ffb::rpoint_asymptotics({a, b, c}, {100.0, 300.0, 900.0}, m, 1, 10);
  REQUIRE(res.selection_ok);
  // All (k1,k2,k3) in {-1,0,1}^3 with zero sum: 7 assignments.
  CHECK(res.rows.size() == 7);
  for (size_t i = 1; i < res.rows.size(); ++i) CHECK(res.rows[i - 1].kappas < res.rows[i].kappas);
}
