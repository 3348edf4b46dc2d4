#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "ffb/current.hpp"
#include "ffb/integrals.hpp"

using ffb::cplx;

TEST_CASE("I1 collapses to 1 at h = t = 1") {
  for (cplx nu : {cplx(0.17), cplx(0.5), cplx(0.83)}) {
    for (cplx omega : {cplx(0.4, 0.9), cplx(1.7, -0.3)}) {
      CHECK(std::abs(ffb::I1_closed(1, 1, nu, omega) - cplx(1.0)) < 1e-13);
    }
  }
}

TEST_CASE("I2 collapses to nu/omega at h = p = 1") {
  CHECK(std::abs(ffb::I2_closed(1, 1, 0.3, 2.0) - cplx(0.15)) < 1e-14);
}

TEST_CASE("closed forms match circle quadrature") {
  const cplx omega = 0.9 * std::exp(cplx(0.0, M_PI / 5.0));
  for (cplx nu : {cplx(0.17), cplx(0.83)}) {
    for (int h = 1; h <= 5; ++h) {
      for (int t = 1; t <= 5; ++t) {
        cplx c1 = ffb::I1_closed(h, t, nu, omega);
        cplx q1 = ffb::I1_quadrature(h, t, nu, omega);
        CHECK(std::abs(c1 - q1) / std::max(1.0, std::abs(c1)) < 1e-8);
        cplx c2 = ffb::I2_closed(h, t, nu, omega);
        cplx q2 = ffb::I2_quadrature(h, t, nu, omega);
        CHECK(std::abs(c2 - q2) / std::max(1.0, std::abs(c2)) < 1e-8);
      }
    }
  }
}

TEST_CASE("quadrature converges under point doubling") {
  const cplx omega = 0.9 * std::exp(cplx(0.0, M_PI / 5.0));
  cplx a = ffb::I1_quadrature(4, 3, 0.5, omega, {2.0, 0.5, 512});
  cplx b = ffb::I1_quadrature(4, 3, 0.5, omega, {2.0, 0.5, 1024});
  CHECK(std::abs(a - b) < 1e-10);
}

TEST_CASE("radius ordering is enforced") {
  CHECK_THROWS_AS(ffb::I1_quadrature(1, 1, 0.3, 1.0, {0.9, 0.5, 128}), ffb::ordering_error);
  CHECK_THROWS_AS(ffb::I2_quadrature(1, 1, 0.3, 1.0, {2.0, 0.5, 128}), ffb::ordering_error);
  CHECK_THROWS_AS(ffb::I1_quadrature(1, 1, 0.3, 1.0, {0.5, 2.0, 128}), ffb::ordering_error);
}

TEST_CASE("tilde relations") {
  const cplx nu = 0.37, omega = cplx(0.8, 0.45);
  CHECK(std::abs(ffb::tilde_I2(1, 1, nu, omega) - (-nu * omega)) < 1e-13);
  CHECK(std::abs(ffb::tilde_I1(1, 1, nu, omega) - cplx(1.0)) < 1e-13);
  // Itilde2 against its own direct quadrature.
  for (int p = 1; p <= 3; ++p) {
    for (int h = 1; h <= 3; ++h) {
      cplx lhs = ffb::tilde_I2(p, h, nu, 0.9 * std::exp(cplx(0.0, 0.4)));
      cplx rhs = ffb::tilde_I2_quadrature(p, h, nu, 0.9 * std::exp(cplx(0.0, 0.4)));
      CHECK(std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)) < 1e-8);
    }
  }
}

TEST_CASE("two-point Fock identity") {
  // <0| psi*_{p-1} psi_{-h} e^{J_-} |0> = Itilde2_{ph}(nu|omega)
  const cplx nu = 0.37, omega = 0.9 * std::exp(cplx(0.0, M_PI / 5.0));
  for (int p = 1; p <= 4; ++p) {
    for (int h = 1; h <= 4; ++h) {
      ffb::FockVector bra = ffb::FockVector::vacuum();
      bra = ffb::apply_psi(p - 1, bra);
      bra = ffb::apply_psi_star(-h, bra);
      bra = ffb::apply_exp_Jminus_to_bra({nu, omega}, bra);
      cplx lhs = bra.coeff(ffb::ParticleHoleSet{});
      cplx rhs = ffb::tilde_I2(p, h, nu, omega);
      CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(rhs)));
    }
  }
}

TEST_CASE("pole detection") {
  CHECK_THROWS_AS(ffb::I1_closed(2, 1, 1.0, 1.0), ffb::pole_error);   // t - h + nu = 0
  CHECK_THROWS_AS(ffb::I1_closed(1, 2, -1.0, 1.0), ffb::pole_error);  // t - h + nu = 0 and Gamma(t+nu)
  CHECK_THROWS_AS(ffb::I2_closed(1, 1, -1.0, 1.0), ffb::pole_error);  // Gamma(h+nu) pole
}
