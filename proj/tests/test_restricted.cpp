#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "ffb/restricted.hpp"

using ffb::cplx;
using ffb::ParticleHoleSet;
using ffb::VertexChain;

TEST_CASE("r_kernel low-order values") {
  CHECK(ffb::r_kernel({}, 0.31, -0.22, 0.5) == cplx(1.0));
  // J = {1;1}: the Gamma pairs collapse and the kernel reduces to -z nu eta.
  const cplx nu = 0.31, eta = -0.22, z = 0.5;
  cplx v = ffb::r_kernel({{1}, {1}}, nu, eta, z);
  CHECK(std::abs(v - (-z * nu * eta)) < 1e-13);
}

TEST_CASE("r_kernel domain guard") {
  CHECK_THROWS_AS(ffb::r_kernel({{1}, {1}}, 0.3, 0.2, 1.1), ffb::domain_violation);
}

TEST_CASE("trivial chains sum to one") {
  VertexChain chain{{0.0, 0.0}, {1.0, 0.5}, {0}};
  auto res = ffb::restricted_sum_truncated(chain, 12);
  CHECK(std::abs(res.value - cplx(1.0)) < 1e-14);
  CHECK(std::abs(ffb::restricted_sum_closed(chain) - cplx(1.0)) < 1e-13);
}

TEST_CASE("two-point truncated sum matches the closed form") {
  for (int ell : {-1, 0, 1}) {
    VertexChain chain{{0.31, -0.22}, {1.0, 0.5}, {ell}};
    auto lhs = ffb::restricted_sum_truncated(chain, 20);
    cplx rhs = ffb::restricted_sum_closed(chain);
    CHECK(std::abs(lhs.value - rhs) <= 1e-6 * std::max(1.0, std::abs(rhs)));
  }
}

TEST_CASE("three-point truncated sum matches the closed form") {
  VertexChain chain{{0.31, -0.22, 0.18}, {1.0, 0.5, 0.25}, {1, 0}};
  auto lhs = ffb::restricted_sum_truncated(chain, 16);
  cplx rhs = ffb::restricted_sum_closed(chain);
  CHECK(std::abs(lhs.value - rhs) <= 1e-5 * std::max(1.0, std::abs(rhs)));
}

TEST_CASE("convergence guard and warning") {
  VertexChain bad{{0.3, 0.2}, {1.0, 0.9}, {0}};
  CHECK_THROWS_AS(ffb::restricted_sum_truncated(bad, 8), ffb::domain_violation);

  VertexChain chain{{0.31, -0.22}, {1.0, 0.5}, {1}};
  auto res = ffb::restricted_sum_truncated(chain, 4, 1e-14);
  CHECK_FALSE(res.converged);
  CHECK(res.last_shell > 0.0);
}

TEST_CASE("vertex product basics") {
  VertexChain single{{0.4}, {1.0}, {}};
  CHECK(ffb::vertex_product(single) == cplx(1.0));

  VertexChain chain{{0.0, 0.0}, {1.0, 0.5}, {1}};  // kappa = (-1, +1)
  CHECK(std::abs(ffb::vertex_product(chain) - cplx(2.0)) < 1e-14);
}

TEST_CASE("vertex product invariant under common rescaling") {
  VertexChain a{{0.23, 0.41, -0.35}, {1.0, 0.5, 0.25}, {1, 0}};
  VertexChain b = a;
  for (auto& z : b.zs) z *= cplx(1.7, 0.4);
  cplx va = ffb::vertex_product(a), vb = ffb::vertex_product(b);
  CHECK(std::abs(va - vb) <= 1e-12 * std::abs(va));
}

TEST_CASE("bridge constant ties the two closed forms together") {
  VertexChain chains[] = {
      {{0.31, -0.22}, {1.0, 0.5}, {1}},
      {{0.31, -0.22}, {1.0, 0.5}, {-1}},
      {{0.31, -0.22, 0.18}, {1.0, 0.5, 0.25}, {1, 0}},
      {{0.31, -0.22, 0.18}, {1.0, 0.5, 0.25}, {1, -1}},
  };
  for (const auto& chain : chains) {
    cplx lhs = ffb::restricted_sum_closed(chain);
    cplx rhs = ffb::chain_bridge_constant(chain) * ffb::vertex_product(chain);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(lhs)));
  }
}

TEST_CASE("exchange scalar") {
  CHECK(ffb::exchange_JplusJminus(0.0, 1.0, 0.37, 0.4) == cplx(1.0));
  CHECK(ffb::exchange_JplusJminus(0.37, 1.0, 0.0, 0.4) == cplx(1.0));
  CHECK(std::abs(ffb::exchange_JplusJminus(0.5, 1.0, 2.0, 0.5) - cplx(0.5)) < 1e-14);
  CHECK_THROWS_AS(ffb::exchange_JplusJminus(0.5, 1.0, 2.0, 1.5), ffb::domain_violation);
}

TEST_CASE("pair insertion reproduces the vertex product") {
  VertexChain chain{{0.23, 0.41}, {1.0, 0.45}, {1}};
  cplx closed = ffb::vertex_product(chain);
  cplx ins = ffb::vertex_pair_insertion(chain, 22);
  CHECK(std::abs(ins - closed) <= 1e-6 * std::max(1.0, std::abs(closed)));
}

TEST_CASE("triple insertion reproduces the vertex product") {
  VertexChain chain{{0.23, 0.41, -0.35}, {1.0, 0.5, 0.25}, {1, 0}};
  cplx closed = ffb::vertex_product(chain);
  cplx ins = ffb::vertex_triple_insertion(chain, 22);
  CHECK(std::abs(ins - closed) <= 1e-6 * std::max(1.0, std::abs(closed)));
}

TEST_CASE("charge conservation kills unbalanced chains on the insertion route") {
  // A two-vertex chain whose middle charge cannot reconcile with the vacuum
  // endpoints contributes nothing term by term.
  ffb::VertexParams v1{0.23, 1, cplx(1.0)};
  cplx acc = 0.0;
  for (const auto& j : ffb::enumerate_basis(0, 8)) {  // wrong sector on purpose
    acc += ffb::me_vertex_bruteforce({0, {}}, {0, j}, v1);
  }
  CHECK(acc == cplx(0.0));
}
