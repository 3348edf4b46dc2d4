#include "ffb/restricted.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

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

cplx principal_pow(cplx base, cplx expo) { return std::exp(expo * std::log(base)); }

int parity_sign(long e) { return (e % 2 + 2) % 2 ? -1 : 1; }

}  // namespace

void validate(const VertexChain& chain) {
  const int r = chain.order();
  if (r < 1) throw std::invalid_argument("VertexChain: need at least one vertex");
  if (chain.zs.size() != chain.nus.size()) {
    throw std::invalid_argument("VertexChain: nus and zs must have equal length");
  }
  if (chain.ells.size() + 1 != chain.nus.size()) {
    throw std::invalid_argument("VertexChain: ells must have length r-1");
  }
  for (int s = 0; s + 1 < r; ++s) {
    if (!(std::abs(chain.zs[s]) > std::abs(chain.zs[s + 1]))) {
      throw domain_violation("VertexChain: |z_s| must be strictly decreasing");
    }
  }
  if (std::abs(chain.zs.back()) <= 0.0) throw domain_violation("VertexChain: z_r must be nonzero");
}

cplx r_kernel(const ParticleHoleSet& j, cplx nu, cplx eta, cplx z) {
  if (std::abs(z) >= 1.0) throw domain_violation("r_kernel: requires |z| < 1");
  const auto& p = j.particles;
  const auto& h = j.holes;
  const int np = static_cast<int>(p.size());
  const int nh = static_cast<int>(h.size());

  cplx pref = ipow(-std::sin(M_PI * nu) * std::sin(M_PI * eta) / (M_PI * M_PI), nh);

  double rational = 1.0;
  for (int a = 0; a < np; ++a)
    for (int b = a + 1; b < np; ++b) rational *= static_cast<double>(p[a] - p[b]) * (p[a] - p[b]);
  for (int a = 0; a < nh; ++a)
    for (int b = a + 1; b < nh; ++b) rational *= static_cast<double>(h[a] - h[b]) * (h[a] - h[b]);
  for (int a = 0; a < np; ++a)
    for (int b = 0; b < nh; ++b) {
      double c = p[a] + h[b] - 1.0;
      rational /= c * c;
    }

  long zexp = 0;
  RatioSpec rs;
  for (int a = 0; a < np; ++a) {
    zexp += p[a];
    rs.numerators.push_back(static_cast<double>(p[a]) - nu);
    rs.numerators.push_back(static_cast<double>(p[a]) + eta);
    rs.denominators.push_back(cplx(static_cast<double>(p[a])));
    rs.denominators.push_back(cplx(static_cast<double>(p[a])));
  }
  for (int a = 0; a < nh; ++a) {
    zexp += h[a] - 1;
    rs.numerators.push_back(static_cast<double>(h[a]) + nu);
    rs.numerators.push_back(static_cast<double>(h[a]) - eta);
    rs.denominators.push_back(cplx(static_cast<double>(h[a])));
    rs.denominators.push_back(cplx(static_cast<double>(h[a])));
  }
  return pref * rational * ipow(z, zexp) * gamma_ratio(rs);
}

TruncatedSum restricted_sum_truncated(const VertexChain& chain, int max_degree, double tol) {
  validate(chain);
  const int r = chain.order();
  for (int s = 0; s + 1 < r; ++s) {
    if (std::abs(chain.zs[s + 1] / chain.zs[s]) > 0.7) {
      throw domain_violation("restricted_sum_truncated: |z_{s+1}/z_s| must be <= 0.7");
    }
  }
  TruncatedSum out;
  if (r == 1) {
    out.value = 1.0;
    return out;
  }
  const int slots = r - 1;

  // Per-slot sets grouped by degree, with their R-kernel values cached.
  struct SlotEntry {
    ParticleHoleSet set;
    cplx rval;
  };
  std::vector<std::vector<std::vector<SlotEntry>>> by_degree(slots);  // [slot][degree][i]
  for (int s = 0; s < slots; ++s) {
    by_degree[s].assign(max_degree + 1, {});
    cplx ratio = chain.zs[s + 1] / chain.zs[s];
    for (const auto& set : enumerate_basis(chain.ells[s], max_degree)) {
      cplx rv = r_kernel(set, chain.nus[s], chain.nus[s + 1], ratio);
      by_degree[s][set.degree()].push_back({set, rv});
    }
  }

  // Shells of fixed total degree, accumulated in increasing order.
  std::vector<double> shell_mags;
  std::vector<int> degs(slots, 0);
  const int total_max = slots * max_degree;
  for (int T = 0; T <= total_max; ++T) {
    cplx shell = 0.0;
    // Enumerate compositions of T into slot degrees.
    std::function<void(int, int, cplx, const ParticleHoleSet*)> rec =
        [&](int s, int remaining, cplx acc, const ParticleHoleSet* prev) {
          if (s == slots) {
            if (remaining == 0) shell += acc;
            return;
          }
          int lo = (s == slots - 1) ? remaining : 0;
          int hi = std::min(remaining, max_degree);
          for (int d = lo; d <= hi; ++d) {
            for (const auto& e : by_degree[s][d]) {
              cplx term = acc * e.rval;
              if (s > 0) term *= varpi(*prev, e.set, chain.nus[s]);
              rec(s + 1, remaining - d, term, &e.set);
            }
            if (s == slots - 1) break;  // d fixed to remaining
          }
        };
    rec(0, T, 1.0, nullptr);
    out.value += shell;
    shell_mags.push_back(std::abs(shell));
  }
  // Geometric tail estimate from the last two nonzero shells.
  double a1 = 0.0, a0 = 0.0;
  for (auto it = shell_mags.rbegin(); it != shell_mags.rend(); ++it) {
    if (*it > 0.0) {
      if (a1 == 0.0) a1 = *it;
      else {
        a0 = *it;
        break;
      }
    }
  }
  out.last_shell = a1;
  if (a0 > 0.0 && a1 < a0) {
    double q = a1 / a0;
    out.tail_estimate = a1 * q / (1.0 - q);
  } else {
    out.tail_estimate = a1;
  }
  if (out.last_shell > tol) {
    out.converged = false;
    out.warning = "restricted_sum_truncated: last shell magnitude " +
                  std::to_string(out.last_shell) + " exceeds tolerance";
  }
  return out;
}

cplx restricted_sum_closed(const VertexChain& chain) {
  validate(chain);
  const int r = chain.order();
  cplx acc = 1.0;
  for (int s = 1; s <= r - 1; ++s) {
    const int ell = chain.ell(s);
    const cplx nus = chain.nus[s - 1];
    const cplx nusp1 = chain.nus[s];
    cplx ratio = chain.zs[s] / chain.zs[s - 1];
    acc *= ipow(ratio, static_cast<long>(ell) * (ell + 1) / 2);
    acc *= barnes_g_ratio({1.0 + ell - nus, 1.0 + ell + nusp1}, {1.0 - nus, 1.0 + nusp1});
  }
  for (int s = 2; s <= r - 1; ++s) {
    const int ellm = chain.ell(s - 1), ell = chain.ell(s);
    const cplx nus = chain.nus[s - 1];
    acc *= barnes_g_ratio({1.0 + nus, 1.0 + (ellm - ell) + nus},
                          {1.0 - ell + nus, 1.0 + ellm - nus});
  }
  return acc * vertex_product(chain);
}

cplx vertex_product(const VertexChain& chain) {
  validate(chain);
  const int r = chain.order();
  cplx acc = 1.0;
  for (int a = 1; a <= r; ++a) {
    for (int b = a + 1; b <= r; ++b) {
      cplx xa = chain.nus[a - 1] + static_cast<double>(chain.kappa(a));
      cplx xb = chain.nus[b - 1] + static_cast<double>(chain.kappa(b));
      acc *= principal_pow(1.0 - chain.zs[b - 1] / chain.zs[a - 1], xa * xb);
    }
  }
  return acc;
}

cplx pair_product(const std::vector<cplx>& xs, const std::vector<cplx>& zs) {
  if (xs.size() != zs.size()) throw std::invalid_argument("pair_product: size mismatch");
  const int r = static_cast<int>(xs.size());
  for (int a = 0; a < r; ++a) {
    for (int b = a + 1; b < r; ++b) {
      if (std::abs(zs[b]) > std::abs(zs[a]) * (1.0 + 1e-9)) {
        throw domain_violation("pair_product: |z| must be non-increasing");
      }
      if (zs[a] == zs[b]) throw domain_violation("pair_product: coincident points");
    }
  }
  cplx acc = 1.0;
  for (int a = 0; a < r; ++a)
    for (int b = a + 1; b < r; ++b)
      acc *= principal_pow(1.0 - zs[b] / zs[a], xs[a] * xs[b]);
  return acc;
}

cplx chain_bridge_constant(const VertexChain& chain) {
  validate(chain);
  const int r = chain.order();
  cplx acc = 1.0;
  for (int s = 1; s <= r; ++s) {
    const int kap = chain.kappa(s);
    const int ellm = chain.ell(s - 1);
    const cplx nus = chain.nus[s - 1];
    acc *= barnes_g_ratio({1.0 - nus - static_cast<double>(kap)}, {1.0 - nus});
    acc *= ipow(-std::sin(M_PI * nus) / M_PI, -static_cast<long>(ellm));
    acc *= ipow(chain.zs[s - 1],
                static_cast<long>(kap) * (kap - 1) / 2 + static_cast<long>(kap) * chain.ell(s));
    acc *= parity_sign(-(static_cast<long>(ellm) * (ellm + 1) / 2) -
                       static_cast<long>(kap) * (kap + 1) / 2);
  }
  for (int s = 1; s <= r - 1; ++s) {
    acc *= ipow(chain.zs[s] / chain.zs[s - 1], chain.ell(s));
  }
  return acc;
}

cplx exchange_JplusJminus(cplx nu, cplx omega, cplx mu, cplx z) {
  if (std::abs(z / omega) >= 1.0) throw domain_violation("exchange_JplusJminus: require |z/omega| < 1");
  return principal_pow(1.0 - z / omega, mu * nu);
}

cplx vertex_pair_insertion(const VertexChain& chain, int max_degree) {
  validate(chain);
  if (chain.order() != 2) throw std::invalid_argument("vertex_pair_insertion: chain must have r = 2");
  VertexParams v1{chain.nus[0], chain.kappa(1), chain.zs[0]};
  VertexParams v2{chain.nus[1], chain.kappa(2), chain.zs[1]};
  cplx acc = 0.0;
  for (const auto& j : enumerate_basis(chain.ells[0], max_degree)) {
    ChargedPHSet mid{0, j};
    cplx left = me_vertex_bruteforce({0, {}}, mid, v1);
    if (left == cplx(0.0)) continue;
    cplx right = me_vertex_bruteforce(mid, {0, {}}, v2);
    acc += left * right;
  }
  return acc;
}

cplx vertex_triple_insertion(const VertexChain& chain, int max_degree) {
  validate(chain);
  if (chain.order() != 3) throw std::invalid_argument("vertex_triple_insertion: chain must have r = 3");
  const cplx nu1 = chain.nus[0] + static_cast<double>(chain.kappa(1));
  const cplx nu2 = chain.nus[1] + static_cast<double>(chain.kappa(2));
  const cplx z1 = chain.zs[0], z2 = chain.zs[1];
  const int k12 = chain.kappa(1) + chain.kappa(2);
  VertexParams v3{chain.nus[2], chain.kappa(3), chain.zs[2]};
  const cplx exch = exchange_JplusJminus(nu1, z1, nu2, z2);

  cplx acc = 0.0;
  for (const auto& j : enumerate_basis(chain.kappa(3), max_degree)) {
    // <J| V_3 |0>, exact.
    cplx right = me_vertex_bruteforce({0, j}, {0, {}}, v3);
    if (right == cplx(0.0)) continue;
    // <0| V_1 V_2 |J> = exch * <0| e^{J_+(nu1,z1)} e^{J_+(nu2,z2)} e^{k12 P} |J>.
    auto [sgn, shifted] = shift_apply_oracle(k12, {0, j});
    if (shifted.ph.charge() != 0) continue;
    FockVector w = FockVector::basis_state(shifted.ph, static_cast<double>(sgn));
    w = apply_exp_Jplus({nu2, z2}, w);
    w = apply_exp_Jplus({nu1, z1}, w);
    cplx left = exch * w.coeff(ParticleHoleSet{});
    acc += left * right;
  }
  return acc;
}

}  // namespace ffb
