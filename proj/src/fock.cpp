#include "ffb/fock.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace ffb {

namespace {

bool strictly_increasing_positive(const std::vector<int>& v) {
  int prev = 0;
  for (int x : v) {
    if (x <= prev) return false;
    prev = x;
  }
  return true;
}

// Index of x in sorted v, or -1.
int find_sorted(const std::vector<int>& v, int x) {
  auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it == v.end() || *it != x) return -1;
  return static_cast<int>(it - v.begin());
}

int count_less(const std::vector<int>& v, int x) {
  return static_cast<int>(std::lower_bound(v.begin(), v.end(), x) - v.begin());
}

int count_greater(const std::vector<int>& v, int x) {
  return static_cast<int>(v.end() - std::upper_bound(v.begin(), v.end(), x));
}

}  // namespace

int ParticleHoleSet::degree() const {
  return std::accumulate(particles.begin(), particles.end(), 0) +
         std::accumulate(holes.begin(), holes.end(), 0);
}

bool ParticleHoleSet::operator<(const ParticleHoleSet& o) const {
  int da = degree(), db = o.degree();
  if (da != db) return da < db;
  if (particles != o.particles) return particles < o.particles;
  return holes < o.holes;
}

std::string ParticleHoleSet::str() const {
  std::ostringstream os;
  os << "{p=";
  for (size_t i = 0; i < particles.size(); ++i) os << (i ? "," : "") << particles[i];
  os << ";h=";
  for (size_t i = 0; i < holes.size(); ++i) os << (i ? "," : "") << holes[i];
  os << "}";
  return os.str();
}

void validate(const ParticleHoleSet& s) {
  if (!strictly_increasing_positive(s.particles) || !strictly_increasing_positive(s.holes)) {
    throw std::invalid_argument("ParticleHoleSet: entries must be strictly increasing and >= 1");
  }
}

FockVector FockVector::basis_state(const ParticleHoleSet& s, cplx amp) {
  validate(s);
  FockVector v(s.charge());
  v.terms_[s] = amp;
  return v;
}

void FockVector::add(const ParticleHoleSet& s, cplx amp) {
  if (terms_.empty() && s.charge() != charge_) charge_ = s.charge();
  if (s.charge() != charge_) throw sector_mismatch("FockVector::add: charge mismatch");
  auto [it, inserted] = terms_.try_emplace(s, amp);
  if (!inserted) it->second += amp;
}

void FockVector::prune(double tol) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (std::abs(it->second) <= tol) it = terms_.erase(it);
    else ++it;
  }
}

FockVector& FockVector::operator*=(cplx c) {
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

FockVector& FockVector::operator+=(const FockVector& o) {
  if (!o.empty() && !empty() && o.charge_ != charge_)
    throw sector_mismatch("FockVector::operator+=: charge mismatch");
  if (empty()) charge_ = o.charge_;
  for (const auto& [k, v] : o.terms_) add(k, v);
  return *this;
}

cplx FockVector::coeff(const ParticleHoleSet& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? cplx(0.0) : it->second;
}

double FockVector::norm_inf() const {
  double m = 0.0;
  for (const auto& [k, v] : terms_) m = std::max(m, std::abs(v));
  return m;
}

int FockVector::max_degree() const {
  int d = 0;
  for (const auto& [k, v] : terms_) d = std::max(d, k.degree());
  return d;
}

FockVector operator*(cplx c, FockVector v) {
  v *= c;
  return v;
}

FockVector operator+(FockVector a, const FockVector& b) {
  a += b;
  return a;
}

FockVector operator-(FockVector a, const FockVector& b) {
  a += (cplx(-1.0) * b);
  return a;
}

std::vector<ParticleHoleSet> enumerate_basis(int charge, int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("enumerate_basis: max_degree must be >= 0");
  // Strictly decreasing-part compositions: enumerate all strictly increasing
  // positive sequences with given sum bound, recursively.
  std::vector<std::vector<int>> seqs_by_sum;  // flattened below
  struct Gen {
    std::vector<std::pair<std::vector<int>, int>> out;  // (sequence, sum)
    int bound;
    void rec(std::vector<int>& cur, int next_min, int sum) {
      out.emplace_back(cur, sum);
      for (int x = next_min; sum + x <= bound; ++x) {
        cur.push_back(x);
        rec(cur, x + 1, sum + x);
        cur.pop_back();
      }
    }
  };
  Gen g;
  g.bound = max_degree;
  std::vector<int> cur;
  g.rec(cur, 1, 0);

  std::vector<ParticleHoleSet> result;
  for (const auto& [ps, psum] : g.out) {
    for (const auto& [hs, hsum] : g.out) {
      if (psum + hsum > max_degree) continue;
      if (static_cast<int>(ps.size()) - static_cast<int>(hs.size()) != charge) continue;
      result.push_back({ps, hs});
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

FockVector apply_psi(int j, const FockVector& v) {
  FockVector out(v.sector_charge() - 1);
  for (const auto& [s, amp] : v.terms()) {
    if (j >= 0) {
      // Creates particle p = j+1 unless present.
      const int p = j + 1;
      if (find_sorted(s.particles, p) >= 0) continue;
      int crossings = static_cast<int>(s.holes.size()) + count_greater(s.particles, p);
      ParticleHoleSet t = s;
      t.particles.insert(std::upper_bound(t.particles.begin(), t.particles.end(), p), p);
      out.add(t, (crossings % 2 ? -amp : amp));
    } else {
      // Contracts against hole h = -j if present, else annihilates.
      const int h = -j;
      int idx = find_sorted(s.holes, h);
      if (idx < 0) continue;
      int crossings = count_less(s.holes, h);
      ParticleHoleSet t = s;
      t.holes.erase(t.holes.begin() + idx);
      out.add(t, (crossings % 2 ? -amp : amp));
    }
  }
  out.prune();
  return out;
}

FockVector apply_psi_star(int j, const FockVector& v) {
  FockVector out(v.sector_charge() + 1);
  for (const auto& [s, amp] : v.terms()) {
    if (j < 0) {
      // Creates hole h = -j unless present.
      const int h = -j;
      if (find_sorted(s.holes, h) >= 0) continue;
      int crossings = count_less(s.holes, h);
      ParticleHoleSet t = s;
      t.holes.insert(std::upper_bound(t.holes.begin(), t.holes.end(), h), h);
      out.add(t, (crossings % 2 ? -amp : amp));
    } else {
      // Contracts against particle p = j+1 if present.
      const int p = j + 1;
      int idx = find_sorted(s.particles, p);
      if (idx < 0) continue;
      int crossings = static_cast<int>(s.holes.size()) + count_greater(s.particles, p);
      ParticleHoleSet t = s;
      t.particles.erase(t.particles.begin() + idx);
      out.add(t, (crossings % 2 ? -amp : amp));
    }
  }
  out.prune();
  return out;
}

cplx inner_product(const FockVector& bra, const FockVector& ket) {
  if (!bra.empty() && !ket.empty() && bra.sector_charge() != ket.sector_charge()) {
    throw sector_mismatch("inner_product: different charge sectors");
  }
  cplx acc = 0.0;
  const auto& a = bra.terms();
  const auto& b = ket.terms();
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first < ib->first) ++ia;
    else if (ib->first < ia->first) ++ib;
    else {
      acc += ia->second * ib->second;
      ++ia;
      ++ib;
    }
  }
  return acc;
}

FockVector charged_to_canonical(const ChargedPHSet& state) {
  validate(state.ph);
  const int ell = state.base_charge;
  // |ell> built from the vacuum.
  FockVector v = FockVector::vacuum();
  if (ell > 0) {
    for (int m = 0; m < ell; ++m) v = apply_psi(m, v);
  } else if (ell < 0) {
    for (int m = -1; m >= ell; --m) v = apply_psi_star(m, v);
  }
  // |J; ell> = psi*_{ell-h_1} ... psi*_{ell-h_nh} psi_{p_np+ell-1} ... psi_{p_1+ell-1} |ell>,
  // applied rightmost first.
  for (int p : state.ph.particles) v = apply_psi(p + ell - 1, v);
  for (auto it = state.ph.holes.rbegin(); it != state.ph.holes.rend(); ++it) {
    v = apply_psi_star(ell - *it, v);
  }
  if (v.size() != 1) {
    throw std::logic_error("charged_to_canonical: word did not reduce to a single basis vector");
  }
  return v;
}

std::pair<int, ParticleHoleSet> young_to_ph(const YoungCharge& y) {
  if (y.alpha.size() != y.beta.size()) {
    throw std::invalid_argument("young_to_ph: alpha and beta must have equal length");
  }
  if (!strictly_increasing_positive(y.alpha) || !strictly_increasing_positive(y.beta)) {
    throw std::invalid_argument("young_to_ph: Frobenius coordinates must be strictly increasing, >= 1");
  }
  const int ell = y.charge;
  FockVector v = FockVector::vacuum();
  if (ell > 0) {
    for (int m = 0; m < ell; ++m) v = apply_psi(m, v);
  } else if (ell < 0) {
    for (int m = -1; m >= ell; --m) v = apply_psi_star(m, v);
  }
  // |Y; ell> = psi*_{ell-b_1} ... psi*_{ell-b_d} psi_{ell+a_d-1} ... psi_{ell+a_1-1} |ell>.
  for (int a : y.alpha) v = apply_psi(ell + a - 1, v);
  for (auto it = y.beta.rbegin(); it != y.beta.rend(); ++it) v = apply_psi_star(ell - *it, v);
  if (v.size() != 1) throw std::logic_error("young_to_ph: word did not reduce");
  const auto& [set, amp] = *v.terms().begin();
  return {amp.real() > 0 ? 1 : -1, set};
}

namespace {

// Frobenius coordinates of the canonical set J with charge L >= 0.
YoungCharge frobenius_from_canonical(const ParticleHoleSet& j, int L) {
  YoungCharge y;
  y.charge = L;
  // Particles <= L stay inside the filled block; particles above L give alpha.
  std::vector<int> small, alpha;
  for (int p : j.particles) (p <= L ? small : alpha).push_back(p);
  for (int& a : alpha) a -= L;
  // Missing slots of [1..L]: reflected complement gives the leading betas.
  std::vector<int> ktilde;
  for (int m = 1; m <= L; ++m) {
    if (std::find(small.begin(), small.end(), m) == small.end()) ktilde.push_back(L + 1 - m);
  }
  std::sort(ktilde.begin(), ktilde.end());
  std::vector<int> beta = ktilde;
  for (int h : j.holes) beta.push_back(h + L);
  y.alpha = alpha;
  y.beta = beta;
  return y;
}

}  // namespace

YoungCharge ph_to_young(const ChargedPHSet& state) {
  FockVector canon = charged_to_canonical(state);
  const ParticleHoleSet& j = canon.terms().begin()->first;
  const int L = j.charge();
  YoungCharge y;
  if (L >= 0) {
    y = frobenius_from_canonical(j, L);
  } else {
    // Particle-hole duality: swap roles, transpose the diagram.
    ParticleHoleSet swapped{j.holes, j.particles};
    YoungCharge t = frobenius_from_canonical(swapped, -L);
    y.alpha = t.beta;
    y.beta = t.alpha;
    y.charge = L;
  }
  return y;
}

std::pair<int, ChargedPHSet> shift_apply_oracle(int r, const ChargedPHSet& state) {
  FockVector canon = charged_to_canonical(state);
  const auto& [j0, amp0] = *canon.terms().begin();
  const int s0 = amp0.real() > 0 ? 1 : -1;
  const int L = j0.charge();

  YoungCharge y = ph_to_young({0, j0});
  auto [sy, j0check] = young_to_ph(y);
  if (!(j0check == j0)) throw std::logic_error("shift_apply_oracle: Frobenius round trip failed");

  YoungCharge shifted = y;
  shifted.charge = L + r;
  auto [sy2, j1] = young_to_ph(shifted);
  return {s0 * sy * sy2, ChargedPHSet{0, j1}};
}

std::pair<int, ParticleHoleSet> shift_apply_lemma(int r, const ParticleHoleSet& state) {
  if (r < 0) throw std::invalid_argument("shift_apply_lemma: requires r >= 0");
  validate(state);
  const auto& k = state.particles;
  const auto& t = state.holes;
  const int nk = static_cast<int>(k.size());
  const int nt = static_cast<int>(t.size());
  if (r == 0) return {1, state};

  // q holes inside [1..r].
  int q = count_less(t, r + 1);
  // ttilde = complement of {r+1-t_a}_{a<=q} in [1..r], increasing.
  std::vector<bool> taken(r + 1, false);
  for (int a = 0; a < q; ++a) taken[r + 1 - t[a]] = true;
  std::vector<int> ttilde;
  for (int m = 1; m <= r; ++m) {
    if (!taken[m]) ttilde.push_back(m);
  }
  // Translated set.
  ParticleHoleSet out;
  out.particles = ttilde;
  for (int ka : k) out.particles.push_back(ka + r);
  for (int a = q; a < nt; ++a) out.holes.push_back(t[a] - r);

  // Signature of sigma_r: image (r-t_q+1, ..., r-t_1+1, ttilde_{r-q}, ..., ttilde_1).
  std::vector<int> img;
  for (int a = q - 1; a >= 0; --a) img.push_back(r - t[a] + 1);
  for (int a = static_cast<int>(ttilde.size()) - 1; a >= 0; --a) img.push_back(ttilde[a]);
  int inversions = 0;
  for (size_t i = 0; i < img.size(); ++i) {
    for (size_t jj = i + 1; jj < img.size(); ++jj) {
      if (img[i] > img[jj]) ++inversions;
    }
  }
  long exponent = static_cast<long>(q) * (nk + nt - q) + inversions +
                  static_cast<long>(r) * (r + 1) / 2;
  return {exponent % 2 ? -1 : 1, out};
}

}  // namespace ffb
