#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "ffb/errors.hpp"

namespace ffb {

using cplx = std::complex<double>;

// Labels a basis state: strictly increasing positive particle and hole
// integers.  A particle p occupies fermion mode p-1, a hole h occupies
// mode -h.  The charge of the state is particles.size() - holes.size().
struct ParticleHoleSet {
  std::vector<int> particles;
  std::vector<int> holes;

  int charge() const { return static_cast<int>(particles.size()) - static_cast<int>(holes.size()); }
  int degree() const;
  bool operator==(const ParticleHoleSet&) const = default;
  bool operator<(const ParticleHoleSet& o) const;  // (degree, lexicographic)
  std::string str() const;
};

void validate(const ParticleHoleSet& s);

// |J; ell>: particle-hole content built on top of the charged vacuum |ell>.
struct ChargedPHSet {
  int base_charge = 0;
  ParticleHoleSet ph;

  int total_charge() const { return base_charge + ph.charge(); }
};

// Frobenius coordinates plus charge: |Y; ell>.
struct YoungCharge {
  std::vector<int> alpha;
  std::vector<int> beta;
  int charge = 0;

  bool operator==(const YoungCharge&) const = default;
};

// Finite vector in one charge sector, amplitudes over basis sets.
class FockVector {
 public:
  FockVector() = default;
  explicit FockVector(int sector_charge) : charge_(sector_charge) {}

  static FockVector vacuum() { return basis_state({}, 1.0); }
  static FockVector basis_state(const ParticleHoleSet& s, cplx amp = 1.0);

  int sector_charge() const { return charge_; }
  bool empty() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  const std::map<ParticleHoleSet, cplx>& terms() const { return terms_; }

  void add(const ParticleHoleSet& s, cplx amp);
  void prune(double tol = 0.0);
  FockVector& operator*=(cplx c);
  FockVector& operator+=(const FockVector& o);
  cplx coeff(const ParticleHoleSet& s) const;
  double norm_inf() const;
  int max_degree() const;

 private:
  int charge_ = 0;
  std::map<ParticleHoleSet, cplx> terms_;
};

FockVector operator*(cplx c, FockVector v);
FockVector operator+(FockVector a, const FockVector& b);
FockVector operator-(FockVector a, const FockVector& b);

// All sets with the given charge and degree <= max_degree, sorted by
// (degree, lexicographic), each exactly once.
std::vector<ParticleHoleSet> enumerate_basis(int charge, int max_degree);

// Exact fermion-mode actions with anticommutation signs.  psi_j annihilates
// the vacuum for j < 0, psi*_j for j >= 0.
FockVector apply_psi(int j, const FockVector& v);
FockVector apply_psi_star(int j, const FockVector& v);

// Bilinear pairing; basis states orthonormal, no conjugation of amplitudes.
cplx inner_product(const FockVector& bra, const FockVector& ket);

// Reduces the word defining |J; ell> to a single canonical basis vector.
// Returns the signed one-term vector (sign is the amplitude).
FockVector charged_to_canonical(const ChargedPHSet& state);

// Young-basis word |Y; ell> reduced to the canonical basis: (sign, set).
std::pair<int, ParticleHoleSet> young_to_ph(const YoungCharge& y);

// Inverse bijection; the returned YoungCharge satisfies
// young_to_ph(ph_to_young(state)).second == canonical set of state.
YoungCharge ph_to_young(const ChargedPHSet& state);

// Shift operator e^{rP} on |J; ell>, normative route: Young round trip with
// the sign produced by re-normal-ordering the defining words.
std::pair<int, ChargedPHSet> shift_apply_oracle(int r, const ChargedPHSet& state);

// Fast path, r >= 0, canonical states only (base_charge must be 0):
// sign (-1)^{q(n_k+n_t-q)} (-1)^{sigma_r} (-1)^{r(r+1)/2} and the
// r-translated set.  Differs from the oracle by a documented global
// r-dependent sign; see docs/sign-conventions.md.
std::pair<int, ParticleHoleSet> shift_apply_lemma(int r, const ParticleHoleSet& state);

}  // namespace ffb
