#pragma once

#include <stdexcept>
#include <string>

namespace ffb {

// Gamma/Barnes argument sitting on a pole or zero of the closed form.
struct pole_error : std::domain_error {
  using std::domain_error::domain_error;
};

// Bilinear pairing of vectors from different charge sectors.
struct sector_mismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Contour radii violating the ordering the integrand requires.
struct ordering_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Argument outside the domain of a closed form (moduli ordering, |z|<1, ...).
struct domain_violation : std::domain_error {
  using std::domain_error::domain_error;
};

// Evaluation point outside the solver's interpolation range.
struct range_error : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct missing_amplitude : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct not_critical : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct singular_kernel : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct convergence_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct identity_violation : std::runtime_error {
  double residual;
  identity_violation(const std::string& what, double r)
      : std::runtime_error(what + " (residual " + std::to_string(r) + ")"), residual(r) {}
};

}  // namespace ffb
