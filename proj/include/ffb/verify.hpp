#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

namespace ffb {

using cplx = std::complex<double>;

struct VerifyCase {
  std::string id;
  std::string inputs;
  cplx lhs = 0.0;
  cplx rhs = 0.0;
  double residual = 0.0;
  bool pass = false;
};

struct VerifySummary {
  int total = 0;
  int passed = 0;
  int failed = 0;
  double max_residual = 0.0;
};

struct VerifyReport {
  std::string suite;
  std::map<std::string, std::string> params;
  std::vector<VerifyCase> cases;
  VerifySummary summary;
  std::vector<std::string> notes;

  bool all_pass() const { return summary.failed == 0 && summary.total > 0; }
};

struct VerifyOptions {
  int max_degree = 8;
  int charge_window = 2;
  std::vector<cplx> nus;      // defaults set by the runner when empty
  std::vector<cplx> omegas;
  int r_min = -2, r_max = 2;  // vertex shift range
  int shift_degree = 6;       // lemma fast-path grid
  int shift_rmax = 3;
  int index_max = 5;          // contour integral indices
  int points_per_circle = 512;
  double tol = 1e-10;
  double tol_integrals = 1e-8;
  double tol_restricted_r2 = 1e-6;
  double tol_restricted_r3 = 1e-5;
  int restricted_degree_r2 = 20;
  int restricted_degree_r3 = 16;
  int insertion_degree = 24;
  double tol_barnes = 1e-9;
  double tol_commutators = 1e-12;
  double tol_correspondence = 1e-12;
  int threads = 0;  // 0 = hardware concurrency
};

const std::vector<std::string>& known_suites();

// Runs the named property suite.  Throws std::invalid_argument for an
// unknown suite name.
VerifyReport run_suite(const std::string& suite, const VerifyOptions& opt);

void finalize(VerifyReport& report);

}  // namespace ffb
