#pragma once

#include <string>
#include <vector>

#include "mosh2d/params.hpp"
#include "mosh2d/quadrature.hpp"

namespace mosh2d {

// Numerical partial wave rho_l(r, r') = int_0^{2pi} rho cos(l theta) dtheta
// by the trapezoidal rule (spectrally accurate on the periodic integrand).
// Requires m_theta >= 4 (|l| + 1).  Independent of the Bessel code path.
double fourier_partial(const DerivedParams& d, int l, double r1, double r2,
                       int m_theta);

// Gram matrix of the orbitals indexed by (n, l), n <= n_cap, |l| <= l_cap,
// under the rule with radial weight r.  Entries with l != l' are zero by
// the angular factor (exact); same-l blocks are quadrature inner products.
// Index order: (n, l) with n major, l from -l_cap to l_cap.
std::vector<std::vector<double>> orthonormality_matrix(const DerivedParams& d,
                                                       int n_cap, int l_cap,
                                                       const QuadratureRule& rule);

struct CheckResult {
  std::string name;
  double deviation;
  double threshold;
  bool pass;
};

struct VerifyConfig {
  enum class Level { quick, full };
  Level level = Level::quick;
  int nystrom_m = 200;      // quadrature nodes for the eigen comparison
  int n_compare = 8;        // radial orders compared per partial wave
  int l_compare = 6;        // partial waves compared
  int m_theta = 512;        // angular quadrature points
  double tail_epsilon = 1e-10;  // truncation for table/reconstruction checks
  double t_scale = 1.0;     // test hook: scales t after derivation
};

// Confronts every closed form with machinery that shares only the
// parameter set: matching identities, spectrum normalization, Nystrom
// eigenvalues, Fourier-vs-Bessel reduction, orbital orthonormality,
// reconstruction defect, and the K = kappa K_eta identity.  Failures are
// data, not exceptions.
std::vector<CheckResult> verify_all(const SystemParams& p,
                                    const VerifyConfig& config = {});

bool all_passed(const std::vector<CheckResult>& checks);

}  // namespace mosh2d
