#pragma once

#include <cstdint>

namespace mosh2d {

// Physical inputs in dimensionless trap units: lengths in sqrt(hbar/m w),
// energies in hbar w, interaction strength lambda in m w^2.
struct SystemParams {
  std::int64_t n_particles;
  double lambda;
};

// Lowest admissible interaction strength, -1/(2N).  Below it the effective
// frequency sqrt(1 + 2*lambda*N) stops being real.
double lambda_lower_bound(std::int64_t n_particles);

// Throws std::domain_error naming the violated bound.
void validate(const SystemParams& p);

// Closed-form parameter set of the one-particle reduced density matrix
//   rho(r,r') = A exp(-B/2 (r^2 + r'^2) + C/2 r r' cos(phi - phi')).
// t is the geometric ratio of the occupancy spectrum, z2 the squared
// inverse length scale of the natural orbitals, s = sqrt(4B^2 - C^2).
struct DerivedParams {
  double omega;   // sqrt(1 + 2 lambda N)
  double gamma;   // (N - 1 + omega)/N
  double a_norm;  // A = omega/(pi gamma)
  double b_coef;  // B = omega/gamma + C/2
  double c_coef;  // C = ((1-omega)/N)^2 (N-1)/gamma
  double t;       // C^2/(2B + s)^2, in [0, 1)
  double z2;      // s/2
  double s;       // sqrt((2B - C)(2B + C)), with 2B - C = 2 omega/gamma
};

DerivedParams derive_params(const SystemParams& p);

// Cancellation-free companions of t.  The naive forms 1 - t, 1 + t and
// sqrt(t) lose no precision in binary64, but these rewrites stay exact
// in the strong-coupling regime where t -> 1.
double sqrt_t(const DerivedParams& d);       // C/(2B + s)
double one_minus_t(const DerivedParams& d);  // 2s/(2B + s)
double one_plus_t(const DerivedParams& d);   // 4B/(2B + s)

// beta(N) = N^{3/4} / (2^{1/4} sqrt(N - 1)); diverges at N = 1.
double beta_coefficient(std::int64_t n_particles);

// Large-coupling / large-N estimates.
struct AsymptoticEstimates {
  double eta_l_approx;         // beta L^{-1/4} - 2|l| beta^2 L^{-1/2}
  double k_eta_approx;         // 2 beta^{-1} L^{1/4}
  double condensate_occ_approx;  // 1 - sqrt(lambda/(2N))
  double beta_n;
};

// Requires lambda > 0 for the eta/K_eta expansions; throws std::domain_error.
AsymptoticEstimates asymptotic_estimates(const SystemParams& p, int l);

double asymptotic_eta(const SystemParams& p, int l);  // lambda > 0
double asymptotic_k_eta(const SystemParams& p);       // lambda > 0
// Large-N estimate of the condensate deficit 1 - lambda_00; lambda >= 0.
double condensate_deficit_large_n(const SystemParams& p);

}  // namespace mosh2d
