#include "mosh2d/params.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace mosh2d {

double lambda_lower_bound(std::int64_t n_particles) {
  return -1.0 / (2.0 * static_cast<double>(n_particles));
}

void validate(const SystemParams& p) {
  if (p.n_particles < 2) {
    std::ostringstream msg;
    msg << "n_particles must be >= 2; got " << p.n_particles;
    throw std::domain_error(msg.str());
  }
  if (!std::isfinite(p.lambda)) throw std::domain_error("lambda must be finite");
  const double lo = lambda_lower_bound(p.n_particles);
  if (p.lambda <= lo) {
    std::ostringstream msg;
    msg << "lambda must be > -1/(2N) = " << lo << "; got " << p.lambda;
    throw std::domain_error(msg.str());
  }
}

DerivedParams derive_params(const SystemParams& p) {
  validate(p);
  const double n = static_cast<double>(p.n_particles);
  const double omega = std::sqrt(1.0 + 2.0 * p.lambda * n);
  const double gamma = (n - 1.0 + omega) / n;
  const double a = omega / (std::numbers::pi * gamma);

  // omega - 1 = 2 lambda N/(1 + omega): exact rewrite, no cancellation at
  // small |lambda|; vanishes identically at lambda = 0.
  const double om1 = 2.0 * p.lambda * n / (1.0 + omega);
  const double c = (om1 / n) * (om1 / n) * (n - 1.0) / gamma;
  const double b = omega / gamma + 0.5 * c;

  // 4B^2 - C^2 = (2B - C)(2B + C) with 2B - C = 2 omega/gamma: both factors
  // positive and well conditioned, unlike the direct difference of squares.
  const double s = std::sqrt((2.0 * omega / gamma) * (2.0 * b + c));

  const double rt = c / (2.0 * b + s);
  const double t = (c > 0.0) ? rt * rt : 0.0;

  return DerivedParams{omega, gamma, a, b, c, t, 0.5 * s, s};
}

double sqrt_t(const DerivedParams& d) { return d.c_coef / (2.0 * d.b_coef + d.s); }

double one_minus_t(const DerivedParams& d) {
  return 2.0 * d.s / (2.0 * d.b_coef + d.s);
}

double one_plus_t(const DerivedParams& d) {
  return 4.0 * d.b_coef / (2.0 * d.b_coef + d.s);
}

double beta_coefficient(std::int64_t n_particles) {
  if (n_particles < 2)
    throw std::domain_error("beta(N) requires N >= 2 (diverges at N = 1)");
  const double n = static_cast<double>(n_particles);
  return std::pow(n, 0.75) / (std::pow(2.0, 0.25) * std::sqrt(n - 1.0));
}

AsymptoticEstimates asymptotic_estimates(const SystemParams& p, int l) {
  validate(p);
  if (p.lambda <= 0.0)
    throw std::domain_error("asymptotic expansions require lambda > 0");
  const double beta = beta_coefficient(p.n_particles);
  const double q = std::pow(p.lambda, -0.25);  // lambda^{-1/4}
  AsymptoticEstimates est;
  est.beta_n = beta;
  est.eta_l_approx = beta * q - 2.0 * std::abs(l) * beta * beta * q * q;
  est.k_eta_approx = 2.0 / (beta * q);
  est.condensate_occ_approx =
      1.0 - std::sqrt(p.lambda / (2.0 * static_cast<double>(p.n_particles)));
  return est;
}

double asymptotic_eta(const SystemParams& p, int l) {
  return asymptotic_estimates(p, l).eta_l_approx;
}

double asymptotic_k_eta(const SystemParams& p) {
  return asymptotic_estimates(p, 0).k_eta_approx;
}

double condensate_deficit_large_n(const SystemParams& p) {
  validate(p);
  if (p.lambda < 0.0)
    throw std::domain_error("condensate deficit estimate requires lambda >= 0");
  return std::sqrt(p.lambda / (2.0 * static_cast<double>(p.n_particles)));
}

}  // namespace mosh2d
