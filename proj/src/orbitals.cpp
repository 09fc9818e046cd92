#include "mosh2d/orbitals.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mosh2d/special.hpp"
#include "mosh2d/spectrum.hpp"

namespace mosh2d {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
}

PolarPoint::PolarPoint(double r_, double phi_) : r(r_), phi(phi_) {
  if (!(r >= 0.0) || !std::isfinite(r))
    throw std::invalid_argument("PolarPoint requires finite r >= 0");
  if (!std::isfinite(phi)) throw std::invalid_argument("PolarPoint requires finite phi");
  phi = std::fmod(phi, two_pi);
  if (phi < 0.0) phi += two_pi;
  if (phi >= two_pi) phi = 0.0;  // fmod(-eps) + 2pi can round up to 2pi
}

OrbitalIndex::OrbitalIndex(int n_, int l_) : n(n_), l(l_) {
  if (n < 0) throw std::invalid_argument("OrbitalIndex requires n >= 0");
}

double radial_orbital(const DerivedParams& d, const OrbitalIndex& idx, double r) {
  if (!(r >= 0.0)) throw std::invalid_argument("radial_orbital requires r >= 0");
  const int al = std::abs(idx.l);
  const double x = d.z2 * r * r;
  // log norm = (ln(2 z^2) + ln n! - ln (n+|l|)!)/2
  double expo = 0.5 * (std::log(2.0 * d.z2) + std::lgamma(idx.n + 1.0) -
                       std::lgamma(idx.n + al + 1.0)) -
                0.5 * x;
  if (al > 0) {
    if (x == 0.0) return 0.0;  // centrifugal factor (zr)^{|l|}
    expo += 0.5 * al * std::log(x);
  }
  return std::exp(expo) * laguerre(idx.n, al, x);
}

std::vector<double> radial_orbital_sequence(const DerivedParams& d, int l,
                                            double r, int n_max) {
  if (!(r >= 0.0)) throw std::invalid_argument("radial_orbital requires r >= 0");
  if (n_max < 0) throw std::invalid_argument("radial_orbital requires n >= 0");
  const int al = std::abs(l);
  const double x = d.z2 * r * r;
  std::vector<double> out(static_cast<std::size_t>(n_max) + 1, 0.0);
  double ang = -0.5 * x;
  if (al > 0) {
    if (x == 0.0) return out;
    ang += 0.5 * al * std::log(x);
  }
  const std::vector<double> lag = laguerre_sequence(n_max, al, x);
  // running log of the norm ratio n!/(n+|l|)!
  double log_norm = 0.5 * (std::log(2.0 * d.z2) - std::lgamma(al + 1.0));
  for (int n = 0; n <= n_max; ++n) {
    out[n] = std::exp(log_norm + ang) * lag[n];
    log_norm += 0.5 * (std::log(n + 1.0) - std::log(n + al + 1.0));
  }
  return out;
}

std::complex<double> natural_orbital(const DerivedParams& d,
                                     const OrbitalIndex& idx,
                                     const PolarPoint& p) {
  const double v = radial_orbital(d, idx, p.r) / std::sqrt(two_pi);
  const double arg = idx.l * p.phi;
  return {v * std::cos(arg), v * std::sin(arg)};
}

double rdm_kernel(const DerivedParams& d, const PolarPoint& p,
                  const PolarPoint& q) {
  // cos is even, so evaluating on |dphi| makes the swap symmetry bitwise.
  const double c = std::cos(std::abs(p.phi - q.phi));
  const double expo = -0.5 * d.b_coef * (p.r * p.r + q.r * q.r) +
                      0.5 * d.c_coef * p.r * q.r * c;
  return d.a_norm * std::exp(expo);
}

double rdm_partial(const DerivedParams& d, int l, double r1, double r2) {
  if (!(r1 >= 0.0 && r2 >= 0.0))
    throw std::invalid_argument("rdm_partial requires r, r' >= 0");
  const double x = 0.5 * d.c_coef * r1 * r2;
  // exponent <= -(B - C/2)(r^2 + r'^2)/2 <= 0 since 2B > C: overflow-free
  const double expo = x - 0.5 * d.b_coef * (r1 * r1 + r2 * r2);
  return 2.0 * d.a_norm * std::numbers::pi * std::exp(expo) *
         bessel_i_scaled(l, x);
}

double reconstruct_rdm(const DerivedParams& d, const PolarPoint& p,
                       const PolarPoint& q, int n_max, int l_max) {
  if (n_max < 0 || l_max < 0)
    throw std::invalid_argument("reconstruct_rdm requires cutoffs >= 0");
  const double dphi = p.phi - q.phi;
  double total = 0.0;
  for (int l = 0; l <= l_max; ++l) {
    const std::vector<double> vp = radial_orbital_sequence(d, l, p.r, n_max);
    const std::vector<double> vq = radial_orbital_sequence(d, l, q.r, n_max);
    double partial = 0.0;
    for (int n = 0; n <= n_max; ++n)
      partial += occupancy(d, n, l) * vp[n] * vq[n];
    if (l == 0)
      total += partial / two_pi;
    else
      total += partial * std::cos(l * dphi) / std::numbers::pi;
  }
  return total;
}

}  // namespace mosh2d
