#pragma once

#include <complex>
#include <vector>

#include "mosh2d/params.hpp"

namespace mosh2d {

// Radius in units sqrt(hbar/m w); angle reduced to [0, 2 pi) on
// construction.  The kernel depends on the angles only through
// cos(phi - phi'), so the reduction introduces no branch cuts.
struct PolarPoint {
  double r;
  double phi;
  PolarPoint(double r_, double phi_);
};

struct OrbitalIndex {
  int n;  // radial quantum number, >= 0
  int l;  // angular momentum quantum number
  OrbitalIndex(int n_, int l_);
};

// Radial natural orbital
//   v_{nl}(r) = sqrt(2 n! z^2/(n+|l|)!) (zr)^{|l|} e^{-z^2 r^2/2} L_n^{|l|}(z^2 r^2),
// normalized as int_0^inf v^2 r dr = 1.  The factorial ratio is carried in
// log space; n + |l| may exceed 170.
double radial_orbital(const DerivedParams& d, const OrbitalIndex& idx, double r);

// v_{0l}(r) .. v_{n_max,l}(r) sharing one Laguerre recurrence pass.
std::vector<double> radial_orbital_sequence(const DerivedParams& d, int l,
                                            double r, int n_max);

// u_{nl}(r, phi) = v_{nl}(r) e^{i l phi} / sqrt(2 pi).
std::complex<double> natural_orbital(const DerivedParams& d,
                                     const OrbitalIndex& idx,
                                     const PolarPoint& p);

// Full kernel rho(r, r') = A exp(-B/2 (r^2+r'^2) + C/2 r r' cos(phi-phi')).
// Symmetric under argument swap bit-for-bit.
double rdm_kernel(const DerivedParams& d, const PolarPoint& p,
                  const PolarPoint& q);

// Partial wave rho_l(r, r') = 2 A pi exp(-B/2 (r^2+r'^2)) I_l(C r r'/2),
// evaluated in the combined form
//   2 A pi exp(C r r'/2 - B/2 (r^2+r'^2)) [e^{-x} I_l(x)],  x = C r r'/2,
// whose exponent is <= 0 because 2B > C; it never overflows.
double rdm_partial(const DerivedParams& d, int l, double r1, double r2);

// Truncated Schmidt sum rho_0/2pi + sum_{l=1}^{l_max} rho_l cos(l dphi)/pi
// with each rho_l truncated at n_max.
double reconstruct_rdm(const DerivedParams& d, const PolarPoint& p,
                       const PolarPoint& q, int n_max, int l_max);

}  // namespace mosh2d
