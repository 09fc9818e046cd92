#pragma once

#include <vector>

#include "mosh2d/params.hpp"
#include "mosh2d/quadrature.hpp"

namespace mosh2d {

// Eigenvalues of a symmetric n x n matrix (row-major), descending, by
// cyclic Jacobi rotations (off-diagonal Frobenius norm < 1e-14 ||A||,
// at most 30 sweeps; throws std::runtime_error on exhaustion).  When
// eigenvectors is non-null, row k holds the eigenvector of eigenvalue k.
std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n,
                                       std::vector<double>* eigenvectors = nullptr);

// R_max = max(sqrt(ln(1/eps)/(B - C/2)), 1.5 sqrt(4 n_max + 2 l_max + 2)/z):
// the kernel diagonal has decayed below eps*A and the classical turning
// point of the highest requested orbital is cleared with 50% margin.
double choose_radial_domain(const DerivedParams& d, double epsilon, int n_max,
                            int l_max);

struct NystromResult {
  int l;
  QuadratureRule grid;
  std::vector<double> eigenvalues;  // descending
  double r_max;
  int m;
  double resolution_defect;  // max eigenvalue shift at 2m nodes; NaN if skipped
};

// Discretizes the radial eigenproblem of partial wave l on an m-point
// Gauss-Legendre grid over [0, r_max] via the symmetrized matrix
//   M_ij = sqrt(w_i r_i) rho_l(r_i, r_j) sqrt(w_j r_j),
// whose spectrum approximates the occupancies lambda_{nl}.  Requires m >= 8.
// with_refinement re-solves at 2m nodes to fill resolution_defect.
NystromResult nystrom_spectrum(const DerivedParams& d, int l, int m,
                               double r_max, bool with_refinement = false);

}  // namespace mosh2d
