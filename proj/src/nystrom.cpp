#include "mosh2d/nystrom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "mosh2d/orbitals.hpp"

namespace mosh2d {

namespace {

double off_diagonal_norm(const std::vector<double>& a, int n) {
  double acc = 0.0;
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) acc += a[p * n + q] * a[p * n + q];
  return std::sqrt(2.0 * acc);
}

double frobenius_norm(const std::vector<double>& a) {
  double acc = 0.0;
  for (double v : a) acc += v * v;
  return std::sqrt(acc);
}

}  // namespace

std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n,
                                       std::vector<double>* eigenvectors) {
  if (n < 1) throw std::invalid_argument("jacobi_eigenvalues requires n >= 1");
  if (a.size() != static_cast<std::size_t>(n) * n)
    throw std::invalid_argument("jacobi_eigenvalues: matrix size mismatch");

  std::vector<double> q;
  if (eigenvectors) {
    q.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) q[i * n + i] = 1.0;
  }

  const double norm = frobenius_norm(a);
  const double target = 1e-14 * norm;
  bool converged = (norm == 0.0) || off_diagonal_norm(a, n) <= target;
  for (int sweep = 0; sweep < 30 && !converged; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int r = p + 1; r < n; ++r) {
        const double apq = a[p * n + r];
        if (apq == 0.0) continue;
        // Rotation angle from the classic stable parametrization.
        const double theta = 0.5 * (a[r * n + r] - a[p * n + p]) / apq;
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a[k * n + p];
          const double akq = a[k * n + r];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + r] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a[p * n + k];
          const double aqk = a[r * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[r * n + k] = s * apk + c * aqk;
        }
        if (eigenvectors) {
          for (int k = 0; k < n; ++k) {
            const double qpk = q[p * n + k];
            const double qrk = q[r * n + k];
            q[p * n + k] = c * qpk - s * qrk;
            q[r * n + k] = s * qpk + c * qrk;
          }
        }
      }
    }
    converged = off_diagonal_norm(a, n) <= target;
  }
  if (!converged)
    throw std::runtime_error("jacobi_eigenvalues: not converged in 30 sweeps");

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return a[i * n + i] > a[j * n + j]; });
  std::vector<double> eig(n);
  for (int i = 0; i < n; ++i) eig[i] = a[order[i] * n + order[i]];
  if (eigenvectors) {
    eigenvectors->assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        (*eigenvectors)[i * n + k] = q[order[i] * n + k];
  }
  return eig;
}

double choose_radial_domain(const DerivedParams& d, double epsilon, int n_max,
                            int l_max) {
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw std::invalid_argument("epsilon must lie in (0, 1)");
  if (n_max < 0 || l_max < 0)
    throw std::invalid_argument("orbital caps must be non-negative");
  const double decay = d.b_coef - 0.5 * d.c_coef;  // = omega/gamma > 0
  const double r_kernel = std::sqrt(std::log(1.0 / epsilon) / decay);
  const double r_orbital =
      1.5 * std::sqrt(4.0 * n_max + 2.0 * l_max + 2.0) / std::sqrt(d.z2);
  return std::max(r_kernel, r_orbital);
}

namespace {

std::vector<double> nystrom_eigen_once(const DerivedParams& d, int l, int m,
                                       double r_max, QuadratureRule* grid_out) {
  QuadratureRule rule = gauss_legendre(m, 0.0, r_max);
  std::vector<double> sq(m);
  for (int i = 0; i < m; ++i) sq[i] = std::sqrt(rule.weights[i] * rule.nodes[i]);
  std::vector<double> mat(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    for (int j = i; j < m; ++j) {
      const double v = sq[i] * rdm_partial(d, l, rule.nodes[i], rule.nodes[j]) * sq[j];
      mat[i * static_cast<std::size_t>(m) + j] = v;
      mat[j * static_cast<std::size_t>(m) + i] = v;
    }
  }
  if (grid_out) *grid_out = std::move(rule);
  return jacobi_eigenvalues(std::move(mat), m);
}

}  // namespace

NystromResult nystrom_spectrum(const DerivedParams& d, int l, int m,
                               double r_max, bool with_refinement) {
  if (m < 8) throw std::invalid_argument("nystrom_spectrum requires m >= 8");
  if (!(r_max > 0.0)) throw std::invalid_argument("nystrom_spectrum requires r_max > 0");
  NystromResult result;
  result.l = l;
  result.m = m;
  result.r_max = r_max;
  result.eigenvalues = nystrom_eigen_once(d, l, m, r_max, &result.grid);
  result.resolution_defect = std::numeric_limits<double>::quiet_NaN();
  if (with_refinement) {
    const std::vector<double> fine = nystrom_eigen_once(d, l, 2 * m, r_max, nullptr);
    double defect = 0.0;
    for (int i = 0; i < m; ++i)
      defect = std::max(defect, std::abs(fine[i] - result.eigenvalues[i]));
    result.resolution_defect = defect;
  }
  return result;
}

}  // namespace mosh2d
