#include "mosh2d/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mosh2d {

QuadratureRule gauss_legendre(int m, double lo, double hi) {
  if (m < 1) throw std::invalid_argument("gauss_legendre requires m >= 1");
  if (!(lo < hi)) throw std::invalid_argument("gauss_legendre requires lo < hi");

  QuadratureRule rule;
  rule.lo = lo;
  rule.hi = hi;
  rule.nodes.resize(m);
  rule.weights.resize(m);

  const double mid = 0.5 * (hi + lo);
  const double half = 0.5 * (hi - lo);
  const int pairs = (m + 1) / 2;
  for (int i = 0; i < pairs; ++i) {
    // Newton on P_m(z) from the cosine estimate of the i-th root.
    double z = std::cos(std::numbers::pi * (i + 0.75) / (m + 0.5));
    double pp = 0.0;
    bool converged = false;
    for (int it = 0; it < 100; ++it) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 0; j < m; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
      }
      pp = m * (z * p1 - p2) / (z * z - 1.0);
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) <= 1e-15) {
        converged = true;
        break;
      }
    }
    if (!converged)
      throw std::runtime_error("gauss_legendre: Newton iteration for a node "
                               "failed to converge in 100 steps");
    rule.nodes[i] = mid - half * z;
    rule.nodes[m - 1 - i] = mid + half * z;
    rule.weights[i] = 2.0 * half / ((1.0 - z * z) * pp * pp);
    rule.weights[m - 1 - i] = rule.weights[i];
  }
  if (m % 2 == 1) rule.nodes[m / 2] = mid;  // central node is exact
  return rule;
}

}  // namespace mosh2d
