#pragma once

#include <vector>

namespace mosh2d {

struct QuadratureRule {
  std::vector<double> nodes;    // strictly increasing inside (lo, hi)
  std::vector<double> weights;  // positive; sum = hi - lo
  double lo;
  double hi;
};

// m-point Gauss-Legendre rule on [lo, hi].  Nodes from Newton iteration on
// P_m with the cosine initial guess; throws std::runtime_error if a node
// fails to converge within 100 steps.
QuadratureRule gauss_legendre(int m, double lo, double hi);

template <class F>
double integrate(const QuadratureRule& q, F&& f) {
  double acc = 0.0;
  for (std::size_t i = 0; i < q.nodes.size(); ++i)
    acc += q.weights[i] * f(q.nodes[i]);
  return acc;
}

}  // namespace mosh2d
