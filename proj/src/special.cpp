#include "mosh2d/special.hpp"

#include <cmath>
#include <stdexcept>

namespace mosh2d {

double laguerre(int n, double alpha, double x) {
  if (n < 0) throw std::invalid_argument("laguerre requires n >= 0");
  if (alpha <= -1.0) throw std::invalid_argument("laguerre requires alpha > -1");
  if (n == 0) return 1.0;
  double lm1 = 1.0;             // L_0
  double lc = 1.0 + alpha - x;  // L_1
  for (int k = 1; k < n; ++k) {
    const double lp1 = ((2.0 * k + 1.0 + alpha - x) * lc - (k + alpha) * lm1) / (k + 1.0);
    lm1 = lc;
    lc = lp1;
  }
  return lc;
}

std::vector<double> laguerre_sequence(int n_max, double alpha, double x) {
  if (n_max < 0) throw std::invalid_argument("laguerre requires n >= 0");
  std::vector<double> out(static_cast<std::size_t>(n_max) + 1);
  out[0] = 1.0;
  if (n_max == 0) return out;
  out[1] = 1.0 + alpha - x;
  for (int k = 1; k < n_max; ++k)
    out[k + 1] = ((2.0 * k + 1.0 + alpha - x) * out[k] - (k + alpha) * out[k - 1]) / (k + 1.0);
  return out;
}

namespace detail {

double bessel_i_scaled_series(int l, double x) {
  // e^{-x} sum_k (x/2)^{2k+l} / (k! (k+l)!); all terms positive.
  const double q = 0.25 * x * x;
  double term = std::exp(l * std::log(0.5 * x) - std::lgamma(l + 1.0) - x);
  double sum = term;
  for (int k = 1; k < 500; ++k) {
    term *= q / (static_cast<double>(k) * (k + l));
    sum += term;
    if (term < sum * 1e-18) break;
  }
  return sum;
}

double bessel_i_scaled_miller(int l, double x) {
  // Downward recurrence I_{k-1} = I_{k+1} + (2k/x) I_k from a start order
  // high enough that e^{-x} I_M is negligible (~exp(-M^2/2x) for M < x),
  // normalized by e^{-x}(I_0 + 2 sum_{k>=1} I_k) = 1.
  const int start = std::max(l, static_cast<int>(std::ceil(10.0 * std::sqrt(x)))) + 40;
  double fp = 0.0;   // f_{k+1}
  double fc = 1.0;   // f_k, arbitrary scale fixed by the sum rule
  double sum = 0.0;  // 2 sum_{k>=1} f_k, accumulated on the way down
  double fl = (l == start) ? fc : 0.0;
  for (int k = start; k >= 1; --k) {
    const double fm = fp + (2.0 * k / x) * fc;
    sum += 2.0 * fc;
    fp = fc;
    fc = fm;
    if (k - 1 == l) fl = fc;
    if (std::abs(fc) > 1e250) {  // rescale; the ratio f_l/norm is invariant
      fc *= 1e-250;
      fp *= 1e-250;
      sum *= 1e-250;
      fl *= 1e-250;
    }
  }
  return fl / (fc + sum);
}

}  // namespace detail

double bessel_i_scaled(int l, double x) {
  l = std::abs(l);
  if (x < 0.0 || !std::isfinite(x))
    throw std::invalid_argument("bessel_i_scaled requires finite x >= 0");
  if (x == 0.0) return (l == 0) ? 1.0 : 0.0;
  return (x <= 30.0) ? detail::bessel_i_scaled_series(l, x)
                     : detail::bessel_i_scaled_miller(l, x);
}

}  // namespace mosh2d
