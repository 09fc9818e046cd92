#include "mosh2d/spectrum.hpp"

#include <cfloat>
#include <cmath>
#include <numbers>
#include <sstream>

namespace mosh2d {

namespace {

double pow_t(double t, double e) {
  // t^e with the log form for large exponents; the direct pow drifts into
  // gradual underflow there.
  double v = (e > 64.0) ? std::exp(e * std::log(t)) : std::pow(t, e);
  if (v < DBL_MIN) return 0.0;  // flush subnormals to an exact zero
  return v;
}

void check_epsilon(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw std::invalid_argument("epsilon must lie in (0, 1)");
}

}  // namespace

double occupancy(const DerivedParams& d, int n, int l) {
  if (n < 0) throw std::invalid_argument("occupancy requires n >= 0");
  if (d.t == 0.0) return (n == 0 && l == 0) ? 1.0 : 0.0;
  const double lam00 =
      std::numbers::pi * d.a_norm * one_minus_t(d) / d.z2;
  return lam00 * pow_t(d.t, n + 0.5 * std::abs(l));
}

double collective_occupancy(const DerivedParams& d, int l) {
  if (d.t == 0.0) return (l == 0) ? 1.0 : 0.0;
  const double eta0 = std::numbers::pi * d.a_norm / d.z2;
  return eta0 * pow_t(sqrt_t(d), std::abs(l));
}

double participation_total(const DerivedParams& d) {
  if (d.t == 0.0) return 1.0;
  const double pa = std::numbers::pi * d.a_norm;
  const double h = d.s / (2.0 * pa);
  return h * h;
}

double participation_collective(const DerivedParams& d) {
  if (d.t == 0.0) return 1.0;
  const double pa = std::numbers::pi * d.a_norm;
  return d.s * d.s * d.s / (8.0 * d.b_coef * pa * pa);
}

double participation_fragment(const DerivedParams& d) {
  return 2.0 * d.b_coef / d.s;
}

double spectrum_tail(const DerivedParams& d, int n_max, int l_max) {
  if (n_max < 0 || l_max < 0)
    throw std::invalid_argument("tail cutoffs must be non-negative");
  if (d.t == 0.0) return 0.0;
  const double u = sqrt_t(d);
  // 1 - (1 - t^{n+1}) (1 - 2 u^{l+1}/(1+u)): all terms positive, no
  // cancellation.
  const double rn = pow_t(d.t, n_max + 1.0);
  const double gl = 2.0 * pow_t(u, l_max + 1.0) / (1.0 + u);
  return rn + (1.0 - rn) * gl;
}

TailCutoffs cutoffs_for_tail(const DerivedParams& d, double epsilon) {
  check_epsilon(epsilon);
  if (d.t == 0.0) return TailCutoffs{0, 0, 0.0};

  const double t = d.t;
  const double u = sqrt_t(d);
  const double log_t = std::log(t);
  const double log_u = std::log(u);

  // Angular tail 2 u^{l+1}/(1+u): its floor cutoff l_star is the smallest l
  // that fits strictly inside epsilon; the per-n minimal l plateaus there as
  // the radial tail t^{n+1} dies out.
  const auto angular_tail = [&](long l) {
    return 2.0 * pow_t(u, l + 1.0) / (1.0 + u);
  };
  long l_star = std::max(
      0L, std::lround(std::ceil(std::log(epsilon * (1.0 + u) / 2.0) / log_u)) - 1);
  while (angular_tail(l_star) >= epsilon) ++l_star;
  while (l_star > 0 && angular_tail(l_star - 1) < epsilon) --l_star;

  // Smallest n with t^{n+1} < epsilon; below it no l cutoff can help.
  long n = std::max(0L, std::lround(std::ceil(std::log(epsilon) / log_t)) - 1);
  while (pow_t(t, n + 1.0) >= epsilon) ++n;

  long best_n = -1, best_l = -1;
  double best_size = 0.0, best_tail = 0.0;
  for (;; ++n) {
    // Minimal l for this n: 2 u^{l+1}/(1+u) <= (eps - t^{n+1})/(1 - t^{n+1}).
    const double rn = pow_t(t, n + 1.0);
    const double budget = (epsilon - rn) / (1.0 - rn);
    long l = l_star;
    if (angular_tail(l) > budget) {
      l = std::max(l_star, std::lround(std::ceil(
                               std::log(budget * (1.0 + u) / 2.0) / log_u)) - 1);
      while (spectrum_tail(d, static_cast<int>(n), static_cast<int>(l)) > epsilon) ++l;
      while (l > l_star &&
             spectrum_tail(d, static_cast<int>(n), static_cast<int>(l - 1)) <= epsilon)
        --l;
    }
    const double size = (n + 1.0) * (2.0 * l + 1.0);
    if (best_n < 0 || size < best_size) {
      best_n = n;
      best_l = l;
      best_size = size;
      best_tail = spectrum_tail(d, static_cast<int>(n), static_cast<int>(l));
    }
    if (l == l_star) break;  // the l floor is reached; larger n only adds rows
  }
  return TailCutoffs{static_cast<int>(best_n), static_cast<int>(best_l), best_tail};
}

OccupancyTable build_occupancy_table(const DerivedParams& d, double epsilon,
                                     std::size_t max_entries) {
  const TailCutoffs cut = cutoffs_for_tail(d, epsilon);
  const std::size_t count = static_cast<std::size_t>(cut.n_max + 1) *
                            static_cast<std::size_t>(2 * cut.l_max + 1);
  if (count > max_entries) {
    std::ostringstream msg;
    msg << "occupancy table would need " << count << " entries (n_max="
        << cut.n_max << ", l_max=" << cut.l_max << "), limit is " << max_entries;
    throw resource_limit_error(msg.str());
  }
  OccupancyTable table;
  table.params = d;
  table.n_max = cut.n_max;
  table.l_max = cut.l_max;
  table.tail_mass = cut.tail_mass;
  table.entries.reserve(count);
  for (int n = 0; n <= cut.n_max; ++n)
    for (int l = -cut.l_max; l <= cut.l_max; ++l)
      table.entries.push_back({n, l, occupancy(d, n, l)});
  return table;
}

}  // namespace mosh2d
