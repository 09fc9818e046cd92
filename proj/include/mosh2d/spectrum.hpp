#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "mosh2d/params.hpp"

namespace mosh2d {

// Occupancy lambda_{nl} = A pi t^{n + |l|/2} (1 - t)/z^2 of the natural
// orbital with radial quantum number n and angular momentum l.
// Degenerate in the sign of l; Kronecker spectrum {lambda_00 = 1} at t = 0.
double occupancy(const DerivedParams& d, int n, int l);

// eta_l = sum_n lambda_{nl} = pi A t^{|l|/2} / z^2; the fraction of
// particles carrying angular momentum l (particle count N eta_l).
double collective_occupancy(const DerivedParams& d, int l);

// K = (sum_{nl} lambda_{nl}^2)^{-1} = s^2/(4 pi^2 A^2); 1 exactly iff t = 0.
double participation_total(const DerivedParams& d);

// K_eta = (sum_l eta_l^2)^{-1} = s^3/(8 B pi^2 A^2).
double participation_collective(const DerivedParams& d);

// kappa = (1 + t)/(1 - t) = 2B/s; l-independent.
double participation_fragment(const DerivedParams& d);

// Exact tail mass 1 - sum_{n <= n_max, |l| <= l_max} lambda_{nl}, from the
// closed geometric sums.  Never enumerates the spectrum.
double spectrum_tail(const DerivedParams& d, int n_max, int l_max);

struct TailCutoffs {
  int n_max;
  int l_max;
  double tail_mass;
};

// Smallest cutoffs (by table size (n_max+1)(2 l_max+1), ties to smaller
// n_max) whose exact tail mass is <= epsilon.  Requires 0 < epsilon < 1.
TailCutoffs cutoffs_for_tail(const DerivedParams& d, double epsilon);

class resource_limit_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OccupancyTable {
  DerivedParams params;
  int n_max;
  int l_max;
  struct Entry {
    int n;
    int l;
    double occupancy;
  };
  std::vector<Entry> entries;  // all (n, l), 0 <= n <= n_max, |l| <= l_max
  double tail_mass;
};

// Throws resource_limit_error when the cutoffs for epsilon would exceed
// max_entries table entries.
OccupancyTable build_occupancy_table(const DerivedParams& d, double epsilon,
                                     std::size_t max_entries = 1000000);

}  // namespace mosh2d
