#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "mosh2d/params.hpp"
#include "mosh2d/spectrum.hpp"
#include "testutil.hpp"

using mosh2d::DerivedParams;
using mosh2d::derive_params;
using testutil::rel_err;

namespace {

// Brute-force cutoff oracle: enumerate occupancies over a generous grid and
// locate the smallest table (by entry count, ties to smaller n_max) whose
// enumerated mass reaches 1 - epsilon.  Independent of the closed-form
// geometric tails used by cutoffs_for_tail.
mosh2d::TailCutoffs brute_cutoffs(const DerivedParams& d, double eps, int n_big,
                                  int l_big) {
  std::vector<std::vector<double>> cum(n_big + 1, std::vector<double>(l_big + 1));
  for (int n = 0; n <= n_big; ++n) {
    double row = mosh2d::occupancy(d, n, 0);
    for (int l = 0; l <= l_big; ++l) {
      if (l > 0) row += 2.0 * mosh2d::occupancy(d, n, l);
      cum[n][l] = row + (n > 0 ? cum[n - 1][l] : 0.0);
    }
  }
  long best_n = -1, best_l = -1;
  double best_size = 0.0;
  for (int n = 0; n <= n_big; ++n)
    for (int l = 0; l <= l_big; ++l)
      if (1.0 - cum[n][l] <= eps) {
        const double size = (n + 1.0) * (2.0 * l + 1.0);
        if (best_n < 0 || size < best_size ||
            (size == best_size && n < best_n)) {
          best_n = n;
          best_l = l;
          best_size = size;
        }
        break;  // larger l at this n only adds entries
      }
  REQUIRE(best_n >= 0);
  return {static_cast<int>(best_n), static_cast<int>(best_l),
          1.0 - cum[best_n][best_l]};
}

}  // namespace

TEST_CASE("occupancy fixtures") {
  const DerivedParams d0 = derive_params({2, 0.0});
  CHECK(mosh2d::occupancy(d0, 0, 0) == 1.0);
  CHECK(mosh2d::occupancy(d0, 1, 0) == 0.0);
  CHECK(mosh2d::occupancy(d0, 0, 1) == 0.0);

  const DerivedParams d = derive_params({2, 1.0});
  CHECK(rel_err(mosh2d::occupancy(d, 0, 0), 0.92274129805122049) < 1e-13);
  CHECK(rel_err(mosh2d::occupancy(d, 0, 1), 0.03636132014944715) < 1e-13);
  CHECK(rel_err(mosh2d::occupancy(d, 0, -1), 0.03636132014944715) < 1e-13);
  CHECK_THROWS_AS(mosh2d::occupancy(d, -1, 0), std::invalid_argument);
}

TEST_CASE("collective occupancy fixtures") {
  const DerivedParams d0 = derive_params({2, 0.0});
  CHECK(mosh2d::collective_occupancy(d0, 0) == 1.0);
  CHECK(mosh2d::collective_occupancy(d0, 1) == 0.0);

  const DerivedParams d = derive_params({2, 1.0});
  CHECK(rel_err(mosh2d::collective_occupancy(d, 0), 0.92417637183044479) < 1e-13);
  CHECK(rel_err(mosh2d::collective_occupancy(d, 1), 0.036417870319288529) < 1e-13);
  CHECK(mosh2d::collective_occupancy(d, 1) == mosh2d::collective_occupancy(d, -1));
}

TEST_CASE("participation fixtures") {
  const DerivedParams d0 = derive_params({500, 0.0});
  CHECK(mosh2d::participation_total(d0) == 1.0);
  CHECK(mosh2d::participation_collective(d0) == 1.0);
  CHECK(mosh2d::participation_fragment(d0) == 1.0);

  const DerivedParams d = derive_params({2, 1.0});
  // K = (5 + 3 sqrt5)/10 exactly; kappa = 3/(2 * 5^{1/4}).
  CHECK(rel_err(mosh2d::participation_total(d), (5.0 + 3.0 * std::sqrt(5.0)) / 10.0) < 1e-13);
  CHECK(rel_err(mosh2d::participation_fragment(d), 1.5 / std::pow(5.0, 0.25)) < 1e-13);
  CHECK(rel_err(mosh2d::participation_collective(d), 1.1671898987168289) < 1e-13);
}

TEST_CASE("collective participation tracks the asymptotic growth") {
  // K_eta(2, 1e8) within a few percent of 2 beta^{-1} Lambda^{1/4} = 100 sqrt2.
  const DerivedParams d = derive_params({2, 1e8});
  CHECK(rel_err(mosh2d::participation_collective(d), 100.0 * std::sqrt(2.0)) < 0.03);
}

TEST_CASE("geometric spectrum structure") {
  testutil::ParamSampler sampler;
  for (int i = 0; i < 300; ++i) {
    const auto p = sampler.next();
    const DerivedParams d = derive_params(p);
    if (d.t == 0.0) continue;
    INFO("N=", p.n_particles, " lambda=", p.lambda);
    const double u = mosh2d::sqrt_t(d);
    for (int n : {0, 1, 3}) {
      for (int l : {0, 1, 4}) {
        const double base = mosh2d::occupancy(d, n, l);
        if (base == 0.0) continue;  // underflowed far tail
        CHECK(rel_err(mosh2d::occupancy(d, n + 1, l) / base, d.t) < 1e-12);
        CHECK(mosh2d::occupancy(d, n, -l) == base);
      }
      const double eta = mosh2d::collective_occupancy(d, n);
      if (eta > 0.0)
        CHECK(rel_err(mosh2d::collective_occupancy(d, n + 1) / eta, u) < 1e-12);
    }
  }
}

TEST_CASE("identity K = kappa K_eta") {
  testutil::ParamSampler sampler;
  for (int i = 0; i < 1000; ++i) {
    const auto p = sampler.next();
    const DerivedParams d = derive_params(p);
    INFO("N=", p.n_particles, " lambda=", p.lambda);
    CHECK(rel_err(mosh2d::participation_fragment(d) * mosh2d::participation_collective(d),
                  mosh2d::participation_total(d)) < 1e-14);
  }
}

TEST_CASE("closed-form participations equal direct sums") {
  for (auto [n, lam] : {std::pair<std::int64_t, double>{2, 1.0},
                        {2, 100.0},
                        {50, 10.0},
                        {500, 100.0},
                        {2, 1e4}}) {
    const DerivedParams d = derive_params({n, lam});
    const auto cut = mosh2d::cutoffs_for_tail(d, 1e-16);
    double sum_sq = 0.0;
    std::vector<double> eta_sq_terms;
    for (int nn = 0; nn <= cut.n_max; ++nn)
      for (int ll = -cut.l_max; ll <= cut.l_max; ++ll)
        sum_sq += mosh2d::occupancy(d, nn, ll) * mosh2d::occupancy(d, nn, ll);
    double eta_sq = 0.0;
    for (int ll = -cut.l_max; ll <= cut.l_max; ++ll)
      eta_sq += mosh2d::collective_occupancy(d, ll) * mosh2d::collective_occupancy(d, ll);
    INFO("N=", n, " lambda=", lam);
    CHECK(rel_err(1.0 / sum_sq, mosh2d::participation_total(d)) < 1e-12);
    CHECK(rel_err(1.0 / eta_sq, mosh2d::participation_collective(d)) < 1e-12);
  }
}

TEST_CASE("asymptotic eta error decreases with coupling") {
  for (std::int64_t n : {std::int64_t{2}, std::int64_t{500}}) {
    double prev = 1e300;
    for (double lam : {1e4, 1e5, 1e6, 1e7, 1e8}) {
      const DerivedParams d = derive_params({n, lam});
      const double exact = mosh2d::collective_occupancy(d, 0);
      const double err = rel_err(mosh2d::asymptotic_eta({n, lam}, 0), exact);
      CHECK(err < prev);
      prev = err;
    }
    CHECK(prev < 0.05);
  }
}

TEST_CASE("large-N condensation estimate improves monotonically") {
  double prev = 1e300;
  for (std::int64_t n : {std::int64_t{1000}, std::int64_t{10000},
                         std::int64_t{100000}, std::int64_t{1000000}}) {
    const DerivedParams d = derive_params({n, 1.0});
    const double deficit = 1.0 - mosh2d::occupancy(d, 0, 0);
    const double est = mosh2d::condensate_deficit_large_n({n, 1.0});
    const double err = rel_err(deficit, est);
    CHECK(err < prev);
    prev = err;
  }
  CHECK(prev < 1e-2);
}

TEST_CASE("tail cutoffs: trivial and frozen fixtures") {
  const DerivedParams d0 = derive_params({2, 0.0});
  const auto c0 = mosh2d::cutoffs_for_tail(d0, 1e-8);
  CHECK(c0.n_max == 0);
  CHECK(c0.l_max == 0);
  CHECK(c0.tail_mass == 0.0);

  // Frozen from the brute-force oracle below: the l tail decays as sqrt(t),
  // half the rate of the n tail, so l_max leads.
  const DerivedParams d = derive_params({2, 1.0});
  const auto c = mosh2d::cutoffs_for_tail(d, 1e-10);
  CHECK(c.n_max == 3);
  CHECK(c.l_max == 7);
  CHECK(c.tail_mass <= 1e-10);
  CHECK(c.tail_mass > 0.0);

  const DerivedParams ds = derive_params({2, 1e4});
  const auto cs = mosh2d::cutoffs_for_tail(ds, 1e-6);
  CHECK(cs.n_max == 24);
  CHECK(cs.l_max == 53);

  CHECK_THROWS_AS(mosh2d::cutoffs_for_tail(d, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(mosh2d::cutoffs_for_tail(d, 1.0), std::invalid_argument);
}

TEST_CASE("tail cutoffs match the brute-force enumeration oracle") {
  for (auto [n, lam, eps] : {std::tuple<std::int64_t, double, double>{2, 1.0, 1e-10},
                             {2, 1.0, 1e-6},
                             {2, 100.0, 1e-8},
                             {50, 10.0, 1e-10},
                             {500, 100.0, 1e-10}}) {
    const DerivedParams d = derive_params({n, lam});
    const auto got = mosh2d::cutoffs_for_tail(d, eps);
    const auto want = brute_cutoffs(d, eps, 80, 160);
    INFO("N=", n, " lambda=", lam, " eps=", eps);
    CHECK(got.n_max == want.n_max);
    CHECK(got.l_max == want.l_max);
    CHECK(mosh2d::spectrum_tail(d, got.n_max, got.l_max) <= eps);
    CHECK(std::abs(got.tail_mass - want.tail_mass) < 1e-13);
  }
}

TEST_CASE("tail cutoffs grow monotonically with coupling") {
  int prev_n = -1, prev_l = -1;
  for (double lam : {1.0, 10.0, 100.0, 1e3, 1e4}) {
    const auto c = mosh2d::cutoffs_for_tail(derive_params({2, lam}), 1e-6);
    CHECK(c.n_max >= prev_n);
    CHECK(c.l_max >= prev_l);
    prev_n = c.n_max;
    prev_l = c.l_max;
  }
}

TEST_CASE("occupancy table invariants") {
  const DerivedParams d0 = derive_params({2, 0.0});
  const auto t0 = mosh2d::build_occupancy_table(d0, 1e-12);
  REQUIRE(t0.entries.size() == 1);
  CHECK(t0.entries[0].n == 0);
  CHECK(t0.entries[0].l == 0);
  CHECK(t0.entries[0].occupancy == 1.0);
  CHECK(t0.tail_mass == 0.0);

  const DerivedParams d = derive_params({2, 1.0});
  const auto table = mosh2d::build_occupancy_table(d, 1e-10);
  CHECK(table.entries.size() ==
        static_cast<std::size_t>(table.n_max + 1) * (2 * table.l_max + 1));
  double sum = 0.0;
  for (const auto& e : table.entries) sum += e.occupancy;
  CHECK(sum >= 1.0 - 1e-10);
  CHECK(std::abs(sum + table.tail_mass - 1.0) < 1e-12);
  CHECK(table.tail_mass <= 1e-10);
  // (n, l) and (n, -l) bit-exact.
  for (const auto& e : table.entries)
    CHECK(e.occupancy == mosh2d::occupancy(d, e.n, -e.l));
}

TEST_CASE("occupancy table enforces the entry hard limit") {
  // t -> 1 at extreme coupling: the 1e-12 table would need ~2e7 entries.
  const DerivedParams d = derive_params({2, 1e10});
  CHECK_THROWS_AS(mosh2d::build_occupancy_table(d, 1e-12),
                  mosh2d::resource_limit_error);
  CHECK_NOTHROW(mosh2d::build_occupancy_table(d, 1e-12, 100000000));
}
