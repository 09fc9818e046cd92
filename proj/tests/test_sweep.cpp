#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <charconv>
#include <cmath>
#include <sstream>

#include "mosh2d/spectrum.hpp"
#include "mosh2d/sweep.hpp"
#include "testutil.hpp"

using mosh2d::FigureOptions;
using mosh2d::SweepSpec;
using testutil::rel_err;

TEST_CASE("shortest formatting round-trips exactly") {
  for (double v : {0.1, 1.0 / 3.0, 2.0, 1e8, 1.0015528137517538e-3, -4.25e-17}) {
    const std::string s = mosh2d::fmt_shortest(v);
    double back = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), back);
    REQUIRE(res.ec == std::errc());
    CHECK(back == v);
  }
  CHECK(mosh2d::fmt_shortest(2.0) == "2");
  CHECK(mosh2d::fmt_sig(1.0 / 3.0, 10) == "0.3333333333");
}

TEST_CASE("grids") {
  const auto lam = mosh2d::log_spaced(1e-2, 1e8, 60);
  REQUIRE(lam.size() == 60);
  CHECK(lam.front() == 1e-2);
  CHECK(lam.back() == 1e8);
  for (std::size_t i = 1; i < lam.size(); ++i) CHECK(lam[i] > lam[i - 1]);

  const auto ns = mosh2d::log_spaced_integers(2, 10000, 50);
  CHECK(ns.front() == 2);
  CHECK(ns.back() == 10000);
  CHECK(ns.size() <= 50);
  for (std::size_t i = 1; i < ns.size(); ++i) CHECK(ns[i] > ns[i - 1]);

  CHECK_THROWS_AS(mosh2d::log_spaced(0.0, 1.0, 10), std::invalid_argument);
  CHECK_THROWS_AS(mosh2d::log_spaced(1.0, 1.0, 10), std::invalid_argument);
}

TEST_CASE("sweep rows carry consistent observables") {
  const auto row = mosh2d::evaluate_row(2, 1.0, 3);
  CHECK(row.n_particles == 2);
  CHECK(rel_err(row.lambda00, 0.92274129805122049) < 1e-13);
  CHECK(rel_err(row.k_total, row.kappa * row.k_eta) < 1e-14);
  REQUIRE(row.eta.size() == 4);
  for (std::size_t l = 1; l < row.eta.size(); ++l) CHECK(row.eta[l] <= row.eta[l - 1]);
  CHECK(rel_err(row.cond_deficit, 0.5) < 1e-15);  // sqrt(1/4)

  const auto attractive = mosh2d::evaluate_row(2, -0.1, 0);
  CHECK(std::isnan(attractive.cond_deficit));
}

TEST_CASE("sweep is order-deterministic across thread counts") {
  SweepSpec spec;
  spec.n_values = {2, 3, 50, 500};
  spec.lambda_values = {0.0, 0.1, 1.0, 10.0, 100.0};
  spec.l_max_report = 4;
  const auto serial = mosh2d::run_sweep(spec, 1);
  const auto parallel = mosh2d::run_sweep(spec, 8);
  REQUIRE(serial.size() == 20);
  REQUIRE(parallel.size() == 20);
  CHECK(mosh2d::sweep_csv(serial, spec, {}) == mosh2d::sweep_csv(parallel, spec, {}));
  // N-major, lambda-minor ordering.
  CHECK(serial[0].n_particles == 2);
  CHECK(serial[4].lambda == 100.0);
  CHECK(serial[5].n_particles == 3);
}

TEST_CASE("sweep validates before running") {
  SweepSpec spec;
  spec.n_values = {2, 1};
  spec.lambda_values = {1.0};
  CHECK_THROWS_AS(mosh2d::run_sweep(spec, 1), std::domain_error);
  spec.n_values.clear();
  CHECK_THROWS_AS(mosh2d::run_sweep(spec, 1), std::domain_error);
}

TEST_CASE("k_total grows with coupling") {
  SweepSpec spec;
  spec.n_values = {2};
  spec.lambda_values = {1.0, 10.0, 100.0};
  const auto rows = mosh2d::run_sweep(spec, 1);
  CHECK(rows[0].k_total < rows[1].k_total);
  CHECK(rows[1].k_total < rows[2].k_total);
}

TEST_CASE("sweep csv schema and round-trip") {
  SweepSpec spec;
  spec.n_values = {2};
  spec.lambda_values = {1.0};
  spec.l_max_report = 2;
  const auto rows = mosh2d::run_sweep(spec, 1);
  const std::string csv = mosh2d::sweep_csv(rows, spec, {"cmd: test"});

  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "# cmd: test");
  std::getline(in, line);
  CHECK(line == "N,lambda,t,eta0,eta1,eta2,k_eta,k_total,kappa,lambda00,cond_deficit");
  std::getline(in, line);
  // Re-parse every field and compare against the in-memory row exactly.
  std::istringstream fields(line);
  std::string tok;
  std::vector<double> parsed;
  while (std::getline(fields, tok, ',')) {
    double v = 0.0;
    std::from_chars(tok.data(), tok.data() + tok.size(), v);
    parsed.push_back(v);
  }
  REQUIRE(parsed.size() == 11);
  CHECK(parsed[0] == 2.0);
  CHECK(parsed[1] == rows[0].lambda);
  CHECK(parsed[2] == rows[0].t);
  CHECK(parsed[3] == rows[0].eta[0]);
  CHECK(parsed[5] == rows[0].eta[2]);
  CHECK(parsed[6] == rows[0].k_eta);
  CHECK(parsed[7] == rows[0].k_total);
  CHECK(parsed[8] == rows[0].kappa);
  CHECK(parsed[9] == rows[0].lambda00);
  CHECK(parsed[10] == rows[0].cond_deficit);
}

TEST_CASE("observable selection filters columns") {
  SweepSpec spec;
  spec.n_values = {2};
  spec.lambda_values = {1.0};
  spec.observables.eta = false;
  spec.observables.condensate = false;
  const auto cols = mosh2d::sweep_columns(spec);
  CHECK(cols == std::vector<std::string>{"N", "lambda", "t", "k_eta", "k_total",
                                         "kappa", "lambda00"});
}

TEST_CASE("figure panels") {
  CHECK(mosh2d::figure_panels().size() == 8);
  CHECK_THROWS_WITH_AS(mosh2d::figure_data("fig9z"), doctest::Contains("fig2a"),
                       std::invalid_argument);

  FigureOptions opts;
  opts.points = 12;
  const auto f1a = mosh2d::figure_data("fig1a", opts);
  REQUIRE(f1a.columns.size() == 13);  // lambda + 6 exact + 6 asymptotic
  CHECK(f1a.columns[0] == "lambda");
  CHECK(f1a.columns[1] == "eta0");
  CHECK(f1a.columns[7] == "eta0_asym");
  REQUIRE(f1a.rows.size() == 12);
  // Near-free edge: eta0 -> 1, higher eta -> 0.
  CHECK(f1a.rows[0][1] > 0.99);
  CHECK(f1a.rows[0][2] < 0.01);
  // At lambda = 1e8 the exact eta0 sits within a few percent of sqrt2/100.
  const auto& last = f1a.rows.back();
  CHECK(rel_err(last[1], std::sqrt(2.0) / 100.0) < 0.03);

  const auto f1c = mosh2d::figure_data("fig1c", opts);
  CHECK(f1c.columns == std::vector<std::string>{"lambda", "k_eta", "k_eta_asym"});

  const auto f2a = mosh2d::figure_data("fig2a", opts);
  CHECK(f2a.columns ==
        std::vector<std::string>{"N", "k_eta_lambda1", "k_eta_lambda100",
                                 "k_eta_lambda10000"});
  CHECK(f2a.rows.front()[0] == 2.0);
  CHECK(f2a.rows.back()[0] == 10000.0);

  const auto f2b = mosh2d::figure_data("fig2b", opts);
  CHECK(f2b.columns == std::vector<std::string>{"N", "eta0", "eta1", "eta2"});

  const auto f3b = mosh2d::figure_data("fig3b", opts);
  CHECK(f3b.columns ==
        std::vector<std::string>{"lambda", "kappa_n2", "kappa_n50", "kappa_n500"});
}

TEST_CASE("figure grids honor overrides and parallelism") {
  FigureOptions opts;
  opts.lambda_min = 1.0;
  opts.lambda_max = 100.0;
  opts.points = 7;
  const auto t = mosh2d::figure_data("fig3a", opts);
  REQUIRE(t.rows.size() == 7);
  CHECK(t.rows.front()[0] == 1.0);
  CHECK(t.rows.back()[0] == 100.0);

  FigureOptions par = opts;
  par.jobs = 8;
  const auto tp = mosh2d::figure_data("fig3a", par);
  CHECK(mosh2d::table_csv(t, {}) == mosh2d::table_csv(tp, {}));

  FigureOptions ngrid;
  ngrid.n_min = 4;
  ngrid.n_max = 64;
  ngrid.points = 10;
  const auto f2 = mosh2d::figure_data("fig2b", ngrid);
  CHECK(f2.rows.front()[0] == 4.0);
  CHECK(f2.rows.back()[0] == 64.0);
}

TEST_CASE("json outputs parse and mirror the tables") {
  SweepSpec spec;
  spec.n_values = {2};
  spec.lambda_values = {-0.1, 1.0};
  const auto rows = mosh2d::run_sweep(spec, 1);
  const std::string js = mosh2d::sweep_json(rows, spec, R"({"cmd":"t"})");
  CHECK(js.find("\"meta\"") != std::string::npos);
  CHECK(js.find("\"rows\"") != std::string::npos);
  // The attractive row exports a null condensate deficit.
  CHECK(js.find("null") != std::string::npos);

  const std::string no_meta = mosh2d::sweep_json(rows, spec, "");
  CHECK(no_meta.find("\"meta\"") == std::string::npos);

  FigureOptions opts;
  opts.points = 5;
  const auto t = mosh2d::figure_data("fig1c", opts);
  const std::string tj = mosh2d::table_json(t, "");
  CHECK(tj.find("\"columns\"") != std::string::npos);
}
