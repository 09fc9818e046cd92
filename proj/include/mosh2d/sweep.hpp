#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mosh2d/params.hpp"

namespace mosh2d {

inline constexpr const char* project_version = "0.1.0";

// Shortest representation that re-parses to the identical double.
std::string fmt_shortest(double v);
// %.{digits}g.
std::string fmt_sig(double v, int digits);

// count log-spaced values, endpoints included.
std::vector<double> log_spaced(double lo, double hi, int count);
// Log-spaced integer grid, rounded and deduplicated (weakly fewer than
// count values).
std::vector<std::int64_t> log_spaced_integers(std::int64_t lo, std::int64_t hi,
                                              int count);

struct ObservableSet {
  bool eta = true;
  bool k_eta = true;
  bool k_total = true;
  bool kappa = true;
  bool lambda_nl = true;
  bool condensate = true;
};

struct SweepSpec {
  std::vector<std::int64_t> n_values;
  std::vector<double> lambda_values;
  int l_max_report = 5;
  ObservableSet observables;
};

struct SweepRow {
  std::int64_t n_particles;
  double lambda;
  double t;
  std::vector<double> eta;  // l = 0 .. l_max_report
  double k_eta;
  double k_total;
  double kappa;
  double lambda00;
  double cond_deficit;  // sqrt(lambda/2N); NaN for attractive lambda
};

SweepRow evaluate_row(std::int64_t n, double lambda, int l_max_report);

// Validates every (N, lambda) pair up front (throws std::domain_error
// before any work), then evaluates rows across jobs threads.  Output
// order is N-major, lambda-minor regardless of parallelism.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, int jobs = 1);

std::vector<std::string> sweep_columns(const SweepSpec& spec);
std::string sweep_csv(const std::vector<SweepRow>& rows, const SweepSpec& spec,
                      const std::vector<std::string>& meta_lines);
std::string sweep_json(const std::vector<SweepRow>& rows, const SweepSpec& spec,
                       const std::string& meta_json);
std::string sweep_table(const std::vector<SweepRow>& rows, const SweepSpec& spec);

// Named-column numeric table; the unit of figure output.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

struct FigureOptions {
  double lambda_min = 1e-2;
  double lambda_max = 1e8;
  std::int64_t n_min = 2;
  std::int64_t n_max = 10000;
  int points = 0;  // 0: panel default (60 for lambda grids, 50 for N grids)
  int jobs = 1;
};

std::vector<std::string> figure_panels();

// Data grid for one figure panel; exact curves plus the dashed asymptotic
// companions where the panel shows them.  Throws std::invalid_argument
// listing the valid names for an unknown panel.
Table figure_data(const std::string& panel, const FigureOptions& opts = {});

std::string table_csv(const Table& t, const std::vector<std::string>& meta_lines);
std::string table_json(const Table& t, const std::string& meta_json);
std::string table_text(const Table& t);

}  // namespace mosh2d
