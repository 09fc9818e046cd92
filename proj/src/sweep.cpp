#include "mosh2d/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "mosh2d/spectrum.hpp"

#include <json.hpp>

namespace mosh2d {

std::string fmt_shortest(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string fmt_sig(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
  return buf;
}

std::vector<double> log_spaced(double lo, double hi, int count) {
  if (!(lo > 0.0 && hi > lo)) throw std::invalid_argument("log grid requires 0 < lo < hi");
  if (count < 2) throw std::invalid_argument("log grid requires at least 2 points");
  std::vector<double> out(count);
  const double llo = std::log(lo), lhi = std::log(hi);
  for (int i = 0; i < count; ++i)
    out[i] = std::exp(llo + (lhi - llo) * i / (count - 1));
  out.front() = lo;
  out.back() = hi;
  return out;
}

std::vector<std::int64_t> log_spaced_integers(std::int64_t lo, std::int64_t hi,
                                              int count) {
  if (!(lo > 0 && hi > lo)) throw std::invalid_argument("log grid requires 0 < lo < hi");
  if (count < 2) throw std::invalid_argument("log grid requires at least 2 points");
  std::vector<std::int64_t> out;
  out.reserve(count);
  const double llo = std::log(static_cast<double>(lo));
  const double lhi = std::log(static_cast<double>(hi));
  for (int i = 0; i < count; ++i) {
    const double x = std::exp(llo + (lhi - llo) * i / (count - 1));
    const std::int64_t v = std::llround(x);
    if (out.empty() || v != out.back()) out.push_back(v);
  }
  return out;
}

namespace {

void parallel_for(std::size_t count, int jobs,
                  const std::function<void(std::size_t)>& fn) {
  jobs = std::max(1, jobs);
  if (jobs == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  jobs = static_cast<int>(std::min<std::size_t>(jobs, count));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (int j = 0; j < jobs; ++j) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

SweepRow evaluate_row(std::int64_t n, double lambda, int l_max_report) {
  const DerivedParams d = derive_params(SystemParams{n, lambda});
  SweepRow row;
  row.n_particles = n;
  row.lambda = lambda;
  row.t = d.t;
  row.eta.resize(static_cast<std::size_t>(l_max_report) + 1);
  for (int l = 0; l <= l_max_report; ++l) row.eta[l] = collective_occupancy(d, l);
  row.k_eta = participation_collective(d);
  row.k_total = participation_total(d);
  row.kappa = participation_fragment(d);
  row.lambda00 = occupancy(d, 0, 0);
  row.cond_deficit = (lambda >= 0.0)
                         ? condensate_deficit_large_n(SystemParams{n, lambda})
                         : std::numeric_limits<double>::quiet_NaN();
  return row;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, int jobs) {
  if (spec.n_values.empty() || spec.lambda_values.empty())
    throw std::domain_error("sweep ranges must be non-empty");
  if (spec.l_max_report < 0)
    throw std::domain_error("l_max_report must be >= 0");
  // Validate-then-run: no row is evaluated unless every pair is admissible.
  for (std::int64_t n : spec.n_values)
    for (double lam : spec.lambda_values) validate(SystemParams{n, lam});

  const std::size_t count = spec.n_values.size() * spec.lambda_values.size();
  std::vector<SweepRow> rows(count);
  parallel_for(count, jobs, [&](std::size_t i) {
    const std::size_t in = i / spec.lambda_values.size();
    const std::size_t il = i % spec.lambda_values.size();
    rows[i] = evaluate_row(spec.n_values[in], spec.lambda_values[il],
                           spec.l_max_report);
  });
  return rows;
}

std::vector<std::string> sweep_columns(const SweepSpec& spec) {
  std::vector<std::string> cols = {"N", "lambda", "t"};
  if (spec.observables.eta)
    for (int l = 0; l <= spec.l_max_report; ++l)
      cols.push_back("eta" + std::to_string(l));
  if (spec.observables.k_eta) cols.push_back("k_eta");
  if (spec.observables.k_total) cols.push_back("k_total");
  if (spec.observables.kappa) cols.push_back("kappa");
  if (spec.observables.lambda_nl) cols.push_back("lambda00");
  if (spec.observables.condensate) cols.push_back("cond_deficit");
  return cols;
}

namespace {

std::vector<double> row_values(const SweepRow& row, const SweepSpec& spec) {
  std::vector<double> vals = {static_cast<double>(row.n_particles), row.lambda,
                              row.t};
  if (spec.observables.eta)
    vals.insert(vals.end(), row.eta.begin(), row.eta.end());
  if (spec.observables.k_eta) vals.push_back(row.k_eta);
  if (spec.observables.k_total) vals.push_back(row.k_total);
  if (spec.observables.kappa) vals.push_back(row.kappa);
  if (spec.observables.lambda_nl) vals.push_back(row.lambda00);
  if (spec.observables.condensate) vals.push_back(row.cond_deficit);
  return vals;
}

void append_meta(std::string& out, const std::vector<std::string>& meta_lines) {
  for (const auto& line : meta_lines) {
    out += "# ";
    out += line;
    out += '\n';
  }
}

void append_csv_row(std::string& out, const SweepRow& row, const SweepSpec& spec) {
  out += std::to_string(row.n_particles);
  bool first = true;
  for (double v : row_values(row, spec)) {
    if (first) {  // N already emitted as an integer
      first = false;
      continue;
    }
    out += ',';
    out += fmt_shortest(v);
  }
  out += '\n';
}

}  // namespace

std::string sweep_csv(const std::vector<SweepRow>& rows, const SweepSpec& spec,
                      const std::vector<std::string>& meta_lines) {
  std::string out;
  append_meta(out, meta_lines);
  const auto cols = sweep_columns(spec);
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (i) out += ',';
    out += cols[i];
  }
  out += '\n';
  for (const auto& row : rows) append_csv_row(out, row, spec);
  return out;
}

std::string sweep_json(const std::vector<SweepRow>& rows, const SweepSpec& spec,
                       const std::string& meta_json) {
  nlohmann::json doc;
  if (!meta_json.empty()) doc["meta"] = nlohmann::json::parse(meta_json);
  const auto cols = sweep_columns(spec);
  doc["columns"] = cols;
  nlohmann::json jrows = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json jrow;
    const auto vals = row_values(row, spec);
    for (std::size_t i = 0; i < cols.size(); ++i) {
      if (cols[i] == "N")
        jrow[cols[i]] = row.n_particles;
      else if (std::isnan(vals[i]))
        jrow[cols[i]] = nullptr;
      else
        jrow[cols[i]] = vals[i];
    }
    jrows.push_back(std::move(jrow));
  }
  doc["rows"] = std::move(jrows);
  return doc.dump(2) + "\n";
}

std::string sweep_table(const std::vector<SweepRow>& rows, const SweepSpec& spec) {
  std::ostringstream out;
  const auto cols = sweep_columns(spec);
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (i) out << "  ";
    out << cols[i];
  }
  out << '\n';
  for (const auto& row : rows) {
    const auto vals = row_values(row, spec);
    out << row.n_particles;
    for (std::size_t i = 1; i < vals.size(); ++i) out << "  " << fmt_sig(vals[i], 10);
    out << '\n';
  }
  return out.str();
}

std::vector<std::string> figure_panels() {
  return {"fig1a", "fig1b", "fig1c", "fig1d", "fig2a", "fig2b", "fig3a", "fig3b"};
}

namespace {

constexpr int kEtaCurves = 6;  // l = 0..5 in the occupancy panels

Table lambda_panel(const FigureOptions& opts, std::int64_t n_particles,
                   bool occupancies) {
  const int points = opts.points > 0 ? opts.points : 60;
  const std::vector<double> grid = log_spaced(opts.lambda_min, opts.lambda_max, points);
  Table t;
  t.columns.push_back("lambda");
  if (occupancies) {
    for (int l = 0; l < kEtaCurves; ++l) t.columns.push_back("eta" + std::to_string(l));
    for (int l = 0; l < kEtaCurves; ++l)
      t.columns.push_back("eta" + std::to_string(l) + "_asym");
  } else {
    t.columns.push_back("k_eta");
    t.columns.push_back("k_eta_asym");
  }
  t.rows.resize(grid.size());
  parallel_for(grid.size(), opts.jobs, [&](std::size_t i) {
    const double lam = grid[i];
    const SystemParams p{n_particles, lam};
    const DerivedParams d = derive_params(p);
    std::vector<double>& row = t.rows[i];
    row.push_back(lam);
    if (occupancies) {
      for (int l = 0; l < kEtaCurves; ++l) row.push_back(collective_occupancy(d, l));
      for (int l = 0; l < kEtaCurves; ++l) row.push_back(asymptotic_eta(p, l));
    } else {
      row.push_back(participation_collective(d));
      row.push_back(asymptotic_k_eta(p));
    }
  });
  return t;
}

Table n_panel(const FigureOptions& opts, bool participation) {
  const int points = opts.points > 0 ? opts.points : 50;
  const std::vector<std::int64_t> grid =
      log_spaced_integers(std::max<std::int64_t>(2, opts.n_min), opts.n_max, points);
  Table t;
  t.columns.push_back("N");
  const std::vector<double> lambdas = {1.0, 100.0, 10000.0};
  if (participation) {
    for (double lam : lambdas)
      t.columns.push_back("k_eta_lambda" + fmt_sig(lam, 10));
  } else {
    for (int l = 0; l < 3; ++l) t.columns.push_back("eta" + std::to_string(l));
  }
  t.rows.resize(grid.size());
  parallel_for(grid.size(), opts.jobs, [&](std::size_t i) {
    std::vector<double>& row = t.rows[i];
    row.push_back(static_cast<double>(grid[i]));
    if (participation) {
      for (double lam : lambdas)
        row.push_back(participation_collective(derive_params({grid[i], lam})));
    } else {
      const DerivedParams d = derive_params({grid[i], 100.0});
      for (int l = 0; l < 3; ++l) row.push_back(collective_occupancy(d, l));
    }
  });
  return t;
}

Table participation_panel(const FigureOptions& opts, bool fragment) {
  const int points = opts.points > 0 ? opts.points : 60;
  const std::vector<double> grid = log_spaced(opts.lambda_min, opts.lambda_max, points);
  const std::vector<std::int64_t> ns = {2, 50, 500};
  Table t;
  t.columns.push_back("lambda");
  for (std::int64_t n : ns)
    t.columns.push_back((fragment ? "kappa_n" : "k_n") + std::to_string(n));
  t.rows.resize(grid.size());
  parallel_for(grid.size(), opts.jobs, [&](std::size_t i) {
    std::vector<double>& row = t.rows[i];
    row.push_back(grid[i]);
    for (std::int64_t n : ns) {
      const DerivedParams d = derive_params({n, grid[i]});
      row.push_back(fragment ? participation_fragment(d) : participation_total(d));
    }
  });
  return t;
}

}  // namespace

Table figure_data(const std::string& panel, const FigureOptions& opts) {
  if (panel == "fig1a") return lambda_panel(opts, 2, true);
  if (panel == "fig1b") return lambda_panel(opts, 500, true);
  if (panel == "fig1c") return lambda_panel(opts, 2, false);
  if (panel == "fig1d") return lambda_panel(opts, 500, false);
  if (panel == "fig2a") return n_panel(opts, true);
  if (panel == "fig2b") return n_panel(opts, false);
  if (panel == "fig3a") return participation_panel(opts, false);
  if (panel == "fig3b") return participation_panel(opts, true);
  std::string msg = "unknown figure panel '" + panel + "'; valid names:";
  for (const auto& name : figure_panels()) msg += " " + name;
  throw std::invalid_argument(msg);
}

std::string table_csv(const Table& t, const std::vector<std::string>& meta_lines) {
  std::string out;
  append_meta(out, meta_lines);
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (i) out += ',';
    out += t.columns[i];
  }
  out += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += fmt_shortest(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string table_json(const Table& t, const std::string& meta_json) {
  nlohmann::json doc;
  if (!meta_json.empty()) doc["meta"] = nlohmann::json::parse(meta_json);
  doc["columns"] = t.columns;
  nlohmann::json jrows = nlohmann::json::array();
  for (const auto& row : t.rows) {
    nlohmann::json jrow = nlohmann::json::array();
    for (double v : row) {
      if (std::isnan(v))
        jrow.push_back(nullptr);
      else
        jrow.push_back(v);
    }
    jrows.push_back(std::move(jrow));
  }
  doc["rows"] = std::move(jrows);
  return doc.dump(2) + "\n";
}

std::string table_text(const Table& t) {
  std::ostringstream out;
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (i) out << "  ";
    out << t.columns[i];
  }
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << "  ";
      out << fmt_sig(row[i], 10);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace mosh2d
