// Command-line front end: single-point evaluation, (N, lambda) sweeps,
// figure-data regeneration, verification runs, CSV/JSON emission.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/validation error,
// 3 resource-limit error.

#include <algorithm>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mosh2d/oracle.hpp"
#include "mosh2d/params.hpp"
#include "mosh2d/spectrum.hpp"
#include "mosh2d/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct OutputOpts {
  std::string format = "table";
  std::string out_path;  // empty: stdout
  bool no_meta = false;
};

void add_output_opts(CLI::App* cmd, OutputOpts* out) {
  cmd->add_option("--format", out->format, "output format")
      ->check(CLI::IsMember({"csv", "json", "table"}))
      ->capture_default_str();
  cmd->add_option("--out", out->out_path, "write to file instead of stdout");
  cmd->add_flag("--no-meta", out->no_meta,
                "suppress metadata (command line, version, timestamp)");
}

std::string iso_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm_utc{};
  gmtime_r(&now, &tm_utc);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

std::string g_command_line;

std::vector<std::string> meta_lines(const OutputOpts& out) {
  if (out.no_meta) return {};
  return {"cmd: " + g_command_line,
          std::string("version: ") + mosh2d::project_version,
          "generated: " + iso_timestamp()};
}

std::string meta_json(const OutputOpts& out) {
  if (out.no_meta) return {};
  nlohmann::json m;
  m["cmd"] = g_command_line;
  m["version"] = mosh2d::project_version;
  m["generated"] = iso_timestamp();
  return m.dump();
}

void emit(const OutputOpts& out, const std::string& content) {
  if (out.out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream file(out.out_path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file " + out.out_path);
  file << content;
}

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// ---------------------------------------------------------------------------
// params

int run_params(const mosh2d::SystemParams& p, const OutputOpts& out) {
  const mosh2d::DerivedParams d = mosh2d::derive_params(p);
  const bool extrapolated = p.lambda < 0.0;
  const std::vector<std::pair<std::string, double>> fields = {
      {"omega", d.omega}, {"gamma", d.gamma}, {"a", d.a_norm}, {"b", d.b_coef},
      {"c", d.c_coef},    {"t", d.t},         {"z2", d.z2},    {"s", d.s}};

  std::string text;
  if (out.format == "json") {
    // 17 significant digits, assembled by hand.
    std::ostringstream js;
    js << "{\n";
    const std::string mj = meta_json(out);
    if (!mj.empty()) js << "  \"meta\": " << mj << ",\n";
    js << "  \"n_particles\": " << p.n_particles << ",\n";
    js << "  \"lambda\": " << fmt17(p.lambda) << ",\n";
    for (const auto& [name, value] : fields)
      js << "  \"" << name << "\": " << fmt17(value) << ",\n";
    js << "  \"extrapolated\": " << (extrapolated ? "true" : "false") << "\n}\n";
    text = js.str();
  } else if (out.format == "csv") {
    std::string csv;
    for (const auto& line : meta_lines(out)) csv += "# " + line + "\n";
    csv += "N,lambda";
    for (const auto& [name, value] : fields) csv += "," + name;
    csv += "\n" + std::to_string(p.n_particles) + "," + mosh2d::fmt_shortest(p.lambda);
    for (const auto& [name, value] : fields) csv += "," + mosh2d::fmt_shortest(value);
    csv += "\n";
    text = csv;
  } else {
    std::ostringstream tb;
    tb << "N = " << p.n_particles << "\nlambda = " << mosh2d::fmt_sig(p.lambda, 10);
    if (extrapolated) tb << "  (extrapolated: attractive coupling)";
    tb << "\n";
    for (const auto& [name, value] : fields)
      tb << name << " = " << mosh2d::fmt_sig(value, 10) << "\n";
    text = tb.str();
  }
  emit(out, text);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// occupancies

int run_occupancies(const mosh2d::SystemParams& p, const OutputOpts& out,
                    bool have_eps, double tail_eps, bool have_nmax, int n_max,
                    bool have_lmax, int l_max) {
  if (have_eps && (have_nmax || have_lmax))
    throw CLI::ValidationError(
        "occupancies", "--tail-eps conflicts with --n-max/--l-max");
  if (!have_eps && !(have_nmax && have_lmax))
    throw CLI::ValidationError(
        "occupancies",
        "give exactly one truncation mode: --tail-eps, or --n-max with --l-max");

  const mosh2d::DerivedParams d = mosh2d::derive_params(p);
  mosh2d::OccupancyTable table;
  if (have_eps) {
    table = mosh2d::build_occupancy_table(d, tail_eps);
  } else {
    if (n_max < 0 || l_max < 0)
      throw CLI::ValidationError("occupancies", "cutoffs must be >= 0");
    const std::size_t count = static_cast<std::size_t>(n_max + 1) *
                              static_cast<std::size_t>(2 * l_max + 1);
    if (count > 1000000)
      throw mosh2d::resource_limit_error("occupancy table would need " +
                                         std::to_string(count) +
                                         " entries, limit is 1000000");
    table.params = d;
    table.n_max = n_max;
    table.l_max = l_max;
    table.tail_mass = mosh2d::spectrum_tail(d, n_max, l_max);
    for (int n = 0; n <= n_max; ++n)
      for (int l = -l_max; l <= l_max; ++l)
        table.entries.push_back({n, l, mosh2d::occupancy(d, n, l)});
  }

  // Descending occupancy; ties by (n asc, |l| asc, +l before -l).
  std::sort(table.entries.begin(), table.entries.end(),
            [](const auto& a, const auto& b) {
              if (a.occupancy != b.occupancy) return a.occupancy > b.occupancy;
              if (a.n != b.n) return a.n < b.n;
              if (std::abs(a.l) != std::abs(b.l))
                return std::abs(a.l) < std::abs(b.l);
              return a.l > b.l;
            });

  std::string text;
  if (out.format == "json") {
    nlohmann::json doc;
    const std::string mj = meta_json(out);
    if (!mj.empty()) doc["meta"] = nlohmann::json::parse(mj);
    doc["n_particles"] = p.n_particles;
    doc["lambda"] = p.lambda;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& e : table.entries)
      rows.push_back({{"n", e.n}, {"l", e.l}, {"lambda_nl", e.occupancy}});
    doc["rows"] = std::move(rows);
    doc["tail_mass"] = table.tail_mass;
    text = doc.dump(2) + "\n";
  } else if (out.format == "csv") {
    for (const auto& line : meta_lines(out)) text += "# " + line + "\n";
    text += "n,l,lambda\n";
    for (const auto& e : table.entries)
      text += std::to_string(e.n) + "," + std::to_string(e.l) + "," +
              mosh2d::fmt_shortest(e.occupancy) + "\n";
    text += "tail,," + mosh2d::fmt_shortest(table.tail_mass) + "\n";
  } else {
    std::ostringstream tb;
    tb << "n  l  lambda_nl\n";
    for (const auto& e : table.entries)
      tb << e.n << "  " << e.l << "  " << mosh2d::fmt_sig(e.occupancy, 10) << "\n";
    tb << "tail mass = " << mosh2d::fmt_sig(table.tail_mass, 10) << "\n";
    text = tb.str();
  }
  emit(out, text);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// collective / participation

int run_collective(const mosh2d::SystemParams& p, int l_max, const OutputOpts& out) {
  if (l_max < 0) throw CLI::ValidationError("collective", "--l-max must be >= 0");
  const mosh2d::DerivedParams d = mosh2d::derive_params(p);
  std::string text;
  if (out.format == "json") {
    nlohmann::json doc;
    const std::string mj = meta_json(out);
    if (!mj.empty()) doc["meta"] = nlohmann::json::parse(mj);
    doc["n_particles"] = p.n_particles;
    doc["lambda"] = p.lambda;
    nlohmann::json rows = nlohmann::json::array();
    for (int l = 0; l <= l_max; ++l) {
      const double eta = mosh2d::collective_occupancy(d, l);
      rows.push_back({{"l", l},
                      {"eta", eta},
                      {"n_l", eta * static_cast<double>(p.n_particles)}});
    }
    doc["rows"] = std::move(rows);
    text = doc.dump(2) + "\n";
  } else if (out.format == "csv") {
    for (const auto& line : meta_lines(out)) text += "# " + line + "\n";
    text += "l,eta,n_l\n";
    for (int l = 0; l <= l_max; ++l) {
      const double eta = mosh2d::collective_occupancy(d, l);
      text += std::to_string(l) + "," + mosh2d::fmt_shortest(eta) + "," +
              mosh2d::fmt_shortest(eta * static_cast<double>(p.n_particles)) + "\n";
    }
  } else {
    std::ostringstream tb;
    tb << "l  eta_l  n_l\n";
    for (int l = 0; l <= l_max; ++l) {
      const double eta = mosh2d::collective_occupancy(d, l);
      tb << l << "  " << mosh2d::fmt_sig(eta, 10) << "  "
         << mosh2d::fmt_sig(eta * static_cast<double>(p.n_particles), 10) << "\n";
    }
    text = tb.str();
  }
  emit(out, text);
  return kExitOk;
}

int run_participation(const mosh2d::SystemParams& p, const OutputOpts& out) {
  const mosh2d::DerivedParams d = mosh2d::derive_params(p);
  const double k_eta = mosh2d::participation_collective(d);
  const double k_total = mosh2d::participation_total(d);
  const double kappa = mosh2d::participation_fragment(d);
  std::string text;
  if (out.format == "json") {
    nlohmann::json doc;
    const std::string mj = meta_json(out);
    if (!mj.empty()) doc["meta"] = nlohmann::json::parse(mj);
    doc["n_particles"] = p.n_particles;
    doc["lambda"] = p.lambda;
    doc["k_eta"] = k_eta;
    doc["k_total"] = k_total;
    doc["kappa"] = kappa;
    text = doc.dump(2) + "\n";
  } else if (out.format == "csv") {
    for (const auto& line : meta_lines(out)) text += "# " + line + "\n";
    text += "N,lambda,k_eta,k_total,kappa\n";
    text += std::to_string(p.n_particles) + "," + mosh2d::fmt_shortest(p.lambda) +
            "," + mosh2d::fmt_shortest(k_eta) + "," +
            mosh2d::fmt_shortest(k_total) + "," + mosh2d::fmt_shortest(kappa) + "\n";
  } else {
    std::ostringstream tb;
    tb << "k_eta = " << mosh2d::fmt_sig(k_eta, 10) << "\n"
       << "k_total = " << mosh2d::fmt_sig(k_total, 10) << "\n"
       << "kappa = " << mosh2d::fmt_sig(kappa, 10) << "\n";
    text = tb.str();
  }
  emit(out, text);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// figure / sweep

int run_figure(const std::string& panel, const mosh2d::FigureOptions& opts,
               const OutputOpts& out) {
  const mosh2d::Table t = mosh2d::figure_data(panel, opts);
  std::string text;
  if (out.format == "json")
    text = mosh2d::table_json(t, meta_json(out));
  else if (out.format == "csv")
    text = mosh2d::table_csv(t, meta_lines(out));
  else
    text = mosh2d::table_text(t);
  emit(out, text);
  return kExitOk;
}

std::vector<double> parse_real_list(const std::string& csv) {
  std::vector<double> vals;
  std::istringstream in(csv);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      vals.push_back(std::stod(tok));
    } catch (const std::exception&) {
      throw CLI::ValidationError("sweep", "cannot parse real value '" + tok + "'");
    }
  }
  return vals;
}

std::vector<std::int64_t> parse_int_list(const std::string& csv) {
  std::vector<std::int64_t> vals;
  std::istringstream in(csv);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      vals.push_back(std::stoll(tok));
    } catch (const std::exception&) {
      throw CLI::ValidationError("sweep",
                                 "cannot parse integer value '" + tok + "'");
    }
  }
  return vals;
}

// "lo:hi:count" log-spaced range specs.
void parse_range(const std::string& spec, double* lo, double* hi, int* count) {
  std::istringstream in(spec);
  std::string a, b, c;
  if (!std::getline(in, a, ':') || !std::getline(in, b, ':') || !std::getline(in, c))
    throw CLI::ValidationError("sweep", "range spec must be lo:hi:count");
  try {
    *lo = std::stod(a);
    *hi = std::stod(b);
    *count = std::stoi(c);
  } catch (const std::exception&) {
    throw CLI::ValidationError("sweep", "cannot parse range spec '" + spec + "'");
  }
}

mosh2d::ObservableSet parse_observables(const std::string& csv) {
  mosh2d::ObservableSet set;
  set.eta = set.k_eta = set.k_total = set.kappa = set.lambda_nl =
      set.condensate = false;
  std::istringstream in(csv);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok == "eta")
      set.eta = true;
    else if (tok == "k_eta")
      set.k_eta = true;
    else if (tok == "k_total")
      set.k_total = true;
    else if (tok == "kappa")
      set.kappa = true;
    else if (tok == "lambda_nl")
      set.lambda_nl = true;
    else if (tok == "condensate")
      set.condensate = true;
    else
      throw CLI::ValidationError(
          "sweep", "unknown observable '" + tok +
                       "'; valid: eta,k_eta,k_total,kappa,lambda_nl,condensate");
  }
  return set;
}

int run_sweep_cmd(const mosh2d::SweepSpec& spec, int jobs, bool any_attractive,
                  const OutputOpts& out) {
  const auto rows = mosh2d::run_sweep(spec, jobs);
  std::string text;
  if (out.format == "json") {
    text = mosh2d::sweep_json(rows, spec, meta_json(out));
  } else if (out.format == "csv") {
    auto meta = meta_lines(out);
    if (any_attractive && !out.no_meta)
      meta.push_back("note: rows with lambda < 0 are extrapolated beyond the "
                     "repulsive regime");
    text = mosh2d::sweep_csv(rows, spec, meta);
  } else {
    text = mosh2d::sweep_table(rows, spec);
  }
  emit(out, text);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

int run_verify(const mosh2d::SystemParams& p, const std::string& level,
               double corrupt_t, const OutputOpts& out) {
  mosh2d::VerifyConfig cfg;
  cfg.level = (level == "full") ? mosh2d::VerifyConfig::Level::full
                                : mosh2d::VerifyConfig::Level::quick;
  cfg.t_scale = corrupt_t;
  const auto checks = mosh2d::verify_all(p, cfg);
  const bool ok = mosh2d::all_passed(checks);

  std::string text;
  if (out.format == "json") {
    nlohmann::json doc;
    const std::string mj = meta_json(out);
    if (!mj.empty()) doc["meta"] = nlohmann::json::parse(mj);
    doc["n_particles"] = p.n_particles;
    doc["lambda"] = p.lambda;
    doc["level"] = level;
    nlohmann::json jc = nlohmann::json::array();
    for (const auto& c : checks)
      jc.push_back({{"name", c.name},
                    {"deviation", std::isfinite(c.deviation)
                                      ? nlohmann::json(c.deviation)
                                      : nlohmann::json(nullptr)},
                    {"threshold", c.threshold},
                    {"pass", c.pass}});
    doc["checks"] = std::move(jc);
    doc["passed"] = ok;
    text = doc.dump(2) + "\n";
  } else {
    std::ostringstream tb;
    tb << "verification at N=" << p.n_particles
       << " lambda=" << mosh2d::fmt_sig(p.lambda, 10) << " (" << level << ")\n";
    for (const auto& c : checks)
      tb << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << ": deviation "
         << mosh2d::fmt_sig(c.deviation, 3) << " vs threshold "
         << mosh2d::fmt_sig(c.threshold, 3) << "\n";
    tb << (ok ? "all checks passed\n" : "some checks FAILED\n");
    text = tb.str();
  }
  emit(out, text);
  return ok ? kExitOk : kExitVerifyFailed;
}

std::string join_command_line(int argc, char** argv) {
  std::string cmd;
  for (int i = 0; i < argc; ++i) {
    if (i) cmd += ' ';
    cmd += argv[i];
  }
  return cmd;
}

}  // namespace

int main(int argc, char** argv) {
  g_command_line = join_command_line(argc, argv);

  CLI::App app{"Natural-orbital decomposition of harmonically interacting "
               "bosons in a 2D isotropic trap"};
  app.require_subcommand(1);
  app.set_config("--config", "", "read option defaults from a key = value file");
  app.set_version_flag("--version", mosh2d::project_version);

  // --- params
  std::int64_t n_particles = 2;
  double lambda = 0.0;
  OutputOpts params_out;
  auto* cmd_params = app.add_subcommand("params", "closed-form parameter set");
  cmd_params->add_option("--n", n_particles, "particle count N")->required();
  cmd_params->add_option("--lambda", lambda, "interaction strength")->required();
  add_output_opts(cmd_params, &params_out);

  // --- occupancies
  std::int64_t occ_n = 2;
  double occ_lambda = 0.0;
  double tail_eps = 1e-10;
  int occ_nmax = 0, occ_lmax = 0;
  OutputOpts occ_out;
  auto* cmd_occ = app.add_subcommand("occupancies", "occupancy table lambda_nl");
  cmd_occ->add_option("--n", occ_n, "particle count N")->required();
  cmd_occ->add_option("--lambda", occ_lambda, "interaction strength")->required();
  auto* opt_eps = cmd_occ->add_option("--tail-eps", tail_eps,
                                      "truncate at analytic tail mass <= eps");
  auto* opt_nmax = cmd_occ->add_option("--n-max", occ_nmax, "radial cutoff");
  auto* opt_lmax = cmd_occ->add_option("--l-max", occ_lmax, "angular cutoff");
  add_output_opts(cmd_occ, &occ_out);

  // --- collective
  std::int64_t col_n = 2;
  double col_lambda = 0.0;
  int col_lmax = 5;
  OutputOpts col_out;
  auto* cmd_col = app.add_subcommand("collective", "collective occupancies eta_l");
  cmd_col->add_option("--n", col_n, "particle count N")->required();
  cmd_col->add_option("--lambda", col_lambda, "interaction strength")->required();
  cmd_col->add_option("--l-max", col_lmax, "highest reported l")
      ->capture_default_str();
  add_output_opts(cmd_col, &col_out);

  // --- participation
  std::int64_t part_n = 2;
  double part_lambda = 0.0;
  OutputOpts part_out;
  auto* cmd_part = app.add_subcommand(
      "participation", "participation measures K, K_eta, kappa");
  cmd_part->add_option("--n", part_n, "particle count N")->required();
  cmd_part->add_option("--lambda", part_lambda, "interaction strength")->required();
  add_output_opts(cmd_part, &part_out);

  // --- figure
  std::string panel;
  mosh2d::FigureOptions fig_opts;
  OutputOpts fig_out;
  auto* cmd_fig = app.add_subcommand("figure", "data grid for one figure panel");
  cmd_fig->add_option("panel", panel, "fig1a..fig3b")->required();
  cmd_fig->add_option("--lambda-min", fig_opts.lambda_min)->capture_default_str();
  cmd_fig->add_option("--lambda-max", fig_opts.lambda_max)->capture_default_str();
  cmd_fig->add_option("--n-min", fig_opts.n_min)->capture_default_str();
  cmd_fig->add_option("--n-max", fig_opts.n_max)->capture_default_str();
  cmd_fig->add_option("--points", fig_opts.points, "grid size (0: panel default)");
  cmd_fig->add_option("--jobs", fig_opts.jobs, "worker threads")
      ->envname("MOSHINSKY2D_JOBS")
      ->capture_default_str();
  add_output_opts(cmd_fig, &fig_out);

  // --- sweep
  std::string n_list, n_range, lambda_list, lambda_range, observables;
  int l_max_report = 5;
  int sweep_jobs = 1;
  OutputOpts sweep_out;
  auto* cmd_sweep =
      app.add_subcommand("sweep", "evaluate observables on an (N, lambda) grid");
  auto* opt_nlist = cmd_sweep->add_option("--n-list", n_list, "comma-separated N");
  auto* opt_nrange =
      cmd_sweep->add_option("--n-range", n_range, "log grid lo:hi:count");
  auto* opt_llist =
      cmd_sweep->add_option("--lambda-list", lambda_list, "comma-separated lambda");
  auto* opt_lrange =
      cmd_sweep->add_option("--lambda-range", lambda_range, "log grid lo:hi:count");
  cmd_sweep->add_option("--l-max-report", l_max_report, "highest eta_l column")
      ->capture_default_str();
  cmd_sweep->add_option("--observables", observables,
                        "subset of eta,k_eta,k_total,kappa,lambda_nl,condensate");
  cmd_sweep->add_option("--jobs", sweep_jobs, "worker threads")
      ->envname("MOSHINSKY2D_JOBS")
      ->capture_default_str();
  add_output_opts(cmd_sweep, &sweep_out);

  // --- verify
  std::int64_t ver_n = 2;
  double ver_lambda = 0.0;
  std::string level = "quick";
  double corrupt_t = 1.0;
  OutputOpts ver_out;
  auto* cmd_ver = app.add_subcommand(
      "verify", "cross-check closed forms against the numerical oracle");
  cmd_ver->add_option("--n", ver_n, "particle count N")->required();
  cmd_ver->add_option("--lambda", ver_lambda, "interaction strength")->required();
  cmd_ver->add_option("--level", level, "quick skips the grid-refinement study")
      ->check(CLI::IsMember({"quick", "full"}))
      ->capture_default_str();
  cmd_ver->add_option("--corrupt-t", corrupt_t, "")->group("");  // test hook
  add_output_opts(cmd_ver, &ver_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (cmd_params->parsed()) return run_params({n_particles, lambda}, params_out);
    if (cmd_occ->parsed())
      return run_occupancies({occ_n, occ_lambda}, occ_out, opt_eps->count() > 0,
                             tail_eps, opt_nmax->count() > 0, occ_nmax,
                             opt_lmax->count() > 0, occ_lmax);
    if (cmd_col->parsed())
      return run_collective({col_n, col_lambda}, col_lmax, col_out);
    if (cmd_part->parsed())
      return run_participation({part_n, part_lambda}, part_out);
    if (cmd_fig->parsed()) return run_figure(panel, fig_opts, fig_out);
    if (cmd_sweep->parsed()) {
      mosh2d::SweepSpec spec;
      if ((opt_nlist->count() > 0) == (opt_nrange->count() > 0))
        throw CLI::ValidationError("sweep",
                                   "give exactly one of --n-list, --n-range");
      if ((opt_llist->count() > 0) == (opt_lrange->count() > 0))
        throw CLI::ValidationError(
            "sweep", "give exactly one of --lambda-list, --lambda-range");
      if (opt_nlist->count() > 0) {
        spec.n_values = parse_int_list(n_list);
      } else {
        double lo = 0.0, hi = 0.0;
        int count = 0;
        parse_range(n_range, &lo, &hi, &count);
        spec.n_values = mosh2d::log_spaced_integers(
            static_cast<std::int64_t>(lo), static_cast<std::int64_t>(hi), count);
      }
      if (opt_llist->count() > 0) {
        spec.lambda_values = parse_real_list(lambda_list);
      } else {
        double lo = 0.0, hi = 0.0;
        int count = 0;
        parse_range(lambda_range, &lo, &hi, &count);
        spec.lambda_values = mosh2d::log_spaced(lo, hi, count);
      }
      spec.l_max_report = l_max_report;
      if (!observables.empty()) spec.observables = parse_observables(observables);
      const bool any_attractive =
          std::any_of(spec.lambda_values.begin(), spec.lambda_values.end(),
                      [](double v) { return v < 0.0; });
      return run_sweep_cmd(spec, sweep_jobs, any_attractive, sweep_out);
    }
    if (cmd_ver->parsed())
      return run_verify({ver_n, ver_lambda}, level, corrupt_t, ver_out);
    std::cerr << "no subcommand selected\n";
    return kExitUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const mosh2d::resource_limit_error& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::domain_error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
