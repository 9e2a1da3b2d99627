// entdyn — command-line front end of the entdyn shared library.
//
// Subcommands emit plot-ready CSV (evolve, partitions, quasimode, figure),
// a criteria report as JSON (criteria), or run the self-verification suites
// (verify). Output is deterministic: fixed scientific notation with 12
// significant digits, LF line endings, insertion-ordered JSON keys.
//
// Exit codes: 0 success, 1 argument or I/O error, 2 domain error (e.g. weak
// coupling where the criteria need lambda < 2W); verify exits with
// 2 + number-of-failed-suites (>= 3) when any suite fails.

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <entdyn/entdyn.h>

namespace {

struct RunConfig {
  double lambda_over_w = 0.1;
  double alpha = 1.0 / std::sqrt(10.0);
  double tau_max = 10.0;
  long long samples = 2001;
  std::string out_path;  // empty -> stdout
};

std::string format_sci(double v) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::scientific, 11);
  return std::string(buf, res.ptr);
}

int write_output(const std::string& path, const std::string& payload) {
  if (path.empty()) {
    std::fwrite(payload.data(), 1, payload.size(), stdout);
    return std::fflush(stdout) == 0 ? 0 : 1;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output path: " << path << "\n";
    return 1;
  }
  out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
  out.flush();
  if (!out.good()) {
    std::cerr << "error: failed writing output: " << path << "\n";
    return 1;
  }
  return 0;
}

int report_api_error(entdyn_status status) {
  std::cerr << "error (" << entdyn_status_name(status) << "): " << entdyn_last_error() << "\n";
  return status == ENTDYN_ERR_DOMAIN ? 2 : 1;
}

struct SystemHandle {
  entdyn_system* sys = nullptr;
  ~SystemHandle() { entdyn_system_destroy(sys); }
};

int make_system(const RunConfig& cfg, SystemHandle& handle) {
  const entdyn_status st = entdyn_system_create(cfg.lambda_over_w, cfg.alpha, &handle.sys);
  if (st != ENTDYN_OK) return report_api_error(st);
  return 0;
}

int run_evolve(const RunConfig& cfg) {
  SystemHandle h;
  if (int rc = make_system(cfg, h); rc != 0) return rc;

  std::string csv = "tau,wt,c1_sq,c2_sq,C_a1a2,C_r1r2,C_a1r1,C_a1r2\n";
  for (long long i = 0; i < cfg.samples; ++i) {
    const double tau = cfg.tau_max * static_cast<double>(i) / static_cast<double>(cfg.samples - 1);
    const double t = tau / cfg.lambda_over_w;  // units of 1/W
    entdyn_amplitudes amp{};
    entdyn_concurrences con{};
    if (entdyn_status st = entdyn_amplitudes_at(h.sys, t, &amp); st != ENTDYN_OK) {
      return report_api_error(st);
    }
    if (entdyn_status st = entdyn_concurrences_at(h.sys, t, &con); st != ENTDYN_OK) {
      return report_api_error(st);
    }
    const double c1_sq = amp.c1.re * amp.c1.re + amp.c1.im * amp.c1.im;
    csv += format_sci(tau) + ',' + format_sci(t) + ',' + format_sci(c1_sq) + ',' +
           format_sci(amp.c2 * amp.c2) + ',' + format_sci(con.atoms) + ',' +
           format_sci(con.reservoirs) + ',' + format_sci(con.atom_reservoir) + ',' +
           format_sci(con.cross) + '\n';
  }
  return write_output(cfg.out_path, csv);
}

int run_partitions(const RunConfig& cfg) {
  SystemHandle h;
  if (int rc = make_system(cfg, h); rc != 0) return rc;

  std::string csv = "tau,I,II,III,IV,V,VI\n";
  for (long long i = 0; i < cfg.samples; ++i) {
    const double tau = cfg.tau_max * static_cast<double>(i) / static_cast<double>(cfg.samples - 1);
    const double t = tau / cfg.lambda_over_w;
    entdyn_partition_entanglement pe{};
    if (entdyn_status st = entdyn_partitions_at(h.sys, t, &pe); st != ENTDYN_OK) {
      return report_api_error(st);
    }
    csv += format_sci(tau) + ',' + format_sci(pe.pair_within) + ',' +
           format_sci(pe.atom_vs_rest) + ',' + format_sci(pe.cross_pairs) + ',' +
           format_sci(pe.multipartite) + ',' + format_sci(pe.atoms_vs_reservoirs) + ',' +
           format_sci(pe.reservoir_vs_rest) + '\n';
  }
  return write_output(cfg.out_path, csv);
}

int run_quasimode(const RunConfig& cfg) {
  SystemHandle h;
  if (int rc = make_system(cfg, h); rc != 0) return rc;

  std::string csv = "tau,pa,pm,pr\n";
  for (long long i = 0; i < cfg.samples; ++i) {
    const double tau = cfg.tau_max * static_cast<double>(i) / static_cast<double>(cfg.samples - 1);
    const double t = tau / cfg.lambda_over_w;
    entdyn_populations pop{};
    if (entdyn_status st = entdyn_populations_at(h.sys, t, &pop); st != ENTDYN_OK) {
      return report_api_error(st);
    }
    csv += format_sci(tau) + ',' + format_sci(pop.pa) + ',' + format_sci(pop.pm) + ',' +
           format_sci(pop.pr) + '\n';
  }
  return write_output(cfg.out_path, csv);
}

int run_criteria(const RunConfig& cfg) {
  SystemHandle h;
  if (int rc = make_system(cfg, h); rc != 0) return rc;

  entdyn_criteria_report r{};
  if (entdyn_status st = entdyn_criteria_report_compute(h.sys, &r); st != ENTDYN_OK) {
    return report_api_error(st);
  }

  nlohmann::ordered_json doc;
  doc["lambda_over_w"] = r.lambda_over_w;
  doc["alpha"] = r.alpha;
  doc["beta"] = r.beta;
  doc["d_over_w"] = r.d_over_w;
  doc["revival_threshold_n1"] = r.revival_threshold_n1;
  doc["esd_threshold_n1"] = r.esd_threshold_n1;
  doc["revival_occurs"] = r.revival_occurs != 0;
  doc["esd_occurs"] = r.esd_occurs != 0;
  if (r.n_a_infinite != 0) {
    doc["n_a"] = "infinite";
  } else {
    doc["n_a"] = r.n_a;
  }
  doc["n_r"] = r.n_r;
  doc["t_r_in_inv_w"] = r.t_r_in_inv_w;
  switch (r.ordering) {
    case ENTDYN_ORDERING_BEFORE: doc["ordering"] = "before"; break;
    case ENTDYN_ORDERING_SIMULTANEOUS: doc["ordering"] = "simultaneous"; break;
    case ENTDYN_ORDERING_AFTER: doc["ordering"] = "after"; break;
    case ENTDYN_ORDERING_NOT_APPLICABLE: doc["ordering"] = "not-applicable"; break;
  }
  doc["warnings"] = nlohmann::ordered_json::array();
  if (r.warnings & ENTDYN_WARN_NA_NEAR_INTEGER) {
    doc["warnings"].push_back("n_a floor argument within 1e-9 of an integer");
  }
  if (r.warnings & ENTDYN_WARN_NR_NEAR_INTEGER) {
    doc["warnings"].push_back("n_r floor argument within 1e-9 of an integer");
  }

  return write_output(cfg.out_path, doc.dump(2) + "\n");
}

void verify_print(const char* suite, int status_code, const char* detail, void* user) {
  auto* out = static_cast<std::string*>(user);
  const char* tag = status_code == 0 ? "[pass]" : (status_code == 2 ? "[skip]" : "[FAIL]");
  *out += std::string(tag) + " " + suite + ": " + detail + "\n";
}

int run_verify(const std::vector<double>& lambda_list, const std::string& fault,
               const std::string& out_path) {
  unsigned flags = 0;
  if (fault == "threshold-sign") flags |= ENTDYN_VERIFY_FAULT_THRESHOLD_SIGN;

  std::string report;
  int failures = 0;
  const entdyn_status st = entdyn_verify_run(lambda_list.data(), lambda_list.size(), flags,
                                             verify_print, &report, &failures);
  if (st != ENTDYN_OK) return report_api_error(st);

  report += failures == 0 ? "all suites passed\n"
                          : std::to_string(failures) + " suite(s) failed\n";
  if (int rc = write_output(out_path, report); rc != 0) return rc;
  return failures == 0 ? 0 : 2 + std::min(failures, 123);
}

struct FigurePreset {
  enum class Kind { Evolve, Partitions, Quasimode } kind;
  double lambda_over_w;
  double alpha;
};

const std::map<std::string, FigurePreset>& figure_presets() {
  using Kind = FigurePreset::Kind;
  static const std::map<std::string, FigurePreset> presets = {
      {"1a", {Kind::Evolve, 0.2, 1.0 / std::sqrt(2.0)}},
      {"1b", {Kind::Evolve, 0.2, std::sqrt(10.0) / 5.0}},
      {"1c", {Kind::Evolve, 0.2, 0.25}},
      {"1d", {Kind::Evolve, 0.1, 2.0 * std::sqrt(2.0) / 5.0}},
      {"1e", {Kind::Evolve, 0.1, 1.0 / std::sqrt(5.0)}},
      {"1f", {Kind::Evolve, 0.1, std::sqrt(3.0) / 5.0}},
      {"2", {Kind::Evolve, 0.1, 1.0 / std::sqrt(10.0)}},
      {"3", {Kind::Partitions, 0.2, 1.0 / std::sqrt(10.0)}},
      {"4", {Kind::Quasimode, 0.1, 1.0 / std::sqrt(10.0)}},
  };
  return presets;
}

int run_figure(const std::string& id, RunConfig cfg) {
  const auto it = figure_presets().find(id);
  if (it == figure_presets().end()) {
    std::cerr << "error: unknown figure id '" << id << "' (expected 1a..1f, 2, 3 or 4)\n";
    return 1;
  }
  cfg.lambda_over_w = it->second.lambda_over_w;
  cfg.alpha = it->second.alpha;
  switch (it->second.kind) {
    case FigurePreset::Kind::Evolve: return run_evolve(cfg);
    case FigurePreset::Kind::Partitions: return run_partitions(cfg);
    case FigurePreset::Kind::Quasimode: return run_quasimode(cfg);
  }
  return 1;
}

void add_grid_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--tau-max", cfg.tau_max, "end of the tau = lambda*t grid")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--samples", cfg.samples, "number of grid rows (>= 2)")
      ->check(CLI::Range(2LL, 100000000LL));
  cmd->add_option("--out", cfg.out_path, "output path (default: stdout)");
}

void add_model_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--lambda-over-w", cfg.lambda_over_w, "reservoir width over coupling strength")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--alpha", cfg.alpha, "initial weight of |gg> (beta = sqrt(1-alpha^2))")
      ->check(CLI::Range(0.0, 1.0));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"entdyn — entanglement dynamics of two atoms in independent Lorentzian reservoirs"};
  app.require_subcommand(1);

  RunConfig cfg;

  auto* evolve = app.add_subcommand(
      "evolve", "CSV time series of pair concurrences and excited-state population");
  add_model_options(evolve, cfg);
  add_grid_options(evolve, cfg);

  auto* partitions = app.add_subcommand(
      "partitions", "CSV time series of bipartition entanglement (I-concurrence) and C_N");
  add_model_options(partitions, cfg);
  add_grid_options(partitions, cfg);

  auto* quasimode = app.add_subcommand(
      "quasimode", "CSV time series of atom / discrete-mode / continuum populations");
  add_model_options(quasimode, cfg);
  add_grid_options(quasimode, cfg);

  auto* criteria = app.add_subcommand(
      "criteria", "JSON report of revival/death thresholds, counts and ordering");
  add_model_options(criteria, cfg);
  criteria->add_option("--out", cfg.out_path, "output path (default: stdout)");

  std::vector<double> verify_lambdas;
  std::string fault;
  std::string verify_out;
  auto* verify = app.add_subcommand(
      "verify", "run the self-verification suites; exits 0 on success, 2+failures otherwise");
  verify->add_option("--lambda-over-w", verify_lambdas, "lambda/W values (repeatable)")
      ->check(CLI::PositiveNumber);
  verify->add_option("--inject-fault", fault,
                     "self-test of the harness: force a suite failure")
      ->check(CLI::IsMember({"threshold-sign"}));
  verify->add_option("--out", verify_out, "output path (default: stdout)");

  std::string figure_id;
  auto* figure = app.add_subcommand("figure",
                                    "emit a named preset dataset (1a..1f, 2, 3, 4)");
  figure->add_option("id", figure_id, "preset id")->required();
  add_grid_options(figure, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  if (evolve->parsed()) return run_evolve(cfg);
  if (partitions->parsed()) return run_partitions(cfg);
  if (quasimode->parsed()) return run_quasimode(cfg);
  if (criteria->parsed()) return run_criteria(cfg);
  if (verify->parsed()) {
    if (verify_lambdas.empty()) verify_lambdas = {0.1, 0.2};
    return run_verify(verify_lambdas, fault, verify_out);
  }
  if (figure->parsed()) return run_figure(figure_id, cfg);
  return 1;
}
