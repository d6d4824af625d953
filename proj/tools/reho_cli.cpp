// Command-line front end for the reho library. Every subcommand emits CSV
// with 17-significant-digit floats, so identical configurations produce
// byte-identical files.
//
// Exit codes: 0 success, 1 verification failure, 2 configuration error,
// 3 truncation cap hit.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "reho.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitConfigError = 2;
constexpr int kExitTruncationCap = 3;

constexpr double kPi = 3.14159265358979323846;

struct state_deleter {
  void operator()(reho_state* s) const { reho_state_free(s); }
};
using state_ptr = std::unique_ptr<reho_state, state_deleter>;

std::string fmt17(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

int exit_code_for(reho_status status) {
  return status == REHO_ERROR_TRUNCATION_CAP ? kExitTruncationCap : kExitConfigError;
}

int report_error(const char* what, reho_status status) {
  std::fprintf(stderr, "reho: %s: %s (%s)\n", what, reho_status_name(status),
               reho_last_error());
  return exit_code_for(status);
}

struct z_value {
  double re = 0.0;
  double im = 0.0;
};

bool parse_z(const std::string& text, z_value& z) {
  const auto comma = text.find(',');
  try {
    std::size_t used = 0;
    if (comma == std::string::npos) {
      z.re = std::stod(text, &used);
      z.im = 0.0;
      return used == text.size();
    }
    z.re = std::stod(text.substr(0, comma), &used);
    if (used != comma) return false;
    z.im = std::stod(text.substr(comma + 1), &used);
    return used == text.size() - comma - 1;
  } catch (const std::exception&) {
    return false;
  }
}

reho_ladder ladder_from(const std::string& name) {
  if (name == "a") return REHO_LADDER_A;
  if (name == "c") return REHO_LADDER_C;
  return REHO_LADDER_CTILDE;
}

double trapezoid(const std::vector<double>& xs, const double* ys) {
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    acc += 0.5 * (ys[i] + ys[i + 1]) * (xs[i + 1] - xs[i]);
  }
  return acc;
}

bool write_lines(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << content;
  return static_cast<bool>(out);
}

struct common_options {
  std::string ladder = "ctilde";
  int mu = -3;
  std::string z_text = "15,0";
  std::size_t kmax = 0;
};

void add_state_flags(CLI::App* cmd, common_options& opt, const char* default_ladder) {
  opt.ladder = default_ladder;
  cmd->add_option("--ladder", opt.ladder, "annihilation operator: a, c, or ctilde")
      ->check(CLI::IsMember({"a", "c", "ctilde"}))
      ->capture_default_str();
  cmd->add_option("--mu", opt.mu, "lowest-weight level of the ladder subspace")
      ->check(CLI::IsMember({-3, 1, 2}))
      ->capture_default_str();
  cmd->add_option("--z", opt.z_text, "coherent-state parameter as re,im")
      ->capture_default_str();
  cmd->add_option("--kmax", opt.kmax, "cap on retained expansion terms (0 = default)")
      ->capture_default_str();
}

int make_state(const common_options& opt, bool cat, reho_parity parity,
               state_ptr& out) {
  z_value z;
  if (!parse_z(opt.z_text, z)) {
    std::fprintf(stderr, "reho: cannot parse --z value '%s'\n", opt.z_text.c_str());
    return kExitConfigError;
  }
  reho_state* raw = nullptr;
  const reho_ladder ladder = ladder_from(opt.ladder);
  const reho_status status =
      cat ? reho_cat_state(ladder, opt.mu, z.re, z.im, parity, opt.kmax, &raw)
          : reho_coherent_state(ladder, opt.mu, z.re, z.im, opt.kmax, &raw);
  if (status != REHO_OK) return report_error("state construction failed", status);
  out.reset(raw);
  return kExitOk;
}

std::vector<double> make_times(const std::string& ladder, bool has_t, double t,
                               std::size_t t_samples) {
  if (has_t) return {t};
  double period = kPi;
  reho_density_period(ladder_from(ladder), &period);
  std::vector<double> times(t_samples);
  for (std::size_t j = 0; j < t_samples; ++j) {
    times[j] = period * static_cast<double>(j) / static_cast<double>(t_samples);
  }
  return times;
}

int fetch_grid(double xmin, double xmax, std::size_t nx, std::vector<double>& xs) {
  xs.resize(nx);
  const reho_status status = reho_grid_linspace(xmin, xmax, nx, xs.data());
  if (status != REHO_OK) return report_error("invalid grid", status);
  return kExitOk;
}

std::string density_csv(const std::vector<double>& xs, const std::vector<double>& ts,
                        const std::vector<double>& rho) {
  std::string out = "x,t,rho\n";
  for (std::size_t j = 0; j < ts.size(); ++j) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
      out += fmt17(xs[i]);
      out += ',';
      out += fmt17(ts[j]);
      out += ',';
      out += fmt17(rho[j * xs.size() + i]);
      out += '\n';
    }
  }
  return out;
}

int write_coefficients(const std::string& path, const reho_state* state) {
  std::string out = "k,nu,log_mag,phase\n";
  for (std::size_t k = 0; k < reho_state_size(state); ++k) {
    long level = 0;
    double log_mag = 0.0;
    double phase = 0.0;
    reho_state_coefficient(state, k, &level, &log_mag, &phase);
    out += std::to_string(k);
    out += ',';
    out += std::to_string(level);
    out += ',';
    out += fmt17(log_mag);
    out += ',';
    out += fmt17(phase);
    out += '\n';
  }
  if (!write_lines(path, out)) {
    std::fprintf(stderr, "reho: cannot write %s\n", path.c_str());
    return kExitConfigError;
  }
  return kExitOk;
}

int run_density(const common_options& opt, double xmin, double xmax, std::size_t nx,
                bool has_t, double t, std::size_t t_samples, const std::string& out_path,
                const std::string& coeffs_path) {
  state_ptr state;
  if (int rc = make_state(opt, false, REHO_PARITY_EVEN, state); rc != kExitOk) return rc;

  std::vector<double> xs;
  if (int rc = fetch_grid(xmin, xmax, nx, xs); rc != kExitOk) return rc;
  const std::vector<double> times = make_times(opt.ladder, has_t, t, t_samples);

  std::vector<double> rho(times.size() * xs.size());
  const reho_status status = reho_state_density_field(
      state.get(), times.data(), times.size(), xs.data(), xs.size(), rho.data());
  if (status != REHO_OK) return report_error("density evaluation failed", status);

  if (!write_lines(out_path, density_csv(xs, times, rho))) {
    std::fprintf(stderr, "reho: cannot write %s\n", out_path.c_str());
    return kExitConfigError;
  }
  if (!coeffs_path.empty()) {
    if (int rc = write_coefficients(coeffs_path, state.get()); rc != kExitOk) return rc;
  }

  double deficit = 0.0;
  for (std::size_t j = 0; j < times.size(); ++j) {
    deficit = std::max(deficit,
                       std::fabs(1.0 - trapezoid(xs, rho.data() + j * xs.size())));
  }
  std::size_t peaks = 0;
  reho_density_peaks(xs.data(), rho.data(), xs.size(), 0.02, 0.5, &peaks);
  std::printf("density: wrote %zu x %zu field to %s (integral deficit %.3g, %zu peaks at first sample)\n",
              times.size(), xs.size(), out_path.c_str(), deficit, peaks);
  return kExitOk;
}

int run_energy(const common_options& opt, double zmax, std::size_t samples,
               const std::string& out_path) {
  const reho_ladder ladder = ladder_from(opt.ladder);
  std::string out = "z_abs,energy,closed_form\n";
  for (std::size_t j = 0; j < samples; ++j) {
    const double z = samples == 1 ? zmax : zmax * j / (samples - 1.0);
    reho_state* raw = nullptr;
    reho_status status = reho_coherent_state(ladder, opt.mu, z, 0.0, opt.kmax, &raw);
    if (status != REHO_OK) return report_error("state construction failed", status);
    state_ptr state(raw);
    double energy = 0.0;
    reho_state_energy(state.get(), &energy);
    double closed = 0.0;
    status = reho_energy_closed_form(ladder, opt.mu, z, &closed);
    if (status != REHO_OK) return report_error("closed form failed", status);
    out += fmt17(z);
    out += ',';
    out += fmt17(energy);
    out += ',';
    out += fmt17(closed);
    out += '\n';
  }
  if (!write_lines(out_path, out)) {
    std::fprintf(stderr, "reho: cannot write %s\n", out_path.c_str());
    return kExitConfigError;
  }
  std::printf("energy: wrote %zu samples to %s\n", samples, out_path.c_str());
  return kExitOk;
}

int run_overlap(const common_options& opt, double zmax, std::size_t samples,
                const std::string& out_path) {
  const reho_ladder ladder = ladder_from(opt.ladder);
  std::string out = "z_abs,D\n";
  for (std::size_t j = 0; j < samples; ++j) {
    const double z = samples == 1 ? zmax : zmax * j / (samples - 1.0);
    double d = 0.0;
    const reho_status status = reho_overlap(ladder, opt.mu, z, &d);
    if (status != REHO_OK) return report_error("overlap failed", status);
    out += fmt17(z);
    out += ',';
    out += fmt17(d);
    out += '\n';
  }
  if (!write_lines(out_path, out)) {
    std::fprintf(stderr, "reho: cannot write %s\n", out_path.c_str());
    return kExitConfigError;
  }
  std::printf("overlap: wrote %zu samples to %s\n", samples, out_path.c_str());
  return kExitOk;
}

int run_cat(const common_options& opt, const std::string& parity_name, double xmin,
            double xmax, std::size_t nx, std::size_t t_samples,
            const std::string& out_path, const std::string& nodal_path) {
  const reho_parity parity =
      parity_name == "odd" ? REHO_PARITY_ODD : REHO_PARITY_EVEN;
  state_ptr state;
  if (int rc = make_state(opt, true, parity, state); rc != kExitOk) return rc;

  std::vector<double> xs;
  if (int rc = fetch_grid(xmin, xmax, nx, xs); rc != kExitOk) return rc;

  // Cat-state densities repeat at half the coherent-state period.
  double period = kPi;
  reho_density_period(ladder_from(opt.ladder), &period);
  period /= 2.0;
  std::vector<double> times(t_samples);
  for (std::size_t j = 0; j < t_samples; ++j) {
    times[j] = period * static_cast<double>(j) / static_cast<double>(t_samples);
  }

  std::vector<double> rho(times.size() * xs.size());
  reho_status status = reho_state_density_field(
      state.get(), times.data(), times.size(), xs.data(), xs.size(), rho.data());
  if (status != REHO_OK) return report_error("density evaluation failed", status);

  if (!write_lines(out_path, density_csv(xs, times, rho))) {
    std::fprintf(stderr, "reho: cannot write %s\n", out_path.c_str());
    return kExitConfigError;
  }

  const double origin = 0.0;
  std::string nodal = "t,rho_at_0\n";
  double max_at_origin = 0.0;
  for (double t : times) {
    double value = 0.0;
    status = reho_state_density(state.get(), t, &origin, 1, &value);
    if (status != REHO_OK) return report_error("density evaluation failed", status);
    max_at_origin = std::max(max_at_origin, value);
    nodal += fmt17(t);
    nodal += ',';
    nodal += fmt17(value);
    nodal += '\n';
  }
  if (!write_lines(nodal_path, nodal)) {
    std::fprintf(stderr, "reho: cannot write %s\n", nodal_path.c_str());
    return kExitConfigError;
  }
  std::printf("cat: wrote %zu x %zu field to %s, nodal trace to %s (max rho(0,t) = %.3g)\n",
              times.size(), xs.size(), out_path.c_str(), nodal_path.c_str(),
              max_at_origin);
  return kExitOk;
}

struct verify_sink {
  std::string lines;
  std::size_t shown = 0;
};

void verify_callback(const char* name, double measured, double tolerance, int passed,
                     void* user_data) {
  auto* sink = static_cast<verify_sink*>(user_data);
  std::string line = name;
  line += ',';
  line += fmt17(measured);
  line += ',';
  line += fmt17(tolerance);
  line += ',';
  line += passed ? "PASS" : "FAIL";
  line += '\n';
  std::fputs(line.c_str(), stdout);
  sink->lines += line;
  ++sink->shown;
}

int run_verify(const std::string& out_path) {
  verify_sink sink;
  sink.lines = "check,measured,tolerance,status\n";
  std::fputs("check,measured,tolerance,status\n", stdout);
  std::size_t total = 0;
  std::size_t failed = 0;
  const reho_status status =
      reho_run_verification(&verify_callback, &sink, &total, &failed);
  if (status != REHO_OK) return report_error("verification failed to run", status);
  std::printf("verify: %zu checks, %zu failed\n", total, failed);
  if (!out_path.empty() && !write_lines(out_path, sink.lines)) {
    std::fprintf(stderr, "reho: cannot write %s\n", out_path.c_str());
    return kExitConfigError;
  }
  return failed == 0 ? kExitOk : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rationally extended oscillator: coherent states, cats, densities"};
  app.require_subcommand(1);

  common_options density_opt, energy_opt, overlap_opt, cat_opt;

  // density: defaults mirror the headline figure settings (linearized
  // ladder, z = 15, one period of 64 samples on [-20, 20]).
  auto* density = app.add_subcommand("density", "time-dependent position density CSV");
  add_state_flags(density, density_opt, "ctilde");
  double d_xmin = -20.0, d_xmax = 20.0, d_t = 0.0;
  std::size_t d_nx = 4001, d_tsamples = 64;
  std::string d_out = "density.csv", d_coeffs;
  bool d_has_t = false;
  density->add_option("--xmin", d_xmin)->capture_default_str();
  density->add_option("--xmax", d_xmax)->capture_default_str();
  density->add_option("--nx", d_nx)->capture_default_str();
  auto* t_opt = density->add_option("--t", d_t, "single evaluation time");
  density->add_option("--t-samples", d_tsamples, "samples over one period")
      ->excludes(t_opt)
      ->capture_default_str();
  density->add_option("--out", d_out)->capture_default_str();
  density->add_option("--coeffs-out", d_coeffs,
                      "also write the state's coefficients as k,nu,log_mag,phase");

  auto* energy = app.add_subcommand("energy", "energy expectation sweep CSV");
  add_state_flags(energy, energy_opt, "a");
  double e_zmax = 15.0;
  std::size_t e_samples = 151;
  std::string e_out = "energy.csv";
  energy->add_option("--zmax", e_zmax)->capture_default_str();
  energy->add_option("--z-samples", e_samples)->capture_default_str();
  energy->add_option("--out", e_out)->capture_default_str();

  auto* overlap = app.add_subcommand("overlap", "overlap <+z|-z> sweep CSV");
  add_state_flags(overlap, overlap_opt, "a");
  double o_zmax = 15.0;
  std::size_t o_samples = 151;
  std::string o_out = "overlap.csv";
  overlap->add_option("--zmax", o_zmax)->capture_default_str();
  overlap->add_option("--z-samples", o_samples)->capture_default_str();
  overlap->add_option("--out", o_out)->capture_default_str();

  auto* cat = app.add_subcommand("cat", "Schroedinger cat density and nodal trace");
  add_state_flags(cat, cat_opt, "a");
  std::string c_parity = "even";
  double c_xmin = -20.0, c_xmax = 20.0;
  std::size_t c_nx = 4001, c_tsamples = 64;
  std::string c_out = "cat.csv", c_nodal;
  cat->add_option("--parity", c_parity)->check(CLI::IsMember({"even", "odd"}))
      ->capture_default_str();
  cat->add_option("--xmin", c_xmin)->capture_default_str();
  cat->add_option("--xmax", c_xmax)->capture_default_str();
  cat->add_option("--nx", c_nx)->capture_default_str();
  cat->add_option("--t-samples", c_tsamples)->capture_default_str();
  cat->add_option("--out", c_out)->capture_default_str();
  cat->add_option("--nodal-out", c_nodal, "nodal trace path (default <out>.nodal.csv)");

  auto* verify = app.add_subcommand("verify", "run the library verification suite");
  std::string v_out;
  verify->add_option("--out", v_out, "also write the report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfigError;
  }

  if (density->parsed()) {
    d_has_t = t_opt->count() > 0;
    return run_density(density_opt, d_xmin, d_xmax, d_nx, d_has_t, d_t, d_tsamples,
                       d_out, d_coeffs);
  }
  if (energy->parsed()) return run_energy(energy_opt, e_zmax, e_samples, e_out);
  if (overlap->parsed()) return run_overlap(overlap_opt, o_zmax, o_samples, o_out);
  if (cat->parsed()) {
    if (c_nodal.empty()) c_nodal = c_out + ".nodal.csv";
    return run_cat(cat_opt, c_parity, c_xmin, c_xmax, c_nx, c_tsamples, c_out, c_nodal);
  }
  return run_verify(v_out);
}
