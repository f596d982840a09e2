// SPDX-License-Identifier: Apache-2.0
//
// morse-figures: deterministic CSV emitter for the statistics, phase-space
// trajectories and uncertainty relations of Morse-like squeezed coherent
// states. One subcommand per data family; no plotting, no randomness.

#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "morse/errors.hpp"
#include "morse/figures.hpp"

namespace {

namespace fig = morse::figures;

constexpr int kExitConfigError = 2;
constexpr int kExitOutOfRegime = 3;

struct CliOptions {
  int n_levels = 10;
  std::string gamma;
  std::string alpha;
  std::string m;
  double phi = 0.0;
  std::string method = "closed-form";
  double t_max = 200.0;
  int t_steps = 4000;
  std::string out;
};

morse::LoqcsMethod parse_method(const std::string& name) {
  if (name == "closed-form") {
    return morse::LoqcsMethod::closed_form;
  }
  if (name == "recursion") {
    return morse::LoqcsMethod::recursion;
  }
  if (name == "eigen-oracle") {
    return morse::LoqcsMethod::eigen_oracle;
  }
  throw morse::InvalidArgument("unknown method '" + name +
                               "' (closed-form|recursion|eigen-oracle)");
}

fig::Family parse_family(const std::string& name) {
  if (name == "loqcs") {
    return fig::Family::loqcs;
  }
  if (name == "dpscs") {
    return fig::Family::dpscs;
  }
  throw morse::InvalidArgument("unknown state family '" + name + "' (loqcs|dpscs)");
}

// Per-command defaults for the flags the user did not set. Grids span the
// ranges the library is designed around and are fully overridable.
struct Defaults {
  std::string gamma_loqcs;
  std::string alpha_loqcs;
  std::string alpha_dpscs;
  std::string m_dpscs;
};

fig::RunConfig resolve(const CliOptions& opts, const std::string& family,
                       const Defaults& defaults, bool gamma_set, bool alpha_set,
                       bool m_set) {
  fig::RunConfig config;
  config.n_levels = opts.n_levels;
  config.family = parse_family(family);
  config.method = parse_method(opts.method);
  config.phi = opts.phi;
  config.t_max = opts.t_max;
  config.t_steps = opts.t_steps;

  const bool dpscs = config.family == fig::Family::dpscs;
  const std::string gamma_text = gamma_set ? opts.gamma : defaults.gamma_loqcs;
  const std::string alpha_text =
      alpha_set ? opts.alpha : (dpscs ? defaults.alpha_dpscs : defaults.alpha_loqcs);
  const std::string m_text = m_set ? opts.m : defaults.m_dpscs;
  config.gamma = fig::parse_real_grid(gamma_text);
  config.alpha = fig::parse_real_grid(alpha_text);
  config.subtract_m = fig::parse_int_grid(m_text);
  return config;
}

std::filesystem::path resolve_out_path(const std::string& out,
                                       const std::string& default_name) {
  std::filesystem::path base = ".";
  if (const char* env = std::getenv("MORSE_OUT_DIR"); env != nullptr && *env != '\0') {
    base = env;
  }
  std::filesystem::path target = out.empty() ? std::filesystem::path(default_name)
                                             : std::filesystem::path(out);
  if (!target.is_absolute()) {
    target = base / target;
  }
  return target;
}

void write_csv(const fig::RunConfig& config, const std::string& out,
               const std::string& default_name,
               const std::function<void(const fig::RunConfig&, std::ostream&)>& writer) {
  const std::filesystem::path path = resolve_out_path(out, default_name);
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream stream(path);
  if (!stream) {
    throw morse::InvalidArgument("cannot open output file " + path.string());
  }
  writer(config, stream);
  stream.flush();
  if (!stream) {
    throw morse::InvalidArgument("failed writing " + path.string());
  }
  std::cout << "wrote " << path.string() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Squeezed coherent states of a Morse-like deformed oscillator: "
      "number statistics, phase-space trajectories and uncertainty products "
      "as deterministic CSV data"};
  app.fallthrough();
  app.set_config("--config", "", "Config file with key=value lines (flags override)");

  CliOptions opts;
  app.add_option("--n-levels", opts.n_levels, "Number of bound levels N");
  auto* opt_gamma =
      app.add_option("--gamma", opts.gamma, "Squeeze parameter: value, list or lo:hi:count");
  auto* opt_alpha =
      app.add_option("--alpha", opts.alpha, "State size: value, list or lo:hi:count");
  auto* opt_m =
      app.add_option("--m", opts.m, "Subtracted quanta: value, list or lo:hi:count");
  app.add_option("--phi", opts.phi, "Displacement phase (radians)");
  app.add_option("--method", opts.method,
                 "LOQCS construction: closed-form|recursion|eigen-oracle");
  app.add_option("--t-max", opts.t_max, "Trajectory end time (1/omega)");
  app.add_option("--t-steps", opts.t_steps, "Trajectory sample count");
  app.add_option("--out", opts.out,
                 "Output CSV path (relative paths land in MORSE_OUT_DIR)");

  std::string fam_variance_alpha = "loqcs";
  std::string fam_pn = "loqcs";
  std::string fam_phase = "loqcs";

  auto* cmd_vg = app.add_subcommand(
      "variance-vs-gamma",
      "Normalized number variance of the squeezed vacuum family vs gamma, "
      "closed form and recursion side by side");
  auto* cmd_pn = app.add_subcommand("pn-dist", "Occupation distribution of one state");
  cmd_pn->add_option("family", fam_pn, "loqcs|dpscs")->capture_default_str();
  auto* cmd_va = app.add_subcommand("variance-vs-alpha",
                                    "Normalized number variance vs alpha");
  cmd_va->add_option("family", fam_variance_alpha, "loqcs|dpscs")->capture_default_str();
  auto* cmd_ps = app.add_subcommand("phase-space",
                                    "Phase-space trajectory and dispersions over time");
  cmd_ps->add_option("family", fam_phase, "loqcs|dpscs")->capture_default_str();
  auto* cmd_dg = app.add_subcommand(
      "dispersion-vs-gamma", "Dispersions and uncertainty product at t=0 vs gamma");
  auto* cmd_da = app.add_subcommand(
      "dispersion-vs-alpha-dpscs",
      "DPSCS dispersions and uncertainty product at t=0 vs alpha, per m");
  app.require_subcommand(0, 1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e);
    }
    app.exit(e);
    return kExitConfigError;
  }

  try {
    const bool g_set = opt_gamma->count() > 0;
    const bool a_set = opt_alpha->count() > 0;
    const bool m_set = opt_m->count() > 0;

    if (cmd_vg->parsed()) {
      const Defaults d{"0.016:0.8:50", "0", "", "0"};
      const fig::RunConfig config = resolve(opts, "loqcs", d, g_set, a_set, m_set);
      write_csv(config, opts.out, "variance_vs_gamma.csv", fig::write_variance_vs_gamma);
    } else if (cmd_pn->parsed()) {
      const Defaults d{"0.3", "0", "1", "0"};
      const fig::RunConfig config = resolve(opts, fam_pn, d, g_set, a_set, m_set);
      write_csv(config, opts.out, "pn_dist.csv", fig::write_pn_dist);
    } else if (cmd_va->parsed()) {
      const Defaults d{"0.3", "0:2:81", "0.05:2:40", "0,2,4,8"};
      const fig::RunConfig config =
          resolve(opts, fam_variance_alpha, d, g_set, a_set, m_set);
      write_csv(config, opts.out, "variance_vs_alpha.csv", fig::write_variance_vs_alpha);
    } else if (cmd_ps->parsed()) {
      const Defaults d{"0.1", "0", "1", "0"};
      const fig::RunConfig config = resolve(opts, fam_phase, d, g_set, a_set, m_set);
      write_csv(config, opts.out, "phase_space.csv", fig::write_phase_space);
    } else if (cmd_dg->parsed()) {
      const Defaults d{"0.016:0.8:50", "0", "", "0"};
      const fig::RunConfig config = resolve(opts, "loqcs", d, g_set, a_set, m_set);
      write_csv(config, opts.out, "dispersion_vs_gamma.csv",
                fig::write_dispersion_vs_gamma);
    } else if (cmd_da->parsed()) {
      const Defaults d{"0.3", "", "0.05:2:40", "0,2,4,8"};
      const fig::RunConfig config = resolve(opts, "dpscs", d, g_set, a_set, m_set);
      write_csv(config, opts.out, "dispersion_vs_alpha_dpscs.csv",
                fig::write_dispersion_vs_alpha_dpscs);
    } else {
      std::cout << app.help();
      return 0;
    }
  } catch (const morse::OutOfRegime& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitOutOfRegime;
  } catch (const morse::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const morse::UndefinedStatistic& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
