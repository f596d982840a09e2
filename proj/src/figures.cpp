// SPDX-License-Identifier: Apache-2.0
#include "morse/figures.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <vector>

#include "morse/dynamics.hpp"
#include "morse/errors.hpp"
#include "morse/observables.hpp"

namespace morse::figures {

namespace {

std::string fmt15(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

double parse_real(const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw InvalidArgument("grid: cannot parse '" + text + "' as a number");
  }
  if (used != text.size() || !std::isfinite(v)) {
    throw InvalidArgument("grid: cannot parse '" + text + "' as a finite number");
  }
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    parts.push_back(item);
  }
  if (!text.empty() && text.back() == sep) {
    parts.push_back("");
  }
  return parts;
}

std::string join_reals(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += fmt15(values[i]);
  }
  return out;
}

std::string join_ints(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += std::to_string(values[i]);
  }
  return out;
}

// Comment block + header + buffered rows. Rows are computed before anything
// is written so that regime warnings discovered along the way can be placed
// in the comment block; output is fully deterministic for a given config.
struct CsvDocument {
  CsvDocument(std::string cmd, const RunConfig* cfg, std::string hdr)
      : command(std::move(cmd)), config(cfg), header(std::move(hdr)) {}

  std::string command;
  const RunConfig* config;
  std::string header;
  std::vector<std::string> warnings;
  std::vector<std::string> rows;

  void warn_leakage(const BuildDiagnostics& diag, const std::string& where) {
    if (diag.regime_warning) {
      warnings.push_back("# warning: top-level occupation " +
                         fmt15(diag.top_level_leakage) + " exceeds 0.01 at " + where +
                         "; state leaves the low-lying regime");
    }
  }

  void flush(std::ostream& out) const {
    out << "# morse-figures " << command << '\n';
    out << "# config: n_levels=" << config->n_levels
        << " family=" << family_name(config->family)
        << " method=" << method_name(config->method) << " gamma="
        << join_reals(config->gamma) << " alpha=" << join_reals(config->alpha)
        << " m=" << join_ints(config->subtract_m) << " phi=" << fmt15(config->phi)
        << " t_max=" << fmt15(config->t_max) << " t_steps=" << config->t_steps << '\n';
    for (const std::string& w : warnings) {
      out << w << '\n';
    }
    out << header << '\n';
    for (const std::string& r : rows) {
      out << r << '\n';
    }
  }
};

void require_scalar(const std::vector<double>& grid, const std::string& name) {
  if (grid.size() != 1) {
    throw InvalidArgument("config: " + name + " must be a single value here, got " +
                          std::to_string(grid.size()) + " grid points");
  }
}

void require_scalar(const std::vector<int>& grid, const std::string& name) {
  if (grid.size() != 1) {
    throw InvalidArgument("config: " + name + " must be a single value here, got " +
                          std::to_string(grid.size()) + " grid points");
  }
}

void require_nonempty(std::size_t size, const std::string& name) {
  if (size == 0) {
    throw InvalidArgument("config: " + name + " grid is empty");
  }
}

ModelParams params_from(const RunConfig& config) {
  return make_params(config.n_levels);
}

void require_gammas_nonnegative(const RunConfig& config) {
  for (const double g : config.gamma) {
    if (!(g >= 0.0) || !std::isfinite(g)) {
      throw InvalidArgument("config: gamma values must be finite and >= 0");
    }
  }
}

void require_m_range(const RunConfig& config, const ModelParams& params) {
  for (const int m : config.subtract_m) {
    if (m < 0 || m >= params.n_levels) {
      throw InvalidArgument("config: m=" + std::to_string(m) + " outside [0, " +
                            std::to_string(params.n_levels - 1) + "]");
    }
  }
}

std::vector<double> time_grid(const RunConfig& config) {
  if (config.t_steps < 1) {
    throw InvalidArgument("config: t_steps must be >= 1");
  }
  if (!(config.t_max > 0.0)) {
    throw InvalidArgument("config: t_max must be positive");
  }
  std::vector<double> t(config.t_steps);
  for (int i = 0; i < config.t_steps; ++i) {
    t[i] = (config.t_steps == 1)
               ? 0.0
               : config.t_max * static_cast<double>(i) / (config.t_steps - 1);
  }
  return t;
}

StateVector build_family_state(const RunConfig& config, const ModelParams& params,
                               BuildDiagnostics* diag) {
  if (config.family == Family::loqcs) {
    return loqcs_state(LoqcsSpec{config.alpha[0], config.gamma[0], config.method},
                       params, diag);
  }
  if (!(config.alpha[0] >= 0.0)) {
    throw InvalidArgument("config: dpscs takes |alpha| >= 0");
  }
  return dpscs_state(DpscsSpec{config.alpha[0], config.phi, config.subtract_m[0]},
                     params, diag);
}

}  // namespace

std::vector<double> parse_real_grid(const std::string& text) {
  if (text.empty()) {
    throw InvalidArgument("grid: empty specification");
  }
  if (text.find(':') != std::string::npos) {
    const std::vector<std::string> parts = split(text, ':');
    if (parts.size() != 3) {
      throw InvalidArgument("grid: expected lo:hi:count, got '" + text + "'");
    }
    const double lo = parse_real(parts[0]);
    const double hi = parse_real(parts[1]);
    const double count_raw = parse_real(parts[2]);
    const int count = static_cast<int>(count_raw);
    if (count_raw != count || count < 1) {
      throw InvalidArgument("grid: count must be a positive integer in '" + text + "'");
    }
    std::vector<double> grid(count);
    for (int i = 0; i < count; ++i) {
      grid[i] = (count == 1) ? lo : lo + (hi - lo) * static_cast<double>(i) / (count - 1);
    }
    return grid;
  }
  std::vector<double> grid;
  for (const std::string& part : split(text, ',')) {
    grid.push_back(parse_real(part));
  }
  return grid;
}

std::vector<int> parse_int_grid(const std::string& text) {
  std::vector<int> grid;
  for (const double v : parse_real_grid(text)) {
    const int i = static_cast<int>(v);
    if (v != i) {
      throw InvalidArgument("grid: expected integers in '" + text + "'");
    }
    grid.push_back(i);
  }
  return grid;
}

std::string method_name(LoqcsMethod method) {
  switch (method) {
    case LoqcsMethod::closed_form:
      return "closed-form";
    case LoqcsMethod::recursion:
      return "recursion";
    case LoqcsMethod::eigen_oracle:
      return "eigen-oracle";
  }
  return "unknown";
}

std::string family_name(Family family) {
  return family == Family::loqcs ? "loqcs" : "dpscs";
}

void write_variance_vs_gamma(const RunConfig& config, std::ostream& out) {
  const ModelParams params = params_from(config);
  require_nonempty(config.gamma.size(), "gamma");
  require_scalar(config.alpha, "alpha");
  require_gammas_nonnegative(config);
  const double alpha = config.alpha[0];
  for (const double g : config.gamma) {
    if (g == 0.0 && alpha == 0.0) {
      throw InvalidArgument(
          "config: gamma=0 with alpha=0 is the bare vacuum, whose normalized "
          "variance is undefined");
    }
  }

  CsvDocument doc{"variance-vs-gamma", &config, "gamma,nv_closed_form,nv_recursion"};
  for (const double g : config.gamma) {
    BuildDiagnostics diag;
    const StateVector closed =
        loqcs_state(LoqcsSpec{alpha, g, LoqcsMethod::closed_form}, params, &diag);
    doc.warn_leakage(diag, "gamma=" + fmt15(g));
    const StateVector rec = loqcs_recursion(alpha, g, params);
    doc.rows.push_back(fmt15(g) + "," + fmt15(number_stats(closed).normalized_variance) +
                       "," + fmt15(number_stats(rec).normalized_variance));
  }
  doc.flush(out);
}

void write_pn_dist(const RunConfig& config, std::ostream& out) {
  const ModelParams params = params_from(config);
  require_scalar(config.gamma, "gamma");
  require_scalar(config.alpha, "alpha");
  require_scalar(config.subtract_m, "m");
  require_gammas_nonnegative(config);
  if (config.family == Family::dpscs) {
    require_m_range(config, params);
  }

  BuildDiagnostics diag;
  const StateVector psi = build_family_state(config, params, &diag);
  CsvDocument doc{"pn-dist", &config, "n,p_n"};
  doc.warn_leakage(diag, "alpha=" + fmt15(config.alpha[0]));
  const std::vector<double> p = pn_distribution(psi);
  for (int n = 0; n < static_cast<int>(p.size()); ++n) {
    doc.rows.push_back(std::to_string(n) + "," + fmt15(p[n]));
  }
  doc.flush(out);
}

void write_variance_vs_alpha(const RunConfig& config, std::ostream& out) {
  const ModelParams params = params_from(config);
  require_nonempty(config.alpha.size(), "alpha");
  require_gammas_nonnegative(config);

  CsvDocument doc{"variance-vs-alpha", &config, ""};
  if (config.family == Family::loqcs) {
    require_scalar(config.gamma, "gamma");
    const double g = config.gamma[0];
    doc.header = "alpha,nv_closed_form,nv_recursion";
    for (const double a : config.alpha) {
      BuildDiagnostics diag;
      const StateVector closed =
          loqcs_state(LoqcsSpec{a, g, LoqcsMethod::closed_form}, params, &diag);
      doc.warn_leakage(diag, "alpha=" + fmt15(a));
      const StateVector rec = loqcs_recursion(a, g, params);
      doc.rows.push_back(fmt15(a) + "," +
                         fmt15(number_stats(closed).normalized_variance) + "," +
                         fmt15(number_stats(rec).normalized_variance));
    }
  } else {
    require_nonempty(config.subtract_m.size(), "m");
    require_m_range(config, params);
    doc.header = "alpha";
    for (const int m : config.subtract_m) {
      doc.header += ",nv_m" + std::to_string(m);
    }
    for (const double a : config.alpha) {
      std::string row = fmt15(a);
      for (const int m : config.subtract_m) {
        BuildDiagnostics diag;
        const StateVector psi =
            dpscs_state(DpscsSpec{a, config.phi, m}, params, &diag);
        doc.warn_leakage(diag, "alpha=" + fmt15(a) + " m=" + std::to_string(m));
        row += "," + fmt15(number_stats(psi).normalized_variance);
      }
      doc.rows.push_back(row);
    }
  }
  doc.flush(out);
}

void write_phase_space(const RunConfig& config, std::ostream& out) {
  const ModelParams params = params_from(config);
  require_scalar(config.gamma, "gamma");
  require_scalar(config.alpha, "alpha");
  require_scalar(config.subtract_m, "m");
  require_gammas_nonnegative(config);
  if (config.family == Family::dpscs) {
    require_m_range(config, params);
  }
  const std::vector<double> t = time_grid(config);

  BuildDiagnostics diag;
  const StateVector psi0 = build_family_state(config, params, &diag);
  const XpOperators ops = build_xd_pd(params);

  CsvDocument doc{"phase-space", &config, "t,x_mean,p_mean,var_x,var_p,delta_xp"};
  doc.warn_leakage(diag, "alpha=" + fmt15(config.alpha[0]));
  for (const TrajectoryPoint& pt : trajectory(psi0, t, params, ops.x, ops.p)) {
    doc.rows.push_back(fmt15(pt.t) + "," + fmt15(pt.x_mean) + "," + fmt15(pt.p_mean) +
                       "," + fmt15(pt.var_x) + "," + fmt15(pt.var_p) + "," +
                       fmt15(pt.delta_xp));
  }
  doc.flush(out);
}

void write_dispersion_vs_gamma(const RunConfig& config, std::ostream& out) {
  const ModelParams params = params_from(config);
  require_nonempty(config.gamma.size(), "gamma");
  require_scalar(config.alpha, "alpha");
  require_gammas_nonnegative(config);
  const XpOperators ops = build_xd_pd(params);

  CsvDocument doc{"dispersion-vs-gamma", &config, "gamma,var_x,var_p,delta_xp"};
  for (const double g : config.gamma) {
    BuildDiagnostics diag;
    const StateVector psi =
        loqcs_state(LoqcsSpec{config.alpha[0], g, config.method}, params, &diag);
    doc.warn_leakage(diag, "gamma=" + fmt15(g));
    const auto [var_x, var_p] = dispersions(psi, ops.x, ops.p);
    doc.rows.push_back(fmt15(g) + "," + fmt15(var_x) + "," + fmt15(var_p) + "," +
                       fmt15(uncertainty_product(psi, ops.x, ops.p)));
  }
  doc.flush(out);
}

void write_dispersion_vs_alpha_dpscs(const RunConfig& config, std::ostream& out) {
  const ModelParams params = params_from(config);
  require_nonempty(config.alpha.size(), "alpha");
  require_nonempty(config.subtract_m.size(), "m");
  require_m_range(config, params);
  const XpOperators ops = build_xd_pd(params);

  CsvDocument doc{"dispersion-vs-alpha-dpscs", &config, "alpha"};
  for (const int m : config.subtract_m) {
    const std::string tag = "_m" + std::to_string(m);
    doc.header += ",var_x" + tag + ",var_p" + tag + ",delta_xp" + tag;
  }
  for (const double a : config.alpha) {
    std::string row = fmt15(a);
    for (const int m : config.subtract_m) {
      BuildDiagnostics diag;
      const StateVector psi = dpscs_state(DpscsSpec{a, config.phi, m}, params, &diag);
      doc.warn_leakage(diag, "alpha=" + fmt15(a) + " m=" + std::to_string(m));
      const auto [var_x, var_p] = dispersions(psi, ops.x, ops.p);
      row += "," + fmt15(var_x) + "," + fmt15(var_p) + "," +
             fmt15(uncertainty_product(psi, ops.x, ops.p));
    }
    doc.rows.push_back(row);
  }
  doc.flush(out);
}

}  // namespace morse::figures
