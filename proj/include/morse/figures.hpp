// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "morse/state_builders.hpp"

namespace morse::figures {

enum class Family { loqcs, dpscs };

/// Fully resolved run configuration for one CSV-producing command.
/// Everything is deterministic; there is no randomness in the pipeline.
struct RunConfig {
  int n_levels = 10;
  Family family = Family::loqcs;
  LoqcsMethod method = LoqcsMethod::closed_form;
  std::vector<double> gamma{0.3};
  std::vector<double> alpha{0.0};
  std::vector<int> subtract_m{0};
  double phi = 0.0;
  double t_max = 200.0;
  int t_steps = 4000;
};

/// Parses "x", "a,b,c" or "lo:hi:count" (inclusive linear grid) into a
/// non-empty vector. Throws InvalidArgument on malformed input.
std::vector<double> parse_real_grid(const std::string& text);
std::vector<int> parse_int_grid(const std::string& text);

std::string method_name(LoqcsMethod method);
std::string family_name(Family family);

/// Normalized number variance of the squeezed vacuum family versus gamma,
/// closed form and recursion side by side. Columns:
///   gamma, nv_closed_form, nv_recursion
void write_variance_vs_gamma(const RunConfig& config, std::ostream& out);

/// Occupation distribution of a single state. Columns: n, p_n
void write_pn_dist(const RunConfig& config, std::ostream& out);

/// Normalized number variance versus alpha. For the LOQCS family, both
/// construction methods; for the DPSCS family, one column per m. Columns:
///   alpha, nv_closed_form, nv_recursion       (loqcs)
///   alpha, nv_m<m>...                         (dpscs)
void write_variance_vs_alpha(const RunConfig& config, std::ostream& out);

/// Phase-space trajectory of one state. Columns:
///   t, x_mean, p_mean, var_x, var_p, delta_xp
void write_phase_space(const RunConfig& config, std::ostream& out);

/// Dispersions and normalized uncertainty product of the squeezed vacuum
/// at t = 0 versus gamma. Columns: gamma, var_x, var_p, delta_xp
void write_dispersion_vs_gamma(const RunConfig& config, std::ostream& out);

/// Dispersions and normalized uncertainty product of the DPSCS family at
/// t = 0 versus alpha, one column group per m. Columns:
///   alpha, var_x_m<m>, var_p_m<m>, delta_xp_m<m> ...
void write_dispersion_vs_alpha_dpscs(const RunConfig& config, std::ostream& out);

}  // namespace morse::figures
