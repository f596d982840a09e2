// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "morse/dynamics.hpp"
#include "morse/errors.hpp"
#include "morse/observables.hpp"
#include "morse/state_builders.hpp"

using namespace morse;

namespace {

const ModelParams p10 = make_params(10);
const double kRevival = 2.0 * std::numbers::pi * 21.0;   // 2 pi k / omega

std::vector<double> linspace(double lo, double hi, int count) {
  std::vector<double> t(count);
  for (int i = 0; i < count; ++i) {
    t[i] = lo + (hi - lo) * static_cast<double>(i) / (count - 1);
  }
  return t;
}

}  // namespace

TEST_CASE("evolution basics: t = 0, eigenstate phases, unitarity") {
  const StateVector psi0 = loqcs_recursion(0.4, 0.3, p10);
  const StateVector same = evolve(psi0, 0.0, p10);
  CHECK((same.amps - psi0.amps).norm() == 0.0);

  const StateVector e4 = basis_state(10, 4);
  const StateVector rotated = evolve(e4, 2.7, p10);
  CHECK(std::abs(rotated.amps[4] -
                 std::polar(1.0, -energy(4, p10) * 2.7)) < 1e-15);
  CHECK(overlap(rotated, e4) == doctest::Approx(1.0).epsilon(1e-15));

  for (const double t : {0.1, 3.0, 100.0, 12345.6}) {
    CHECK(norm_error(evolve(psi0, t, p10)) <= 1e-12);
  }
}

TEST_CASE("exact revival at 2 pi k and time reversal") {
  std::vector<StateVector> states;
  states.push_back(loqcs_closed_form(LoqcsSpec{0.0, 0.1, LoqcsMethod::closed_form}, p10));
  states.push_back(loqcs_recursion(0.8, 0.3, p10));
  states.push_back(dpscs_state(DpscsSpec{1.0, std::numbers::pi / 4.0, 2}, p10));
  states.push_back(basis_state(10, 7));

  for (const StateVector& psi : states) {
    CHECK(overlap(psi, evolve(psi, kRevival, p10)) >= 1.0 - 1e-12);
    const StateVector back = evolve(evolve(psi, 1.7, p10), -1.7, p10);
    CHECK((back.amps - psi.amps).norm() <= 1e-12);
  }
}

TEST_CASE("trajectory conserves energy and occupation") {
  const StateVector psi0 = loqcs_recursion(0.2, 0.3, p10);
  const XpOperators ops = build_xd_pd(p10);
  const std::vector<double> grid = linspace(0.0, 60.0, 121);
  const std::vector<TrajectoryPoint> pts = trajectory(psi0, grid, p10, ops.x, ops.p);
  REQUIRE(pts.size() == grid.size());

  const auto [a, adag] = ladder_matrices(p10);
  const DenseOperator h{
      0.5 * p10.omega * (adag.entries * a.entries + a.entries * adag.entries), true};
  const double e_ref = expectation(h, psi0).real();
  const std::vector<double> p_ref = pn_distribution(psi0);

  for (std::size_t i = 0; i < grid.size(); ++i) {
    const StateVector psi = evolve(psi0, grid[i], p10);
    CHECK(std::abs(expectation(h, psi).real() - e_ref) <= 1e-12);
    const std::vector<double> p_now = pn_distribution(psi);
    for (int n = 0; n < 10; ++n) {
      CHECK(std::abs(p_now[n] - p_ref[n]) <= 1e-12);
    }
    CHECK(pts[i].norm_err <= 1e-12);
    CHECK(pts[i].t == grid[i]);
  }
}

TEST_CASE("trajectory validates its grid") {
  const StateVector psi0 = basis_state(10, 1);
  const XpOperators ops = build_xd_pd(p10);
  CHECK_THROWS_AS(trajectory(psi0, std::vector<double>{}, p10, ops.x, ops.p),
                  InvalidArgument);
  CHECK_THROWS_AS(trajectory(psi0, std::vector<double>{0.0, 0.0}, p10, ops.x, ops.p),
                  InvalidArgument);
  CHECK_THROWS_AS(trajectory(psi0, std::vector<double>{1.0, 0.5}, p10, ops.x, ops.p),
                  InvalidArgument);
}

TEST_CASE("squeezed vacuum orbit: localized, closes at the revival time") {
  const StateVector psi0 =
      loqcs_closed_form(LoqcsSpec{0.0, 0.1, LoqcsMethod::closed_form}, p10);
  const XpOperators ops = build_xd_pd(p10);
  const std::vector<double> grid = linspace(0.0, kRevival, 801);
  const std::vector<TrajectoryPoint> pts = trajectory(psi0, grid, p10, ops.x, ops.p);

  CHECK(std::abs(pts.back().x_mean - pts.front().x_mean) <= 1e-9);
  CHECK(std::abs(pts.back().p_mean - pts.front().p_mean) <= 1e-9);
  CHECK(std::abs(pts.back().var_x - pts.front().var_x) <= 1e-9);

  double max_var_x = 0.0;
  double min_var_p = 1e9;
  for (const TrajectoryPoint& pt : pts) {
    max_var_x = std::max(max_var_x, pt.var_x);
    min_var_p = std::min(min_var_p, pt.var_p);
    CHECK(pt.delta_xp >= 1.0 - 1e-9);
  }
  CHECK(max_var_x < 1.0);      // stays localized
  CHECK(min_var_p < 0.5);      // momentum squeezing appears along the orbit
}

TEST_CASE("displaced states trace an orbit elongated along x") {
  const StateVector psi0 =
      loqcs_closed_form(LoqcsSpec{0.8, 0.3, LoqcsMethod::closed_form}, p10);
  const XpOperators ops = build_xd_pd(p10);
  const std::vector<double> grid = linspace(0.0, kRevival, 1200);
  double x_lo = 1e9, x_hi = -1e9, p_lo = 1e9, p_hi = -1e9;
  for (const TrajectoryPoint& pt : trajectory(psi0, grid, p10, ops.x, ops.p)) {
    x_lo = std::min(x_lo, pt.x_mean);
    x_hi = std::max(x_hi, pt.x_mean);
    p_lo = std::min(p_lo, pt.p_mean);
    p_hi = std::max(p_hi, pt.p_mean);
  }
  CHECK(x_hi - x_lo > p_hi - p_lo);
}

TEST_CASE("deep photon subtraction keeps the uncertainty product near one") {
  const XpOperators ops = build_xd_pd(p10);
  const std::vector<double> grid = linspace(0.0, kRevival, 900);
  const auto max_dxp = [&](int m) {
    const StateVector psi0 = dpscs_state(DpscsSpec{1.0, 0.0, m}, p10);
    double worst = 0.0;
    for (const TrajectoryPoint& pt : trajectory(psi0, grid, p10, ops.x, ops.p)) {
      worst = std::max(worst, pt.delta_xp);
    }
    return worst;
  };
  CHECK(max_dxp(8) < max_dxp(0));
}
