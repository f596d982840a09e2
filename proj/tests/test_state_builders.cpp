// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "morse/errors.hpp"
#include "morse/operators.hpp"
#include "morse/state_builders.hpp"

using namespace morse;

namespace {

const ModelParams p10 = make_params(10);

double lattice_alpha(int n, double gamma, const ModelParams& p) {
  return 2.0 * std::sqrt(gamma * p.chi_a) * (n - p.n_levels);
}

}  // namespace

TEST_CASE("recursion: two steps by hand") {
  // alpha = 0: C_1 = 0 and C_2/C_0 = -gamma sqrt(1*20)/sqrt(2*19)
  const StateVector psi = loqcs_recursion(0.0, 0.3, p10);
  CHECK(std::abs(psi.amps[1]) == 0.0);
  const double expected = -0.3 * std::sqrt(20.0 / 38.0);
  CHECK((psi.amps[2] / psi.amps[0]).real() == doctest::Approx(expected).epsilon(1e-12));
  CHECK((psi.amps[2] / psi.amps[0]).real() == doctest::Approx(-0.217643).epsilon(1e-5));

  // gamma = 0: nonlinear coherent-state branch, C_1/C_0 = sqrt(21) alpha / sqrt(20)
  const StateVector nl = loqcs_recursion(0.5, 0.0, p10);
  const double ratio = (nl.amps[1] / nl.amps[0]).real();
  CHECK(ratio == doctest::Approx(std::sqrt(21.0) * 0.5 / std::sqrt(20.0)).epsilon(1e-12));
  CHECK(ratio == doctest::Approx(0.512348).epsilon(1e-5));
}

TEST_CASE("recursion: alpha = gamma = 0 is exactly the vacuum") {
  const StateVector psi = loqcs_recursion(0.0, 0.0, p10);
  CHECK(psi.amps[0].real() == 1.0);
  CHECK(psi.amps.tail(9).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("closed form: index formula and rounding half away from zero") {
  CHECK(loqcs_closed_form_index(0.0, 0.3, p10) == 10);
  // 2 sqrt(chi_a gamma) = 1 at gamma = 5.25, so alpha = +-0.5 are exact halves
  CHECK(loqcs_closed_form_index(0.5, 5.25, p10) == 11);
  CHECK(loqcs_closed_form_index(-0.5, 5.25, p10) == 9);
  CHECK(loqcs_closed_form_index(1.5, 5.25, p10) == 12);

  CHECK_THROWS_AS(loqcs_closed_form_index(0.0, 0.0, p10), InvalidArgument);
  CHECK_THROWS_AS(loqcs_closed_form_index(0.1, -0.5, p10), InvalidArgument);
  // 11 lattice steps above the center exceeds n = 2N
  CHECK_THROWS_AS(loqcs_closed_form_index(lattice_alpha(21, 0.1, p10), 0.1, p10),
                  OutOfRegime);
  CHECK_THROWS_AS(
      loqcs_closed_form(LoqcsSpec{lattice_alpha(21, 0.1, p10), 0.1,
                                  LoqcsMethod::closed_form},
                        p10),
      OutOfRegime);
}

TEST_CASE("closed form: squeezed vacuum kills odd levels and small gamma is vacuum-like") {
  const StateVector psi =
      loqcs_closed_form(LoqcsSpec{0.0, 0.3, LoqcsMethod::closed_form}, p10);
  for (int n = 1; n < 10; n += 2) {
    CHECK(std::abs(psi.amps[n]) < 1e-14);
  }
  const StateVector tiny =
      loqcs_closed_form(LoqcsSpec{0.0, 1e-6, LoqcsMethod::closed_form}, p10);
  CHECK(std::norm(tiny.amps[0]) >= 1.0 - 1e-5);
}

TEST_CASE("closed form equals recursion on the quantized alpha lattice") {
  for (const double gamma : {0.1, 0.3, 0.5, 0.8}) {
    for (int n = 7; n <= 14; ++n) {
      const double alpha = lattice_alpha(n, gamma, p10);
      CAPTURE(gamma);
      CAPTURE(n);
      const StateVector closed =
          loqcs_closed_form(LoqcsSpec{alpha, gamma, LoqcsMethod::closed_form}, p10);
      const StateVector rec = loqcs_recursion(alpha, gamma, p10);
      CHECK(overlap(closed, rec) >= 1.0 - 1e-10);
    }
  }
}

TEST_CASE("closed form: gamma = 0 refuses with a pointer to the recursion") {
  CHECK_THROWS_AS(loqcs_closed_form(LoqcsSpec{0.2, 0.0, LoqcsMethod::closed_form}, p10),
                  InvalidArgument);
  // the dispatcher routes the same request to the well-defined branch
  const StateVector via_dispatch =
      loqcs_state(LoqcsSpec{0.2, 0.0, LoqcsMethod::closed_form}, p10);
  const StateVector rec = loqcs_recursion(0.2, 0.0, p10);
  CHECK(overlap(via_dispatch, rec) >= 1.0 - 1e-15);
}

TEST_CASE("dispatcher selects each construction method") {
  const LoqcsSpec base{0.3, 0.4, LoqcsMethod::closed_form};
  BuildDiagnostics diag;
  CHECK(overlap(loqcs_state(base, p10, &diag), loqcs_closed_form(base, p10)) >= 1.0 - 1e-14);

  LoqcsSpec rec = base;
  rec.method = LoqcsMethod::recursion;
  CHECK(overlap(loqcs_state(rec, p10), loqcs_recursion(0.3, 0.4, p10)) >= 1.0 - 1e-14);

  LoqcsSpec oracle = base;
  oracle.method = LoqcsMethod::eigen_oracle;
  CHECK(overlap(loqcs_state(oracle, p10, &diag), loqcs_eigen_oracle(0.3, 0.4, p10)) >=
        1.0 - 1e-14);
  CHECK(diag.top_level_leakage >= 0.0);
}

TEST_CASE("eigen oracle: gamma = 0 yields the vacuum kernel vector") {
  const StateVector psi = loqcs_eigen_oracle(0.0, 0.0, p10);
  CHECK(psi.amps[0].real() == 1.0);
  CHECK(psi.amps.tail(9).cwiseAbs().maxCoeff() == 0.0);
  const StateVector off = loqcs_eigen_oracle(0.7, 0.0, p10);
  CHECK(off.amps[0].real() == 1.0);
}

TEST_CASE("eigen oracle agrees with the recursion at the squeezed vacuum") {
  const StateVector oracle = loqcs_eigen_oracle(0.0, 0.3, p10);
  const StateVector rec = loqcs_recursion(0.0, 0.3, p10);
  CHECK(overlap(oracle, rec) >= 1.0 - 1e-8);
}

TEST_CASE("eigen oracle matches the closed form at the rounded lattice index") {
  for (const auto& [alpha, gamma] : std::vector<std::pair<double, double>>{
           {0.25, 0.3}, {0.9, 0.3}, {-0.33, 0.5}, {0.0, 0.1}}) {
    CAPTURE(alpha);
    CAPTURE(gamma);
    const StateVector oracle = loqcs_eigen_oracle(alpha, gamma, p10);
    const StateVector closed =
        loqcs_closed_form(LoqcsSpec{alpha, gamma, LoqcsMethod::closed_form}, p10);
    CHECK(overlap(oracle, closed) >= 1.0 - 1e-12);
  }
}

TEST_CASE("spectrum of A + gamma A^dag: symmetric pairs on the integer lattice") {
  // On the enlarged 2N+1-level ladder the operator is similar to
  // 2 sqrt(gamma chi) J_x of a spin-N triple, so its eigenvalues are the
  // equally spaced lattice 2 sqrt(gamma chi) (n - N), n = 0..2N.
  const double gamma = 0.37;
  const int full = 21;
  const DenseOperator a = lowering_matrix(full, p10.chi_a);
  const Eigen::MatrixXcd m = a.entries + gamma * a.entries.adjoint();
  Eigen::EigenSolver<Eigen::MatrixXd> solver(m.real());
  REQUIRE(solver.info() == Eigen::Success);

  std::vector<double> eigs(full);
  for (int i = 0; i < full; ++i) {
    CHECK(std::abs(solver.eigenvalues()[i].imag()) < 1e-10);
    eigs[i] = solver.eigenvalues()[i].real();
  }
  std::sort(eigs.begin(), eigs.end());
  const double unit = 2.0 * std::sqrt(gamma * p10.chi_a);
  for (int i = 0; i < full; ++i) {
    CHECK(std::abs(eigs[i] - unit * (i - 10)) < 1e-10);
    CHECK(std::abs(eigs[i] + eigs[full - 1 - i]) < 1e-10);   // +- pairing
  }
}

TEST_CASE("docs state: vacuum at zeta = 0 and binomial amplitude ratios") {
  const StateVector vac = docs_state(0.0, p10);
  CHECK(vac.amps[0].real() == 1.0);
  CHECK(vac.amps.tail(9).cwiseAbs().maxCoeff() == 0.0);

  const double zeta = std::tan(1.0 * p10.chi_a);   // |alpha| = 1, phi = 0
  CHECK(zeta == doctest::Approx(0.047655).epsilon(1e-5));
  const StateVector psi = docs_state(zeta, p10);
  const double ratio = (psi.amps[1] / psi.amps[0]).real();
  CHECK(ratio == doctest::Approx(std::sqrt(20.0) * zeta).epsilon(1e-12));

  // occupation strictly decreasing whenever |zeta|^2 (2N-n)/(n+1) < 1 throughout
  double worst_ratio = 0.0;
  for (int n = 0; n < 9; ++n) {
    worst_ratio = std::max(worst_ratio, zeta * zeta * (20.0 - n) / (n + 1.0));
  }
  REQUIRE(worst_ratio < 1.0);
  for (int n = 0; n < 9; ++n) {
    CHECK(std::norm(psi.amps[n + 1]) < std::norm(psi.amps[n]));
  }

  CHECK_THROWS_AS(docs_state(std::complex<double>(1e300, 0) * 1e300, p10),
                  InvalidArgument);
}

TEST_CASE("dpscs: m = 0 is the docs state, m = N-1 collapses to the vacuum") {
  const DpscsSpec m0{1.0, 0.0, 0};
  const StateVector a = dpscs_state(m0, p10);
  const StateVector b = docs_state(dpscs_zeta(m0, p10), p10);
  CHECK(overlap(a, b) >= 1.0 - 1e-15);

  const StateVector top = dpscs_state(DpscsSpec{1.0, 0.0, 9}, p10);
  CHECK(std::norm(top.amps[0]) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("dpscs closed form equals the m-fold matrix application") {
  for (const int m : {0, 1, 2, 3, 4, 5, 6, 7, 8, 9}) {
    for (const double mag : {0.25, 0.5, 1.0, 2.0}) {
      CAPTURE(m);
      CAPTURE(mag);
      const DpscsSpec spec{mag, 0.0, m};
      CHECK(overlap(dpscs_state(spec, p10), dpscs_matrix_oracle(spec, p10)) >=
            1.0 - 1e-12);
    }
  }
  // complex displacement phase
  const DpscsSpec spun{1.0, std::numbers::pi / 4.0, 2};
  CHECK(overlap(dpscs_state(spun, p10), dpscs_matrix_oracle(spun, p10)) >= 1.0 - 1e-12);
}

TEST_CASE("dpscs support ends at N-1-m") {
  const StateVector psi = dpscs_state(DpscsSpec{1.0, 0.0, 4}, p10);
  for (int n = 6; n < 10; ++n) {
    CHECK(std::abs(psi.amps[n]) == 0.0);
  }
  CHECK(std::abs(psi.amps[5]) > 0.0);
}

TEST_CASE("dpscs error paths") {
  CHECK_THROWS_AS(dpscs_state(DpscsSpec{1.0, 0.0, 10}, p10), OutOfRegime);
  CHECK_THROWS_AS(dpscs_state(DpscsSpec{1.0, 0.0, -1}, p10), InvalidArgument);
  CHECK_THROWS_AS(dpscs_state(DpscsSpec{-0.5, 0.0, 0}, p10), InvalidArgument);
  // zeta = 0 with quanta removed leaves nothing
  CHECK_THROWS_AS(dpscs_state(DpscsSpec{0.0, 0.0, 2}, p10), OutOfRegime);
  CHECK_THROWS_AS(dpscs_matrix_oracle(DpscsSpec{0.0, 0.0, 2}, p10), OutOfRegime);
  // zeta = 0 with m = 0 is simply the ground state
  const StateVector vac = dpscs_state(DpscsSpec{0.0, 0.0, 0}, p10);
  CHECK(std::norm(vac.amps[0]) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("every builder returns a unit-norm, phase-fixed vector") {
  std::vector<StateVector> states;
  for (const double gamma : {0.05, 0.3, 0.8}) {
    states.push_back(loqcs_closed_form(LoqcsSpec{0.0, gamma, LoqcsMethod::closed_form}, p10));
    states.push_back(loqcs_recursion(0.4, gamma, p10));
    states.push_back(loqcs_eigen_oracle(0.4, gamma, p10));
  }
  for (const int m : {0, 2, 8}) {
    states.push_back(dpscs_state(DpscsSpec{1.0, 0.6, m}, p10));
    states.push_back(dpscs_matrix_oracle(DpscsSpec{0.5, 0.0, m}, p10));
  }
  states.push_back(docs_state(std::complex<double>(0.02, 0.03), p10));
  for (const StateVector& psi : states) {
    CHECK(norm_error(psi) <= 1e-12);
    // global phase: first amplitude above threshold is real positive
    for (int n = 0; n < psi.dim(); ++n) {
      if (std::abs(psi.amps[n]) > 1e-300) {
        CHECK(psi.amps[n].real() > 0.0);
        CHECK(std::abs(psi.amps[n].imag()) <= 1e-15 * psi.amps[n].real());
        break;
      }
    }
  }
}

TEST_CASE("parity of the squeezed vacuum holds for all three builders") {
  for (double gamma = 0.05; gamma <= 0.8 + 1e-12; gamma += 0.05) {
    CAPTURE(gamma);
    const StateVector closed =
        loqcs_closed_form(LoqcsSpec{0.0, gamma, LoqcsMethod::closed_form}, p10);
    const StateVector rec = loqcs_recursion(0.0, gamma, p10);
    const StateVector oracle = loqcs_eigen_oracle(0.0, gamma, p10);
    for (const StateVector* psi : {&closed, &rec, &oracle}) {
      for (int n = 1; n < 10; n += 2) {
        CHECK(std::abs(psi->amps[n]) < 1e-14);
      }
    }
  }
}

TEST_CASE("approximate eigenvalue residual is small while leakage is small") {
  for (const double gamma : {0.05, 0.1, 0.2, 0.3, 0.5}) {
    for (const double alpha : {0.0, 0.2, 0.4}) {
      const StateVector psi = loqcs_recursion(alpha, gamma, p10);
      const double top_two = std::norm(psi.amps[9]) + std::norm(psi.amps[8]);
      if (top_two < 1e-6) {
        CAPTURE(gamma);
        CAPTURE(alpha);
        CHECK(loqcs_residual(psi, alpha, gamma, p10) < 1e-2);
      }
    }
  }
}

TEST_CASE("regime warning fires on strong top-level leakage") {
  BuildDiagnostics hot;
  loqcs_closed_form(LoqcsSpec{lattice_alpha(13, 0.8, p10), 0.8, LoqcsMethod::closed_form},
                    p10, &hot);
  CHECK(hot.top_level_leakage > 1e-2);
  CHECK(hot.regime_warning);

  BuildDiagnostics cold;
  loqcs_closed_form(LoqcsSpec{0.0, 0.3, LoqcsMethod::closed_form}, p10, &cold);
  CHECK(cold.top_level_leakage < 1e-3);
  CHECK_FALSE(cold.regime_warning);
}

TEST_CASE("dpscs zeta derivation") {
  const DpscsSpec spec{2.0, std::numbers::pi / 3.0, 0};
  const std::complex<double> z = dpscs_zeta(spec, p10);
  CHECK(std::abs(z) == doctest::Approx(std::tan(2.0 / 21.0)).epsilon(1e-15));
  CHECK(std::arg(z) == doctest::Approx(std::numbers::pi / 3.0).epsilon(1e-15));
}
