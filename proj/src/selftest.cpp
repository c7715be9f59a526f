#include "udw/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "udw/special_functions.hpp"
#include "udw/three_detector.hpp"
#include "udw/two_detector.hpp"

namespace udw {

namespace {

struct Check {
  const char* name;
  double worst;
  double tol;
  bool ok;
};

void run_check(std::vector<Check>& out, const char* name, double worst,
               double tol) {
  out.push_back({name, worst, tol, worst <= tol});
}

// Sorted dense spectrum of a state against a sorted closed-form list
// (padded with exact zeros to the full dimension).
double spectrum_deviation(const Matrix& rho, std::vector<double> closed) {
  while (closed.size() < static_cast<size_t>(rho.dim())) {
    closed.push_back(0.0);
  }
  std::sort(closed.begin(), closed.end());
  const auto dense = hermitian_eigenvalues(rho);
  double worst = 0.0;
  for (size_t i = 0; i < dense.size(); ++i) {
    worst = std::max(worst, std::abs(dense[i] - closed[i]));
  }
  return worst;
}

}  // namespace

InjectedFault fault_from_name(std::string_view name) {
  if (name == "none") {
    return InjectedFault::none;
  }
  if (name == "spectrum-branch-sign") {
    return InjectedFault::spectrum_branch_sign;
  }
  if (name == "negativity-c-dependence") {
    return InjectedFault::negativity_c_dependence;
  }
  throw std::invalid_argument("unknown fault '" + std::string(name) +
                              "'; expected none, spectrum-branch-sign or "
                              "negativity-c-dependence");
}

SelftestReport run_selftest(InjectedFault fault) {
  std::vector<Check> checks;
  std::mt19937 rng(20250819u);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  // Error-function symmetries; exact by canonicalization, so any nonzero
  // deviation means the quadrant reduction broke.
  {
    double worst = 0.0;
    for (int i = 0; i < 300; ++i) {
      const double r = 6.0 * std::sqrt(unit(rng));
      const double th = 2.0 * 3.14159265358979323846 * unit(rng);
      const std::complex<double> z(r * std::cos(th), r * std::sin(th));
      const auto w = erf_complex(z);
      const double scale = std::max(1.0, std::abs(w));
      worst = std::max(worst, std::abs(erf_complex(-z) + w) / scale);
      worst = std::max(worst, std::abs(erf_complex(std::conj(z)) - std::conj(w)) / scale);
      worst = std::max(worst, std::abs(erf_complex({z.real(), 0.0}).imag()));
      if (z.imag() * z.imag() < 700.0) {
        worst = std::max(worst, std::abs(erf_complex({0.0, z.imag()}).real()));
      }
    }
    run_check(checks, "error function symmetries", worst, 5e-16);
  }

  std::uniform_real_distribution<double> lam_d(0.01, 0.2);
  std::uniform_real_distribution<double> gap_d(0.0, 3.0);
  std::uniform_real_distribution<double> sep_d(0.3, 8.0);

  // Closed spectra against the dense Jacobi solver, all three layouts.
  {
    double worst = 0.0;
    for (int i = 0; i < 60; ++i) {
      const DetectorParams params(lam_d(rng), gap_d(rng));
      const double l = sep_d(rng);

      const auto two = assemble_two(params, l);
      const auto s2 = closed_spectrum_two(two.elems);
      worst = std::max(worst, spectrum_deviation(two.rho.matrix(),
                                                 {s2.begin(), s2.end()}));

      const auto equi = assemble_three(TriangleConfig::equilateral(l), params);
      auto s3 = closed_spectrum_equilateral(equi.ab);
      if (fault == InjectedFault::spectrum_branch_sign) {
        // Emulate the classic sign error on the corner-block branch.
        s3[4] = s3[3];
      }
      worst = std::max(worst, spectrum_deviation(equi.rho.matrix(),
                                                 {s3.begin(), s3.end()}));

      const auto lin = assemble_three(TriangleConfig::linear(l), params);
      const auto sl = closed_spectrum_linear(lin.ab, lin.ac);
      worst = std::max(worst, spectrum_deviation(lin.rho.matrix(),
                                                 {sl.begin(), sl.end()}));
    }
    run_check(checks, "closed spectra vs dense solver", worst, 1e-12);
  }

  // Pair negativity: closed form against the dense partial transpose, and
  // independence from the exchange correlation.
  {
    double worst = 0.0;
    double worst_c_dep = 0.0;
    std::uniform_real_distribution<double> l_d(0.5, 6.0);
    std::uniform_real_distribution<double> g_d(0.0, 2.0);
    for (int i = 0; i < 40; ++i) {
      const DetectorParams params(0.1, g_d(rng));
      const auto state = assemble_two(params, l_d(rng));
      double closed = negativity_two(state);
      if (fault == InjectedFault::negativity_c_dependence) {
        closed += 0.1 * state.elems.c;
      }
      const double dense = negativity_numeric(state.rho.matrix(), Subsystem::a);
      worst = std::max(worst, std::abs(closed - dense));

      PairElements perturbed = state.elems;
      perturbed.c = perturbed.c * 1.5 + 1e-4;
      const auto state2 = assemble_two(perturbed);
      double closed2 = negativity_two(state2);
      if (fault == InjectedFault::negativity_c_dependence) {
        closed2 += 0.1 * state2.elems.c;
      }
      if (closed != closed2) {
        worst_c_dep = std::max(worst_c_dep, std::abs(closed - closed2));
      }
    }
    run_check(checks, "pair negativity vs dense partial transpose", worst, 5e-6);
    run_check(checks, "negativity independent of exchange term", worst_c_dep, 0.0);
  }

  // Tripartite closed form against the dense geometric mean with the
  // order-coupling^4 corner dip removed from the dense side.
  {
    double worst = 0.0;
    std::uniform_real_distribution<double> l_d(0.5, 6.0);
    std::uniform_real_distribution<double> g_d(0.0, 2.0);
    for (int i = 0; i < 12; ++i) {
      const DetectorParams params(0.1, g_d(rng));
      const auto state = assemble_three(TriangleConfig::equilateral(l_d(rng)), params);
      const double closed = tripartite_negativity(state);
      double mean = 1.0;
      const double d = 1.0 - 3.0 * state.ab.p;
      // Ground state couples to the opposite swap term plus the two
      // exchange entries the transpose relocates; all cuts agree here.
      const double s2 =
          std::norm(state.ab.x) + 2.0 * state.ab.c * state.ab.c;
      const double corner_dip = 0.5 * (std::sqrt(d * d + 4.0 * s2) - d);
      for (Subsystem sub : {Subsystem::a, Subsystem::b, Subsystem::c}) {
        mean *= std::max(0.0, negativity_numeric(state.rho.matrix(), sub) - corner_dip);
      }
      mean = std::cbrt(mean);
      worst = std::max(worst, std::abs(closed - mean));
    }
    run_check(checks, "tripartite negativity vs dense mean", worst, 5e-6);
  }

  // Coherence additivity: pair coherences after tracing out the third
  // detector resum exactly to the tripartite coherence.
  {
    double worst = 0.0;
    std::uniform_real_distribution<double> base_d(1.0, 8.0);
    std::uniform_real_distribution<double> slide_d(0.0, 6.0);
    for (int i = 0; i < 30; ++i) {
      const DetectorParams params(lam_d(rng), gap_d(rng));
      const int kind = i % 3;
      TriangleConfig config =
          kind == 0 ? TriangleConfig::equilateral(sep_d(rng))
                    : (kind == 1 ? TriangleConfig::linear(sep_d(rng))
                                 : TriangleConfig::scalene(base_d(rng), slide_d(rng)));
      const auto state = assemble_three(config, params);
      worst = std::max(worst, std::abs(monogamy_residual(state)));
    }
    run_check(checks, "coherence additivity residual", worst, 1e-14);
  }

  SelftestReport report;
  report.passed = true;
  for (const Check& c : checks) {
    report.passed = report.passed && c.ok;
    char line[160];
    std::snprintf(line, sizeof(line), "[%s] %-45s max deviation %.3e (tol %.1e)\n",
                  c.ok ? " ok " : "FAIL", c.name, c.worst, c.tol);
    report.text += line;
  }
  report.text += report.passed ? "selftest: all checks passed\n"
                               : "selftest: FAILURES detected\n";
  return report;
}

}  // namespace udw
