// Acceptance gate for the detector-pair/triple coherence library. Each
// criterion prints exactly one [PASS]/[FAIL] line with its measured worst
// case; the process exits 0 only if every criterion holds. The optional
// argv[1] is the path of the command-line binary for the CLI contract.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracle/mp_erf_oracle.hpp"
#include "udw/detector_elements.hpp"
#include "udw/quantum_linalg.hpp"
#include "udw/special_functions.hpp"
#include "udw/sweep.hpp"
#include "udw/three_detector.hpp"
#include "udw/two_detector.hpp"

namespace {

using udw::assemble_three;
using udw::assemble_two;
using udw::DetectorParams;
using udw::PairElements;
using udw::Subsystem;
using udw::TriangleConfig;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string format(const char* fmt, ...) {
  char buf[512];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof(buf), fmt, args);
  va_end(args);
  return buf;
}

bool bit_equal(double a, double b) {
  return std::memcmp(&a, &b, sizeof(double)) == 0;
}

// 1. The complex error function against the extended-precision oracle plus
//    exact symmetry properties, inside a one second budget.
bool criterion_special_functions(std::string& detail) {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (int i = 0; i <= 40; ++i) {
    for (int j = 0; j <= 40; ++j) {
      const std::complex<double> z(-6.0 + 12.0 * i / 40.0,
                                   -6.0 + 12.0 * j / 40.0);
      const std::complex<double> got = udw::erf_complex(z);
      const std::complex<double> want = oracle::erf_extended(z);
      worst = std::max(worst,
                       std::abs(got - want) / std::max(std::abs(want), 1e-300));
    }
  }
  std::mt19937 rng(101);
  std::uniform_real_distribution<double> box(-6.0, 6.0);
  bool symmetric = true;
  for (int k = 0; k < 1000; ++k) {
    const std::complex<double> z(box(rng), box(rng));
    const std::complex<double> w = udw::erf_complex(z);
    const std::complex<double> odd = udw::erf_complex(-z);
    const std::complex<double> conj = udw::erf_complex(std::conj(z));
    symmetric = symmetric && bit_equal(odd.real(), -w.real()) &&
                bit_equal(odd.imag(), -w.imag()) &&
                bit_equal(conj.real(), w.real()) &&
                bit_equal(conj.imag(), -w.imag());
    const double axis = box(rng);
    symmetric = symmetric && udw::erf_complex({axis, 0.0}).imag() == 0.0 &&
                udw::erf_complex({0.0, axis}).real() == 0.0;
  }
  const double secs = seconds_since(t0);
  detail = format(
      "error function: max rel deviation %.3e on the 41x41 grid (tol 1e-12); "
      "odd/conjugation/axis symmetries %s at 1000 points; %.2f s (budget 1 s)",
      worst, symmetric ? "exact" : "BROKEN", secs);
  return worst <= 1e-12 && symmetric && secs < 1.0;
}

// 2. Closed-form spectra of all three assembled states against the dense
//    eigensolver over the standard random draw box.
bool criterion_spectra(std::string& detail) {
  std::mt19937 rng(202);
  std::uniform_real_distribution<double> lam_d(0.01, 0.2);
  std::uniform_real_distribution<double> gap_d(0.0, 3.0);
  std::uniform_real_distribution<double> sep_d(0.3, 8.0);
  double worst = 0.0;
  double worst_sum = 0.0;
  auto compare = [&](std::vector<double> closed, const udw::Matrix& m) {
    double sum = 0.0;
    for (double v : closed) {
      sum += v;
    }
    worst_sum = std::max(worst_sum, std::abs(sum - 1.0));
    while (closed.size() < static_cast<size_t>(m.dim())) {
      closed.push_back(0.0);
    }
    std::sort(closed.begin(), closed.end());
    const auto dense = udw::hermitian_eigenvalues(m);
    for (size_t k = 0; k < closed.size(); ++k) {
      worst = std::max(worst, std::abs(closed[k] - dense[k]));
    }
  };
  for (int i = 0; i < 200; ++i) {
    const DetectorParams params(lam_d(rng), gap_d(rng));
    const double l = sep_d(rng);
    const auto two = assemble_two(params, l);
    const auto s2 = udw::closed_spectrum_two(two.elems);
    compare({s2.begin(), s2.end()}, two.rho.matrix());
    const auto equi = assemble_three(TriangleConfig::equilateral(l), params);
    const auto s3 = udw::closed_spectrum_equilateral(equi.ab);
    compare({s3.begin(), s3.end()}, equi.rho.matrix());
    const auto lin = assemble_three(TriangleConfig::linear(l), params);
    const auto s4 = udw::closed_spectrum_linear(lin.ab, lin.ac);
    compare({s4.begin(), s4.end()}, lin.rho.matrix());
  }
  detail = format(
      "closed spectra: max |closed - dense| %.3e over 200 draws x 3 "
      "configurations (tol 1e-12); max |sum - 1| %.3e (tol 1e-13)",
      worst, worst_sum);
  return worst <= 1e-12 && worst_sum <= 1e-13;
}

// 3. Closed negativities against dense partial-transpose negativities on
//    the figure grids, plus exact independence from the exchange term.
bool criterion_negativity(std::string& detail) {
  const std::array<double, 4> gaps = {0.5, 1.0, 1.5, 2.0};
  double worst_pair = 0.0;
  double worst_tri = 0.0;
  double raw_slack = 0.0;
  for (double gap : gaps) {
    const DetectorParams params(0.1, gap);
    for (int k = 0; k < 400; ++k) {
      const double l = 0.25 + (10.0 - 0.25) * k / 399.0;
      const auto two = assemble_two(params, l);
      const double closed = udw::negativity_two(two);
      const double dense =
          udw::negativity_numeric(two.rho.matrix(), Subsystem::a);
      worst_pair = std::max(worst_pair, std::abs(closed - dense));

      const auto tri = assemble_three(TriangleConfig::equilateral(l), params);
      const double closed3 = udw::tripartite_negativity(tri);
      // The dense one-vs-rest negativity also picks up the corner-block
      // eigenvalue 0.5(sqrt(d^2+4s^2)-d), a fourth-order term the closed
      // form discards.  Transposing one detector moves its two exchange
      // entries onto the ground-state row, so the block couples the ground
      // state to the opposite pair's swap term and those two exchange
      // terms: s^2 = |x_opp|^2 + c1^2 + c2^2.  Subtract it per cut and
      // keep the raw gap on record.
      const double d = 1.0 - 3.0 * tri.ab.p;
      const auto dip = [d](const PairElements& opp, const PairElements& e1,
                           const PairElements& e2) {
        const double s2 = std::norm(opp.x) + e1.c * e1.c + e2.c * e2.c;
        return 0.5 * (std::sqrt(d * d + 4.0 * s2) - d);
      };
      const double dips[3] = {dip(tri.bc, tri.ab, tri.ac),
                              dip(tri.ac, tri.ab, tri.bc),
                              dip(tri.ab, tri.ac, tri.bc)};
      const Subsystem cuts[3] = {Subsystem::a, Subsystem::b, Subsystem::c};
      double raw = 1.0;
      double adjusted = 1.0;
      for (int k = 0; k < 3; ++k) {
        const double n = udw::negativity_numeric(tri.rho.matrix(), cuts[k]);
        raw *= n;
        adjusted *= std::max(0.0, n - dips[k]);
      }
      raw = std::cbrt(raw);
      adjusted = std::cbrt(adjusted);
      worst_tri = std::max(worst_tri, std::abs(closed3 - adjusted));
      raw_slack = std::max(raw_slack, std::abs(closed3 - raw));
    }
  }
  const PairElements base{0.001, 0.0002, {0.0015, 0.0}, 1.0};
  PairElements bumped = base;
  bumped.c = bumped.c * 1.5 + 1e-4;
  const double n_base = udw::negativity_two(assemble_two(base));
  const double n_bumped = udw::negativity_two(assemble_two(bumped));
  const bool independent = bit_equal(n_base, n_bumped) && n_base > 0.0;
  detail = format(
      "negativity: pair closed vs dense max %.3e, one-vs-rest closed vs "
      "corner-adjusted dense max %.3e (tol 5e-6; raw fourth-order slack "
      "%.3e on record); exchange-term independence %s",
      worst_pair, worst_tri, raw_slack,
      independent ? "bit-exact" : "BROKEN");
  return worst_pair <= 5e-6 && worst_tri <= 5e-6 && independent;
}

// 4. Coherence additivity: the three reduced pair coherences obtained by
//    partial trace sum to the full three-detector coherence.
bool criterion_monogamy(std::string& detail) {
  std::mt19937 rng(404);
  std::uniform_real_distribution<double> lam_d(0.01, 0.2);
  std::uniform_real_distribution<double> gap_d(0.0, 3.0);
  std::uniform_real_distribution<double> sep_d(0.5, 8.0);
  std::uniform_real_distribution<double> slide_d(0.0, 8.0);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const DetectorParams params(lam_d(rng), gap_d(rng));
    for (int kind = 0; kind < 3; ++kind) {
      const TriangleConfig config =
          kind == 0   ? TriangleConfig::equilateral(sep_d(rng))
          : kind == 1 ? TriangleConfig::linear(sep_d(rng))
                      : TriangleConfig::scalene(sep_d(rng), slide_d(rng));
      const auto state = assemble_three(config, params);
      worst = std::max(worst, std::abs(udw::monogamy_residual(state)));
    }
  }
  detail = format(
      "coherence additivity: max |pair sum - total| %.3e over 100 draws x 3 "
      "configurations (tol 1e-14)",
      worst);
  return worst <= 1e-14;
}

// 5. Figure-level shape facts at coupling 0.1, inside a ten second budget.
bool criterion_figures(std::string& detail) {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::string note;

  // (a) pair coherence strictly decreasing and positive in separation.
  for (double gap : {0.5, 1.0, 2.0}) {
    const DetectorParams params(0.1, gap);
    double prev = 0.0;
    for (int k = 0; k <= 190; ++k) {
      const double l = 0.5 + 0.05 * k;
      const double l1 = udw::coherence_l1_two(assemble_two(params, l));
      if (!(l1 > 0.0) || (k > 0 && !(l1 < prev))) {
        ok = false;
        note += format(" [pair coherence not falling at gap %g, L %g]", gap, l);
        break;
      }
      prev = l1;
    }
  }

  // (b) entanglement sudden death: a finite separation beyond which the
  // pair negativity is exactly zero on every sample. The death point is
  // refined by bisection on |x| - p and pinned against frozen values.
  const std::array<double, 3> death_gaps = {0.5, 1.0, 2.0};
  const std::array<double, 3> death_expected = {2.40892, 3.26670, 4.87384};
  std::array<double, 3> death_measured = {0.0, 0.0, 0.0};
  for (size_t gi = 0; gi < death_gaps.size(); ++gi) {
    const DetectorParams params(0.1, death_gaps[gi]);
    int first_zero = -1;
    bool zero_beyond = true;
    for (int k = 0; k <= 190; ++k) {
      const double l = 0.5 + 0.05 * k;
      const double n = udw::negativity_two(assemble_two(params, l));
      if (first_zero < 0 && n == 0.0) {
        first_zero = k;
      } else if (first_zero >= 0 && n != 0.0) {
        zero_beyond = false;
      }
    }
    if (first_zero <= 0 || !zero_beyond) {
      ok = false;
      note += format(" [no sudden death at gap %g]", death_gaps[gi]);
      continue;
    }
    double lo = 0.5 + 0.05 * (first_zero - 1);
    double hi = 0.5 + 0.05 * first_zero;
    for (int it = 0; it < 60; ++it) {
      const double mid = 0.5 * (lo + hi);
      const auto elems = udw::pair_elements(params, mid);
      (std::abs(elems.x) - elems.p > 0.0 ? lo : hi) = mid;
    }
    death_measured[gi] = 0.5 * (lo + hi);
    if (std::abs(death_measured[gi] - death_expected[gi]) > 1e-3) {
      ok = false;
      note += format(" [death point %g vs %g at gap %g]", death_measured[gi],
                     death_expected[gi], death_gaps[gi]);
    }
  }

  // (c) pair coherence falls with the gap at every fixed separation.
  for (int k = 0; k < 400; ++k) {
    const double l = 0.25 + (10.0 - 0.25) * k / 399.0;
    double prev = 0.0;
    bool first = true;
    for (double gap : {0.5, 1.0, 1.5, 2.0}) {
      const double l1 =
          udw::coherence_l1_two(assemble_two(DetectorParams(0.1, gap), l));
      if (!first && !(l1 < prev)) {
        ok = false;
        note += format(" [gap chain not falling at L %g]", l);
        break;
      }
      prev = l1;
      first = false;
    }
  }

  // (d) equilateral coherence is three pair coherences.
  double worst_triple = 0.0;
  for (double gap : {0.5, 1.0, 1.5, 2.0}) {
    const DetectorParams params(0.1, gap);
    for (int k = 0; k < 100; ++k) {
      const double l = 0.25 + (10.0 - 0.25) * k / 99.0;
      const double three =
          udw::coherence_l1_three(assemble_three(TriangleConfig::equilateral(l), params));
      const double two = udw::coherence_l1_two(assemble_two(params, l));
      worst_triple = std::max(worst_triple, std::abs(three - 3.0 * two) / three);
    }
  }
  if (worst_triple > 2e-15) {
    ok = false;
    note += format(" [triple/pair ratio off by %.2e]", worst_triple);
  }

  // (e) at equal nearest-neighbor separation the equilateral layout holds
  // the most coherence; the chain and slid triangles stay strictly below.
  double min_margin = 1e300;
  for (double gap : {0.5, 1.0, 2.0}) {
    const DetectorParams params(0.1, gap);
    for (int k = 0; k <= 38; ++k) {
      const double l = 0.5 + 0.25 * k;
      const double equi = udw::coherence_l1_three(
          assemble_three(TriangleConfig::equilateral(l), params));
      const double lin = udw::coherence_l1_three(
          assemble_three(TriangleConfig::linear(l), params));
      min_margin = std::min(min_margin, equi - lin);
      for (double factor : {1.0, 1.5, 2.0}) {
        const double scal = udw::coherence_l1_three(
            assemble_three(TriangleConfig::scalene(l, factor * l), params));
        min_margin = std::min(min_margin, equi - scal);
      }
    }
  }
  if (!(min_margin > 0.0)) {
    ok = false;
    note += format(" [equilateral not maximal, margin %.2e]", min_margin);
  }

  // (f) sliding one vertex away kills coherence: strictly falling in the
  // slide for gaps >= 1; at gap 0.5 the short-slide region admits a
  // microscopic rise (a real feature of the elements, bounded here) while
  // the net change over the full range stays firmly negative.
  double max_rise = 0.0;
  double net_drop = 0.0;
  for (double gap : {0.5, 1.0, 1.5, 2.0}) {
    const DetectorParams params(0.1, gap);
    double prev = 0.0;
    double first_value = 0.0;
    double prev_d = 0.0;
    for (int k = 0; k < 400; ++k) {
      const double slide = 10.0 * k / 399.0;
      const double l1 = udw::coherence_l1_three(
          assemble_three(TriangleConfig::scalene(7.0, slide), params));
      if (k == 0) {
        first_value = l1;
      } else if (gap < 1.0 && prev_d < 1.0) {
        max_rise = std::max(max_rise, l1 - prev);
        if (l1 - prev > 5e-9) {
          ok = false;
          note += format(" [slide rise %.2e at gap %g]", l1 - prev, gap);
        }
      } else if (!(l1 < prev)) {
        ok = false;
        note += format(" [slide curve not falling at gap %g, D %g]", gap, slide);
      }
      prev = l1;
      prev_d = slide;
      if (k == 399) {
        if (!(l1 < first_value)) {
          ok = false;
          note += format(" [no net drop over the slide at gap %g]", gap);
        }
        if (gap < 1.0) {
          net_drop = first_value - l1;
        }
      }
    }
  }

  const double secs = seconds_since(t0);
  detail = format(
      "figure shapes: monotone decay, sudden death at %.3f/%.3f/%.3f, gap "
      "ordering, triple = 3x pair to %.1e, equilateral maximal, slide decay "
      "(max short-slide rise %.2e, net drop %.2e); %.2f s (budget 10 s)%s",
      death_measured[0], death_measured[1], death_measured[2], worst_triple,
      max_rise, net_drop, secs, note.c_str());
  return ok && secs < 10.0;
}

// 6. Frozen spot values from the independent extended-precision pass.
bool criterion_pins(std::string& detail) {
  auto rel = [](double got, double want) {
    return std::abs(got - want) / std::abs(want);
  };
  const double p2 = rel(udw::transition_probability({0.1, 2.0}),
                        1.3794755706218252e-6);
  const double c11 = rel(udw::correlation_c({0.1, 1.0}, 1.0),
                         6.6003343060240577e-5);
  const double x02 = rel(std::abs(udw::correlation_x({0.1, 0.0}, 2.0)),
                         5.0065654981681234e-4);
  const double p0 = rel(udw::transition_probability({0.1, 0.0}),
                        7.957747154594767e-4);
  detail = format(
      "pinned values: rel errors %.2e / %.2e / %.2e (tol 1e-12) and %.2e "
      "for the zero-gap probability (tol 1e-15)",
      p2, c11, x02, p0);
  return p2 <= 1e-12 && c11 <= 1e-12 && x02 <= 1e-12 && p0 <= 1e-15;
}

// 7. CLI contract: deterministic figure output and a selftest that fails
//    under either documented fault injection.
bool criterion_cli(const char* cli, std::string& detail) {
  if (cli == nullptr) {
    detail = "command-line contract: no binary path was provided";
    return false;
  }
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path();
  const std::string file_a = (dir / "udw_acceptance_fig1_a.csv").string();
  const std::string file_b = (dir / "udw_acceptance_fig1_b.csv").string();
  auto run = [&](const std::string& args) {
    const std::string cmd = std::string("\"") + cli + "\" " + args;
    const int rc = std::system(cmd.c_str());
    return rc == -1 ? -1 : (WIFEXITED(rc) ? WEXITSTATUS(rc) : -1);
  };
  auto slurp = [](const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  };

  const bool ran = run("figure fig1 --output " + file_a) == 0 &&
                   run("figure fig1 --output " + file_b) == 0;
  const std::string text = slurp(file_a);
  const bool identical = ran && !text.empty() && text == slurp(file_b);
  size_t lines = 0;
  for (char ch : text) {
    lines += ch == '\n';
  }
  const bool shaped =
      lines == 1601 &&
      text.substr(0, text.find('\n')) == std::string(udw::csv_header);
  std::error_code ec;
  fs::remove(file_a, ec);
  fs::remove(file_b, ec);

  const int clean = run("selftest > /dev/null");
  const int fault_a = run("selftest --inject-fault spectrum-branch-sign > /dev/null");
  const int fault_b = run("selftest --inject-fault negativity-c-dependence > /dev/null");
  detail = format(
      "command-line contract: figure run %s, byte-identical %s, 1600 data "
      "rows with the documented header %s; selftest exit %d, injected "
      "faults exit %d and %d",
      ran ? "ok" : "FAILED", identical ? "yes" : "NO", shaped ? "ok" : "NO",
      clean, fault_a, fault_b);
  return ran && identical && shaped && clean == 0 && fault_a > 0 &&
         fault_b > 0;
}

bool guarded(bool (*fn)(std::string&), std::string& detail) {
  try {
    return fn(detail);
  } catch (const std::exception& e) {
    detail += format(" [unexpected exception: %s]", e.what());
    return false;
  }
}

}  // namespace

int main(int argc, char** argv) {
  const char* cli = argc > 1 ? argv[1] : nullptr;
  bool all_ok = true;
  const std::array<bool (*)(std::string&), 6> criteria = {
      criterion_special_functions, criterion_spectra, criterion_negativity,
      criterion_monogamy,          criterion_figures, criterion_pins};
  for (size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    const bool ok = guarded(criteria[i], detail);
    std::printf("[%s] %zu. %s\n", ok ? "PASS" : "FAIL", i + 1, detail.c_str());
    all_ok = all_ok && ok;
  }
  std::string detail;
  bool ok = false;
  try {
    ok = criterion_cli(cli, detail);
  } catch (const std::exception& e) {
    detail += format(" [unexpected exception: %s]", e.what());
  }
  std::printf("[%s] 7. %s\n", ok ? "PASS" : "FAIL", detail.c_str());
  all_ok = all_ok && ok;
  std::printf("%s\n", all_ok ? "acceptance: all criteria satisfied"
                             : "acceptance: criteria failed");
  return all_ok ? 0 : 1;
}
