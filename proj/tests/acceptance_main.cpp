// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Expected values and tolerances are frozen here on purpose; this
// binary must not share them with the library it is checking.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "qinfo/cloning.hpp"
#include "qinfo/commsim.hpp"
#include "qinfo/ensembles.hpp"
#include "qinfo/geometry.hpp"
#include "qinfo/hilbert.hpp"
#include "qinfo/information.hpp"
#include "qinfo/sampling.hpp"
#include "qinfo/stats.hpp"
#include "qinfo/subsystems.hpp"

using namespace qinfo;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int index, const std::string& name, bool passed,
            const std::string& detail) {
  std::printf("[%s] criterion-%02d %s%s%s\n", passed ? "PASS" : "FAIL", index,
              name.c_str(), detail.empty() ? "" : ": ", detail.c_str());
  if (!passed) ++failures;
}

StateVector basis_state(int dim, int n) {
  Vector v = Vector::Zero(dim);
  v(n) = 1.0;
  return StateVector(v);
}

StateVector plus_state() {
  Vector v(2);
  v << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  return StateVector(v);
}

QuantumEnsemble random_ensemble(int dim, int count, RandomStream& rng) {
  std::vector<StateVector> states;
  std::vector<double> weights(static_cast<std::size_t>(count));
  double total = 0.0;
  for (int j = 0; j < count; ++j) {
    states.push_back(sample_pure_state(dim, rng));
    weights[static_cast<std::size_t>(j)] = rng.uniform() + 1e-3;
    total += weights[static_cast<std::size_t>(j)];
  }
  for (double& w : weights) w /= total;
  return QuantumEnsemble(std::move(states), ProbVector(weights));
}

int rand_int(RandomStream& rng, int lo, int hi) {
  return lo + static_cast<int>(rng.uniform() * static_cast<double>(hi - lo + 1));
}

// Criterion 1: closed-form mean measurement information, value and speed.
void criterion_closed_form() {
  double h2 = mean_measurement_info_closed(2);
  double h3 = mean_measurement_info_closed(3);
  bool values_ok = std::abs(h2 - 0.721) <= 1e-3 && std::abs(h3 - 1.202) <= 1e-3;

  volatile double sink = 0.0;
  auto t0 = Clock::now();
  for (int i = 0; i < 1000; ++i) {
    sink = sink + mean_measurement_info_closed(2) + mean_measurement_info_closed(3);
  }
  auto t1 = Clock::now();
  double mean_call_s =
      std::chrono::duration<double>(t1 - t0).count() / 2000.0;
  bool fast = mean_call_s < 1e-3;

  std::ostringstream d;
  d << "H2=" << h2 << " H3=" << h3 << " mean_call_budget_1ms="
    << (fast ? "met" : "missed");
  report(1, "closed-form mean measurement information", values_ok && fast, d.str());
}

// Criterion 2: accessible information landmarks and the large-D asymptote.
void criterion_accessible() {
  double j2 = accessible_info_uniform(2);
  double j3 = accessible_info_uniform(3);
  double j6 = accessible_info_uniform(1000000);
  double h6 = mean_measurement_info_closed(1000000);
  double log2_million = std::log2(1e6);

  bool ok = std::abs(j2 - 0.279) <= 1e-3 && std::abs(j3 - 0.383) <= 1e-3;
  ok = ok && std::abs(j6 - 0.6099488636) <= 1e-4;
  ok = ok && std::abs(j6 - 0.60995) <= 1e-4;
  ok = ok && std::abs(h6 - (log2_million - 0.6099488636)) <= 1e-5;

  std::ostringstream d;
  d << "J2=" << j2 << " J3=" << j3 << " J1e6=" << j6;
  report(2, "accessible information of the uniform ensemble", ok, d.str());
}

// Criterion 3: Monte Carlo means agree with the closed forms within 4 sigma.
void criterion_monte_carlo() {
  bool ok = true;
  std::ostringstream d;
  auto t0 = Clock::now();
  for (int dim : {2, 3, 5}) {
    try {
      MeanInfoResult r = mean_measurement_info_mc(
          dim, 100000, RandomStream(42, 401).substream(static_cast<std::uint64_t>(dim)));
      double gap = std::abs(*r.mc_estimate_bits - r.closed_form_bits);
      bool here = gap <= 4.0 * *r.mc_stderr_bits;
      ok = ok && here;
      d << "D" << dim << "_gap_sigma=" << gap / *r.mc_stderr_bits << " ";
    } catch (const std::exception& err) {
      ok = false;
      d << "D" << dim << "_error=" << err.what() << " ";
    }
  }
  auto t1 = Clock::now();
  double elapsed = std::chrono::duration<double>(t1 - t0).count();
  bool fast = elapsed < 10.0;
  d << "time_budget_10s=" << (fast ? "met" : "missed");
  report(3, "Monte Carlo agreement with closed forms", ok && fast, d.str());
}

// Criterion 4: volume identity across dimensions plus the angle-CDF fit.
void criterion_geometry() {
  bool identity_ok = true;
  double worst = 0.0;
  for (int dim = 2; dim <= 100; ++dim) {
    double v = projective_volume(dim);
    double s = sphere_area(dim) / (2.0 * (dim - 1));
    double rel = std::abs(v - s) / v;
    worst = std::max(worst, rel);
    identity_ok = identity_ok && rel <= 1e-12;
  }

  RandomStream rng(42, 402);
  const int n = 100000;
  StateVector e0 = basis_state(3, 0);
  std::vector<double> angles(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    angles[static_cast<std::size_t>(i)] = hilbert_angle(e0, sample_pure_state(3, rng));
  }
  std::sort(angles.begin(), angles.end());
  std::function<double(double)> cdf = [](double phi) {
    return std::pow(std::sin(phi), 4.0);
  };
  double ks = ks_statistic(angles, cdf);
  double crit = ks_critical(static_cast<std::size_t>(n), 0.01);
  bool ks_ok = ks <= crit;

  std::ostringstream d;
  d << "worst_rel=" << worst << " ks=" << ks << " crit=" << crit;
  report(4, "projective volumes and the angle distribution", identity_ok && ks_ok, d.str());
}

// Criterion 5: the 16-dimensional 10-bit resolution example, exact fields.
void criterion_resolution_example() {
  QuantumResolutionSpec spec(16, std::exp2(-5.0));
  CountComparison c = classical_vs_quantum_counts(16, spec.bits_per_amplitude());
  double phi_deg = spec.resolution_angle * 180.0 / std::numbers::pi;
  bool ok = c.quantum_bits == 150.0 && c.classical_bits == 4.0 &&
            std::abs(phi_deg - 1.79) <= 0.01;
  std::ostringstream d;
  d << "quantum_bits=" << c.quantum_bits << " classical_bits=" << c.classical_bits
    << " phi_deg=" << phi_deg;
  report(5, "amplitude-resolution state counting example", ok, d.str());
}

// Criterion 6: four 1000-case inequality suites.
void criterion_inequalities() {
  bool ok = true;
  std::ostringstream d;

  RandomStream rng_a(42, 403);
  for (int c = 0; c < 1000; ++c) {
    int dim = rand_int(rng_a, 2, 5);
    DensityOperator rho = density_operator(random_ensemble(dim, rand_int(rng_a, 1, 6), rng_a));
    MeasurementBasis basis = sample_basis(dim, rng_a);
    if (excess_measurement_info(rho, basis) < -1e-9) ok = false;
    SpectralDecomposition sd = spectral_decompose(rho);
    if (std::abs(excess_measurement_info(rho, sd.eigenvectors)) > 1e-9) ok = false;
  }
  d << (ok ? "" : "measurement_excess ");

  bool prep_ok = true;
  RandomStream rng_b(42, 404);
  for (int c = 0; c < 1000; ++c) {
    int dim = rand_int(rng_b, 2, 5);
    QuantumEnsemble e = random_ensemble(dim, rand_int(rng_b, 1, 6), rng_b);
    InfoReport r = info_report(e, "suite");
    if (r.gap_bits < -1e-9) prep_ok = false;
  }
  MeasurementBasis comp4 = MeasurementBasis::computational(4);
  std::vector<StateVector> orth;
  for (int j = 0; j < 4; ++j) orth.push_back(comp4.vector(j));
  InfoReport orth_report =
      info_report(QuantumEnsemble(orth, ProbVector({0.4, 0.3, 0.2, 0.1})), "orthogonal");
  if (std::abs(orth_report.gap_bits) > 1e-9) prep_ok = false;
  ok = ok && prep_ok;
  d << (prep_ok ? "" : "preparation_gap ");

  bool stochastic_ok = true;
  RandomStream rng_c(42, 405);
  for (int c = 0; c < 1000; ++c) {
    int dim = rand_int(rng_c, 2, 6);
    Eigen::MatrixXd m =
        double_stochastic_matrix(sample_basis(dim, rng_c), sample_basis(dim, rng_c));
    for (int i = 0; i < dim; ++i) {
      if (std::abs(m.row(i).sum() - 1.0) > 1e-9) stochastic_ok = false;
      if (std::abs(m.col(i).sum() - 1.0) > 1e-9) stochastic_ok = false;
    }
  }
  ok = ok && stochastic_ok;
  d << (stochastic_ok ? "" : "double_stochastic ");

  bool mi_ok = true;
  RandomStream rng_d(42, 406);
  for (int c = 0; c < 1000; ++c) {
    int dim = rand_int(rng_d, 2, 4);
    QuantumEnsemble e = random_ensemble(dim, rand_int(rng_d, 2, 6), rng_d);
    ChannelReport r = quantum_channel_experiment(
        e, sample_basis(dim, rng_d), 200, rng_d.substream(static_cast<std::uint64_t>(c)));
    if (r.mutual_info_bits > r.preparation_bits + 1e-9) mi_ok = false;
    if (r.mutual_info_bits < -1e-9) mi_ok = false;
  }
  ok = ok && mi_ok;
  d << (mi_ok ? "" : "mutual_vs_preparation ");

  std::string detail = d.str();
  if (detail.empty()) detail = "4x1000 cases clean";
  report(6, "information inequality suites", ok, detail);
}

// Criterion 7: biorthogonal coefficients against both marginal spectra.
void criterion_subsystems() {
  bool ok = true;
  double worst = 0.0;
  RandomStream rng(42, 407);
  for (int c = 0; c < 100; ++c) {
    int da = rand_int(rng, 2, 6);
    int db = rand_int(rng, 2, 6);
    BipartiteStructure s(da, db, sample_pure_state(da * db, rng));
    SchmidtResult r = schmidt_decompose(s);
    SpectralDecomposition ma = spectral_decompose(marginal_density(s, 1));
    SpectralDecomposition mb = spectral_decompose(marginal_density(s, 2));
    int terms = std::min(da, db);
    for (int m = 0; m < terms; ++m) {
      worst = std::max(worst, std::abs(r.coefficients[m] - ma.eigenvalues[m]));
      worst = std::max(worst, std::abs(r.coefficients[m] - mb.eigenvalues[m]));
    }
  }
  ok = worst <= 1e-9;

  Vector bell = Vector::Zero(4);
  bell(0) = 1.0 / std::sqrt(2.0);
  bell(3) = 1.0 / std::sqrt(2.0);
  BipartiteStructure pair(2, 2, StateVector(bell));
  SchmidtResult r = schmidt_decompose(pair);
  double lambda_err = std::max(std::abs(r.coefficients[0] - 0.5),
                               std::abs(r.coefficients[1] - 0.5));
  double entropy_err =
      std::abs(von_neumann_entropy(marginal_density(pair, 1)) - 1.0);
  ok = ok && lambda_err <= 1e-12 && entropy_err <= 1e-12;

  std::ostringstream d;
  d << "worst_spectrum_gap=" << worst << " bell_lambda_err=" << lambda_err
    << " bell_entropy_err=" << entropy_err;
  report(7, "subsystem decomposition and marginals", ok, d.str());
}

// Criterion 8: cloning verdicts, including the two-variant agreement sweep.
void criterion_cloning() {
  QuantumEnsemble orthogonal({basis_state(2, 0), basis_state(2, 1)},
                             ProbVector({0.5, 0.5}));
  bool ok = clonability_check(orthogonal, 1).clonable;

  QuantumEnsemble skew({basis_state(2, 0), plus_state()}, ProbVector({0.5, 0.5}));
  ClonabilityVerdict v = clonability_check(skew, 1);
  double violation = v.clonable ? 0.0 : v.violating_pairs.front().violation;
  ok = ok && !v.clonable && std::abs(violation - 0.20710678118654752) <= 1e-6;

  bool agree = true;
  RandomStream rng(42, 408);
  for (int c = 0; c < 500; ++c) {
    int dim = rand_int(rng, 2, 4);
    QuantumEnsemble e =
        (c % 2 == 0)
            ? random_ensemble(dim, rand_int(rng, 2, 5), rng)
            : [&] {
                MeasurementBasis basis = sample_basis(dim, rng);
                std::vector<StateVector> states;
                int count = rand_int(rng, 2, dim);
                for (int j = 0; j < count; ++j) states.push_back(basis.vector(j));
                return QuantumEnsemble(
                    states, ProbVector(std::vector<double>(
                                static_cast<std::size_t>(count), 1.0 / count)));
              }();
    int copies = rand_int(rng, 1, 3);
    ClonabilityVerdict plain = clonability_check(e, copies);
    ClonabilityVerdict gap = apparatus_clonability_check(e, copies);
    if (plain.clonable != gap.clonable) agree = false;
    if (plain.violating_pairs.size() != gap.violating_pairs.size()) agree = false;
    for (std::size_t i = 0;
         agree && i < plain.violating_pairs.size(); ++i) {
      if (plain.violating_pairs[i].j != gap.violating_pairs[i].j ||
          plain.violating_pairs[i].k != gap.violating_pairs[i].k) {
        agree = false;
      }
    }
  }
  ok = ok && agree;

  std::ostringstream d;
  d << "pair_violation=" << violation << " variants_agree=" << (agree ? "yes" : "no");
  report(8, "clonability verdicts", ok, d.str());
}

// Criterion 9: sequence counting and its information bound.
void criterion_sequences() {
  ProbVector p({0.5, 0.25, 0.25});
  double per_symbol = gibbs_sequence_bits(1000, p) / 1000.0;
  bool ok = std::abs(per_symbol - 1.5) <= 0.02;

  bool bounded = true;
  for (long long n : {4LL, 100LL, 1000LL, 10000LL}) {
    if (gibbs_sequence_bits(n, p) > static_cast<double>(n) * 1.5 + 1e-6) {
      bounded = false;
    }
  }
  ok = ok && bounded;

  std::ostringstream d;
  d << "per_symbol_bits=" << per_symbol << " bound_held=" << (bounded ? "yes" : "no");
  report(9, "typical-sequence counting", ok, d.str());
}

struct CliRun {
  std::string output;
  int exit_code;
  double seconds;
};

CliRun run_cli(const std::string& command) {
  CliRun run;
  auto t0 = Clock::now();
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) {
    run.exit_code = -1;
    run.seconds = 0.0;
    return run;
  }
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) {
    run.output.append(buf, got);
  }
  int status = pclose(pipe);
  run.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  run.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return run;
}

// Criterion 10: the batch verification table passes, quickly, and its bytes
// are reproducible for a fixed seed.
void criterion_cli(const std::string& cli_path) {
  std::string command = cli_path + " paper-table --seed 42";
  CliRun first = run_cli(command);
  CliRun second = run_cli(command);

  bool ok = first.exit_code == 0 && second.exit_code == 0;
  bool identical = first.output == second.output && !first.output.empty();
  bool fast = first.seconds < 60.0 && second.seconds < 60.0;
  ok = ok && identical && fast;

  std::ostringstream d;
  d << "exit=" << first.exit_code << " bytes=" << first.output.size()
    << " identical=" << (identical ? "yes" : "no")
    << " time_budget_60s=" << (fast ? "met" : "missed");
  report(10, "batch verification table", ok, d.str());
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli_path = argc > 1 ? argv[1] : "./qinfo";

  struct Criterion {
    int index;
    const char* name;
    std::function<void()> run;
  };
  const Criterion criteria[] = {
      {1, "closed-form mean measurement information", criterion_closed_form},
      {2, "accessible information of the uniform ensemble", criterion_accessible},
      {3, "Monte Carlo agreement with closed forms", criterion_monte_carlo},
      {4, "projective volumes and the angle distribution", criterion_geometry},
      {5, "amplitude-resolution state counting example", criterion_resolution_example},
      {6, "information inequality suites", criterion_inequalities},
      {7, "subsystem decomposition and marginals", criterion_subsystems},
      {8, "clonability verdicts", criterion_cloning},
      {9, "typical-sequence counting", criterion_sequences},
      {10, "batch verification table", [&cli_path] { criterion_cli(cli_path); }},
  };

  for (const Criterion& c : criteria) {
    try {
      c.run();
    } catch (const std::exception& err) {
      report(c.index, c.name, false, std::string("unexpected exception: ") + err.what());
    }
  }

  if (failures > 0) {
    std::printf("%d of 10 criteria failed\n", failures);
    return 1;
  }
  std::printf("all 10 criteria passed\n");
  return 0;
}
