#pragma once

#include <optional>
#include <string>

#include "qinfo/ensembles.hpp"

namespace qinfo {

// Preparation information I next to the missing information S for one
// ensemble; gap_bits = I - S is nonnegative up to rounding.
struct InfoReport {
  double preparation_bits;
  double entropy_bits;
  double gap_bits;
  std::string context;
};

// Mean per-state measurement information: closed form, and optionally a
// Monte Carlo estimate. Producers enforce the consistency gate
// |closed_form - mc_estimate| <= 4 * mc_stderr before returning one.
struct MeanInfoResult {
  int dim;
  double closed_form_bits;
  std::optional<double> mc_estimate_bits;
  std::optional<double> mc_stderr_bits;
  std::optional<long long> samples;
};

// -sum p log2 p with the 0 log 0 = 0 convention.
double shannon_info(const ProbVector& p);

// log2 of the number of length-n sequences with occupation numbers n*p_j,
// via log-gamma. Every n*p_j must already be an integer.
double gibbs_sequence_bits(long long n, const ProbVector& p);

// I = H(p): information needed to specify one member of the ensemble.
double preparation_info(const QuantumEnsemble& e);
double preparation_info(const ClassicalEnsemble& e);

// S = -tr(rho log2 rho) from the clamped spectrum.
double von_neumann_entropy(const DensityOperator& rho);

// Outcome distribution q_n = <n|rho|n> of a pure von Neumann measurement.
ProbVector measurement_distribution(const DensityOperator& rho,
                                    const MeasurementBasis& basis);

// H of the Born distribution |<n|psi>|^2: information the measurement yields
// when the prepared state is psi.
double measurement_info_given_state(const StateVector& psi,
                                    const MeasurementBasis& basis);

// Entries |<a_n|b_m>|^2; every row and column sums to 1 (double
// stochasticity), enforced to NORM_TOL.
Eigen::MatrixXd double_stochastic_matrix(const MeasurementBasis& a,
                                         const MeasurementBasis& b);

// H(q) - S(rho): the extra information a non-eigenbasis measurement drags in.
// Nonnegative up to rounding; ~0 exactly on an eigenbasis.
double excess_measurement_info(const DensityOperator& rho,
                               const MeasurementBasis& basis);

InfoReport info_report(const QuantumEnsemble& e, std::string context);

// (1/ln 2) * sum_{k=2}^{D} 1/k: mean measurement information over the
// uniform ensemble, any fixed basis.
double mean_measurement_info_closed(int dim);

// Monte Carlo version of the same mean, measured against the computational
// basis (or an explicit one). Deterministic for fixed (seed, stream);
// independent of worker count by construction.
MeanInfoResult mean_measurement_info_mc(int dim, long long samples,
                                        const RandomStream& rng);
MeanInfoResult mean_measurement_info_mc(int dim, long long samples,
                                        const RandomStream& rng,
                                        const MeasurementBasis& basis);

// J = log2 D - mean_measurement_info_closed(D): what a fixed measurement
// recovers about a uniformly prepared state.
double accessible_info_uniform(int dim);

// Euler's constant, pinned to the precision used by the asymptote checks.
constexpr double EULER_GAMMA = 0.5772156649;

}  // namespace qinfo
