#pragma once

#include <Eigen/Dense>

#include <optional>

#include "qinfo/ensembles.hpp"
#include "qinfo/hilbert.hpp"
#include "qinfo/sampling.hpp"

namespace qinfo {

using CountMatrix = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;

// Empirical joint table: rows are input alternatives, columns are outcomes.
class JointCounts {
 public:
  explicit JointCounts(CountMatrix counts);

  int rows() const { return static_cast<int>(counts_.rows()); }
  int cols() const { return static_cast<int>(counts_.cols()); }
  long long trials() const { return trials_; }
  const CountMatrix& counts() const { return counts_; }

 private:
  CountMatrix counts_;
  long long trials_;
};

// Information budget of one channel configuration. Simulated reports carry
// plug-in values for the first four fields (so mutual_info <= preparation
// holds by construction); vn_entropy and accessible_closed are exact.
// mutual_info == outcome_entropy - conditional_entropy identically.
struct ChannelReport {
  double mutual_info_bits;
  double outcome_entropy_bits;
  double conditional_entropy_bits;
  double preparation_bits;
  double vn_entropy_bits;
  std::optional<double> accessible_closed_bits;
};

// Prepare-and-measure sampling: input j ~ p, outcome n ~ |<n|psi_j>|^2.
// Deterministic for a fixed stream and independent of worker count.
JointCounts simulate_channel(const QuantumEnsemble& e,
                             const MeasurementBasis& basis, long long trials,
                             const RandomStream& rng);

// Exact joint distribution p_j * |<n|psi_j>|^2, rows indexed by input.
Eigen::MatrixXd exact_joint(const QuantumEnsemble& e,
                            const MeasurementBasis& basis);

// Plug-in estimator H(inputs) + H(outcomes) - H(joint) on normalized counts.
double mutual_information(const JointCounts& counts);

// Same functional on an exact joint distribution (entries >= 0, sum 1).
double mutual_information(const Eigen::MatrixXd& joint);

// Plug-in budget of an existing counts table joined with the ensemble's
// exact von Neumann entropy. No closed-form accessible value in general.
ChannelReport report_from_counts(const QuantumEnsemble& e,
                                 const JointCounts& counts);

// Full report for a finite ensemble measured in a basis: plug-in budget from
// a fresh simulation plus the exact von Neumann entropy of the ensemble.
ChannelReport quantum_channel_experiment(const QuantumEnsemble& e,
                                         const MeasurementBasis& basis,
                                         long long trials,
                                         const RandomStream& rng);

// Continuous uniform ensemble: inputs are uncountable, so no counts table.
// Estimates J = log2 D - mean per-state measurement information (Monte
// Carlo, computational basis) and reports preparation_bits = +infinity,
// S = log2 D, and the closed-form J. The 4-sigma consistency gate applies.
ChannelReport uniform_ensemble_experiment(int dim, long long samples,
                                          const RandomStream& rng);

// Noiseless classical cell readout (outcome = input). trials >= 1 simulates
// and reports plug-in values; trials = 0 takes the exact path, where every
// report field equals H(p) (conditional entropy 0).
ChannelReport classical_channel_experiment(const ClassicalEnsemble& e,
                                           long long trials,
                                           const RandomStream& rng);

}  // namespace qinfo
