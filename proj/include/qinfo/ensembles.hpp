#pragma once

#include <optional>
#include <vector>

#include "qinfo/geometry.hpp"
#include "qinfo/hilbert.hpp"
#include "qinfo/sampling.hpp"

namespace qinfo {

// Probability distribution: nonnegative entries summing to 1 within NORM_TOL.
class ProbVector {
 public:
  explicit ProbVector(std::vector<double> probs);

  int size() const { return static_cast<int>(probs_.size()); }
  double operator[](int j) const { return probs_[static_cast<std::size_t>(j)]; }
  const std::vector<double>& values() const { return probs_; }

 private:
  std::vector<double> probs_;
};

// Finite ensemble of pure states with preparation probabilities.
class QuantumEnsemble {
 public:
  QuantumEnsemble(std::vector<StateVector> states, ProbVector probs);

  int dim() const { return states_.front().dim(); }
  int size() const { return static_cast<int>(states_.size()); }
  const StateVector& state(int j) const {
    return states_[static_cast<std::size_t>(j)];
  }
  const ProbVector& probs() const { return probs_; }

 private:
  std::vector<StateVector> states_;
  ProbVector probs_;
};

// Probabilities over fine-grained phase-space cells; cells are bare indices,
// optionally annotated with the geometry they discretize.
class ClassicalEnsemble {
 public:
  explicit ClassicalEnsemble(ProbVector probs,
                             std::optional<PhaseSpaceSpec> geometry = {});

  int cell_count() const { return probs_.size(); }
  const ProbVector& probs() const { return probs_; }
  const std::optional<PhaseSpaceSpec>& geometry() const { return geometry_; }

 private:
  ProbVector probs_;
  std::optional<PhaseSpaceSpec> geometry_;
};

// Hermitian, unit-trace, positive-semidefinite operator. All three are
// checked on construction (eigenvalues may dip to -NORM_TOL; lower rejects).
class DensityOperator {
 public:
  explicit DensityOperator(Matrix matrix);

  int dim() const { return static_cast<int>(matrix_.rows()); }
  const Matrix& matrix() const { return matrix_; }

 private:
  Matrix matrix_;
};

// Eigenvalues descending (ties broken lexicographically on the
// phase-canonicalized eigenvectors) with the matching eigenbasis.
struct SpectralDecomposition {
  ProbVector eigenvalues;
  MeasurementBasis eigenvectors;
};

// rho = sum_j p_j |psi_j><psi_j|.
DensityOperator density_operator(const QuantumEnsemble& e);

// Negative eigenvalues within -NORM_TOL are clamped to zero and the spectrum
// renormalized; a reconstruction residual above 1e-8 throws.
SpectralDecomposition spectral_decompose(const DensityOperator& rho);

// True iff the two ensembles' density operators agree within tol (Frobenius).
bool ensembles_equivalent(const QuantumEnsemble& a, const QuantumEnsemble& b,
                          double tol);

// Per-cell phase-space density p_j / dv_cl with dv_cl = resolution^dof.
// Requires the geometry annotation.
std::vector<double> classical_density(const ClassicalEnsemble& e);

// Finite proxy for the continuous uniform ensemble: count Haar samples with
// equal weights.
QuantumEnsemble uniform_quantum_ensemble(int dim, int count, RandomStream& rng);

}  // namespace qinfo
