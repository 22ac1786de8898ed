#include "qinfo/ensembles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace qinfo {

namespace {

// Rotate each column's phase so its largest-magnitude entry is real positive;
// makes eigenvector output reproducible and ties comparable.
void canonicalize_column_phases(Matrix& m) {
  for (int j = 0; j < m.cols(); ++j) {
    int arg_max = 0;
    double best = 0.0;
    for (int i = 0; i < m.rows(); ++i) {
      double mag = std::abs(m(i, j));
      if (mag > best) {
        best = mag;
        arg_max = i;
      }
    }
    if (best > 0.0) {
      Complex c = m(arg_max, j);
      m.col(j) *= std::conj(c) / std::abs(c);
    }
  }
}

bool column_less(const Matrix& m, int a, int b) {
  for (int i = 0; i < m.rows(); ++i) {
    Complex x = m(i, a), y = m(i, b);
    if (x.real() != y.real()) return x.real() < y.real();
    if (x.imag() != y.imag()) return x.imag() < y.imag();
  }
  return false;
}

}  // namespace

ProbVector::ProbVector(std::vector<double> probs) {
  if (probs.empty()) {
    throw std::invalid_argument("probability vector must be nonempty");
  }
  double sum = 0.0;
  for (double p : probs) {
    if (!(p >= 0.0)) {
      throw std::invalid_argument("probabilities must be nonnegative, got " +
                                  std::to_string(p));
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > NORM_TOL) {
    throw std::invalid_argument("probabilities sum to " + std::to_string(sum) +
                                ", not 1");
  }
  probs_ = std::move(probs);
}

QuantumEnsemble::QuantumEnsemble(std::vector<StateVector> states,
                                 ProbVector probs)
    : states_(std::move(states)), probs_(std::move(probs)) {
  if (states_.empty()) {
    throw std::invalid_argument("ensemble must contain at least one state");
  }
  if (static_cast<int>(states_.size()) != probs_.size()) {
    throw std::invalid_argument("state and probability counts differ");
  }
  for (const StateVector& s : states_) {
    if (s.dim() != states_.front().dim()) {
      throw std::invalid_argument("ensemble states have mixed dimensions");
    }
  }
}

ClassicalEnsemble::ClassicalEnsemble(ProbVector probs,
                                     std::optional<PhaseSpaceSpec> geometry)
    : probs_(std::move(probs)), geometry_(std::move(geometry)) {}

DensityOperator::DensityOperator(Matrix matrix) {
  if (matrix.rows() < 1 || matrix.rows() != matrix.cols()) {
    throw std::invalid_argument("density operator must be square, dim >= 1");
  }
  if ((matrix - matrix.adjoint()).cwiseAbs().maxCoeff() > NORM_TOL) {
    throw std::invalid_argument("density operator not Hermitian");
  }
  double trace = matrix.trace().real();
  if (std::abs(trace - 1.0) > NORM_TOL) {
    throw std::invalid_argument("density operator trace is " +
                                std::to_string(trace) + ", not 1");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(matrix,
                                               Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigenvalue computation failed");
  }
  if (solver.eigenvalues().minCoeff() < -NORM_TOL) {
    throw std::invalid_argument("density operator not positive semidefinite");
  }
  matrix_ = std::move(matrix);
}

DensityOperator density_operator(const QuantumEnsemble& e) {
  Matrix rho = Matrix::Zero(e.dim(), e.dim());
  for (int j = 0; j < e.size(); ++j) {
    const Vector& amp = e.state(j).amplitudes();
    rho += e.probs()[j] * (amp * amp.adjoint());
  }
  return DensityOperator(rho);
}

SpectralDecomposition spectral_decompose(const DensityOperator& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(rho.matrix());
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigenvalue computation failed");
  }
  const int dim = rho.dim();

  Matrix vectors = solver.eigenvectors();
  canonicalize_column_phases(vectors);

  std::vector<double> values(dim);
  for (int m = 0; m < dim; ++m) {
    double lambda = solver.eigenvalues()(m);
    if (lambda < -NORM_TOL) {
      throw std::runtime_error("negative eigenvalue beyond tolerance: " +
                               std::to_string(lambda));
    }
    values[static_cast<std::size_t>(m)] = std::max(lambda, 0.0);
  }

  std::vector<int> order(dim);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    double va = values[static_cast<std::size_t>(a)];
    double vb = values[static_cast<std::size_t>(b)];
    if (va != vb) return va > vb;
    return column_less(vectors, a, b);
  });

  double total = std::accumulate(values.begin(), values.end(), 0.0);
  Matrix basis(dim, dim);
  std::vector<double> sorted(dim);
  for (int m = 0; m < dim; ++m) {
    int src = order[static_cast<std::size_t>(m)];
    sorted[static_cast<std::size_t>(m)] =
        values[static_cast<std::size_t>(src)] / total;
    basis.col(m) = vectors.col(src);
  }

  SpectralDecomposition out{ProbVector(sorted), MeasurementBasis(basis)};

  Matrix rebuilt = Matrix::Zero(dim, dim);
  for (int m = 0; m < dim; ++m) {
    rebuilt += out.eigenvalues[m] *
               (basis.col(m) * basis.col(m).adjoint());
  }
  if ((rebuilt - rho.matrix()).norm() > 1e-8) {
    throw std::runtime_error("spectral reconstruction residual too large");
  }
  return out;
}

bool ensembles_equivalent(const QuantumEnsemble& a, const QuantumEnsemble& b,
                          double tol) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("ensembles live in different spaces");
  }
  Matrix diff = density_operator(a).matrix() - density_operator(b).matrix();
  return diff.norm() <= tol;
}

std::vector<double> classical_density(const ClassicalEnsemble& e) {
  if (!e.geometry().has_value()) {
    throw std::invalid_argument("classical density needs a phase-space spec");
  }
  const PhaseSpaceSpec& spec = *e.geometry();
  double cell_volume =
      std::exp(spec.dof * std::log(spec.resolution_per_pair));
  std::vector<double> out(static_cast<std::size_t>(e.cell_count()));
  for (int j = 0; j < e.cell_count(); ++j) {
    out[static_cast<std::size_t>(j)] = e.probs()[j] / cell_volume;
  }
  return out;
}

QuantumEnsemble uniform_quantum_ensemble(int dim, int count,
                                         RandomStream& rng) {
  if (count < 1) {
    throw std::invalid_argument("ensemble needs count >= 1");
  }
  std::vector<StateVector> states;
  states.reserve(static_cast<std::size_t>(count));
  for (int j = 0; j < count; ++j) {
    states.push_back(sample_pure_state(dim, rng));
  }
  std::vector<double> probs(static_cast<std::size_t>(count),
                            1.0 / static_cast<double>(count));
  return QuantumEnsemble(std::move(states), ProbVector(std::move(probs)));
}

}  // namespace qinfo
