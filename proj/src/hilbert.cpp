#include "qinfo/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qinfo {

namespace {

void check_same_dim(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("state vectors live in different spaces: dim " +
                                std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()));
  }
}

}  // namespace

StateVector::StateVector(Vector amplitudes) {
  if (amplitudes.size() < 1) {
    throw std::invalid_argument("state vector needs dim >= 1");
  }
  double norm2 = amplitudes.squaredNorm();
  if (std::abs(norm2 - 1.0) > NORM_TOL) {
    throw std::invalid_argument("state vector not normalized: |amp|^2 = " +
                                std::to_string(norm2));
  }
  amp_ = std::move(amplitudes);
}

StateVector StateVector::normalized(const Vector& amplitudes) {
  if (amplitudes.size() < 1) {
    throw std::invalid_argument("state vector needs dim >= 1");
  }
  double norm = amplitudes.norm();
  if (norm == 0.0) {
    throw std::invalid_argument("cannot normalize the zero vector");
  }
  StateVector out;
  out.amp_ = amplitudes / norm;
  return out;
}

MeasurementBasis::MeasurementBasis(Matrix columns) {
  if (columns.rows() < 1 || columns.rows() != columns.cols()) {
    throw std::invalid_argument("measurement basis must be square, dim >= 1");
  }
  Matrix gram = columns.adjoint() * columns;
  gram -= Matrix::Identity(columns.rows(), columns.cols());
  if (gram.cwiseAbs().maxCoeff() > NORM_TOL) {
    throw std::invalid_argument("basis columns are not orthonormal");
  }
  cols_ = std::move(columns);
}

MeasurementBasis MeasurementBasis::computational(int dim) {
  if (dim < 1) {
    throw std::invalid_argument("basis needs dim >= 1");
  }
  MeasurementBasis out;
  out.cols_ = Matrix::Identity(dim, dim);
  return out;
}

StateVector MeasurementBasis::vector(int n) const {
  if (n < 0 || n >= dim()) {
    throw std::invalid_argument("basis index out of range");
  }
  return StateVector::normalized(cols_.col(n));
}

Complex inner_product(const StateVector& a, const StateVector& b) {
  check_same_dim(a, b);
  return a.amplitudes().dot(b.amplitudes());
}

double hilbert_angle(const StateVector& a, const StateVector& b) {
  double overlap = std::abs(inner_product(a, b));
  return std::acos(std::clamp(overlap, 0.0, 1.0));
}

bool equal_up_to_phase(const StateVector& a, const StateVector& b, double tol) {
  return hilbert_angle(a, b) < tol;
}

FiducialDecomposition fiducial_decompose(const StateVector& psi,
                                         const StateVector& psi0) {
  check_same_dim(psi, psi0);
  const int dim = psi.dim();

  Complex c = inner_product(psi0, psi);
  double overlap = std::clamp(std::abs(c), 0.0, 1.0);
  double phi = std::acos(overlap);
  double sin_phi = std::sin(phi);

  if (sin_phi < NORM_TOL) {
    // psi is the fiducial ray; eta is singular. Deterministic placeholder:
    // the first standard basis vector orthogonalized against psi0 (the second
    // if psi0 is parallel to the first). A 1-dimensional space has no
    // orthogonal complement at all, so there psi0 itself stands in.
    Vector placeholder = psi0.amplitudes();
    for (int n = 0; n < dim; ++n) {
      Vector e = Vector::Zero(dim);
      e(n) = 1.0;
      Vector w = e - psi0.amplitudes() * (psi0.amplitudes().dot(e));
      if (w.norm() > 1e-6) {
        placeholder = w;
        break;
      }
    }
    return {phi, StateVector::normalized(placeholder), false};
  }

  // Rotate psi's global phase so <psi0|psi> is real nonnegative, then peel
  // off the fiducial component.
  Complex phase = (std::abs(c) > 0.0) ? std::conj(c) / std::abs(c)
                                      : Complex(1.0, 0.0);
  Vector adjusted = psi.amplitudes() * phase;
  Vector eta = (adjusted - overlap * psi0.amplitudes()) / sin_phi;
  return {phi, StateVector::normalized(eta), true};
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  const int da = a.dim();
  const int db = b.dim();
  Vector out(static_cast<Eigen::Index>(da) * db);
  for (int i = 0; i < da; ++i) {
    for (int k = 0; k < db; ++k) {
      out(static_cast<Eigen::Index>(i) * db + k) =
          a.amplitude(i) * b.amplitude(k);
    }
  }
  return StateVector::normalized(out);
}

}  // namespace qinfo
