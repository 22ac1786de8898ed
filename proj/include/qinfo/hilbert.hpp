#pragma once

#include <Eigen/Dense>

#include <complex>

namespace qinfo {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

// Shared construction tolerances: normalization/orthonormality/trace slack,
// and the angle below which two rays count as the same state.
constexpr double NORM_TOL = 1e-9;
constexpr double PHASE_TOL = 1e-8;

// Normalized pure state in C^D. The constructor rejects amplitudes whose norm
// is off by more than NORM_TOL; normalized() rescales instead.
class StateVector {
 public:
  explicit StateVector(Vector amplitudes);
  static StateVector normalized(const Vector& amplitudes);

  int dim() const { return static_cast<int>(amp_.size()); }
  const Vector& amplitudes() const { return amp_; }
  Complex amplitude(int n) const { return amp_(n); }

 private:
  StateVector() = default;
  Vector amp_;
};

// Ordered orthonormal basis, stored as the columns of a unitary; defines a
// pure von Neumann measurement.
class MeasurementBasis {
 public:
  explicit MeasurementBasis(Matrix columns);
  static MeasurementBasis computational(int dim);

  int dim() const { return static_cast<int>(cols_.rows()); }
  const Matrix& matrix() const { return cols_; }
  StateVector vector(int n) const;

 private:
  MeasurementBasis() = default;
  Matrix cols_;
};

// Polar form of psi about a fiducial: psi ~ cos(polar_angle) psi0 +
// sin(polar_angle) eta, with <psi0|psi> made real nonnegative. When
// sin(polar_angle) < NORM_TOL the direction eta is singular; defined_flag is
// false and orthogonal_part holds a deterministic placeholder.
struct FiducialDecomposition {
  double polar_angle;
  StateVector orthogonal_part;
  bool defined_flag;
};

// <a|b>, conjugating the first argument.
Complex inner_product(const StateVector& a, const StateVector& b);

// acos of the overlap magnitude, clamped into [0,1] first; result in [0, pi/2].
double hilbert_angle(const StateVector& a, const StateVector& b);

// Ray equality: angle below tol. State vectors carry no canonical phase.
bool equal_up_to_phase(const StateVector& a, const StateVector& b,
                       double tol = PHASE_TOL);

FiducialDecomposition fiducial_decompose(const StateVector& psi,
                                         const StateVector& psi0);

// Kronecker product, a-major index order: out[i*b.dim() + k] = a[i]*b[k].
StateVector tensor(const StateVector& a, const StateVector& b);

}  // namespace qinfo
