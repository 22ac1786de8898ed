#pragma once

#include <vector>

#include "qinfo/ensembles.hpp"
#include "qinfo/hilbert.hpp"

namespace qinfo {

// Joint pure state of two subsystems. Index order is a-major throughout:
// amplitude(i*dim_b + k) multiplies |i>|k>.
class BipartiteStructure {
 public:
  BipartiteStructure(int dim_a, int dim_b, StateVector joint);

  int dim_a() const { return dim_a_; }
  int dim_b() const { return dim_b_; }
  const StateVector& joint() const { return joint_; }

 private:
  int dim_a_;
  int dim_b_;
  StateVector joint_;
};

// Biorthogonal expansion |Psi> = sum_m sqrt(lambda_m) |phi_m>|eta_m>.
// Coefficients descending; with exactly degenerate coefficients the SVD's
// output order is kept (only the multiset and the reconstruction are
// contract-bound then).
struct SchmidtResult {
  ProbVector coefficients;
  std::vector<StateVector> basis_a;
  std::vector<StateVector> basis_b;
};

SchmidtResult schmidt_decompose(const BipartiteStructure& s);

// Trace out one subsystem of a joint operator (keep = 1 or 2). Linear and
// trace-preserving on arbitrary, not necessarily Hermitian, operators.
Matrix partial_trace(const Matrix& op, int dim_a, int dim_b, int keep);

// Marginal of the joint projector; the spectrum equals the Schmidt
// coefficients zero-padded to the kept dimension.
DensityOperator marginal_density(const BipartiteStructure& s, int keep);

}  // namespace qinfo
