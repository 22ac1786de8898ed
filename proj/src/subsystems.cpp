#include "qinfo/subsystems.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace qinfo {

BipartiteStructure::BipartiteStructure(int dim_a, int dim_b, StateVector joint)
    : dim_a_(dim_a), dim_b_(dim_b), joint_(std::move(joint)) {
  if (dim_a_ < 1 || dim_b_ < 1) {
    throw std::invalid_argument("subsystem dimensions must be >= 1");
  }
  if (joint_.dim() != dim_a_ * dim_b_) {
    throw std::invalid_argument("joint dimension does not factor as given");
  }
}

SchmidtResult schmidt_decompose(const BipartiteStructure& s) {
  const int da = s.dim_a();
  const int db = s.dim_b();
  Matrix coeff(da, db);
  for (int i = 0; i < da; ++i) {
    for (int k = 0; k < db; ++k) {
      coeff(i, k) = s.joint().amplitude(i * db + k);
    }
  }

  Eigen::JacobiSVD<Matrix> svd(coeff,
                               Eigen::ComputeThinU | Eigen::ComputeThinV);
  const int rank_bound = std::min(da, db);

  // coeff = U S V^dagger, so |Psi> = sum_m s_m |u_m> (conj V col m).
  Matrix basis_a = svd.matrixU();
  Matrix basis_b = svd.matrixV().conjugate();

  std::vector<double> lambdas(static_cast<std::size_t>(rank_bound));
  double total = 0.0;
  for (int m = 0; m < rank_bound; ++m) {
    double sigma = svd.singularValues()(m);
    lambdas[static_cast<std::size_t>(m)] = sigma * sigma;
    total += sigma * sigma;
  }
  for (double& l : lambdas) l /= total;

  SchmidtResult out{ProbVector(lambdas), {}, {}};
  out.basis_a.reserve(static_cast<std::size_t>(rank_bound));
  out.basis_b.reserve(static_cast<std::size_t>(rank_bound));
  for (int m = 0; m < rank_bound; ++m) {
    // Phase convention: largest-magnitude component of each |phi_m> real
    // positive, compensated on the partner so the product is unchanged.
    Vector a_col = basis_a.col(m);
    Vector b_col = basis_b.col(m);
    int arg_max = 0;
    for (int i = 1; i < da; ++i) {
      if (std::abs(a_col(i)) > std::abs(a_col(arg_max))) arg_max = i;
    }
    if (std::abs(a_col(arg_max)) > 0.0) {
      Complex phase = std::conj(a_col(arg_max)) / std::abs(a_col(arg_max));
      a_col *= phase;
      b_col *= std::conj(phase);
    }
    out.basis_a.push_back(StateVector::normalized(a_col));
    out.basis_b.push_back(StateVector::normalized(b_col));
  }

  Vector rebuilt = Vector::Zero(da * db);
  for (int m = 0; m < rank_bound; ++m) {
    double root = std::sqrt(out.coefficients[m]);
    for (int i = 0; i < da; ++i) {
      for (int k = 0; k < db; ++k) {
        rebuilt(i * db + k) += root * out.basis_a[static_cast<std::size_t>(m)]
                                          .amplitude(i) *
                               out.basis_b[static_cast<std::size_t>(m)]
                                   .amplitude(k);
      }
    }
  }
  // Reconstruction agrees up to a global phase; compare as rays.
  double mismatch =
      1.0 - std::abs(rebuilt.dot(s.joint().amplitudes()));
  if (!(mismatch < 1e-8)) {
    throw std::runtime_error("Schmidt reconstruction residual too large");
  }
  return out;
}

Matrix partial_trace(const Matrix& op, int dim_a, int dim_b, int keep) {
  if (dim_a < 1 || dim_b < 1) {
    throw std::invalid_argument("subsystem dimensions must be >= 1");
  }
  if (op.rows() != op.cols() ||
      op.rows() != static_cast<Eigen::Index>(dim_a) * dim_b) {
    throw std::invalid_argument("operator does not match dim_a * dim_b");
  }
  if (keep == 1) {
    Matrix out = Matrix::Zero(dim_a, dim_a);
    for (int i = 0; i < dim_a; ++i) {
      for (int j = 0; j < dim_a; ++j) {
        for (int k = 0; k < dim_b; ++k) {
          out(i, j) += op(i * dim_b + k, j * dim_b + k);
        }
      }
    }
    return out;
  }
  if (keep == 2) {
    Matrix out = Matrix::Zero(dim_b, dim_b);
    for (int k = 0; k < dim_b; ++k) {
      for (int l = 0; l < dim_b; ++l) {
        for (int i = 0; i < dim_a; ++i) {
          out(k, l) += op(i * dim_b + k, i * dim_b + l);
        }
      }
    }
    return out;
  }
  throw std::invalid_argument("keep must be 1 or 2");
}

DensityOperator marginal_density(const BipartiteStructure& s, int keep) {
  const Vector& amp = s.joint().amplitudes();
  Matrix projector = amp * amp.adjoint();
  return DensityOperator(partial_trace(projector, s.dim_a(), s.dim_b(), keep));
}

}  // namespace qinfo
