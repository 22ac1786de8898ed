#include "qinfo/information.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

#include "qinfo/stats.hpp"

namespace qinfo {

namespace {

double entropy_bits(const std::vector<double>& p) {
  double h = 0.0;
  for (double x : p) {
    if (x > 0.0) h -= x * std::log2(x);
  }
  return h;
}

void check_dim_match(int a, int b) {
  if (a != b) {
    throw std::invalid_argument("dimension mismatch: " + std::to_string(a) +
                                " vs " + std::to_string(b));
  }
}

}  // namespace

double shannon_info(const ProbVector& p) { return entropy_bits(p.values()); }

double gibbs_sequence_bits(long long n, const ProbVector& p) {
  if (n < 1) {
    throw std::invalid_argument("sequence length must be >= 1");
  }
  double ln_count = std::lgamma(static_cast<double>(n) + 1.0);
  for (int j = 0; j < p.size(); ++j) {
    double occupation = static_cast<double>(n) * p[j];
    double rounded = std::round(occupation);
    if (std::abs(occupation - rounded) > 1e-6) {
      throw std::invalid_argument("occupation number " +
                                  std::to_string(occupation) +
                                  " is not an integer; round p first");
    }
    ln_count -= std::lgamma(rounded + 1.0);
  }
  return ln_count / std::numbers::ln2;
}

double preparation_info(const QuantumEnsemble& e) {
  return shannon_info(e.probs());
}

double preparation_info(const ClassicalEnsemble& e) {
  return shannon_info(e.probs());
}

double von_neumann_entropy(const DensityOperator& rho) {
  SpectralDecomposition spectral = spectral_decompose(rho);
  return entropy_bits(spectral.eigenvalues.values());
}

ProbVector measurement_distribution(const DensityOperator& rho,
                                    const MeasurementBasis& basis) {
  check_dim_match(rho.dim(), basis.dim());
  const int dim = rho.dim();
  std::vector<double> q(static_cast<std::size_t>(dim));
  double total = 0.0;
  for (int n = 0; n < dim; ++n) {
    Complex qn = basis.matrix().col(n).dot(rho.matrix() * basis.matrix().col(n));
    double val = qn.real();
    if (val < 0.0) {
      if (val < -NORM_TOL) {
        throw std::runtime_error("measurement probability " +
                                 std::to_string(val) + " below tolerance");
      }
      val = 0.0;
    }
    q[static_cast<std::size_t>(n)] = val;
    total += val;
  }
  for (double& val : q) val /= total;
  return ProbVector(std::move(q));
}

double measurement_info_given_state(const StateVector& psi,
                                    const MeasurementBasis& basis) {
  check_dim_match(psi.dim(), basis.dim());
  Vector overlaps = basis.matrix().adjoint() * psi.amplitudes();
  double h = 0.0;
  for (int n = 0; n < psi.dim(); ++n) {
    double born = std::norm(overlaps(n));
    if (born > 0.0) h -= born * std::log2(born);
  }
  return h;
}

Eigen::MatrixXd double_stochastic_matrix(const MeasurementBasis& a,
                                         const MeasurementBasis& b) {
  check_dim_match(a.dim(), b.dim());
  Eigen::MatrixXd m =
      (a.matrix().adjoint() * b.matrix()).cwiseAbs2();
  for (int i = 0; i < m.rows(); ++i) {
    if (std::abs(m.row(i).sum() - 1.0) > NORM_TOL ||
        std::abs(m.col(i).sum() - 1.0) > NORM_TOL) {
      throw std::runtime_error("overlap matrix lost double stochasticity");
    }
  }
  return m;
}

double excess_measurement_info(const DensityOperator& rho,
                               const MeasurementBasis& basis) {
  double excess = shannon_info(measurement_distribution(rho, basis)) -
                  von_neumann_entropy(rho);
  if (excess < -NORM_TOL) {
    throw std::runtime_error("measurement info fell below the entropy bound");
  }
  return excess;
}

InfoReport info_report(const QuantumEnsemble& e, std::string context) {
  double prep = preparation_info(e);
  double entropy = von_neumann_entropy(density_operator(e));
  double gap = prep - entropy;
  if (gap < -NORM_TOL) {
    throw std::runtime_error("preparation info fell below the entropy bound");
  }
  return {prep, entropy, gap, std::move(context)};
}

double mean_measurement_info_closed(int dim) {
  if (dim < 2) {
    throw std::invalid_argument("mean measurement info needs dim >= 2");
  }
  double harmonic_tail = 0.0;
  for (int k = dim; k >= 2; --k) {  // small terms first
    harmonic_tail += 1.0 / static_cast<double>(k);
  }
  return harmonic_tail / std::numbers::ln2;
}

MeanInfoResult mean_measurement_info_mc(int dim, long long samples,
                                        const RandomStream& rng) {
  return mean_measurement_info_mc(dim, samples, rng,
                                  MeasurementBasis::computational(dim));
}

MeanInfoResult mean_measurement_info_mc(int dim, long long samples,
                                        const RandomStream& rng,
                                        const MeasurementBasis& basis) {
  if (dim < 2) {
    throw std::invalid_argument("mean measurement info needs dim >= 2");
  }
  if (samples < 100) {
    throw std::invalid_argument("Monte Carlo mean needs samples >= 100");
  }
  check_dim_match(dim, basis.dim());

  const int blocks = block_count(samples);
  std::vector<RunningStats> parts = run_blocks<RunningStats>(
      blocks, [&](int b) {
        RandomStream stream = rng.substream(static_cast<std::uint64_t>(b));
        long long count = block_offset(samples, blocks, b + 1) -
                          block_offset(samples, blocks, b);
        RunningStats stats;
        for (long long i = 0; i < count; ++i) {
          StateVector psi = sample_pure_state(dim, stream);
          stats.add(measurement_info_given_state(psi, basis));
        }
        return stats;
      });

  RunningStats stats;
  for (const RunningStats& part : parts) stats.merge(part);

  double closed = mean_measurement_info_closed(dim);
  double estimate = stats.mean();
  double se = stats.stderr_mean();
  if (std::abs(closed - estimate) > 4.0 * se) {
    throw std::runtime_error(
        "Monte Carlo mean info diverged from the closed form: " +
        std::to_string(estimate) + " vs " + std::to_string(closed) +
        " (stderr " + std::to_string(se) + ")");
  }
  return {dim, closed, estimate, se, samples};
}

double accessible_info_uniform(int dim) {
  if (dim < 2) {
    throw std::invalid_argument("accessible info needs dim >= 2");
  }
  return std::log2(static_cast<double>(dim)) -
         mean_measurement_info_closed(dim);
}

}  // namespace qinfo
