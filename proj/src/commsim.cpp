#include "qinfo/commsim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "qinfo/information.hpp"
#include "qinfo/stats.hpp"

namespace qinfo {

namespace {

int draw_index(const std::vector<double>& cdf, double u) {
  auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
  // Rounding can leave the accumulated tail a hair under 1; fold the sliver
  // into the last cell.
  if (it == cdf.end()) --it;
  return static_cast<int>(it - cdf.begin());
}

std::vector<double> cumulative(const std::vector<double>& probs) {
  std::vector<double> cdf(probs.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    acc += probs[i];
    cdf[i] = acc;
  }
  return cdf;
}

// -sum (v / total) log2 (v / total) over the entries fn yields.
template <typename EntryFn>
double entropy_over(long long entries, double total, EntryFn value_at) {
  double h = 0.0;
  for (long long i = 0; i < entries; ++i) {
    double v = value_at(i);
    if (v > 0.0) {
      double p = v / total;
      h -= p * std::log2(p);
    }
  }
  return h;
}

struct EntropyTriple {
  double inputs;
  double outcomes;
  double joint;
};

template <typename Mat>
EntropyTriple entropies_of(const Mat& m, double total) {
  EntropyTriple t{};
  const auto rows = m.rows();
  const auto cols = m.cols();
  t.inputs = entropy_over(rows, total, [&](long long j) {
    return static_cast<double>(m.row(j).sum());
  });
  t.outcomes = entropy_over(cols, total, [&](long long n) {
    return static_cast<double>(m.col(n).sum());
  });
  t.joint = entropy_over(rows * cols, total, [&](long long i) {
    return static_cast<double>(m(i / cols, i % cols));
  });
  return t;
}

// MI written as H(Y) - (H(XY) - H(X)) so the report decomposition
// mutual == outcome - conditional is an identity, not a tolerance.
double mi_of(const EntropyTriple& t) {
  return t.outcomes - (t.joint - t.inputs);
}

}  // namespace

JointCounts::JointCounts(CountMatrix counts) : counts_(std::move(counts)) {
  if (counts_.rows() < 1 || counts_.cols() < 1) {
    throw std::invalid_argument("counts matrix must be nonempty");
  }
  trials_ = 0;
  for (Eigen::Index j = 0; j < counts_.rows(); ++j) {
    for (Eigen::Index n = 0; n < counts_.cols(); ++n) {
      if (counts_(j, n) < 0) {
        throw std::invalid_argument("counts must be nonnegative");
      }
      trials_ += counts_(j, n);
    }
  }
}

JointCounts simulate_channel(const QuantumEnsemble& e,
                             const MeasurementBasis& basis, long long trials,
                             const RandomStream& rng) {
  if (e.dim() != basis.dim()) {
    throw std::invalid_argument("ensemble and basis dimensions differ");
  }
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");

  const int inputs = e.size();
  const int outcomes = basis.dim();
  std::vector<double> input_cdf = cumulative(e.probs().values());
  std::vector<std::vector<double>> outcome_cdf(
      static_cast<std::size_t>(inputs));
  for (int j = 0; j < inputs; ++j) {
    Vector c = basis.matrix().adjoint() * e.state(j).amplitudes();
    std::vector<double> born(static_cast<std::size_t>(outcomes));
    for (int n = 0; n < outcomes; ++n) {
      born[static_cast<std::size_t>(n)] = std::norm(c(n));
    }
    outcome_cdf[static_cast<std::size_t>(j)] = cumulative(born);
  }

  int blocks = block_count(trials);
  std::function<CountMatrix(int)> block_fn = [&](int b) {
    RandomStream stream = rng.substream(static_cast<std::uint64_t>(b));
    long long lo = block_offset(trials, blocks, b);
    long long hi = block_offset(trials, blocks, b + 1);
    CountMatrix local = CountMatrix::Zero(inputs, outcomes);
    for (long long t = lo; t < hi; ++t) {
      int j = draw_index(input_cdf, stream.uniform());
      int n = draw_index(outcome_cdf[static_cast<std::size_t>(j)],
                         stream.uniform());
      local(j, n) += 1;
    }
    return local;
  };
  std::vector<CountMatrix> parts = run_blocks<CountMatrix>(blocks, block_fn);

  CountMatrix total = CountMatrix::Zero(inputs, outcomes);
  for (const CountMatrix& part : parts) total += part;
  return JointCounts(std::move(total));
}

Eigen::MatrixXd exact_joint(const QuantumEnsemble& e,
                            const MeasurementBasis& basis) {
  if (e.dim() != basis.dim()) {
    throw std::invalid_argument("ensemble and basis dimensions differ");
  }
  Eigen::MatrixXd joint(e.size(), basis.dim());
  for (int j = 0; j < e.size(); ++j) {
    Vector c = basis.matrix().adjoint() * e.state(j).amplitudes();
    for (int n = 0; n < basis.dim(); ++n) {
      joint(j, n) = e.probs()[j] * std::norm(c(n));
    }
  }
  return joint;
}

double mutual_information(const JointCounts& counts) {
  if (counts.trials() == 0) {
    throw std::invalid_argument("mutual information needs at least one trial");
  }
  return mi_of(entropies_of(counts.counts(),
                            static_cast<double>(counts.trials())));
}

double mutual_information(const Eigen::MatrixXd& joint) {
  if (joint.rows() < 1 || joint.cols() < 1) {
    throw std::invalid_argument("joint distribution must be nonempty");
  }
  double total = 0.0;
  for (Eigen::Index j = 0; j < joint.rows(); ++j) {
    for (Eigen::Index n = 0; n < joint.cols(); ++n) {
      if (joint(j, n) < -NORM_TOL) {
        throw std::invalid_argument("joint probabilities must be nonnegative");
      }
      total += joint(j, n);
    }
  }
  if (std::abs(total - 1.0) > NORM_TOL) {
    throw std::invalid_argument("joint probabilities must sum to 1");
  }
  return mi_of(entropies_of(joint, total));
}

ChannelReport report_from_counts(const QuantumEnsemble& e,
                                 const JointCounts& counts) {
  if (counts.trials() == 0) {
    throw std::invalid_argument("report needs at least one trial");
  }
  EntropyTriple t =
      entropies_of(counts.counts(), static_cast<double>(counts.trials()));
  double vn = von_neumann_entropy(density_operator(e));
  return ChannelReport{mi_of(t), t.outcomes, t.joint - t.inputs,
                       t.inputs, vn,         std::nullopt};
}

ChannelReport quantum_channel_experiment(const QuantumEnsemble& e,
                                         const MeasurementBasis& basis,
                                         long long trials,
                                         const RandomStream& rng) {
  return report_from_counts(e, simulate_channel(e, basis, trials, rng));
}

ChannelReport uniform_ensemble_experiment(int dim, long long samples,
                                          const RandomStream& rng) {
  MeanInfoResult mean_info = mean_measurement_info_mc(dim, samples, rng);
  double log2_dim = std::log2(static_cast<double>(dim));
  double mc_mean = *mean_info.mc_estimate_bits;
  return ChannelReport{log2_dim - mc_mean,
                       log2_dim,
                       mc_mean,
                       std::numeric_limits<double>::infinity(),
                       log2_dim,
                       accessible_info_uniform(dim)};
}

ChannelReport classical_channel_experiment(const ClassicalEnsemble& e,
                                           long long trials,
                                           const RandomStream& rng) {
  if (trials < 0) throw std::invalid_argument("trials must be >= 0");
  double exact_info = shannon_info(e.probs());
  if (trials == 0) {
    return ChannelReport{exact_info, exact_info, 0.0,
                         exact_info, exact_info, exact_info};
  }

  const int cells = e.cell_count();
  std::vector<double> input_cdf = cumulative(e.probs().values());
  int blocks = block_count(trials);
  std::function<CountMatrix(int)> block_fn = [&](int b) {
    RandomStream stream = rng.substream(static_cast<std::uint64_t>(b));
    long long lo = block_offset(trials, blocks, b);
    long long hi = block_offset(trials, blocks, b + 1);
    CountMatrix local = CountMatrix::Zero(cells, cells);
    for (long long t = lo; t < hi; ++t) {
      int j = draw_index(input_cdf, stream.uniform());
      local(j, j) += 1;
    }
    return local;
  };
  std::vector<CountMatrix> parts = run_blocks<CountMatrix>(blocks, block_fn);
  CountMatrix total = CountMatrix::Zero(cells, cells);
  for (const CountMatrix& part : parts) total += part;

  EntropyTriple t = entropies_of(total, static_cast<double>(trials));
  return ChannelReport{mi_of(t),  t.outcomes, t.joint - t.inputs,
                       t.inputs,  exact_info, exact_info};
}

}  // namespace qinfo
