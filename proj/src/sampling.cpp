#include "qinfo/sampling.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qinfo {

namespace {

// splitmix64 finalizer; spreads seed/stream words before they reach the engine.
std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed),
      stream_id_(stream_id),
      engine_(mix64(mix64(seed) ^ mix64(~stream_id))) {}

RandomStream RandomStream::substream(std::uint64_t index) const {
  return RandomStream(seed_, mix64(stream_id_ ^ mix64(index)));
}

double RandomStream::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RandomStream::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = 1.0 - uniform();  // (0, 1], keeps the log finite
  double u2 = uniform();
  double r = std::sqrt(-2.0 * std::log(u1));
  double a = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(a);
  have_spare_ = true;
  return r * std::cos(a);
}

StateVector sample_pure_state(int dim, RandomStream& rng) {
  if (dim < 1) {
    throw std::invalid_argument("sample_pure_state needs dim >= 1");
  }
  Vector v(dim);
  while (true) {
    for (int n = 0; n < dim; ++n) {
      double re = rng.normal();
      double im = rng.normal();
      v(n) = Complex(re, im);
    }
    if (v.norm() > 0.0) break;  // zero draw has probability zero; redraw
  }
  return StateVector::normalized(v);
}

Matrix sample_unitary(int dim, RandomStream& rng) {
  if (dim < 1) {
    throw std::invalid_argument("sample_unitary needs dim >= 1");
  }
  Matrix ginibre(dim, dim);
  for (int j = 0; j < dim; ++j) {
    for (int i = 0; i < dim; ++i) {
      ginibre(i, j) = Complex(rng.normal(), rng.normal());
    }
  }
  Eigen::HouseholderQR<Matrix> qr(ginibre);
  Matrix q = qr.householderQ();
  Vector diag = qr.matrixQR().diagonal();
  // Fix the column phases so R has positive diagonal; without this the
  // distribution is biased away from Haar.
  for (int j = 0; j < dim; ++j) {
    double mag = std::abs(diag(j));
    Complex phase = (mag > 0.0) ? diag(j) / mag : Complex(1.0, 0.0);
    q.col(j) *= phase;
  }
  return q;
}

MeasurementBasis sample_basis(int dim, RandomStream& rng) {
  return MeasurementBasis(sample_unitary(dim, rng));
}

}  // namespace qinfo
