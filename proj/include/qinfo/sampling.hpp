#pragma once

#include <cstdint>
#include <random>

#include "qinfo/hilbert.hpp"

namespace qinfo {

// Deterministic seeded stream: identical (seed, stream_id) reproduce the same
// sequence. substream(k) derives an independent child stream, the unit of
// work partitioning for parallel Monte Carlo. Single-owner: use one stream
// per thread, never share one concurrently.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed, std::uint64_t stream_id = 0);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }
  RandomStream substream(std::uint64_t index) const;

  // Uniform on [0, 1), 53-bit resolution.
  double uniform();

  // Standard normal via an explicit Box-Muller transform. The engine is
  // bit-exact per the standard; std::normal_distribution is not, which is why
  // the transform is spelled out here.
  double normal();

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

// Fubini-Study (unitarily invariant) uniform pure state: 2D independent
// standard normals as real/imaginary parts, normalized.
StateVector sample_pure_state(int dim, RandomStream& rng);

// Haar-distributed unitary: QR of a complex Gaussian matrix with the
// diagonal-phase correction that makes the distribution exactly Haar.
Matrix sample_unitary(int dim, RandomStream& rng);

// Columns of a Haar unitary as an ordered orthonormal basis.
MeasurementBasis sample_basis(int dim, RandomStream& rng);

}  // namespace qinfo
