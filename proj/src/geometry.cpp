#include "qinfo/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qinfo {

namespace {

constexpr double PI = std::numbers::pi;
constexpr double HALF_PI = std::numbers::pi / 2.0;

}  // namespace

PhaseSpaceSpec::PhaseSpaceSpec(int dof_in, double area_in, double resolution_in)
    : dof(dof_in), area_per_pair(area_in), resolution_per_pair(resolution_in) {
  if (dof < 1) {
    throw std::invalid_argument("phase space needs dof >= 1");
  }
  if (!(area_per_pair > 0.0) || !(resolution_per_pair > 0.0)) {
    throw std::invalid_argument("phase-space areas must be positive");
  }
  if (resolution_per_pair > area_per_pair) {
    throw std::invalid_argument(
        "resolution cell coarser than the accessible area");
  }
}

QuantumResolutionSpec::QuantumResolutionSpec(int dim_in, double angle_in)
    : dim(dim_in), resolution_angle(angle_in) {
  if (dim < 2) {
    throw std::invalid_argument("resolution spec needs dim >= 2");
  }
  if (!(resolution_angle > 0.0) || resolution_angle > HALF_PI) {
    throw std::invalid_argument("resolution angle must lie in (0, pi/2]");
  }
}

double QuantumResolutionSpec::bits_per_amplitude() const {
  return -2.0 * std::log2(resolution_angle);
}

double sphere_area(int dim) {
  if (dim < 2) {
    throw std::invalid_argument("sphere_area needs dim >= 2, got " +
                                std::to_string(dim));
  }
  // 2 pi^(D-1) / (D-2)!
  return std::exp(std::log(2.0) + (dim - 1) * std::log(PI) -
                  std::lgamma(static_cast<double>(dim - 1)));
}

double projective_volume(int dim) {
  if (dim < 1) {
    throw std::invalid_argument("projective_volume needs dim >= 1, got " +
                                std::to_string(dim));
  }
  // pi^(D-1) / (D-1)!
  return std::exp((dim - 1) * std::log(PI) -
                  std::lgamma(static_cast<double>(dim)));
}

double resolution_fraction(const QuantumResolutionSpec& spec) {
  return std::pow(std::sin(spec.resolution_angle), 2.0 * (spec.dim - 1));
}

double resolution_volume(const QuantumResolutionSpec& spec) {
  return resolution_fraction(spec) * projective_volume(spec.dim);
}

double quantum_microstate_bits(const QuantumResolutionSpec& spec) {
  return (spec.dim - 1) * spec.bits_per_amplitude();
}

double classical_microstate_bits(const PhaseSpaceSpec& spec) {
  return spec.dof * std::log2(spec.area_per_pair / spec.resolution_per_pair);
}

CountComparison classical_vs_quantum_counts(int dim,
                                            double bits_per_amplitude) {
  if (dim < 2) {
    throw std::invalid_argument("count comparison needs dim >= 2");
  }
  if (!(bits_per_amplitude >= 1.0)) {
    throw std::invalid_argument("count comparison needs >= 1 bit/amplitude");
  }
  CountComparison out;
  out.classical_bits = std::log2(static_cast<double>(dim));
  out.quantum_bits = (dim - 1) * bits_per_amplitude;
  out.degenerate_equality = (out.quantum_bits == out.classical_bits);
  if (out.quantum_bits < out.classical_bits) {
    throw std::logic_error("quantum count fell below the classical count");
  }
  return out;
}

}  // namespace qinfo
