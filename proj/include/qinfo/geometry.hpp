#pragma once

namespace qinfo {

// F pairs of canonical coordinates, each with accessible phase-space area
// area_per_pair and finest cell area resolution_per_pair (same units; only
// the ratio enters any count).
struct PhaseSpaceSpec {
  PhaseSpaceSpec(int dof, double area_per_pair, double resolution_per_pair);

  int dof;
  double area_per_pair;
  double resolution_per_pair;
};

// Resolution sphere in projective space: dimension D and angular radius
// resolution_angle in (0, pi/2].
struct QuantumResolutionSpec {
  QuantumResolutionSpec(int dim, double resolution_angle);

  int dim;
  double resolution_angle;

  // log2(phi^-2), the preparation bits carried per probability amplitude.
  double bits_per_amplitude() const;
};

// Area of the unit (2D-3)-sphere, 2 pi^(D-1) / (D-2)!, via log-gamma. D >= 2.
double sphere_area(int dim);

// Total volume of projective space, pi^(D-1) / (D-1)!, via log-gamma. D >= 1.
double projective_volume(int dim);

// Volume of a resolution sphere, (sin phi)^(2(D-1)) * projective_volume(D).
// Exact sine form; the small-angle count lives in quantum_microstate_bits.
double resolution_volume(const QuantumResolutionSpec& spec);

// resolution_volume / projective_volume = (sin phi)^(2(D-1)), the fraction of
// projective space within angle phi of any fixed state. Also the CDF of the
// angle to a fiducial under the uniform measure.
double resolution_fraction(const QuantumResolutionSpec& spec);

// log2 of the small-angle microstate count phi^(-2(D-1)), i.e.
// (D-1) * log2(phi^-2) bits. Kept in log space; the raw count overflows for
// modest D.
double quantum_microstate_bits(const QuantumResolutionSpec& spec);

// log2 of the cell count (area/resolution)^F = F * log2(area/resolution).
double classical_microstate_bits(const PhaseSpaceSpec& spec);

// log2 of the classically distinguishable alternatives (log2 D) next to the
// log2 of the state-vector count at the given amplitude resolution.
// degenerate_equality marks the one boundary where they coincide:
// D = 2 at one bit per amplitude.
struct CountComparison {
  double classical_bits;
  double quantum_bits;
  bool degenerate_equality;
};

CountComparison classical_vs_quantum_counts(int dim, double bits_per_amplitude);

}  // namespace qinfo
