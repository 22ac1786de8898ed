#pragma once

#include <vector>

#include "qinfo/ensembles.hpp"
#include "qinfo/hilbert.hpp"

namespace qinfo {

// One unordered pair (j < k) failing the copier-unitarity condition
// x = x^(N+1) on the complex overlap x = <psi_j|psi_k>.
struct PairViolation {
  int j;
  int k;
  double overlap_magnitude;
  double violation;
};

// Outcome of a clonability check for N extra copies. clonable is true iff
// violating_pairs is empty; pairs appear sorted by (j, k).
struct ClonabilityVerdict {
  bool clonable;
  std::vector<PairViolation> violating_pairs;
  int copies;
};

// Gram-matrix criterion: every nonzero-probability pair must satisfy
// |x - x^(N+1)| <= tol. Pairs with overlap magnitude 1 within tol are the
// same ray and never violate; magnitude-0 pairs pass for every N.
ClonabilityVerdict clonability_check(const QuantumEnsemble& e, int copies,
                                     double tol = 1e-9);

// Copier with an ancillary apparatus: unitarity now demands
// x = x^(N+1) * a with an apparatus overlap |a| <= 1, which is solvable
// only when |x| is 0 or 1. Verdicts always match clonability_check; the
// reported violation is the infeasibility gap |x| - |x|^(N+1).
ClonabilityVerdict apparatus_clonability_check(const QuantumEnsemble& e,
                                               int copies, double tol = 1e-9);

}  // namespace qinfo
