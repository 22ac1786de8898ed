#include "qinfo/cloning.hpp"

#include <cmath>
#include <stdexcept>

namespace qinfo {

namespace {

Complex integer_power(Complex x, int exponent) {
  Complex acc(1.0, 0.0);
  for (int i = 0; i < exponent; ++i) acc *= x;
  return acc;
}

// Shared pair scan; the variants differ only in the violation functional.
template <typename ViolationFn>
ClonabilityVerdict scan_pairs(const QuantumEnsemble& e, int copies, double tol,
                              ViolationFn violation_of) {
  if (copies < 1) throw std::invalid_argument("copies must be >= 1");
  if (!(tol >= 0.0)) throw std::invalid_argument("tol must be nonnegative");

  ClonabilityVerdict verdict{true, {}, copies};
  for (int j = 0; j < e.size(); ++j) {
    if (e.probs()[j] <= 0.0) continue;
    for (int k = j + 1; k < e.size(); ++k) {
      if (e.probs()[k] <= 0.0) continue;
      Complex x = inner_product(e.state(j), e.state(k));
      double mag = std::abs(x);
      // Magnitude 1 means the two entries are the same ray; copying it is
      // trivially possible whatever N is.
      if (std::abs(mag - 1.0) <= tol) continue;
      double violation = violation_of(x, mag);
      if (violation > tol) {
        verdict.violating_pairs.push_back({j, k, mag, violation});
      }
    }
  }
  verdict.clonable = verdict.violating_pairs.empty();
  return verdict;
}

}  // namespace

ClonabilityVerdict clonability_check(const QuantumEnsemble& e, int copies,
                                     double tol) {
  return scan_pairs(e, copies, tol, [copies](Complex x, double) {
    return std::abs(x - integer_power(x, copies + 1));
  });
}

ClonabilityVerdict apparatus_clonability_check(const QuantumEnsemble& e,
                                               int copies, double tol) {
  // x = x^(N+1) a needs |a| = |x|^-N >= 1 when 0 < |x| < 1, so the best an
  // apparatus inside the unit ball can do leaves a gap |x| - |x|^(N+1).
  return scan_pairs(e, copies, tol, [copies](Complex, double mag) {
    return mag - std::pow(mag, copies + 1);
  });
}

}  // namespace qinfo
