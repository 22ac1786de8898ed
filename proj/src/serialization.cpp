#include "qinfo/serialization.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace qinfo {

double round_sig(double x, int digits) {
  if (!std::isfinite(x)) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return std::strtod(buf, nullptr);
}

std::string format_sig(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

namespace {

Json amplitudes_to_json(const Vector& amp) {
  Json arr = Json::array();
  for (Eigen::Index n = 0; n < amp.size(); ++n) {
    arr.push_back(Json::array({amp(n).real(), amp(n).imag()}));
  }
  return arr;
}

Vector amplitudes_from_json(const Json& arr, int dim) {
  if (!arr.is_array() || static_cast<int>(arr.size()) != dim) {
    throw std::invalid_argument("amplitude list does not match dim");
  }
  Vector amp(dim);
  for (int n = 0; n < dim; ++n) {
    const Json& pair = arr.at(static_cast<std::size_t>(n));
    if (!pair.is_array() || pair.size() != 2) {
      throw std::invalid_argument("each amplitude must be a [re, im] pair");
    }
    amp(n) = Complex(pair.at(0).get<double>(), pair.at(1).get<double>());
  }
  return amp;
}

}  // namespace

Json state_to_json(const StateVector& psi) {
  return Json{{"dim", psi.dim()},
              {"amplitudes", amplitudes_to_json(psi.amplitudes())}};
}

StateVector state_from_json(const Json& j) {
  int dim = j.at("dim").get<int>();
  if (dim < 1) throw std::invalid_argument("dim must be >= 1");
  return StateVector(amplitudes_from_json(j.at("amplitudes"), dim));
}

Json ensemble_to_json(const QuantumEnsemble& e) {
  Json states = Json::array();
  for (int j = 0; j < e.size(); ++j) {
    states.push_back(amplitudes_to_json(e.state(j).amplitudes()));
  }
  return Json{{"dim", e.dim()},
              {"states", states},
              {"probs", e.probs().values()}};
}

QuantumEnsemble ensemble_from_json(const Json& j) {
  int dim = j.at("dim").get<int>();
  if (dim < 1) throw std::invalid_argument("dim must be >= 1");
  const Json& states_json = j.at("states");
  if (!states_json.is_array() || states_json.empty()) {
    throw std::invalid_argument("states must be a nonempty list");
  }
  std::vector<StateVector> states;
  states.reserve(states_json.size());
  for (const Json& s : states_json) {
    states.emplace_back(amplitudes_from_json(s, dim));
  }
  ProbVector probs(j.at("probs").get<std::vector<double>>());
  return QuantumEnsemble(std::move(states), std::move(probs));
}

Json quantity_record(const std::string& quantity, int dim, double value_bits,
                     std::optional<double> stderr_bits,
                     const std::string& method) {
  Json rec{{"quantity", quantity},
           {"dim", dim},
           {"value_bits", round_sig(value_bits, 12)},
           {"method", method}};
  if (stderr_bits) rec["stderr_bits"] = round_sig(*stderr_bits, 12);
  return rec;
}

Json finite_or_string(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return round_sig(x, 12);
}

Json channel_report_to_json(const ChannelReport& report) {
  Json rec{{"mutual_info_bits", finite_or_string(report.mutual_info_bits)},
           {"outcome_entropy_bits",
            finite_or_string(report.outcome_entropy_bits)},
           {"conditional_entropy_bits",
            finite_or_string(report.conditional_entropy_bits)},
           {"preparation_bits", finite_or_string(report.preparation_bits)},
           {"vn_entropy_bits", finite_or_string(report.vn_entropy_bits)}};
  if (report.accessible_closed_bits) {
    rec["accessible_closed_bits"] =
        finite_or_string(*report.accessible_closed_bits);
  }
  return rec;
}

Json verdict_to_json(const ClonabilityVerdict& verdict) {
  Json pairs = Json::array();
  for (const PairViolation& pv : verdict.violating_pairs) {
    pairs.push_back(Json{{"j", pv.j},
                         {"k", pv.k},
                         {"overlap_magnitude",
                          round_sig(pv.overlap_magnitude, 12)},
                         {"violation", round_sig(pv.violation, 12)}});
  }
  return Json{{"clonable", verdict.clonable},
              {"copies", verdict.copies},
              {"violating_pairs", pairs}};
}

std::string joint_counts_csv(const JointCounts& counts) {
  std::ostringstream out;
  out << "input,outcome,count\n";
  for (int j = 0; j < counts.rows(); ++j) {
    for (int n = 0; n < counts.cols(); ++n) {
      out << j << ',' << n << ',' << counts.counts()(j, n) << '\n';
    }
  }
  return out.str();
}

}  // namespace qinfo
