#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "qinfo/cloning.hpp"
#include "qinfo/commsim.hpp"
#include "qinfo/ensembles.hpp"
#include "qinfo/hilbert.hpp"

namespace qinfo {

using Json = nlohmann::json;

// Round to the given number of significant decimal digits (emission policy:
// 6 for display values, 12 where downstream tolerance checks read them).
double round_sig(double x, int digits);
std::string format_sig(double x, int digits);

// Amplitudes as [re, im] pairs: {"dim": D, "amplitudes": [[re, im], ...]}.
Json state_to_json(const StateVector& psi);
StateVector state_from_json(const Json& j);

// {"dim": D, "states": [[[re, im], ...], ...], "probs": [...]}; all
// constructor validation applies on load.
Json ensemble_to_json(const QuantumEnsemble& e);
QuantumEnsemble ensemble_from_json(const Json& j);

// {"quantity", "dim", "value_bits", "stderr_bits"?, "method"}.
Json quantity_record(const std::string& quantity, int dim, double value_bits,
                     std::optional<double> stderr_bits,
                     const std::string& method);

// Non-finite values are emitted as the strings "inf", "-inf", "nan"
// (JSON has no encoding for them).
Json finite_or_string(double x);

Json channel_report_to_json(const ChannelReport& report);

Json verdict_to_json(const ClonabilityVerdict& verdict);

// Header "input,outcome,count"; rows in row-major (input-major) order,
// zero-count cells included.
std::string joint_counts_csv(const JointCounts& counts);

}  // namespace qinfo
