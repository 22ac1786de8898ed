#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "qinfo/commsim.hpp"
#include "qinfo/ensembles.hpp"
#include "qinfo/hilbert.hpp"
#include "qinfo/sampling.hpp"
#include "qinfo/serialization.hpp"

using namespace qinfo;

TEST_CASE("significant-digit rounding") {
  CHECK(round_sig(0.7213475204444817, 6) == 0.721348);
  CHECK(round_sig(0.7213475204444817, 12) == 0.721347520444);
  CHECK(round_sig(-123456.789, 4) == -123500.0);
  CHECK(round_sig(0.0, 6) == 0.0);
  CHECK(std::isnan(round_sig(std::numeric_limits<double>::quiet_NaN(), 6)));
  CHECK(std::isinf(round_sig(std::numeric_limits<double>::infinity(), 6)));

  CHECK(format_sig(0.7213475204444817, 6) == "0.721348");
  CHECK(format_sig(150.0, 6) == "150");
}

TEST_CASE("state vectors round-trip through json") {
  RandomStream rng(42, 101);
  for (int trial = 0; trial < 20; ++trial) {
    StateVector psi = sample_pure_state(4, rng);
    Json j = state_to_json(psi);
    CHECK(j.at("dim").get<int>() == 4);
    StateVector back = state_from_json(j);
    for (int n = 0; n < 4; ++n) {
      CHECK(back.amplitude(n).real() == psi.amplitude(n).real());
      CHECK(back.amplitude(n).imag() == psi.amplitude(n).imag());
    }
  }
}

TEST_CASE("ensembles round-trip through json") {
  RandomStream rng(42, 102);
  QuantumEnsemble e = uniform_quantum_ensemble(3, 5, rng);
  Json j = ensemble_to_json(e);
  QuantumEnsemble back = ensemble_from_json(j);
  CHECK(back.dim() == 3);
  CHECK(back.size() == 5);
  for (int s = 0; s < 5; ++s) {
    CHECK(back.probs()[s] == e.probs()[s]);
    CHECK((back.state(s).amplitudes() - e.state(s).amplitudes()).norm() == 0.0);
  }
}

TEST_CASE("json loading validates the payload") {
  Json missing_dim = {{"amplitudes", Json::array()}};
  CHECK_THROWS(state_from_json(missing_dim));

  Json short_amp = {{"dim", 2}, {"amplitudes", Json::array({Json::array({1.0, 0.0})})}};
  CHECK_THROWS_AS(state_from_json(short_amp), std::invalid_argument);

  Json not_normalized = {
      {"dim", 2},
      {"amplitudes", Json::array({Json::array({1.0, 0.0}), Json::array({0.5, 0.0})})}};
  CHECK_THROWS_AS(state_from_json(not_normalized), std::invalid_argument);

  Json bad_pair = {{"dim", 1}, {"amplitudes", Json::array({Json::array({1.0})})}};
  CHECK_THROWS_AS(state_from_json(bad_pair), std::invalid_argument);

  Json bad_probs = {
      {"dim", 1},
      {"states", Json::array({Json::array({Json::array({1.0, 0.0})})})},
      {"probs", Json::array({0.5})}};
  CHECK_THROWS_AS(ensemble_from_json(bad_probs), std::invalid_argument);
}

TEST_CASE("quantity records carry rounded values") {
  Json with_se = quantity_record("mean_measurement_info", 2, 0.7213475204444817, 0.0021234567890123, "mc");
  CHECK(with_se.at("quantity") == "mean_measurement_info");
  CHECK(with_se.at("dim").get<int>() == 2);
  CHECK(with_se.at("value_bits").get<double>() == 0.721347520444);
  CHECK(with_se.at("stderr_bits").get<double>() == round_sig(0.0021234567890123, 12));
  CHECK(with_se.at("method") == "mc");

  Json closed = quantity_record("accessible_info", 3, 0.3827166333136867, {}, "closed_form");
  CHECK_FALSE(closed.contains("stderr_bits"));
  CHECK(closed.at("value_bits").get<double>() == 0.382716633314);
}

TEST_CASE("non-finite values become strings") {
  CHECK(finite_or_string(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(finite_or_string(-std::numeric_limits<double>::infinity()) == "-inf");
  CHECK(finite_or_string(std::numeric_limits<double>::quiet_NaN()) == "nan");
  CHECK(finite_or_string(1.5).get<double>() == 1.5);
}

TEST_CASE("channel reports serialize their budget") {
  ChannelReport finite{0.5, 1.0, 0.5, 1.0, 0.6008760366928561, std::nullopt};
  Json j = channel_report_to_json(finite);
  CHECK(j.at("mutual_info_bits").get<double>() == 0.5);
  CHECK(j.at("vn_entropy_bits").get<double>() == round_sig(0.6008760366928561, 12));
  CHECK_FALSE(j.contains("accessible_closed_bits"));

  ChannelReport uniform{0.28, 1.0, 0.72, std::numeric_limits<double>::infinity(), 1.0,
                        0.2786524795555183};
  Json u = channel_report_to_json(uniform);
  CHECK(u.at("preparation_bits") == "inf");
  CHECK(u.at("accessible_closed_bits").get<double>() == round_sig(0.2786524795555183, 12));
}

TEST_CASE("clonability verdicts serialize their pairs") {
  ClonabilityVerdict v{false, {{0, 1, 0.7071067811865476, 0.2071067811865475}}, 2};
  Json j = verdict_to_json(v);
  CHECK(j.at("clonable").get<bool>() == false);
  CHECK(j.at("copies").get<int>() == 2);
  REQUIRE(j.at("violating_pairs").size() == 1);
  CHECK(j.at("violating_pairs").at(0).at("j").get<int>() == 0);
  CHECK(j.at("violating_pairs").at(0).at("k").get<int>() == 1);
  CHECK(j.at("violating_pairs").at(0).at("overlap_magnitude").get<double>() ==
        round_sig(0.7071067811865476, 12));

  ClonabilityVerdict ok{true, {}, 1};
  CHECK(verdict_to_json(ok).at("violating_pairs").empty());
}

TEST_CASE("joint counts serialize as dense csv") {
  CountMatrix m(2, 2);
  m << 3, 0, 1, 4;
  CHECK(joint_counts_csv(JointCounts(m)) ==
        "input,outcome,count\n0,0,3\n0,1,0\n1,0,1\n1,1,4\n");
}
