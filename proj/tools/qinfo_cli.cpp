#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "qinfo/cloning.hpp"
#include "qinfo/commsim.hpp"
#include "qinfo/ensembles.hpp"
#include "qinfo/geometry.hpp"
#include "qinfo/information.hpp"
#include "qinfo/reference_checks.hpp"
#include "qinfo/sampling.hpp"
#include "qinfo/serialization.hpp"
#include "qinfo/subsystems.hpp"

namespace {

using qinfo::Json;

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

// Flat object as key,value rows; keys in the object's (sorted) order.
std::string scalar_csv(const Json& obj) {
  std::ostringstream out;
  out << "key,value\n";
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    const Json& v = it.value();
    std::string val = v.is_string() ? v.get<std::string>() : v.dump();
    out << it.key() << ',' << csv_quote(val) << '\n';
  }
  return out.str();
}

Json load_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open input file: " + path);
  return Json::parse(f);
}

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(output_path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file: " + output_path);
  f << text;
}

void emit_json(const Json& j, const std::string& output_path) {
  emit(j.dump(2) + "\n", output_path);
}

double r12(double x) { return qinfo::round_sig(x, 12); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum information quantities, channel experiments, and "
               "built-in verification tables"};
  app.require_subcommand(1);

  std::string format = "json";
  std::string output_path;
  std::uint64_t seed = 42;
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--output", output_path, "write to file instead of stdout");
  app.add_option("--seed", seed, "random seed for stochastic subcommands");

  auto* volumes = app.add_subcommand(
      "volumes", "projective-space volume, sphere area, resolution volume");
  volumes->fallthrough();
  int vol_dim = 2;
  double vol_phi = 0.0;
  volumes->add_option("--dim", vol_dim, "Hilbert-space dimension")->required();
  auto* vol_phi_opt =
      volumes->add_option("--phi", vol_phi, "resolution angle in radians");

  auto* micro = app.add_subcommand(
      "microstates", "distinguishable-alternative counts, in bits");
  micro->fallthrough();
  int micro_dim = 2;
  double micro_phi = 0.0;
  bool micro_classical = false;
  int micro_dof = 1;
  double micro_ratio = 1.0;
  auto* micro_dim_opt = micro->add_option("--dim", micro_dim);
  auto* micro_phi_opt = micro->add_option("--phi", micro_phi);
  micro->add_flag("--classical", micro_classical,
                  "count phase-space cells instead of state vectors");
  auto* micro_dof_opt = micro->add_option("--dof", micro_dof);
  auto* micro_ratio_opt = micro->add_option(
      "--area-ratio", micro_ratio, "accessible area over finest cell area");

  auto* entropy = app.add_subcommand(
      "entropy", "preparation information and missing information");
  entropy->fallthrough();
  std::string entropy_path;
  entropy->add_option("--ensemble", entropy_path, "ensemble JSON file")
      ->required();

  auto* avg = app.add_subcommand(
      "avg-info", "mean per-state measurement information, uniform ensemble");
  avg->fallthrough();
  int avg_dim = 2;
  bool avg_mc = false;
  long long avg_samples = 100000;
  avg->add_option("--dim", avg_dim)->required();
  avg->add_flag("--mc", avg_mc, "Monte Carlo estimate instead of closed form");
  avg->add_option("--samples", avg_samples);

  auto* acc = app.add_subcommand(
      "accessible", "accessible information of the uniform ensemble");
  acc->fallthrough();
  int acc_dim = 2;
  acc->add_option("--dim", acc_dim)->required();

  auto* comm = app.add_subcommand(
      "commsim", "prepare-and-measure channel experiment from a JSON config");
  comm->fallthrough();
  std::string comm_config;
  comm->add_option("--config", comm_config, "experiment config JSON file")
      ->required();

  auto* clone = app.add_subcommand(
      "clone-check", "pairwise-overlap clonability criterion");
  clone->fallthrough();
  std::string clone_path;
  int clone_copies = 1;
  bool clone_apparatus = false;
  clone->add_option("--ensemble", clone_path, "ensemble JSON file")
      ->required();
  clone->add_option("--copies", clone_copies, "extra copies requested");
  clone->add_flag("--apparatus", clone_apparatus,
                  "model an ancillary apparatus explicitly");

  auto* schmidt = app.add_subcommand(
      "schmidt", "biorthogonal decomposition of a bipartite pure state");
  schmidt->fallthrough();
  std::string schmidt_path;
  std::string schmidt_dims;
  schmidt->add_option("--state", schmidt_path, "state JSON file")->required();
  schmidt->add_option("--dims", schmidt_dims, "subsystem dims as 'a,b'")
      ->required();

  auto* table = app.add_subcommand(
      "paper-table", "run every built-in verification and report pass/fail");
  table->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (volumes->parsed()) {
      Json out{{"dim", vol_dim},
               {"projective_volume", r12(qinfo::projective_volume(vol_dim))},
               {"sphere_area", r12(qinfo::sphere_area(vol_dim))}};
      if (*vol_phi_opt) {
        qinfo::QuantumResolutionSpec spec(vol_dim, vol_phi);
        out["phi"] = r12(vol_phi);
        out["resolution_volume"] = r12(qinfo::resolution_volume(spec));
        out["resolution_fraction"] = r12(qinfo::resolution_fraction(spec));
      }
      format == "json" ? emit_json(out, output_path)
                       : emit(scalar_csv(out), output_path);
      return 0;
    }

    if (micro->parsed()) {
      Json out;
      if (micro_classical) {
        if (!*micro_dof_opt || !*micro_ratio_opt) {
          throw std::invalid_argument(
              "--classical requires --dof and --area-ratio");
        }
        qinfo::PhaseSpaceSpec spec(micro_dof, micro_ratio, 1.0);
        out = Json{{"mode", "classical"},
                   {"dof", micro_dof},
                   {"area_ratio", r12(micro_ratio)},
                   {"microstate_bits",
                    r12(qinfo::classical_microstate_bits(spec))}};
      } else {
        if (!*micro_dim_opt || !*micro_phi_opt) {
          throw std::invalid_argument("quantum mode requires --dim and --phi");
        }
        qinfo::QuantumResolutionSpec spec(micro_dim, micro_phi);
        out = Json{{"mode", "quantum"},
                   {"dim", micro_dim},
                   {"phi", r12(micro_phi)},
                   {"bits_per_amplitude", r12(spec.bits_per_amplitude())},
                   {"microstate_bits",
                    r12(qinfo::quantum_microstate_bits(spec))}};
      }
      format == "json" ? emit_json(out, output_path)
                       : emit(scalar_csv(out), output_path);
      return 0;
    }

    if (entropy->parsed()) {
      qinfo::QuantumEnsemble e =
          qinfo::ensemble_from_json(load_json(entropy_path));
      qinfo::InfoReport r = qinfo::info_report(e, entropy_path);
      Json out{{"context", r.context},
               {"preparation_bits", r12(r.preparation_bits)},
               {"entropy_bits", r12(r.entropy_bits)},
               {"gap_bits", r12(r.gap_bits)}};
      format == "json" ? emit_json(out, output_path)
                       : emit(scalar_csv(out), output_path);
      return 0;
    }

    if (avg->parsed()) {
      Json out;
      if (avg_mc) {
        qinfo::MeanInfoResult r = qinfo::mean_measurement_info_mc(
            avg_dim, avg_samples, qinfo::RandomStream(seed, 0));
        out = qinfo::quantity_record("mean_measurement_info", avg_dim,
                                     *r.mc_estimate_bits, *r.mc_stderr_bits,
                                     "mc");
      } else {
        out = qinfo::quantity_record(
            "mean_measurement_info", avg_dim,
            qinfo::mean_measurement_info_closed(avg_dim), std::nullopt,
            "closed");
      }
      format == "json" ? emit_json(out, output_path)
                       : emit(scalar_csv(out), output_path);
      return 0;
    }

    if (acc->parsed()) {
      Json out = qinfo::quantity_record(
          "J", acc_dim, qinfo::accessible_info_uniform(acc_dim), std::nullopt,
          "closed");
      format == "json" ? emit_json(out, output_path)
                       : emit(scalar_csv(out), output_path);
      return 0;
    }

    if (comm->parsed()) {
      Json cfg = load_json(comm_config);
      std::uint64_t run_seed =
          cfg.contains("seed") ? cfg.at("seed").get<std::uint64_t>() : seed;
      long long trials = cfg.at("trials").get<long long>();
      std::string basis_kind = cfg.value("basis", std::string("computational"));
      if (basis_kind != "computational" && basis_kind != "random") {
        throw std::invalid_argument("basis must be computational or random");
      }
      const Json& ens = cfg.at("ensemble");
      if (ens.is_string()) {
        if (ens.get<std::string>() != "uniform") {
          throw std::invalid_argument(
              "ensemble must be an object or the string 'uniform'");
        }
        int dim = cfg.at("dim").get<int>();
        // Uniform-ensemble statistics are basis-independent; the experiment
        // always measures the computational basis.
        qinfo::ChannelReport r = qinfo::uniform_ensemble_experiment(
            dim, trials, qinfo::RandomStream(run_seed, 2));
        Json out = qinfo::channel_report_to_json(r);
        format == "json" ? emit_json(out, output_path)
                         : emit(scalar_csv(out), output_path);
        return 0;
      }
      qinfo::QuantumEnsemble e = qinfo::ensemble_from_json(ens);
      if (cfg.contains("dim") && cfg.at("dim").get<int>() != e.dim()) {
        throw std::invalid_argument("config dim does not match the ensemble");
      }
      qinfo::MeasurementBasis basis =
          basis_kind == "computational"
              ? qinfo::MeasurementBasis::computational(e.dim())
              : [&] {
                  qinfo::RandomStream basis_rng(run_seed, 1);
                  return qinfo::sample_basis(e.dim(), basis_rng);
                }();
      qinfo::JointCounts counts = qinfo::simulate_channel(
          e, basis, trials, qinfo::RandomStream(run_seed, 2));
      if (format == "json") {
        emit_json(qinfo::channel_report_to_json(
                      qinfo::report_from_counts(e, counts)),
                  output_path);
      } else {
        emit(qinfo::joint_counts_csv(counts), output_path);
      }
      return 0;
    }

    if (clone->parsed()) {
      qinfo::QuantumEnsemble e =
          qinfo::ensemble_from_json(load_json(clone_path));
      qinfo::ClonabilityVerdict v =
          clone_apparatus
              ? qinfo::apparatus_clonability_check(e, clone_copies)
              : qinfo::clonability_check(e, clone_copies);
      if (format == "json") {
        Json out = qinfo::verdict_to_json(v);
        out["variant"] = clone_apparatus ? "apparatus" : "plain";
        emit_json(out, output_path);
      } else {
        std::ostringstream csv;
        csv << "j,k,overlap_magnitude,violation\n";
        for (const qinfo::PairViolation& pv : v.violating_pairs) {
          csv << pv.j << ',' << pv.k << ','
              << qinfo::format_sig(pv.overlap_magnitude, 12) << ','
              << qinfo::format_sig(pv.violation, 12) << '\n';
        }
        emit(csv.str(), output_path);
      }
      return 0;
    }

    if (schmidt->parsed()) {
      auto comma = schmidt_dims.find(',');
      if (comma == std::string::npos) {
        throw std::invalid_argument("--dims must look like '3,5'");
      }
      int da = std::stoi(schmidt_dims.substr(0, comma));
      int db = std::stoi(schmidt_dims.substr(comma + 1));
      qinfo::StateVector psi =
          qinfo::state_from_json(load_json(schmidt_path));
      qinfo::BipartiteStructure s(da, db, psi);
      qinfo::SchmidtResult r = qinfo::schmidt_decompose(s);
      if (format == "json") {
        Json coeffs = Json::array();
        for (int m = 0; m < r.coefficients.size(); ++m) {
          coeffs.push_back(r12(r.coefficients[m]));
        }
        Json basis_a = Json::array();
        Json basis_b = Json::array();
        for (const qinfo::StateVector& v : r.basis_a) {
          basis_a.push_back(qinfo::state_to_json(v));
        }
        for (const qinfo::StateVector& v : r.basis_b) {
          basis_b.push_back(qinfo::state_to_json(v));
        }
        Json out{{"dim_a", da},
                 {"dim_b", db},
                 {"coefficients", coeffs},
                 {"entanglement_entropy_bits",
                  r12(qinfo::shannon_info(r.coefficients))},
                 {"basis_a", basis_a},
                 {"basis_b", basis_b}};
        emit_json(out, output_path);
      } else {
        std::ostringstream csv;
        csv << "index,coefficient\n";
        for (int m = 0; m < r.coefficients.size(); ++m) {
          csv << m << ',' << qinfo::format_sig(r.coefficients[m], 12) << '\n';
        }
        emit(csv.str(), output_path);
      }
      return 0;
    }

    if (table->parsed()) {
      std::vector<qinfo::CheckResult> results =
          qinfo::run_reference_checks(seed);
      bool all_passed = true;
      if (format == "json") {
        Json arr = Json::array();
        for (const qinfo::CheckResult& r : results) {
          all_passed = all_passed && r.passed;
          arr.push_back(Json{{"name", r.name},
                             {"passed", r.passed},
                             {"detail", r.detail}});
        }
        emit_json(arr, output_path);
      } else {
        std::ostringstream csv;
        csv << "name,passed,detail\n";
        for (const qinfo::CheckResult& r : results) {
          all_passed = all_passed && r.passed;
          csv << r.name << ',' << (r.passed ? "true" : "false") << ','
              << csv_quote(r.detail) << '\n';
        }
        emit(csv.str(), output_path);
      }
      return all_passed ? 0 : 1;
    }
  } catch (const std::runtime_error& e) {
    std::cerr << "numerical-consistency failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  }

  return 2;
}
