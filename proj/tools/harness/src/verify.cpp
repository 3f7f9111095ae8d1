// Copyright 2026 The photonsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>

#include "oracles/oracles.hpp"
#include "photonsim/cv_states.hpp"
#include "photonsim/detection.hpp"
#include "photonsim/harness/experiments.hpp"
#include "photonsim/harness/suites.hpp"
#include "photonsim/interferometer.hpp"
#include "photonsim/klm.hpp"
#include "photonsim/resource.hpp"
#include "random.hpp"

namespace photonsim::harness {

namespace {

constexpr double kDeg = std::numbers::pi / 180.0;
constexpr std::uint64_t kVerifySeed = 20260;

// Runs `body` and turns an escaped exception into a failed metric, so one
// broken suite cannot hide the others.
void section(RunReport& report, const std::string& name, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report.check(name + ".exception", 1.0, 0.0, 0.0);
    report.details["exceptions"][name] = e.what();
  }
}

Eigen::VectorXcd dense_vector(const FockState& s) {
  int dim = 1;
  for (std::size_t i = 0; i < s.num_modes(); ++i) dim *= s.cutoff() + 1;
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
  for (const auto& [occ, amp] : s.terms()) v(oracle::fock_index(occ, s.cutoff())) = amp;
  return v;
}

double ket_error(const FockState& s, const oracle::Ket& k) {
  double err = 0.0;
  for (const auto& [occ, amp] : s.terms()) {
    auto it = k.find(occ);
    err = std::max(err, std::abs(amp - (it == k.end() ? Amplitude(0.0) : it->second)));
  }
  for (const auto& [occ, amp] : k) err = std::max(err, std::abs(amp - s.amplitude(occ)));
  return err;
}

double vector_error(const FockState& s, const Eigen::VectorXcd& v) {
  double err = 0.0;
  for (int n = 0; n < v.size(); ++n) err = std::max(err, std::abs(s.amplitude({n}) - v(n)));
  return err;
}

std::vector<double> photon_number_weights(const FockState& s) {
  std::vector<double> w(static_cast<std::size_t>(s.num_modes() * s.cutoff() + 1), 0.0);
  for (const auto& [occ, amp] : s.terms()) w[total_photons(occ)] += std::norm(amp);
  return w;
}

// ---- experiments at their defaults -----------------------------------------

void experiment_checks(RunReport& report) {
  for (const ExperimentDef& def : experiments()) {
    // fusion-growth tests a published number, not an oracle; its derived
    // checks live in resource_checks.
    if (def.name == "fusion-growth") continue;
    section(report, def.name, [&] {
      ExperimentConfig c;
      c.experiment = def.name;
      c.seed = kVerifySeed;
      const RunReport r = execute(c);
      for (const Metric& m : r.metrics) {
        if (m.checked()) report.metrics.push_back(Metric{def.name + "." + m.name, m.value, m.error, m.expected, m.tolerance});
      }
    });
  }
}

// ---- oracles ------------------------------------------------------------------

void oracle_checks(RunReport& report) {
  section(report, "oracle.interferometer", [&] {
    double dense_err = 0.0, perm_err = 0.0;
    for (int modes = 1; modes <= 3; ++modes) {
      for (std::uint64_t t = 0; t < 4; ++t) {
        CounterRng rng(kVerifySeed, 100 * modes + t);
        const int cutoff = 4;
        const Eigen::MatrixXcd m = random_unitary(modes, rng);
        const FockState in = random_state(modes, cutoff, cutoff, rng);
        std::vector<std::size_t> targets(modes);
        for (int i = 0; i < modes; ++i) targets[i] = i;
        const FockState out = apply_unitary(in, ModeUnitary(m), targets);
        const Eigen::VectorXcd want = oracle::fock_space_unitary(m, cutoff) * dense_vector(in);
        dense_err = std::max(dense_err, (dense_vector(out) - want).cwiseAbs().maxCoeff());
        oracle::Ket k;
        for (const auto& [occ, amp] : in.terms()) k[occ] = amp;
        perm_err = std::max(perm_err, ket_error(out, oracle::apply_linear_optics(m, k, cutoff)));
      }
    }
    report.check("oracle.dense_generator_error", dense_err, 0.0, 1e-9);
    report.check("oracle.permanent_error", perm_err, 0.0, 1e-10);
  });

  section(report, "oracle.ns_transfer", [&] {
    const NSGateSpec spec;
    Eigen::MatrixXcd phase = Eigen::MatrixXcd::Identity(3, 3);
    phase(0, 0) = std::polar(1.0, -spec.phi4 * kDeg);
    const Eigen::MatrixXcd m = oracle::beamsplitter(3, 1, 2, spec.theta1 * kDeg, spec.phi1 * kDeg) *
                               oracle::beamsplitter(3, 0, 1, spec.theta2 * kDeg, spec.phi2 * kDeg) *
                               oracle::beamsplitter(3, 1, 2, spec.theta3 * kDeg, spec.phi3 * kDeg) * phase;
    const NSCheckResult c = ns_self_check(spec);
    double perr = 0.0;
    std::array<Amplitude, 3> t{};
    for (int n = 0; n <= 2; ++n) {
      t[n] = oracle::transition_amplitude(m, {n, 1, 0}, {n, 1, 0});
      perr = std::max(perr, std::abs(c.probabilities[n] - std::norm(t[n])));
    }
    report.check("oracle.ns_probability_error", perr, 0.0, 1e-14);
    report.check("oracle.ns_sign_error", std::max(std::abs(t[1] / t[0] - 1.0), std::abs(t[2] / t[0] + 1.0)), 0.0,
                 1e-12);
  });

  section(report, "oracle.hom", [&] {
    double err = 0.0;
    for (double gamma : {0.5, 1.0, 2.0}) {
      for (int i = 0; i < 50; ++i) {
        const double tau = -6.0 + 12.0 * i / 49.0;
        err = std::max(err, std::abs(hom_coincidence_simulated(PulseShape(gamma), tau) -
                                     oracle::hom_coincidence(gamma, tau)));
      }
    }
    report.check("oracle.hom_curve_error", err, 0.0, 1e-8);
  });

  section(report, "oracle.cluster", [&] { cluster_identity_suite(report); });

  section(report, "oracle.gaussian", [&] {
    const Amplitude alpha{0.7, -0.4};
    report.check("oracle.coherent_error", vector_error(coherent_state(alpha, 30), oracle::coherent_amplitudes(alpha, 31)),
                 0.0, 1e-12);
    report.check("oracle.displace_error",
                 vector_error(displace(FockState::vacuum(1, 30), {alpha}), oracle::coherent_amplitudes(alpha, 31)), 0.0,
                 1e-10);
    const SqueezeParam s{0.4, 0.3};
    report.check("oracle.squeezed_vacuum_error",
                 vector_error(squeezed_vacuum(s, 40), oracle::squeezed_vacuum_amplitudes(s.r, s.phi, 41)), 0.0, 1e-10);
    const FockState ds = displace(squeeze(FockState::vacuum(1, 60), s), {alpha});
    Eigen::VectorXcd want = oracle::displaced_squeezed(alpha, s.r, s.phi, 31);
    report.check("oracle.displaced_squeezed_error", vector_error(ds, want), 0.0, 1e-9);
    const QuadratureMoments mom = quadrature_moments(squeezed_vacuum(s, 40));
    report.check("oracle.squeezed_covariance_error", (mom.cov - oracle::squeezed_covariance(s.r, s.phi)).cwiseAbs().maxCoeff(),
                 0.0, 1e-8);
  });

  section(report, "oracle.qq_gate", [&] {
    const SqueezeParam s1{0.3, 0.0}, s2{0.2, 0.4};
    const double theta = 0.5;
    const FockState in = tensor(squeezed_vacuum(s1, 40), squeezed_vacuum(s2, 40));
    const QuadratureMoments m = quadrature_moments(qq_gate(in, theta));
    Eigen::Matrix4d v0 = Eigen::Matrix4d::Zero();
    v0.block<2, 2>(0, 0) = oracle::squeezed_covariance(s1.r, s1.phi);
    v0.block<2, 2>(2, 2) = oracle::squeezed_covariance(s2.r, s2.phi);
    const Eigen::Matrix4d sym = oracle::qq_symplectic(theta);
    report.check("oracle.qq_covariance_error", (m.cov - sym * v0 * sym.transpose()).cwiseAbs().maxCoeff(), 0.0, 1e-6);
    report.add("oracle.qq_log_negativity", oracle::log_negativity(m.cov));
  });
}

// ---- invariants ---------------------------------------------------------------

void invariant_checks(RunReport& report) {
  section(report, "invariant.interferometer", [&] {
    double number_err = 0.0, norm_err = 0.0, unitarity = 0.0;
    long long fixed_n_violations = 0;
    for (std::uint64_t t = 0; t < 20; ++t) {
      CounterRng rng(kVerifySeed, 1000 + t);
      const int modes = 2 + static_cast<int>(t % 3);
      const ModeUnitary u(random_unitary(modes, rng));
      unitarity = std::max(
          unitarity,
          (u.matrix() * u.matrix().adjoint() - Eigen::MatrixXcd::Identity(modes, modes)).cwiseAbs().maxCoeff());
      std::vector<std::size_t> targets(modes);
      for (int i = 0; i < modes; ++i) targets[i] = i;
      const FockState in = random_state(modes, 3, 3, rng);
      const FockState out = apply_unitary(in, u, targets);
      const std::vector<double> a = photon_number_weights(in), b = photon_number_weights(out);
      for (std::size_t n = 0; n < a.size(); ++n) number_err = std::max(number_err, std::abs(a[n] - b[n]));
      norm_err = std::max(norm_err, std::abs(out.norm_squared() - 1.0));
      Occupation occ(modes, 0);
      occ[0] = 2;
      occ[modes - 1] += 1;
      if (!apply_unitary(make_fock(occ, 3), u, targets).conserves_photon_number()) ++fixed_n_violations;
    }
    for (const ModeUnitary& u : {beamsplitter(0.3, 1.1), polarising_beamsplitter(), phase_gate(0.7)}) {
      const Eigen::Index n = u.matrix().rows();
      unitarity = std::max(unitarity,
                           (u.matrix() * u.matrix().adjoint() - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff());
    }
    report.check("invariant.photon_number_distribution_error", number_err, 0.0, 1e-12);
    report.check("invariant.fixed_photon_number_violations", static_cast<double>(fixed_n_violations), 0.0, 0.0);
    report.check("invariant.mode_unitarity_error", unitarity, 0.0, 1e-12);
    report.check("invariant.interferometer_norm_error", norm_err, 0.0, 1e-12);
  });

  section(report, "invariant.cv_norm", [&] {
    double err = 0.0;
    err = std::max(err, std::abs(displace(make_fock({2}, 40), {{0.5, 0.2}}).norm_squared() - 1.0));
    err = std::max(err, std::abs(squeeze(make_fock({1}, 40), {0.3, 0.1}).norm_squared() - 1.0));
    err = std::max(err, std::abs(translate_q(coherent_state(0.4, 40), 0.6).norm_squared() - 1.0));
    err = std::max(err, std::abs(qq_gate(FockState::vacuum(2, 25), 0.2).norm_squared() - 1.0));
    for (double a : {0.5, 1.0, 2.0}) {
      err = std::max(err, std::abs(cat_state(a, CatParity::kEven, 40).norm_squared() - 1.0));
      err = std::max(err, std::abs(cat_state(a, CatParity::kOdd, 40).norm_squared() - 1.0));
    }
    report.check("invariant.cv_norm_error", err, 0.0, 1e-10);
  });

  section(report, "invariant.heralds", [&] {
    double err = 0.0;
    for (std::uint64_t t = 0; t < 10; ++t) {
      CounterRng rng(kVerifySeed, 2000 + t);
      const FockState s = random_state(3, 3, 4, rng);
      double total = 0.0;
      for (const HeraldedResult& r : enumerate_heralds(s, {1, 2})) total += r.probability();
      err = std::max(err, std::abs(total - 1.0));
    }
    // Every ancilla pattern of the NS circuit, not just the (1, 0) herald.
    const FockState ns_in = tensor(make_fock({2}, 3), make_fock({1, 0}, 3));
    double total = 0.0;
    for (const HeraldedResult& r : enumerate_heralds(apply_circuit(ns_in, ns_circuit(NSGateSpec{}, 0, 1, 2)), {1, 2})) {
      total += r.probability();
    }
    err = std::max(err, std::abs(total - 1.0));
    report.check("invariant.herald_sum_error", err, 0.0, 1e-12);
  });

  section(report, "invariant.povm", [&] {
    double err = 0.0;
    for (double eta : {0.0, 0.3, 0.5, 0.9, 1.0}) {
      for (double dark : {0.0, 1e-3, 0.2}) {
        const BucketPovm b = bucket_povm({eta, dark, DetectorModel::Kind::kBucket}, 10);
        err = std::max(err, ((b.no_click + b.click).array() - 1.0).abs().maxCoeff());
        const DetectorModel pnr{eta, dark, DetectorModel::Kind::kPNR};
        Eigen::VectorXd sum = Eigen::VectorXd::Zero(11);
        for (int k = 0; k < pnr_outcome_count(pnr, 10); ++k) sum += pnr_povm(pnr, k, 10);
        err = std::max(err, (sum.array() - 1.0).abs().maxCoeff());
      }
    }
    report.check("invariant.povm_completeness_error", err, 0.0, 1e-12);
  });

  section(report, "invariant.fusion", [&] { fusion_suite(report); });
  section(report, "invariant.graph_rules", [&] { graph_rule_suite(report); });

  section(report, "invariant.grid_duality", [&] {
    const QuadratureGrid grid{-12.0, 12.0, 4001};
    double err = 0.0;
    for (const FockState& s :
         {cat_state(1.5, CatParity::kOdd, 30), squeezed_vacuum({0.5, 0.3}, 30), coherent_state({1.0, 1.0}, 30)}) {
      const FockState back = fock_from_wavefunction(to_grid(s, grid).psi, grid, 30);
      for (int n = 0; n <= 30; ++n) err = std::max(err, std::abs(back.amplitude({n}) - s.amplitude({n})));
    }
    report.check("invariant.grid_round_trip_error", err, 0.0, 1e-8);
  });
}

// ---- resources ------------------------------------------------------------------

void resource_checks(RunReport& report) {
  section(report, "resource", [&] {
    const ResourceStatistics sure = grow_linear_cluster(13, GrowthStrategy::parse("recycle", 1.0), 200, kVerifySeed);
    report.check("resource.certain_fusion_cost", sure.mean_cost, 1.0, 1e-12);
    report.check("resource.certain_fusion_cluster3_cost", sure.mean_cluster3_cost, 2.0, 1e-12);
    // With recycling each added qubit costs 2 x 4 - 1 Bell pairs once the
    // chain is long enough that it never dies.
    const ResourceStatistics r = grow_linear_cluster(30, GrowthStrategy{}, 20000, kVerifySeed, 1, 20);
    report.check("resource.recycle_cost", r.mean_cost, 7.0, 3.0 * r.stderr_cost).error = r.stderr_cost;
    report.check("resource.cluster3_cost", r.mean_cluster3_cost, 4.0, 3.0 * r.stderr_cluster3_cost).error =
        r.stderr_cluster3_cost;
    const ResourceStatistics d = grow_linear_cluster(30, GrowthStrategy::parse("discard"), 20000, kVerifySeed, 1, 20);
    report.check("resource.discard_cost", d.mean_cost, 8.0, 3.0 * d.stderr_cost).error = d.stderr_cost;
  });
}

// ---- determinism and forced failures --------------------------------------------

void determinism_checks(RunReport& report) {
  section(report, "determinism", [&] {
    long long mismatches = 0, compared = 0;
    std::vector<ExperimentConfig> configs;
    for (const char* name : {"hom-dip", "ns-gate", "cz-gate", "mbqc-cnot", "cat-overlap", "gbs-herald", "detector-povm"}) {
      ExperimentConfig c;
      c.experiment = name;
      c.seed = 7;
      configs.push_back(c);
    }
    ExperimentConfig growth;
    growth.experiment = "fusion-growth";
    growth.seed = 7;
    growth.set("trials", "4000");
    configs.push_back(growth);
    for (ExperimentConfig& c : configs) {
      for (OutputFormat f : {OutputFormat::kCsv, OutputFormat::kJson}) {
        c.format = f;
        ++compared;
        if (execute(c).serialize(f) != execute(c).serialize(f)) ++mismatches;
      }
    }
    report.check("determinism.rerun_mismatches", static_cast<double>(mismatches), 0.0, 0.0);
    report.add("determinism.outputs_compared", static_cast<double>(compared));
    // Worker count must not change a Monte Carlo result.
    const ResourceStatistics a = grow_linear_cluster(30, GrowthStrategy{}, 4000, 11, 1, 20);
    const ResourceStatistics b = grow_linear_cluster(30, GrowthStrategy{}, 4000, 11, 4, 20);
    report.check("determinism.worker_count_mismatch", a.csv_row() == b.csv_row() ? 0.0 : 1.0, 0.0, 0.0);
  });
}

void diagnostic_checks(RunReport& report) {
  section(report, "diagnostic.ns_perturbation", [&] {
    ExperimentConfig c;
    c.experiment = "ns-gate";
    c.set("theta2", "60");
    const RunReport r = execute(c);
    const Metric* m = r.find("self_check_probability_error");
    const bool caught = !r.passed() && m && !m->passed();
    report.check("diagnostic.ns_theta2_60_detected", caught ? 1.0 : 0.0, 1.0, 0.0);
    if (m) report.add("diagnostic.ns_theta2_60_probability_error", m->value);
  });
  section(report, "diagnostic.leakage", [&] {
    int caught = 0;
    auto expect = [&](auto&& f) {
      try {
        f();
      } catch (const LeakageError&) {
        ++caught;
      } catch (const CutoffViolation&) {
        ++caught;
      } catch (const GridResolutionError&) {
        ++caught;
      }
    };
    expect([] { displace(FockState::vacuum(1, 5), {{3.0, 0.0}}); });
    expect([] { squeeze(FockState::vacuum(1, 4), {1.5, 0.0}); });
    expect([] { coherent_state(3.0, 6); });
    expect([] { gkp_state(GKPParams{}, 0, {1.2, 0.0}, 120); });
    expect([] { apply_unitary(make_fock({1, 1}, 1), beamsplitter(std::numbers::pi / 4), {0, 1}); });
    expect([] {
      gkp_kraus_update(to_grid(coherent_state(0.5, 20), QuadratureGrid{-8, 8, 101}), 1.0, KrausParams{});
    });
    report.check("diagnostic.forced_errors_detected", caught, 6.0, 0.0);
  });
}

}  // namespace

RunReport verify() {
  const auto t0 = std::chrono::steady_clock::now();
  RunReport report;
  report.experiment = "verify";
  report.config = {{"experiment", "verify"}, {"seed", std::to_string(kVerifySeed)}};
  experiment_checks(report);
  oracle_checks(report);
  invariant_checks(report);
  resource_checks(report);
  determinism_checks(report);
  diagnostic_checks(report);
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

}  // namespace photonsim::harness
