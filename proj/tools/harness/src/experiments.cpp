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

#include "photonsim/harness/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>

#include "oracles/oracles.hpp"
#include "photonsim/cv_states.hpp"
#include "photonsim/detection.hpp"
#include "photonsim/interferometer.hpp"
#include "photonsim/klm.hpp"
#include "photonsim/mbqc.hpp"
#include "photonsim/resource.hpp"
#include "random.hpp"

namespace photonsim::harness {

namespace {

using nlohmann::ordered_json;

ParamSpec num(std::string key, double def, std::string help) {
  return {std::move(key), ParamType::kDouble, format_double(def), std::move(help)};
}
ParamSpec integer(std::string key, long long def, std::string help) {
  return {std::move(key), ParamType::kInt, std::to_string(def), std::move(help)};
}

// ---- KLM ------------------------------------------------------------------

std::vector<ParamSpec> ns_params() {
  const NSGateSpec d;
  return {num("theta1", d.theta1, "first beamsplitter angle, degrees"),
          num("theta2", d.theta2, "middle beamsplitter angle, degrees"),
          num("theta3", d.theta3, "last beamsplitter angle, degrees"),
          num("phi1", d.phi1, "first beamsplitter phase, degrees"),
          num("phi2", d.phi2, "middle beamsplitter phase, degrees"),
          num("phi3", d.phi3, "last beamsplitter phase, degrees"),
          num("phi4", d.phi4, "signal phase shift, degrees")};
}

NSGateSpec ns_spec(const ResolvedConfig& c) {
  NSGateSpec s;
  s.theta1 = c.number("theta1");
  s.theta2 = c.number("theta2");
  s.theta3 = c.number("theta3");
  s.phi1 = c.number("phi1");
  s.phi2 = c.number("phi2");
  s.phi3 = c.number("phi3");
  s.phi4 = c.number("phi4");
  return s;
}

// Reports the self-check; false means the gate cannot be built.
bool ns_check(const NSGateSpec& spec, RunReport& report) {
  const NSCheckResult chk = ns_self_check(spec);
  report.check("self_check_probability_error", chk.max_probability_error, 0.0, 1e-6);
  report.check("self_check_sign_error", chk.max_sign_error, 0.0, 1e-6);
  report.details["self_check"] = {{"ok", chk.ok},
                                  {"probabilities", chk.probabilities},
                                  {"message", chk.message}};
  return chk.ok;
}

void ns_gate_experiment(const ResolvedConfig& c, RunReport& report) {
  const NSGateSpec spec = ns_spec(c);
  if (!ns_check(spec, report)) return;
  const NSGate gate(spec);
  report.table.columns = {"input", "probability", "fidelity"};
  double worst_p = 0.25, min_f = 1.0;
  for (long long i = 0; i < c.integer("inputs"); ++i) {
    CounterRng rng(c.seed(), static_cast<std::uint64_t>(i));
    const std::vector<Amplitude> a = random_amplitudes(3, rng);
    FockState in(1, 2), want(1, 2);
    for (int n = 0; n < 3; ++n) {
      in.set({n}, a[n]);
      want.set({n}, n == 2 ? -a[n] : a[n]);
    }
    const HeraldedResult r = gate.apply(in);
    const double f = fidelity(r.state(), want);
    if (std::abs(r.probability() - 0.25) > std::abs(worst_p - 0.25)) worst_p = r.probability();
    min_f = std::min(min_f, f);
    report.table.add_row({i, r.probability(), f});
  }
  report.check("herald_probability", worst_p, 0.25, 1e-9);
  report.check("min_fidelity", min_f, 1.0, 1e-9);
}

Eigen::Vector4cd to_vec4(const std::vector<Amplitude>& a) {
  Eigen::Vector4cd v;
  for (int i = 0; i < 4; ++i) v(i) = a[i];
  return v;
}

void cz_gate_experiment(const ResolvedConfig& c, RunReport& report) {
  const NSGateSpec spec = ns_spec(c);
  if (!ns_check(spec, report)) return;
  const CZGate gate(spec);
  const Eigen::Matrix4cd cz = oracle::logical_cz();
  double worst_p = 1.0 / 16.0, basis_f = 1.0, super_f = 1.0;
  auto track = [&](double p) {
    if (std::abs(p - 1.0 / 16.0) > std::abs(worst_p - 1.0 / 16.0)) worst_p = p;
  };
  report.table.columns = {"input", "probability", "fidelity"};
  for (int b = 0; b < 4; ++b) {
    const DualRailRegister reg = DualRailRegister::from_bits({b >> 1, b & 1});
    const HeraldedResult r = gate.apply(reg, 0, 1);
    track(r.probability());
    const double f = std::norm(reg.with_state(r.state()).logical_amplitudes()[b]);
    basis_f = std::min(basis_f, f);
    report.table.add_row({"basis" + std::to_string(b >> 1) + std::to_string(b & 1), r.probability(), f});
  }
  for (long long i = 0; i < c.integer("superpositions"); ++i) {
    CounterRng rng(c.seed(), static_cast<std::uint64_t>(i));
    const DualRailRegister reg = DualRailRegister::from_logical(random_amplitudes(4, rng), 2);
    const HeraldedResult r = gate.apply(reg, 0, 1);
    track(r.probability());
    const Eigen::Vector4cd want = cz * to_vec4(reg.logical_amplitudes());
    const double f = std::norm(want.dot(to_vec4(reg.with_state(r.state()).logical_amplitudes())));
    super_f = std::min(super_f, f);
    report.table.add_row({"random" + std::to_string(i), r.probability(), f});
  }
  // The |11> sign relative to |00> on the uniform superposition.
  const DualRailRegister plus = DualRailRegister::from_logical(std::vector<Amplitude>(4, 0.5), 2);
  const std::vector<Amplitude> a = plus.with_state(gate.apply(plus, 0, 1).state()).logical_amplitudes();
  report.check("herald_probability", worst_p, 1.0 / 16.0, 1e-9);
  report.check("basis_fidelity_min", basis_f, 1.0, 1e-9);
  report.check("superposition_fidelity_min", super_f, 1.0, 1e-9);
  report.check("phase_11_over_00", std::real(a[3] / a[0]), -1.0, 1e-9);
}

// ---- HOM ------------------------------------------------------------------

void hom_dip_experiment(const ResolvedConfig& c, RunReport& report) {
  const PulseShape pulse(c.number("gamma"));
  const long long points = c.integer("points");
  const double tau_max = c.number("tau_max");
  if (points < 2) throw ConfigurationError("points must be at least 2");
  if (!(tau_max > 0)) throw ConfigurationError("tau_max must be positive");
  report.table.columns = {"tau", "coincidence", "closed_form"};
  double worst = 0.0;
  for (long long i = 0; i < points; ++i) {
    const double tau = -tau_max + 2.0 * tau_max * static_cast<double>(i) / static_cast<double>(points - 1);
    const double sim = hom_coincidence_simulated(pulse, tau);
    const double closed = 0.5 * (1.0 - std::exp(-pulse.gamma * std::abs(tau)));
    worst = std::max(worst, std::abs(sim - closed));
    report.table.add_row({tau, sim, closed});
  }
  report.check("coincidence_at_zero", hom_coincidence_simulated(pulse, 0.0), 0.0, 1e-10);
  report.check("max_curve_error", worst, 0.0, 1e-8);
  report.add("coincidence_far", hom_coincidence_simulated(pulse, 50.0 / pulse.gamma));
}

// ---- MBQC -----------------------------------------------------------------

void mbqc_cnot_experiment(const ResolvedConfig& c, RunReport& report) {
  report.table.columns = {"i1", "i4", "s1", "s2", "q3", "q4", "probability"};
  long long mismatches = 0, sampled_bad = 0, branches = 0;
  double prob_err = 0.0;
  for (int i1 = 0; i1 < 2; ++i1) {
    for (int i4 = 0; i4 < 2; ++i4) {
      double total = 0.0;
      for (const CnotBranch& b : mbqc_cnot_branches(i1, i4)) {
        ++branches;
        total += b.probability;
        if (b.q3 != (i1 ^ i4) || b.q4 != i4) ++mismatches;
        report.table.add_row({(long long)i1, (long long)i4, (long long)b.s1, (long long)b.s2,
                              (long long)b.q3, (long long)b.q4, b.probability});
      }
      prob_err = std::max(prob_err, std::abs(total - 1.0));
      for (long long t = 0; t < c.integer("samples"); ++t) {
        CounterRng rng(c.seed(), static_cast<std::uint64_t>(t * 4 + i1 * 2 + i4));
        const CnotResult r = mbqc_cnot(i1, i4, rng);
        if (!r.verified || r.q3 != (i1 ^ i4) || r.q4 != i4) ++sampled_bad;
      }
    }
  }
  report.check("branches", static_cast<double>(branches), 16.0, 0.0);
  report.check("branch_mismatches", static_cast<double>(mismatches), 0.0, 0.0);
  report.check("branch_probability_error", prob_err, 0.0, 1e-12);
  report.check("sampled_mismatches", static_cast<double>(sampled_bad), 0.0, 0.0);
}

// ---- resources ------------------------------------------------------------

void fusion_growth_experiment(const ResolvedConfig& c, RunReport& report) {
  const GrowthStrategy strategy = GrowthStrategy::parse(c.text("strategy"), c.number("success_probability"));
  const long long trials = c.integer("trials");
  const long long workers = c.integer("workers");
  if (trials < 2) throw ConfigurationError("trials must be at least 2");
  if (workers < 1) throw ConfigurationError("workers must be at least 1");
  const ResourceStatistics s =
      grow_linear_cluster(static_cast<int>(c.integer("target_length")), strategy,
                          static_cast<std::uint64_t>(trials), c.seed(), static_cast<unsigned>(workers),
                          static_cast<int>(c.integer("seed_length")));
  report.check("mean_cost", s.mean_cost, c.number("expected_cost"), 3.0 * s.stderr_cost).error = s.stderr_cost;
  report.check("cluster3_cost", s.mean_cluster3_cost, c.number("expected_cluster3_cost"),
               3.0 * s.stderr_cluster3_cost)
      .error = s.stderr_cluster3_cost;
  report.add("bell_pairs", static_cast<double>(s.bell_pairs));
  report.add("added_qubits", static_cast<double>(s.added_qubits));
  report.add("cluster3_built", static_cast<double>(s.cluster3_built));
  report.details["csv_header"] = ResourceStatistics::csv_header();
  report.details["csv_row"] = s.csv_row();
}

// ---- CV states ------------------------------------------------------------

void cat_overlap_experiment(const ResolvedConfig& c, RunReport& report) {
  const int cutoff = static_cast<int>(c.integer("cutoff"));
  report.table.columns = {"alpha", "overlap_sq", "closed_form", "even_odd_weight", "odd_even_weight"};
  double worst = 0.0, wrong = 0.0;
  for (double alpha : c.numbers("alphas")) {
    const double ov = std::norm(inner(coherent_state(alpha, cutoff), coherent_state(-alpha, cutoff)));
    const double closed = std::exp(-4.0 * alpha * alpha);
    double w[2] = {0.0, 0.0};
    for (int par = 0; par < 2; ++par) {
      const FockState cat = cat_state(alpha, par ? CatParity::kOdd : CatParity::kEven, cutoff);
      for (const auto& [occ, amp] : cat.terms()) {
        if (occ[0] % 2 != par) w[par] += std::norm(amp);
      }
    }
    worst = std::max(worst, std::abs(ov - closed));
    wrong = std::max({wrong, w[0], w[1]});
    report.table.add_row({alpha, ov, closed, w[0], w[1]});
  }
  report.check("max_overlap_error", worst, 0.0, 1e-10);
  report.check("wrong_parity_weight", wrong, 0.0, 0.0);
}

GKPParams gkp_params(const ResolvedConfig& c) {
  GKPParams p;
  p.grid_spacing = c.number("grid_spacing");
  p.delta = kX1PerQ * c.number("delta_x1");
  p.s_max = static_cast<int>(c.integer("s_max"));
  p.validate();
  return p;
}

std::vector<std::size_t> local_maxima(const std::vector<double>& f, double floor) {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i + 1 < f.size(); ++i) {
    if (f[i] > floor && f[i] >= f[i - 1] && f[i] > f[i + 1]) out.push_back(i);
  }
  return out;
}

void gkp_density_experiment(const ResolvedConfig& c, RunReport& report) {
  const GKPParams p = gkp_params(c);
  const SqueezeParam base{c.number("r"), c.number("squeeze_phi")};
  const int cutoff = static_cast<int>(c.integer("cutoff"));
  const double half = (2 * p.s_max + 1.5) * p.grid_spacing;
  const QuadratureGrid grid{-half, half, static_cast<std::size_t>(c.integer("points"))};
  grid.validate();
  std::vector<double> dens[2];
  FockState states[2];
  for (int logical = 0; logical < 2; ++logical) {
    const GKPState g = gkp_state(p, logical, base, cutoff);
    states[logical] = g.state;
    const std::vector<double> d = to_grid(g.state, grid).density();
    const double top = *std::max_element(d.begin(), d.end());
    double offset = 0.0, ratio = 0.0;
    for (int s = -p.s_max; s <= p.s_max; ++s) {
      const double x = (2 * s + logical) * p.grid_spacing;
      std::size_t best = 0;
      double best_d = -1.0;
      for (std::size_t i = 0; i < d.size(); ++i) {
        if (std::abs(grid.at(i) - x) < p.grid_spacing / 2 && d[i] > best_d) {
          best = i;
          best_d = d[i];
        }
      }
      offset = std::max(offset, std::abs(grid.at(best) - x));
      const double y = x + p.grid_spacing;
      const long long j = std::llround((y - grid.q_min) / grid.step());
      if (j >= 0 && j < static_cast<long long>(d.size())) ratio = std::max(ratio, d[j] / top);
    }
    const std::string tag = "_" + std::to_string(logical);
    report.check("peak_offset" + tag, offset, 0.0, grid.step());
    report.check("wrong_parity_ratio" + tag, ratio, 0.0, 1e-6);
    report.check("peak_count" + tag, static_cast<double>(local_maxima(d, 0.05 * top).size()),
                 2.0 * p.s_max + 1, 0.0);
    report.check("leaked" + tag, g.leaked, 0.0, kCvLeakageTolerance);
    report.add("lattice_tail" + tag, g.lattice_tail);
    dens[logical] = d;
  }
  report.add("overlap", std::abs(inner(states[0], states[1])));
  // The stated correctable region: |dq| < a/2 and |dp| < pi/(n a).
  const double a = p.grid_spacing, pb = std::numbers::pi / (p.n_dim * a);
  const struct {
    double dq, dp;
    bool want;
  } cases[] = {{0, 0, true},          {a / 2, 0, false},         {-a / 2, 0, false},
               {0.4 * a, 0.9 * pb, true}, {0, pb, false},        {-0.49 * a, -0.99 * pb, true},
               {0.51 * a, 0, false},  {0, -1.01 * pb, false}};
  long long bad = 0;
  for (const auto& k : cases) bad += shift_correctable(k.dq, k.dp, p) != k.want;
  report.check("shift_correctable_mismatches", static_cast<double>(bad), 0.0, 0.0);
  report.table.columns = {"q", "density_0", "density_1"};
  for (std::size_t i = 0; i < grid.points; ++i) report.table.add_row({grid.at(i), dens[0][i], dens[1][i]});
}

void gkp_kraus_experiment(const ResolvedConfig& c, RunReport& report) {
  const KrausParams k{c.number("theta"), c.number("phi"), c.number("r")};
  const double q_max = c.number("q_max");
  const QuadratureGrid grid{-q_max, q_max, static_cast<std::size_t>(c.integer("points"))};
  grid.validate();
  const FockState in =
      squeezed_vacuum({c.number("input_r"), c.number("input_phi")}, static_cast<int>(c.integer("input_cutoff")));
  const GridState g = to_grid(in, grid);
  report.check("input_norm", g.norm_squared(), 1.0, 1e-6);
  const double span = 2.0 * std::abs(k.r) + c.number("y_margin");
  report.check("total_probability",
               kraus_total_probability(g, k, -span, span, static_cast<std::size_t>(c.integer("y_points"))), 1.0,
               1e-6);
  const KrausResult r = gkp_kraus_update(g, c.number("y"), k);
  report.add("outcome_density", r.density);
  report.check("conditional_norm", r.state.norm_squared(), 1.0, 1e-12);
  const std::vector<double> d = r.state.density();
  const double top = *std::max_element(d.begin(), d.end());
  const std::vector<std::size_t> peaks = local_maxima(d, 0.01 * top);
  double off = 0.0;
  for (std::size_t i : peaks) {
    const double idx = grid.at(i) * k.theta / (2 * std::numbers::pi);
    off = std::max(off, std::abs(idx - std::round(idx)));
  }
  report.add("comb_peaks", static_cast<double>(peaks.size()));
  report.add("comb_max_index_offset", off);
  report.table.columns = {"q", "density"};
  for (std::size_t i = 0; i < grid.points; ++i) report.table.add_row({grid.at(i), d[i]});
}

// ---- GBS ------------------------------------------------------------------

std::vector<ParamSpec> gbs_params() {
  const GBSSchemeSpec d = GBSSchemeSpec::defaults();
  std::vector<ParamSpec> p{integer("cutoff", d.cutoff, "Fock cutoff per mode"),
                           integer("herald_1", d.herald[0], "photon count heralded on mode 1"),
                           integer("herald_2", d.herald[1], "photon count heralded on mode 2")};
  for (int m = 0; m < 3; ++m) {
    const std::string i = std::to_string(m);
    p.push_back(num("r" + i, d.squeeze[m].r, "squeezing magnitude, mode " + i));
    p.push_back(num("squeeze_phi" + i, d.squeeze[m].phi, "squeezing angle, mode " + i));
    p.push_back(num("alpha_re" + i, d.displacement[m].alpha.real(), "displacement, real part, mode " + i));
    p.push_back(num("alpha_im" + i, d.displacement[m].alpha.imag(), "displacement, imaginary part, mode " + i));
  }
  for (std::size_t b = 0; b < d.network.size(); ++b) {
    const std::string i = std::to_string(b);
    const std::string where =
        " (modes " + std::to_string(d.network[b].mode_a) + "," + std::to_string(d.network[b].mode_b) + ")";
    p.push_back(num("bs_theta" + i, d.network[b].theta, "beamsplitter " + i + " angle, radians" + where));
    p.push_back(num("bs_phi" + i, d.network[b].phi, "beamsplitter " + i + " phase, radians" + where));
  }
  return p;
}

GBSSchemeSpec gbs_spec(const ResolvedConfig& c) {
  GBSSchemeSpec s = GBSSchemeSpec::defaults();
  s.cutoff = static_cast<int>(c.integer("cutoff"));
  s.herald = {static_cast<int>(c.integer("herald_1")), static_cast<int>(c.integer("herald_2"))};
  for (int m = 0; m < 3; ++m) {
    const std::string i = std::to_string(m);
    s.squeeze[m] = {c.number("r" + i), c.number("squeeze_phi" + i)};
    s.displacement[m].alpha = {c.number("alpha_re" + i), c.number("alpha_im" + i)};
  }
  for (std::size_t b = 0; b < s.network.size(); ++b) {
    s.network[b].theta = c.number("bs_theta" + std::to_string(b));
    s.network[b].phi = c.number("bs_phi" + std::to_string(b));
  }
  return s;
}

ordered_json complex_json(Amplitude a) { return ordered_json::array({a.real(), a.imag()}); }

void gbs_herald_experiment(const ResolvedConfig& c, RunReport& report) {
  const GBSSchemeSpec spec = gbs_spec(c);
  const GBSResult r = gbs_herald(spec);
  std::array<Eigen::VectorXcd, 3> inputs;
  for (int m = 0; m < 3; ++m) {
    inputs[m] = oracle::displaced_squeezed(spec.displacement[m].alpha, spec.squeeze[m].r, spec.squeeze[m].phi,
                                           spec.cutoff + 1);
    inputs[m].normalize();
  }
  Eigen::MatrixXcd mm = Eigen::MatrixXcd::Identity(3, 3);
  for (const BeamsplitterSetting& b : spec.network) {
    mm = mm * oracle::beamsplitter(3, static_cast<int>(b.mode_a), static_cast<int>(b.mode_b), b.theta, b.phi);
  }
  const oracle::HeraldedMode dense = oracle::gbs_dense(inputs, mm, spec.herald[0], spec.herald[1], spec.cutoff);
  const FockState out = r.heralded.state();
  double amp_err = 0.0;
  report.table.columns = {"n", "re", "im", "probability"};
  for (int n = 0; n <= spec.cutoff; ++n) {
    const Amplitude got = out.amplitude({n});
    amp_err = std::max(amp_err, std::abs(got - dense.amplitudes(n) / std::sqrt(dense.probability)));
    report.table.add_row({(long long)n, got.real(), got.imag(), std::norm(got)});
  }
  report.add("probability", r.heralded.probability());
  report.check("oracle_probability_rel_error", std::abs(r.heralded.probability() / dense.probability - 1.0), 0.0,
               1e-9);
  report.check("oracle_amplitude_error", amp_err, 0.0, 1e-9);
  report.add("residual", r.residual);
  report.details["herald"] = spec.herald;
  report.details["d1"] = complex_json(r.d1.alpha);
  report.details["xi1"] = {{"r", r.xi1.r}, {"phi", r.xi1.phi}};
  ordered_json coeff = ordered_json::array();
  for (Amplitude a : r.coefficients) coeff.push_back(complex_json(a));
  report.details["coefficients"] = coeff;
  report.details["n_max"] = r.n_max;
}

// ---- detectors ------------------------------------------------------------

void detector_povm_experiment(const ResolvedConfig& c, RunReport& report) {
  const int cutoff = static_cast<int>(c.integer("cutoff"));
  const int photons = static_cast<int>(c.integer("photons"));
  DetectorModel bucket{c.number("eta"), c.number("dark_prob"), DetectorModel::Kind::kBucket};
  DetectorModel pnr = bucket;
  pnr.kind = DetectorModel::Kind::kPNR;
  if (photons < 0 || photons > cutoff) throw ConfigurationError("photons must lie in [0, cutoff]");
  const BucketPovm b = bucket_povm(bucket, cutoff);
  const int outcomes = pnr_outcome_count(pnr, cutoff);
  Eigen::VectorXd pnr_sum = Eigen::VectorXd::Zero(cutoff + 1);
  std::vector<Eigen::VectorXd> e;
  for (int k = 0; k < outcomes; ++k) {
    e.push_back(pnr_povm(pnr, k, cutoff));
    pnr_sum += e.back();
  }
  report.check("bucket_completeness_error", ((b.no_click + b.click).array() - 1.0).abs().maxCoeff(), 0.0, 1e-12);
  report.check("pnr_completeness_error", (pnr_sum.array() - 1.0).abs().maxCoeff(), 0.0, 1e-12);
  const FockState n = make_fock({photons}, cutoff);
  const double no_click = (1.0 - bucket.dark_prob) * std::pow(1.0 - bucket.eta, photons);
  report.check("no_click", outcome_probability(n, 0, b.no_click), no_click, 1e-12);
  report.check("click", outcome_probability(n, 0, b.click), 1.0 - no_click, 1e-12);
  report.table.columns = {"n", "no_click", "click"};
  for (int k = 0; k < outcomes; ++k) report.table.columns.push_back("pnr_" + std::to_string(k));
  for (int m = 0; m <= cutoff; ++m) {
    std::vector<Cell> row{(long long)m, b.no_click(m), b.click(m)};
    for (int k = 0; k < outcomes; ++k) row.push_back(e[k](m));
    report.table.add_row(std::move(row));
  }
}

std::vector<ExperimentDef> build_registry() {
  std::vector<ParamSpec> ns = ns_params();
  std::vector<ParamSpec> ns_gate = ns;
  ns_gate.push_back(integer("inputs", 100, "random signal states"));
  std::vector<ParamSpec> cz = ns;
  cz.push_back(integer("superpositions", 20, "random two-qubit inputs"));
  const double sqrt_pi = std::sqrt(std::numbers::pi);
  return {
      {"hom-dip", "two-photon coincidence versus delay, 4-mode simulation against the closed form",
       {num("gamma", 1.0, "pulse decay rate"), integer("points", 50, "delay points"),
        num("tau_max", 5.0, "delays span [-tau_max, tau_max]")},
       hom_dip_experiment},
      {"ns-gate", "heralded nonlinear sign gate on random inputs", ns_gate, ns_gate_experiment},
      {"cz-gate", "KLM controlled-Z from two NS gates", cz, cz_gate_experiment},
      {"mbqc-cnot", "4-qubit cluster CNOT, exhaustive branches plus sampled runs",
       {integer("samples", 8, "sampled runs per input")},
       mbqc_cnot_experiment},
      {"fusion-growth", "Monte Carlo Bell-pair cost of growing a linear cluster by type-I fusion",
       {integer("target_length", 30, "chain length to reach"),
        integer("seed_length", 20, "free starting chain length"), integer("trials", 100000, "Monte Carlo trials"),
        {"strategy", ParamType::kString, "recycle", "recycle | discard"},
        num("success_probability", 0.5, "fusion success probability"),
        integer("workers", 1, "worker threads (results do not depend on it)"),
        num("expected_cost", 6.5, "Bell pairs per added qubit to test against"),
        num("expected_cluster3_cost", 4.0, "Bell pairs per 3-cluster to test against")},
       fusion_growth_experiment},
      {"cat-overlap", "cat-state overlaps and parity sectors",
       {{"alphas", ParamType::kDoubleList, "0.5,1,2", "comma-separated amplitudes"},
        integer("cutoff", 40, "Fock cutoff (at least 8 alpha^2)")},
       cat_overlap_experiment},
      {"gkp-density", "GKP |0~>, |1~> position densities and the correctable region",
       {num("r", 1.2, "base squeezing"), num("squeeze_phi", 0.0, "base squeezing angle"),
        num("delta_x1", 0.01, "envelope width in X1 = a + a^dag units"),
        num("grid_spacing", sqrt_pi, "lattice spacing alpha"), integer("s_max", 6, "lattice half-length"),
        integer("cutoff", 400, "Fock cutoff"), integer("points", 2667, "position grid points")},
       gkp_density_experiment},
      {"gkp-kraus", "homodyne-heralded Kraus map: outcome normalization and conditional comb",
       {num("theta", sqrt_pi, "kernel frequency"), num("phi", 0.0, "kernel phase"), num("r", 3.0, "kernel amplitude"),
        num("input_r", 1.0, "input squeezing"), num("input_phi", std::numbers::pi / 2, "input squeezing angle"),
        integer("input_cutoff", 80, "input Fock cutoff"), num("q_max", 12.0, "position grid half-width"),
        integer("points", 9001, "position grid points"), num("y", 6.0, "heralded outcome"),
        num("y_margin", 8.0, "outcome integral spans 2r + margin each side"),
        integer("y_points", 2001, "outcome integration points")},
       gkp_kraus_experiment},
      {"gbs-herald", "Gaussian boson sampling state preparation heralded on modes 1 and 2", gbs_params(),
       gbs_herald_experiment},
      {"detector-povm", "bucket and PNR detector POVMs",
       {num("eta", 0.5, "efficiency"), num("dark_prob", 0.0, "dark click probability per window"),
        integer("cutoff", 10, "Fock cutoff"), integer("photons", 2, "input Fock state")},
       detector_povm_experiment},
  };
}

}  // namespace

const std::vector<ExperimentDef>& experiments() {
  static const std::vector<ExperimentDef> registry = build_registry();
  return registry;
}

const ExperimentDef& find_experiment(const std::string& name) {
  for (const ExperimentDef& e : experiments()) {
    if (e.name == name) return e;
  }
  throw UnknownExperiment("unknown experiment '" + name + "'");
}

RunReport execute(const ExperimentConfig& config) {
  const ExperimentDef& def = find_experiment(config.experiment);
  const ResolvedConfig resolved(config, def.params);
  RunReport report;
  report.experiment = def.name;
  report.config = resolved.echo();
  const auto t0 = std::chrono::steady_clock::now();
  def.body(resolved, report);
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (report.metrics.empty()) throw Error("experiment '" + def.name + "' produced no metrics");
  return report;
}

RunReport run(const ExperimentConfig& config, std::string* written) {
  RunReport report = execute(config);
  const std::string path = config.out.empty() ? default_output_path(report.experiment, config.format) : config.out;
  write_text(path, report.serialize(config.format));
  if (written) *written = path;
  return report;
}

}  // namespace photonsim::harness
