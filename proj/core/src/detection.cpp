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

#include "photonsim/detection.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <string>

#include "photonsim/errors.hpp"

namespace photonsim {

namespace {

// Keeps terms whose `modes` carry `counts` and deletes those modes.
FockState project_pattern(const FockState& state, const std::vector<std::size_t>& modes,
                          const std::vector<int>& counts) {
  std::vector<bool> measured(state.num_modes(), false);
  for (std::size_t m : modes) measured[m] = true;
  FockState out(state.num_modes() - modes.size(), state.cutoff());
  Occupation kept;
  kept.reserve(out.num_modes());
  for (const auto& [occ, amp] : state.terms()) {
    bool match = true;
    for (std::size_t i = 0; i < modes.size() && match; ++i) {
      match = occ[modes[i]] == counts[i];
    }
    if (!match) continue;
    kept.clear();
    for (std::size_t k = 0; k < occ.size(); ++k) {
      if (!measured[k]) kept.push_back(occ[k]);
    }
    out.add(kept, amp);
  }
  return out;
}

void check_modes(const FockState& state, const std::vector<std::size_t>& modes) {
  std::set<std::size_t> seen;
  for (std::size_t m : modes) {
    if (m >= state.num_modes()) throw DimensionMismatch("herald mode out of range");
    if (!seen.insert(m).second) throw InvalidArgument("herald modes must be distinct");
  }
}

}  // namespace

void DetectorModel::validate() const {
  if (eta < 0.0 || eta > 1.0) throw InvalidArgument("detector efficiency must lie in [0, 1]");
  if (dark_prob < 0.0 || dark_prob >= 1.0) {
    throw InvalidArgument("dark-count probability must lie in [0, 1)");
  }
}

double DetectorModel::dark_prob_from_rate(double rate, double window) {
  return 1.0 - std::exp(-rate * window);
}

HeraldedResult::HeraldedResult(FockState branch, double probability,
                               std::vector<int> herald)
    : branch_(std::move(branch)), probability_(probability), herald_(std::move(herald)) {}

FockState HeraldedResult::state() const {
  if (probability_ <= 0.0 || branch_.empty()) {
    throw ImprobableHerald("herald pattern has zero probability");
  }
  return branch_.normalized();
}

HeraldedResult project_count(const FockState& state, std::size_t mode, int n) {
  if (mode >= state.num_modes()) throw DimensionMismatch("mode index out of range");
  if (n < 0 || n > state.cutoff()) throw InvalidArgument("count outside 0..cutoff");
  FockState branch = project_pattern(state, {mode}, {n});
  const double total = state.norm_squared();
  const double p = total > 0.0 ? branch.norm_squared() / total : 0.0;
  return HeraldedResult(std::move(branch), p, {n});
}

FockState remove_mode(const FockState& state, std::size_t mode, int n) {
  FockState out = project_pattern(state, {mode}, {n});
  if (std::abs(out.norm_squared() - state.norm_squared()) > 1e-12 * std::max(1.0, state.norm_squared())) {
    throw InvalidArgument("mode " + std::to_string(mode) + " is not fixed at " +
                          std::to_string(n) + " photons");
  }
  return out;
}

BucketPovm bucket_povm(const DetectorModel& detector, int cutoff) {
  detector.validate();
  if (detector.kind != DetectorModel::Kind::kBucket) {
    throw InvalidArgument("bucket POVM requested for a photon-number-resolving detector");
  }
  BucketPovm p;
  p.no_click.resize(cutoff + 1);
  p.click.resize(cutoff + 1);
  for (int n = 0; n <= cutoff; ++n) {
    p.no_click(n) = (1.0 - detector.dark_prob) * std::pow(1.0 - detector.eta, n);
    p.click(n) = 1.0 - p.no_click(n);
  }
  return p;
}

int pnr_outcome_count(const DetectorModel& detector, int cutoff) {
  return detector.dark_prob > 0.0 ? cutoff + 2 : cutoff + 1;
}

Eigen::VectorXd pnr_povm(const DetectorModel& detector, int n, int cutoff) {
  detector.validate();
  if (detector.kind != DetectorModel::Kind::kPNR) {
    throw InvalidArgument("PNR POVM requested for a bucket detector");
  }
  auto ideal = [&](int m) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(cutoff + 1);
    if (m < 0) return e;
    for (int k = m; k <= cutoff; ++k) {
      const double log_binom = std::lgamma(k + 1.0) - std::lgamma(m + 1.0) -
                               std::lgamma(k - m + 1.0);
      // pow(0, 0) is 1, which is the right limit at eta in {0, 1}.
      e(k) = std::exp(log_binom) * std::pow(detector.eta, m) *
             std::pow(1.0 - detector.eta, k - m);
    }
    return e;
  };
  if (n < 0 || n >= pnr_outcome_count(detector, cutoff)) {
    throw InvalidArgument("PNR outcome out of range");
  }
  if (detector.dark_prob == 0.0) return ideal(n);
  return (1.0 - detector.dark_prob) * ideal(n) + detector.dark_prob * ideal(n - 1);
}

double outcome_probability(const FockState& state, std::size_t mode,
                           const Eigen::VectorXd& diagonal) {
  if (mode >= state.num_modes()) throw DimensionMismatch("mode index out of range");
  double p = 0.0;
  for (const auto& [occ, amp] : state.terms()) {
    if (occ[mode] >= diagonal.size()) throw DimensionMismatch("POVM shorter than the state cutoff");
    p += diagonal(occ[mode]) * std::norm(amp);
  }
  return p / state.norm_squared();
}

FockState apply_circuit(const FockState& state, const Circuit& circuit,
                        CutoffPolicy policy) {
  FockState s = state;
  for (const CircuitElement& el : circuit) s = apply_unitary(s, el.unitary, el.modes, policy);
  return s;
}

HeraldedResult herald(const FockState& state, const Circuit& circuit,
                      const HeraldSpec& spec,
                      const std::vector<std::size_t>& output_modes,
                      CutoffPolicy policy) {
  if (spec.modes.size() != spec.counts.size()) {
    throw InvalidArgument("herald spec needs one count per mode");
  }
  check_modes(state, spec.modes);
  for (std::size_t m : output_modes) {
    if (std::find(spec.modes.begin(), spec.modes.end(), m) != spec.modes.end()) {
      throw InvalidArgument("output mode " + std::to_string(m) + " is also a herald mode");
    }
  }
  for (int c : spec.counts) {
    if (c < 0 || c > state.cutoff()) throw InvalidArgument("herald count outside 0..cutoff");
  }
  const FockState evolved = apply_circuit(state, circuit, policy);
  // Project in descending mode order so the remaining indices stay valid.
  std::vector<std::size_t> order(spec.modes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return spec.modes[a] > spec.modes[b]; });
  FockState branch = evolved;
  for (std::size_t i : order) branch = project_pattern(branch, {spec.modes[i]}, {spec.counts[i]});
  const double total = state.norm_squared();
  const double p = total > 0.0 ? branch.norm_squared() / total : 0.0;
  return HeraldedResult(std::move(branch), p, spec.counts);
}

std::vector<HeraldedResult> enumerate_heralds(const FockState& state,
                                              const std::vector<std::size_t>& modes) {
  check_modes(state, modes);
  std::set<std::vector<int>> patterns;
  for (const auto& [occ, amp] : state.terms()) {
    std::vector<int> pat;
    for (std::size_t m : modes) pat.push_back(occ[m]);
    patterns.insert(pat);
  }
  const double total = state.norm_squared();
  std::vector<HeraldedResult> out;
  for (const auto& pat : patterns) {
    FockState branch = project_pattern(state, modes, pat);
    const double p = branch.norm_squared() / total;
    out.emplace_back(std::move(branch), p, pat);
  }
  return out;
}

void QuadratureGrid::validate() const {
  if (!(q_max > q_min)) throw InvalidArgument("quadrature grid needs q_max > q_min");
  if (points < 3 || points % 2 == 0) {
    throw InvalidArgument("quadrature grid needs an odd number (>= 3) of points");
  }
}

double QuadratureGrid::step() const {
  return (q_max - q_min) / static_cast<double>(points - 1);
}

double QuadratureGrid::at(std::size_t i) const {
  return q_min + step() * static_cast<double>(i);
}

std::vector<double> QuadratureGrid::values() const {
  std::vector<double> v(points);
  for (std::size_t i = 0; i < points; ++i) v[i] = at(i);
  return v;
}

QuadratureGrid QuadratureGrid::for_cutoff(int cutoff, double center, std::size_t points) {
  const double half = std::sqrt(2.0 * cutoff + 1.0) + 8.0;
  QuadratureGrid g{center - half, center + half, points | 1};
  return g;
}

double simpson(const std::vector<double>& f, double h) {
  if (f.size() < 3 || f.size() % 2 == 0) {
    throw InvalidArgument("Simpson's rule needs an odd number of samples");
  }
  double s = f.front() + f.back();
  for (std::size_t i = 1; i + 1 < f.size(); ++i) s += (i % 2 ? 4.0 : 2.0) * f[i];
  return s * h / 3.0;
}

std::vector<double> hermite_functions(int n_max, double q) {
  std::vector<double> phi(n_max + 1);
  phi[0] = std::pow(std::numbers::pi, -0.25) * std::exp(-q * q / 2.0);
  if (n_max >= 1) phi[1] = std::sqrt(2.0) * q * phi[0];
  for (int n = 1; n < n_max; ++n) {
    phi[n + 1] = std::sqrt(2.0 / (n + 1)) * q * phi[n] -
                 std::sqrt(static_cast<double>(n) / (n + 1)) * phi[n - 1];
  }
  return phi;
}

namespace {

std::vector<Amplitude> dense_single_mode(const FockState& state) {
  if (state.num_modes() != 1) throw DimensionMismatch("expected a single-mode state");
  std::vector<Amplitude> c(state.cutoff() + 1, 0.0);
  for (const auto& [occ, amp] : state.terms()) c[occ[0]] = amp;
  return c;
}

}  // namespace

std::vector<Amplitude> quadrature_wavefunction(const FockState& state, double theta,
                                               const QuadratureGrid& grid) {
  grid.validate();
  std::vector<Amplitude> c = dense_single_mode(state);
  int n_max = 0;
  for (std::size_t n = 0; n < c.size(); ++n) {
    c[n] *= std::polar(1.0, theta * static_cast<double>(n));
    if (c[n] != Amplitude(0.0)) n_max = static_cast<int>(n);
  }
  std::vector<Amplitude> psi(grid.points);
  for (std::size_t i = 0; i < grid.points; ++i) {
    const std::vector<double> phi = hermite_functions(n_max, grid.at(i));
    Amplitude s = 0.0;
    for (int n = 0; n <= n_max; ++n) s += c[n] * phi[n];
    psi[i] = s;
  }
  return psi;
}

std::vector<double> quadrature_pdf(const FockState& state, const HomodyneSetting& setting,
                                   const QuadratureGrid& grid) {
  const std::vector<Amplitude> psi = quadrature_wavefunction(state, setting.theta, grid);
  std::vector<double> p(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i) p[i] = std::norm(psi[i]);
  const double integral = simpson(p, grid.step());
  const double expected = state.norm_squared();
  if (std::abs(integral - expected) > 1e-6) {
    throw GridResolutionError("quadrature density integrates to " + std::to_string(integral) +
                              " instead of " + std::to_string(expected) +
                              "; widen or refine the grid");
  }
  return p;
}

FockState fock_from_wavefunction(const std::vector<Amplitude>& psi,
                                 const QuadratureGrid& grid, int cutoff) {
  grid.validate();
  if (psi.size() != grid.points) throw DimensionMismatch("wavefunction/grid size mismatch");
  std::vector<Amplitude> c(cutoff + 1, 0.0);
  const double h = grid.step();
  for (std::size_t i = 0; i < grid.points; ++i) {
    const double w = (i == 0 || i + 1 == grid.points) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    const std::vector<double> phi = hermite_functions(cutoff, grid.at(i));
    for (int n = 0; n <= cutoff; ++n) c[n] += w * phi[n] * psi[i];
  }
  FockState out(1, cutoff);
  for (int n = 0; n <= cutoff; ++n) out.set({n}, c[n] * h / 3.0);
  return out;
}

HomodyneSampler::HomodyneSampler(const FockState& state, const HomodyneSetting& setting,
                                 const QuadratureGrid& grid)
    : grid_(grid), scale_(std::sqrt(setting.kappa)) {
  if (!(setting.kappa > 0.0)) throw InvalidArgument("homodyne rate constant must be positive");
  const std::vector<double> pdf = quadrature_pdf(state.normalized(), setting, grid);
  const double h = grid.step();
  cdf_.resize(pdf.size());
  cdf_[0] = 0.0;
  for (std::size_t i = 1; i < pdf.size(); ++i) cdf_[i] = cdf_[i - 1] + 0.5 * h * (pdf[i - 1] + pdf[i]);
  const double total = cdf_.back();
  for (double& v : cdf_) v /= total;
  std::vector<double> xp(pdf.size()), x2p(pdf.size());
  for (std::size_t i = 0; i < pdf.size(); ++i) {
    const double x = grid.at(i);
    xp[i] = x * pdf[i];
    x2p[i] = x * x * pdf[i];
  }
  mean_ = simpson(xp, h);
  variance_ = simpson(x2p, h) - mean_ * mean_;
}

double HomodyneSampler::sample(CounterRng& rng) const {
  const double u = rng.uniform();
  auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  if (it == cdf_.begin()) return scale_ * grid_.q_min;
  if (it == cdf_.end()) return scale_ * grid_.q_max;
  const std::size_t i = static_cast<std::size_t>(it - cdf_.begin());
  const double lo = cdf_[i - 1];
  const double hi = cdf_[i];
  const double frac = hi > lo ? (u - lo) / (hi - lo) : 0.5;
  return scale_ * (grid_.at(i - 1) + frac * grid_.step());
}

double HomodyneSampler::mean() const { return scale_ * mean_; }
double HomodyneSampler::variance() const { return scale_ * scale_ * variance_; }

double homodyne_sample(const FockState& state, const HomodyneSetting& setting,
                       CounterRng& rng) {
  // Centre the grid on the expected quadrature <X(theta)> = sqrt2 Re(<a> e^{i theta}).
  const FockState lowered = apply_ladder(state, 0, Ladder::kLower);
  const Amplitude mean_a = inner(state, lowered) / state.norm_squared();
  const double center = std::sqrt(2.0) * (mean_a * std::polar(1.0, setting.theta)).real();
  HomodyneSampler sampler(state, setting, QuadratureGrid::for_cutoff(state.cutoff(), center));
  return sampler.sample(rng);
}

}  // namespace photonsim
