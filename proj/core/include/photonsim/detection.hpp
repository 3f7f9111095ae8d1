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

#ifndef PHOTONSIM_DETECTION_HPP_
#define PHOTONSIM_DETECTION_HPP_

#include <Eigen/Dense>
#include <cstddef>
#include <vector>

#include "photonsim/fock_state.hpp"
#include "photonsim/interferometer.hpp"
#include "photonsim/rng.hpp"

namespace photonsim {

struct DetectorModel {
  enum class Kind { kBucket, kPNR };

  double eta = 1.0;
  double dark_prob = 0.0;
  Kind kind = Kind::kPNR;

  void validate() const;
  // Per-window dark-click probability for a rate R over a window T.
  static double dark_prob_from_rate(double rate, double window);
};

// Conditional state after a photon-counting herald. `branch` is the
// projected, unnormalized state; `probability` is its weight relative to the
// input.
class HeraldedResult {
 public:
  HeraldedResult() = default;
  HeraldedResult(FockState branch, double probability, std::vector<int> herald);

  const FockState& branch() const { return branch_; }
  double probability() const { return probability_; }
  const std::vector<int>& herald() const { return herald_; }
  bool succeeded(double floor = 0.0) const { return probability_ > floor; }
  // Normalized conditional state. Throws if the probability is zero.
  FockState state() const;

 private:
  FockState branch_;
  double probability_ = 0.0;
  std::vector<int> herald_;
};

// Projects `mode` onto n photons and removes it from the state.
HeraldedResult project_count(const FockState& state, std::size_t mode, int n);

// Removes a mode that carries the given count in every term. Used when the
// photon number is already fixed and only the bookkeeping is needed.
FockState remove_mode(const FockState& state, std::size_t mode, int n);

// Diagonal POVM elements on the truncated space 0..cutoff.
struct BucketPovm {
  Eigen::VectorXd no_click;
  Eigen::VectorXd click;
};

BucketPovm bucket_povm(const DetectorModel& detector, int cutoff);
// Outcome n ranges over 0..cutoff, or 0..cutoff+1 when dark_prob > 0.
Eigen::VectorXd pnr_povm(const DetectorModel& detector, int n, int cutoff);
int pnr_outcome_count(const DetectorModel& detector, int cutoff);

// <psi| E |psi> / <psi|psi> for a diagonal POVM element on one mode.
double outcome_probability(const FockState& state, std::size_t mode,
                           const Eigen::VectorXd& diagonal);

struct CircuitElement {
  ModeUnitary unitary;
  std::vector<std::size_t> modes;
};
using Circuit = std::vector<CircuitElement>;

struct HeraldSpec {
  std::vector<std::size_t> modes;
  std::vector<int> counts;
};

FockState apply_circuit(const FockState& state, const Circuit& circuit,
                        CutoffPolicy policy = CutoffPolicy::kError);

// Runs `circuit`, then projects every herald mode on its count. Herald modes
// are removed from the returned state; `output_modes`, if given, must be
// disjoint from them.
HeraldedResult herald(const FockState& state, const Circuit& circuit,
                      const HeraldSpec& spec,
                      const std::vector<std::size_t>& output_modes = {},
                      CutoffPolicy policy = CutoffPolicy::kError);

// Every count pattern on `modes` with non-zero probability, in lexicographic
// order of the pattern.
std::vector<HeraldedResult> enumerate_heralds(const FockState& state,
                                              const std::vector<std::size_t>& modes);

struct HomodyneSetting {
  double theta = 0.0;
  double kappa = 1.0;
};

// Uniform grid with an odd number of points so composite Simpson applies.
struct QuadratureGrid {
  double q_min = -10.0;
  double q_max = 10.0;
  std::size_t points = 2001;

  void validate() const;
  double step() const;
  double at(std::size_t i) const;
  std::vector<double> values() const;
  // A grid wide enough for photon numbers up to `cutoff` around `center`.
  static QuadratureGrid for_cutoff(int cutoff, double center = 0.0,
                                   std::size_t points = 4001);
};

double simpson(const std::vector<double>& f, double h);

// phi_0..phi_nmax at q, for q = (a + a^dag)/sqrt(2).
std::vector<double> hermite_functions(int n_max, double q);

// psi_theta(q) = sum_n c_n e^{i n theta} phi_n(q), the wavefunction in the
// eigenbasis of X(theta) = (a e^{i theta} + a^dag e^{-i theta}) / sqrt(2).
std::vector<Amplitude> quadrature_wavefunction(const FockState& state, double theta,
                                               const QuadratureGrid& grid);

// |psi_theta(q)|^2 on the grid. Throws GridResolutionError if the Simpson
// integral of a normalized input deviates from 1 by more than 1e-6.
std::vector<double> quadrature_pdf(const FockState& state, const HomodyneSetting& setting,
                                   const QuadratureGrid& grid);

// Fock amplitudes c_n = int phi_n(q) psi(q) dq of a grid wavefunction.
FockState fock_from_wavefunction(const std::vector<Amplitude>& psi,
                                 const QuadratureGrid& grid, int cutoff);

// Inverse-CDF sampler for repeated homodyne draws on one state.
class HomodyneSampler {
 public:
  HomodyneSampler(const FockState& state, const HomodyneSetting& setting,
                  const QuadratureGrid& grid);

  // Integrated current sqrt(kappa) * x with x drawn from the quadrature pdf.
  double sample(CounterRng& rng) const;
  double mean() const;
  double variance() const;

 private:
  QuadratureGrid grid_;
  double scale_;
  std::vector<double> cdf_;
  double mean_ = 0.0;
  double variance_ = 0.0;
};

double homodyne_sample(const FockState& state, const HomodyneSetting& setting,
                       CounterRng& rng);

}  // namespace photonsim

#endif  // PHOTONSIM_DETECTION_HPP_
