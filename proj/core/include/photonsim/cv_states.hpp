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

#ifndef PHOTONSIM_CV_STATES_HPP_
#define PHOTONSIM_CV_STATES_HPP_

#include <Eigen/Dense>
#include <array>
#include <numbers>
#include <vector>

#include "photonsim/detection.hpp"
#include "photonsim/fock_state.hpp"

namespace photonsim {

// Quadratures throughout are q = (a + a^dag)/sqrt2, p = (a - a^dag)/(i sqrt2),
// so vacuum variances are 1/2. Figures quoted in X1 = a + a^dag convert with
// this one factor: X1 = kX1PerQ * q.
inline constexpr double kX1PerQ = std::numbers::sqrt2;

// Largest norm an exponential may push past the cutoff before it is an error.
inline constexpr double kCvLeakageTolerance = 1e-10;

// zeta = r e^{-2 i phi}; S = exp((zeta^* a^2 - zeta a^dag^2) / 2), so phi = 0
// squeezes q and phi = pi/2 squeezes p.
struct SqueezeParam {
  double r = 0.0;
  double phi = 0.0;
  Amplitude zeta() const { return std::polar(r, -2.0 * phi); }
  void validate() const;
};

struct DisplacementParam {
  Amplitude alpha{0.0, 0.0};
};

// Single-mode exponentials evaluated in a padded space; throw LeakageError if
// more than kCvLeakageTolerance of the norm ends above the cutoff.
FockState displace(const FockState& state, const DisplacementParam& d);
FockState squeeze(const FockState& state, const SqueezeParam& s);
// exp(-i a p), which moves the q-wavefunction by +a.
FockState translate_q(const FockState& state, double a);

FockState coherent_state(Amplitude alpha, int cutoff);
FockState squeezed_vacuum(const SqueezeParam& s, int cutoff);

enum class CatParity { kEven, kOdd };

// (|alpha> +- |-alpha>) / sqrt(N+-) with N+- = 2 +- 2 e^{-2 alpha^2}.
double cat_normalization(double alpha, CatParity parity);
FockState cat_state(double alpha, CatParity parity, int cutoff);

struct GKPParams {
  double grid_spacing = std::sqrt(std::numbers::pi);
  // Envelope width in q units.
  double delta = kX1PerQ * 0.01;
  int n_dim = 2;
  int s_max = 6;
  void validate() const;
};

struct GKPState {
  FockState state;
  // Share of the infinite lattice sum's weight carried by |s| > s_max.
  double lattice_tail = 0.0;
  // Norm lost above the cutoff.
  double leaked = 0.0;
};

// N sum_{|s| <= s_max} e^{-delta^2 x_s^2 / 2} T(x_s)|psi0>, x_s = (2s + mu) alpha,
// with |psi0> = S(base)|0>.
GKPState gkp_state(const GKPParams& params, int logical, const SqueezeParam& base, int cutoff);

// |dq| < alpha/2 and |dp| < pi/(n alpha), both strict.
bool shift_correctable(double dq, double dp, const GKPParams& params);

// Interaction parameters of the conditional-homodyne update. The defaults are
// placeholders, not derived from a physical coupling.
struct KrausParams {
  double theta = std::sqrt(std::numbers::pi);
  double phi = 0.0;
  double r = 3.0;
};

// Upsilon(q|y) = (2pi)^{-1/4} exp[i y r sin(theta q - phi) - (y - 2 r cos(theta q - phi))^2 / 4].
Amplitude kraus_upsilon(double q, double y, const KrausParams& k);
double kraus_weight(double q, double y, const KrausParams& k);

struct GridState {
  QuadratureGrid grid;
  std::vector<Amplitude> psi;
  double norm_squared() const;
  std::vector<double> density() const;
};

GridState to_grid(const FockState& state, const QuadratureGrid& grid);

struct KrausResult {
  GridState state;  // normalized
  double y = 0.0;
  double density = 0.0;  // P(y)
};

// P(y) = int |Upsilon(q|y)|^2 |psi(q)|^2 dq.
double kraus_outcome_density(const GridState& state, double y, const KrausParams& k);
KrausResult gkp_kraus_update(const GridState& state, double y, const KrausParams& k);
// int P(y) dy by Simpson over [y_min, y_max].
double kraus_total_probability(const GridState& state, const KrausParams& k, double y_min,
                               double y_max, std::size_t points = 2001);

FockState qq_gate(const FockState& two_mode, double theta);

// Means and symmetrized covariance of (q0, p0, q1, p1, ...).
struct QuadratureMoments {
  Eigen::VectorXd mean;
  Eigen::MatrixXd cov;
};
QuadratureMoments quadrature_moments(const FockState& state);

struct BeamsplitterSetting {
  std::size_t mode_a = 0;
  std::size_t mode_b = 1;
  double theta = 0.0;
  double phi = 0.0;
};

// Three displaced squeezed vacua through a beamsplitter network; modes 1 and 2
// are counted and mode 0 is the output.
struct GBSSchemeSpec {
  std::array<SqueezeParam, 3> squeeze{};
  std::array<DisplacementParam, 3> displacement{};
  std::vector<BeamsplitterSetting> network;
  std::array<int, 2> herald{1, 1};
  int cutoff = 10;
  double probability_floor = 1e-12;

  void validate() const;
  int n_max() const { return herald[0] + herald[1]; }
  static GBSSchemeSpec defaults();
};

struct GBSResult {
  HeraldedResult heralded;  // single mode
  DisplacementParam d1;
  SqueezeParam xi1;
  // S(xi1)^dag D(d1)^dag applied to the output; c_n for n <= n_max.
  std::vector<Amplitude> coefficients;
  int n_max = 0;
  // Weight of the unfolded output above n_max.
  double residual = 0.0;
};

FockState gbs_input(const GBSSchemeSpec& spec);
GBSResult gbs_herald(const GBSSchemeSpec& spec);

}  // namespace photonsim

#endif  // PHOTONSIM_CV_STATES_HPP_
