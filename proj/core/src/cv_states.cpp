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

#include "photonsim/cv_states.hpp"

#include <cmath>
#include <complex>

#include "linalg.hpp"
#include "photonsim/errors.hpp"

namespace photonsim {

namespace {

using detail::HermitianPropagator;

FockState evolve(const FockState& state, const Eigen::MatrixXcd& h, double t,
                 const std::string& what) {
  const int dim = detail::padded_dim(state.cutoff());
  const Eigen::VectorXcd v = HermitianPropagator(h).apply(detail::to_dense(state, dim), t);
  return detail::from_dense(v, state.cutoff(), what, kCvLeakageTolerance);
}

void require_single_mode(const FockState& s) {
  if (s.num_modes() != 1) throw DimensionMismatch("expected a single-mode state");
}

}  // namespace

void SqueezeParam::validate() const {
  if (!(r >= 0.0)) throw InvalidArgument("squeeze magnitude must be non-negative");
}

FockState displace(const FockState& state, const DisplacementParam& d) {
  require_single_mode(state);
  if (d.alpha == Amplitude(0.0)) return state;
  const int dim = detail::padded_dim(state.cutoff());
  // i (alpha a^dag - alpha^* a)
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) {
    const double s = std::sqrt(static_cast<double>(n));
    h(n, n - 1) = Amplitude(0.0, 1.0) * d.alpha * s;
    h(n - 1, n) = std::conj(h(n, n - 1));
  }
  return evolve(state, h, 1.0, "displace");
}

FockState squeeze(const FockState& state, const SqueezeParam& s) {
  require_single_mode(state);
  s.validate();
  if (s.r == 0.0) return state;
  const int dim = detail::padded_dim(state.cutoff());
  // i (zeta^* a^2 - zeta a^dag^2) / 2
  const Amplitude z = s.zeta();
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
  for (int n = 2; n < dim; ++n) {
    const double c = std::sqrt(static_cast<double>(n) * (n - 1));
    h(n, n - 2) = Amplitude(0.0, -0.5) * z * c;
    h(n - 2, n) = std::conj(h(n, n - 2));
  }
  return evolve(state, h, 1.0, "squeeze");
}

FockState translate_q(const FockState& state, double a) {
  require_single_mode(state);
  if (a == 0.0) return state;
  const int dim = detail::padded_dim(state.cutoff());
  return evolve(state, detail::momentum(dim), a, "translate");
}

FockState coherent_state(Amplitude alpha, int cutoff) {
  FockState s(1, cutoff);
  Amplitude c = std::exp(-0.5 * std::norm(alpha));
  double kept = 0.0;
  for (int n = 0; n <= cutoff; ++n) {
    if (n > 0) c *= alpha / std::sqrt(static_cast<double>(n));
    if (std::abs(c) > kAmplitudeEpsilon) s.set({n}, c);
    kept += std::norm(c);
  }
  const double tail = 1.0 - kept;
  if (tail > kCvLeakageTolerance) {
    throw LeakageError("coherent state does not fit cutoff " + std::to_string(cutoff), tail);
  }
  s.add_leaked_norm(std::max(tail, 0.0));
  return s;
}

FockState squeezed_vacuum(const SqueezeParam& s, int cutoff) {
  return squeeze(FockState::vacuum(1, cutoff), s);
}

double cat_normalization(double alpha, CatParity parity) {
  const double e = std::exp(-2.0 * alpha * alpha);
  return parity == CatParity::kEven ? 2.0 + 2.0 * e : 2.0 - 2.0 * e;
}

FockState cat_state(double alpha, CatParity parity, int cutoff) {
  if (cutoff < 8.0 * alpha * alpha) {
    throw CutoffViolation("cat state needs cutoff >= 8 alpha^2");
  }
  const double norm = cat_normalization(alpha, parity);
  if (norm <= 0.0) throw InvalidArgument("the odd cat state vanishes at alpha = 0");
  const FockState coh = coherent_state(alpha, cutoff);
  const int keep = parity == CatParity::kEven ? 0 : 1;
  FockState s(1, cutoff);
  for (const auto& [occ, amp] : coh.terms()) {
    if (occ[0] % 2 == keep) s.set(occ, 2.0 * amp / std::sqrt(norm));
  }
  return s;
}

Amplitude kraus_upsilon(double q, double y, const KrausParams& k) {
  const double x = k.theta * q - k.phi;
  const double g = y - 2.0 * k.r * std::cos(x);
  return std::pow(2.0 * std::numbers::pi, -0.25) *
         std::exp(Amplitude(-0.25 * g * g, y * k.r * std::sin(x)));
}

double kraus_weight(double q, double y, const KrausParams& k) {
  return std::norm(kraus_upsilon(q, y, k));
}

double GridState::norm_squared() const { return simpson(density(), grid.step()); }

std::vector<double> GridState::density() const {
  std::vector<double> d(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i) d[i] = std::norm(psi[i]);
  return d;
}

GridState to_grid(const FockState& state, const QuadratureGrid& grid) {
  return {grid, quadrature_wavefunction(state, 0.0, grid)};
}

namespace {

void check_resolution(const GridState& s, double y, const KrausParams& k) {
  s.grid.validate();
  if (s.psi.size() != s.grid.points) throw DimensionMismatch("wavefunction/grid size mismatch");
  // Fastest oscillation of Upsilon across q.
  const double omega = std::abs(k.theta) * (std::abs(y * k.r) + k.r * (std::abs(y) + 2 * k.r));
  if (omega * s.grid.step() > 0.5) {
    throw GridResolutionError("quadrature grid too coarse for the Kraus kernel");
  }
}

}  // namespace

double kraus_outcome_density(const GridState& state, double y, const KrausParams& k) {
  check_resolution(state, y, k);
  std::vector<double> f(state.psi.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    f[i] = kraus_weight(state.grid.at(i), y, k) * std::norm(state.psi[i]);
  }
  return simpson(f, state.grid.step()) / state.norm_squared();
}

KrausResult gkp_kraus_update(const GridState& state, double y, const KrausParams& k) {
  check_resolution(state, y, k);
  const double n0 = state.norm_squared();
  if (std::abs(n0 - 1.0) > 1e-6) {
    throw GridResolutionError("input wavefunction is not normalized on this grid");
  }
  KrausResult r;
  r.y = y;
  r.state.grid = state.grid;
  r.state.psi.resize(state.psi.size());
  for (std::size_t i = 0; i < state.psi.size(); ++i) {
    r.state.psi[i] = kraus_upsilon(state.grid.at(i), y, k) * state.psi[i];
  }
  r.density = r.state.norm_squared() / n0;
  if (!(r.density > 0.0)) throw ImprobableHerald("homodyne outcome has zero density");
  const double scale = 1.0 / std::sqrt(r.state.norm_squared());
  for (Amplitude& v : r.state.psi) v *= scale;
  return r;
}

double kraus_total_probability(const GridState& state, const KrausParams& k, double y_min,
                               double y_max, std::size_t points) {
  const QuadratureGrid ys{y_min, y_max, points};
  ys.validate();
  std::vector<double> f(points);
  for (std::size_t i = 0; i < points; ++i) f[i] = kraus_outcome_density(state, ys.at(i), k);
  return simpson(f, ys.step());
}

FockState qq_gate(const FockState& two_mode, double theta) {
  if (two_mode.num_modes() != 2) throw DimensionMismatch("qq_gate acts on two modes");
  if (theta == 0.0) return two_mode;
  const int dim = detail::padded_dim(two_mode.cutoff());
  // q1 q2 is diagonal in the product eigenbasis of the truncated q.
  const HermitianPropagator q(detail::position(dim));
  const Eigen::MatrixXcd& v = q.eigenvectors();
  const Eigen::VectorXd& lam = q.eigenvalues();
  Eigen::MatrixXcd b = v.adjoint() * detail::to_dense2(two_mode, dim) * v.conjugate();
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) b(i, j) *= std::polar(1.0, -theta * lam(i) * lam(j));
  }
  const Eigen::MatrixXcd out = v * b * v.transpose();
  return detail::from_dense2(out, two_mode.cutoff(), "qq_gate", kCvLeakageTolerance);
}

QuadratureMoments quadrature_moments(const FockState& state) {
  const std::size_t m = state.num_modes();
  const double n2 = state.norm_squared();
  std::vector<FockState> low;
  Eigen::VectorXcd mean_a(m);
  for (std::size_t j = 0; j < m; ++j) {
    low.push_back(apply_ladder(state, j, Ladder::kLower));
    mean_a(j) = inner(state, low[j]) / n2;
  }
  // <xi_r xi_s> for xi = (a_0..a_{m-1}, a_0^dag..a_{m-1}^dag).
  Eigen::MatrixXcd mm(2 * m, 2 * m);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t k = 0; k < m; ++k) {
      const Amplitude aa = inner(state, apply_ladder(low[k], j, Ladder::kLower)) / n2;
      const Amplitude nn = inner(low[j], low[k]) / n2;  // <a_j^dag a_k>
      mm(j, k) = aa;
      mm(m + j, m + k) = std::conj(aa);
      mm(m + j, k) = nn;
      mm(j, m + k) = std::conj(nn) + (j == k ? 1.0 : 0.0);  // <a_j a_k^dag>
    }
  }
  Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(2 * m, 2 * m);
  const double s = 1.0 / std::sqrt(2.0);
  const Amplitude mi(0.0, -s);
  for (std::size_t j = 0; j < m; ++j) {
    t(2 * j, j) = s;
    t(2 * j, m + j) = s;
    t(2 * j + 1, j) = mi;
    t(2 * j + 1, m + j) = -mi;
  }
  Eigen::VectorXcd xi_mean(2 * m);
  xi_mean << mean_a, mean_a.conjugate();
  const Eigen::VectorXcd r_mean = t * xi_mean;
  const Eigen::MatrixXcd second = t * mm * t.transpose();
  QuadratureMoments out;
  out.mean = r_mean.real();
  const Eigen::MatrixXcd sym = 0.5 * (second + second.transpose());
  out.cov = (sym - r_mean * r_mean.transpose()).real();
  return out;
}

}  // namespace photonsim
