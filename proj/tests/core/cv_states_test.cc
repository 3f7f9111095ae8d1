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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles/oracles.hpp"
#include "photonsim/errors.hpp"
#include "photonsim/interferometer.hpp"

using namespace photonsim;

namespace {

const double kSqrtPi = std::sqrt(std::numbers::pi);

FockState from_vector(const Eigen::VectorXcd& v) {
  FockState s(1, static_cast<int>(v.size()) - 1);
  for (int n = 0; n < v.size(); ++n) {
    if (std::abs(v(n)) > 0) s.set({n}, v(n));
  }
  return s;
}

double max_error(const FockState& s, const Eigen::VectorXcd& v) {
  double e = 0;
  for (int n = 0; n < v.size(); ++n) e = std::max(e, std::abs(s.amplitude({n}) - v(n)));
  return e;
}

std::vector<std::size_t> local_maxima(const std::vector<double>& f, double floor) {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i + 1 < f.size(); ++i) {
    if (f[i] > floor && f[i] >= f[i - 1] && f[i] > f[i + 1]) out.push_back(i);
  }
  return out;
}

QuadratureGrid gkp_grid(const GKPParams& p) {
  const double half = (2 * p.s_max + 1.5) * p.grid_spacing;
  return QuadratureGrid{-half, half, 2667};
}

}  // namespace

TEST(Displace, ZeroIsIdentity) {
  const FockState s = make_fock({3}, 20);
  EXPECT_NEAR(fidelity(displace(s, {}), s), 1.0, 1e-14);
}

TEST(Displace, VacuumMatchesCoherentOracle) {
  for (const Amplitude alpha : {Amplitude(0.5, 0), Amplitude(1.0, -0.7), Amplitude(0, 2.0)}) {
    const int cutoff = 40;
    const FockState s = displace(FockState::vacuum(1, cutoff), {alpha});
    EXPECT_LT(max_error(s, oracle::coherent_amplitudes(alpha, cutoff + 1)), 1e-10);
    double n = 0;
    for (const auto& [occ, a] : s.terms()) n += occ[0] * std::norm(a);
    EXPECT_NEAR(n, std::norm(alpha), 1e-8);
    EXPECT_LT(max_error(coherent_state(alpha, cutoff), oracle::coherent_amplitudes(alpha, cutoff + 1)),
              1e-12);
  }
}

TEST(Displace, InversePair) {
  const FockState s = make_fock({2}, 40);
  const FockState back = displace(displace(s, {{0.8, 0.3}}), {{-0.8, -0.3}});
  EXPECT_GT(fidelity(back, s), 1 - 1e-10);
}

TEST(Displace, LeakageIsAnError) {
  EXPECT_THROW(displace(FockState::vacuum(1, 10), {{3.0, 0.0}}), LeakageError);
  EXPECT_THROW(coherent_state(3.0, 10), LeakageError);
  EXPECT_THROW(displace(FockState::vacuum(2, 10), {{0.1, 0.0}}), DimensionMismatch);
}

TEST(Squeeze, ZeroIsIdentity) {
  const FockState s = make_fock({4}, 20);
  EXPECT_NEAR(fidelity(squeeze(s, {}), s), 1.0, 1e-14);
  EXPECT_THROW(squeeze(s, {-0.1, 0.0}), InvalidArgument);
}

TEST(Squeeze, VacuumVariances) {
  const FockState q = squeeze(FockState::vacuum(1, 60), {0.5, 0.0});
  const QuadratureMoments m = quadrature_moments(q);
  EXPECT_NEAR(m.cov(0, 0), std::exp(-1.0) / 2, 1e-8);
  EXPECT_NEAR(m.cov(1, 1), std::exp(1.0) / 2, 1e-8);
  const FockState p = squeeze(FockState::vacuum(1, 60), {0.5, std::numbers::pi / 2});
  const QuadratureMoments mp = quadrature_moments(p);
  EXPECT_NEAR(mp.cov(1, 1), std::exp(-1.0) / 2, 1e-8);
  const Eigen::Matrix2d want = oracle::squeezed_covariance(0.4, 0.3);
  const QuadratureMoments g = quadrature_moments(squeeze(FockState::vacuum(1, 60), {0.4, 0.3}));
  EXPECT_LT((g.cov - want).cwiseAbs().maxCoeff(), 1e-8);
}

TEST(Squeeze, OnlyEvenPhotonNumbers) {
  const FockState s = squeezed_vacuum({0.7, 0.2}, 60);
  for (const auto& [occ, a] : s.terms()) {
    if (occ[0] % 2) EXPECT_EQ(std::abs(a), 0.0) << occ[0];
  }
  EXPECT_LT(max_error(s, oracle::squeezed_vacuum_amplitudes(0.7, 0.2, 61)), 1e-10);
}

TEST(Squeeze, LadderTransformOfMean) {
  // <a> after S on |alpha> is alpha cosh r - alpha^* e^{-2i phi} sinh r.
  const Amplitude alpha(0.6, -0.2);
  const double r = 0.4, phi = 0.35;
  const QuadratureMoments m = quadrature_moments(squeeze(coherent_state(alpha, 60), {r, phi}));
  const Amplitude a = alpha * std::cosh(r) - std::conj(alpha) * std::polar(1.0, -2 * phi) * std::sinh(r);
  EXPECT_NEAR(m.mean(0), std::sqrt(2.0) * a.real(), 1e-8);
  EXPECT_NEAR(m.mean(1), std::sqrt(2.0) * a.imag(), 1e-8);
  const Eigen::VectorXcd ref = oracle::displaced_squeezed(alpha, r, phi, 61);
  const FockState ds = displace(squeeze(FockState::vacuum(1, 60), {r, phi}), {alpha});
  EXPECT_LT(max_error(ds, ref), 1e-9);
}

TEST(Cat, OverlapOfOppositeCoherentStates) {
  for (double alpha : {0.5, 1.0, 2.0}) {
    const Amplitude ov = inner(coherent_state(alpha, 40), coherent_state(-alpha, 40));
    EXPECT_NEAR(std::norm(ov), std::exp(-4 * alpha * alpha), 1e-10);
  }
  EXPECT_NEAR(std::norm(inner(coherent_state(2.0, 40), coherent_state(-2.0, 40))), 1.1254e-7, 1e-11);
}

TEST(Cat, ParitySectorsAreEmpty) {
  for (double alpha : {0.5, 1.0, 2.0}) {
    // 8 alpha^2 alone is too tight for the tail check at small alpha.
    const int cutoff = std::max(20, static_cast<int>(std::ceil(8 * alpha * alpha)));
    const FockState even = cat_state(alpha, CatParity::kEven, cutoff);
    const FockState odd = cat_state(alpha, CatParity::kOdd, cutoff);
    EXPECT_TRUE(even.is_normalized(1e-10));
    EXPECT_TRUE(odd.is_normalized(1e-10));
    for (const auto& [occ, a] : even.terms()) {
      if (occ[0] % 2) EXPECT_EQ(a, Amplitude(0.0));
    }
    for (const auto& [occ, a] : odd.terms()) {
      if (occ[0] % 2 == 0) EXPECT_EQ(a, Amplitude(0.0));
    }
    EXPECT_EQ(even.amplitude({1}), Amplitude(0.0));
  }
}

TEST(Cat, NormalizationAndLimits) {
  EXPECT_NEAR(cat_normalization(1.0, CatParity::kEven), 2 + 2 * std::exp(-2.0), 1e-15);
  EXPECT_NEAR(cat_normalization(1.0, CatParity::kOdd), 2 - 2 * std::exp(-2.0), 1e-15);
  EXPECT_NEAR(std::abs(cat_state(1e-4, CatParity::kEven, 8).amplitude({0})), 1.0, 1e-8);
  EXPECT_THROW(cat_state(0.0, CatParity::kOdd, 8), InvalidArgument);
  EXPECT_THROW(cat_state(2.0, CatParity::kEven, 31), CutoffViolation);
  EXPECT_NO_THROW(cat_state(2.0, CatParity::kEven, 32));
}

TEST(Cat, EvenCatFromCoherentSuperposition) {
  const double alpha = 1.3;
  FockState sum = coherent_state(alpha, 40);
  const FockState minus = coherent_state(-alpha, 40);
  for (const auto& [occ, a] : minus.terms()) sum.set(occ, sum.amplitude(occ) + a);
  EXPECT_GT(fidelity(sum.normalized(), cat_state(alpha, CatParity::kEven, 40)), 1 - 1e-12);
}

TEST(GridDuality, RoundTripRecoversAmplitudes) {
  const QuadratureGrid grid{-12.0, 12.0, 4001};
  for (const FockState& s : {cat_state(1.5, CatParity::kOdd, 30), squeezed_vacuum({0.5, 0.3}, 30),
                             coherent_state({1.0, 1.0}, 30)}) {
    const GridState g = to_grid(s, grid);
    EXPECT_NEAR(g.norm_squared(), 1.0, 1e-8);
    const FockState back = fock_from_wavefunction(g.psi, grid, 30);
    for (int n = 0; n <= 30; ++n) EXPECT_NEAR(std::abs(back.amplitude({n}) - s.amplitude({n})), 0.0, 1e-8);
  }
}

TEST(Gkp, EvenAndOddLatticePeaks) {
  const GKPParams p;
  EXPECT_NEAR(p.delta, std::sqrt(2.0) * 0.01, 1e-16);
  const QuadratureGrid grid = gkp_grid(p);
  for (int logical = 0; logical < 2; ++logical) {
    const GKPState g = gkp_state(p, logical, {1.2, 0.0}, 400);
    EXPECT_LT(g.leaked, 1e-10);
    EXPECT_TRUE(g.state.is_normalized(1e-10));
    const std::vector<double> d = to_grid(g.state, grid).density();
    const double top = *std::max_element(d.begin(), d.end());
    for (int s = -p.s_max; s <= p.s_max; ++s) {
      const double x = (2 * s + logical) * p.grid_spacing;
      std::size_t best = 0;
      for (std::size_t i = 0; i < d.size(); ++i) {
        if (std::abs(grid.at(i) - x) < p.grid_spacing / 2 && d[i] > d[best]) best = i;
      }
      EXPECT_LE(std::abs(grid.at(best) - x), grid.step()) << "logical " << logical << " s " << s;
      // Wrong-parity lattice points are empty.
      const double y = x + p.grid_spacing;
      const std::size_t j = static_cast<std::size_t>(std::lround((y - grid.q_min) / grid.step()));
      if (j < d.size()) EXPECT_LT(d[j], 1e-6 * top);
    }
    EXPECT_EQ(local_maxima(d, 0.05 * top).size(), static_cast<std::size_t>(2 * p.s_max + 1));
  }
}

TEST(Gkp, AntiSqueezedBaseWashesOutTheComb) {
  // Variance e^{2r} in X1 for the base state, read literally. A shorter
  // lattice keeps the anti-squeezed copies inside the cutoff.
  GKPParams p;
  p.s_max = 3;
  const GKPState g = gkp_state(p, 0, {1.2, std::numbers::pi / 2}, 400);
  const QuadratureGrid grid = gkp_grid(p);
  const std::vector<double> d = to_grid(g.state, grid).density();
  const double top = *std::max_element(d.begin(), d.end());
  const std::size_t odd = static_cast<std::size_t>(std::lround((p.grid_spacing - grid.q_min) / grid.step()));
  EXPECT_GT(d[odd], 0.1 * top);
}

TEST(Gkp, OverlapGrowsWithDelta) {
  // Peak width tied to the envelope (q variance delta^2 per peak), so both
  // shrink together as delta falls.
  std::vector<double> ov;
  for (double delta : {0.25, 0.3, 0.35, 0.4, 0.45}) {
    GKPParams p;
    p.delta = delta;
    p.s_max = 4;
    const SqueezeParam base{-std::log(std::sqrt(2.0) * delta), 0.0};
    const FockState a = gkp_state(p, 0, base, 300).state;
    const FockState b = gkp_state(p, 1, base, 300).state;
    ov.push_back(std::abs(inner(a, b)));
  }
  for (std::size_t i = 1; i < ov.size(); ++i) EXPECT_GT(ov[i], ov[i - 1]) << i;
}

TEST(Gkp, FixedBaseSqueezeOverlapFallsWithDelta) {
  // With the peak width held fixed, a narrower envelope leaves each |0~> peak
  // fewer |1~> neighbours, so the overlap drops as delta grows.
  double prev = 1.0;
  for (double delta : {0.1, 0.3, 0.5}) {
    GKPParams p;
    p.delta = delta;
    p.s_max = 4;
    const double ov = std::abs(inner(gkp_state(p, 0, {0.3, 0.0}, 300).state,
                                     gkp_state(p, 1, {0.3, 0.0}, 300).state));
    EXPECT_LT(ov, prev);
    prev = ov;
  }
}

TEST(Gkp, Validation) {
  GKPParams p;
  p.delta = 0;
  EXPECT_THROW(p.validate(), InvalidArgument);
  EXPECT_THROW(gkp_state(GKPParams{}, 2, {1.2, 0.0}, 400), InvalidArgument);
}

TEST(ShiftCorrectable, StatedBounds) {
  const GKPParams p;
  const double a = p.grid_spacing, n = p.n_dim;
  EXPECT_TRUE(shift_correctable(0, 0, p));
  EXPECT_FALSE(shift_correctable(a / 2, 0, p));
  EXPECT_FALSE(shift_correctable(-a / 2, 0, p));
  EXPECT_TRUE(shift_correctable(0.4 * a, 0.9 * std::numbers::pi / (n * a), p));
  EXPECT_FALSE(shift_correctable(0, std::numbers::pi / (n * a), p));
  EXPECT_TRUE(shift_correctable(-0.49 * a, -0.99 * std::numbers::pi / (n * a), p));
}

TEST(Kraus, WeightAtCentreOfKernel) {
  const KrausParams k;
  for (double q : {-1.0, 0.0, 0.37, 2.5}) {
    const double y = 2 * k.r * std::cos(k.theta * q - k.phi);
    EXPECT_NEAR(kraus_weight(q, y, k), 1 / std::sqrt(2 * std::numbers::pi), 1e-15);
    for (double dy : {-1.0, 0.3}) {
      EXPECT_NEAR(kraus_weight(q, y + dy, k), std::norm(kraus_upsilon(q, y + dy, k)), 1e-15);
    }
  }
}

TEST(Kraus, OutcomeDensityIntegratesToOne) {
  const KrausParams soft{kSqrtPi, 0.0, 1.0};
  const GridState coh = to_grid(coherent_state({0.8, 0.3}, 30), QuadratureGrid{-8, 8, 2001});
  EXPECT_NEAR(kraus_total_probability(coh, soft, -10, 10), 1.0, 1e-6);
  const GridState cat = to_grid(cat_state(1.0, CatParity::kEven, 30), QuadratureGrid{-6, 6, 4801});
  EXPECT_NEAR(kraus_total_probability(cat, KrausParams{}, -14, 14), 1.0, 1e-6);
}

TEST(Kraus, PhaseSqueezedInputGivesComb) {
  const KrausParams k;
  const GridState in = to_grid(squeezed_vacuum({1.0, std::numbers::pi / 2}, 80), QuadratureGrid{-12, 12, 6001});
  const KrausResult r = gkp_kraus_update(in, 2 * k.r, k);
  EXPECT_NEAR(r.state.norm_squared(), 1.0, 1e-12);
  EXPECT_GT(r.density, 0.0);
  const std::vector<double> d = r.state.density();
  const double top = *std::max_element(d.begin(), d.end());
  const std::vector<std::size_t> peaks = local_maxima(d, 0.01 * top);
  EXPECT_GE(peaks.size(), 3u);
  for (std::size_t i : peaks) {
    const double q = r.state.grid.at(i);
    const double k_index = q * k.theta / (2 * std::numbers::pi);
    // The Gaussian input drags each peak a little toward q = 0.
    EXPECT_NEAR(k_index, std::round(k_index), 0.1);
  }
}

TEST(Kraus, CoarseGridIsDiagnosed) {
  const GridState in = to_grid(coherent_state(0.5, 20), QuadratureGrid{-8, 8, 101});
  EXPECT_THROW(gkp_kraus_update(in, 1.0, KrausParams{}), GridResolutionError);
}

TEST(QqGate, ZeroIsIdentity) {
  const FockState s = tensor(coherent_state(0.5, 20), squeezed_vacuum({0.3, 0.0}, 20));
  EXPECT_GT(fidelity(qq_gate(s, 0.0), s), 1 - 1e-12);
  EXPECT_THROW(qq_gate(FockState::vacuum(1, 10), 0.1), DimensionMismatch);
}

TEST(QqGate, VacuumCorrelationToFirstOrder) {
  const double theta = 0.1;
  const QuadratureMoments m = quadrature_moments(qq_gate(FockState::vacuum(2, 25), theta));
  EXPECT_NEAR(m.cov(0, 3), -theta / 2, 1e-8);
  EXPECT_NEAR(m.cov(1, 2), -theta / 2, 1e-8);
  EXPECT_NEAR(m.cov(0, 2), 0.0, 1e-10);
  EXPECT_NEAR(m.cov(1, 1), 0.5 + theta * theta / 2, 1e-8);
}

TEST(QqGate, GaussianMomentsMatchSymplecticOracle) {
  const SqueezeParam s1{0.3, 0.0}, s2{0.2, 0.4};
  const double theta = 0.5;
  const FockState in = tensor(squeezed_vacuum(s1, 40), squeezed_vacuum(s2, 40));
  const QuadratureMoments m = quadrature_moments(qq_gate(in, theta));
  Eigen::Matrix4d v0 = Eigen::Matrix4d::Zero();
  v0.block<2, 2>(0, 0) = oracle::squeezed_covariance(s1.r, s1.phi);
  v0.block<2, 2>(2, 2) = oracle::squeezed_covariance(s2.r, s2.phi);
  const Eigen::Matrix4d s = oracle::qq_symplectic(theta);
  const Eigen::Matrix4d want = s * v0 * s.transpose();
  EXPECT_LT((m.cov - want).cwiseAbs().maxCoeff(), 1e-6);
  EXPECT_LT(m.mean.cwiseAbs().maxCoeff(), 1e-10);
  EXPECT_NEAR(oracle::log_negativity(v0), 0.0, 1e-12);
  EXPECT_GT(oracle::log_negativity(m.cov), 0.1);
}

TEST(Gbs, DefaultsMatchDenseTensorOracle) {
  const GBSSchemeSpec spec = GBSSchemeSpec::defaults();
  const GBSResult r = gbs_herald(spec);
  std::array<Eigen::VectorXcd, 3> inputs;
  for (int m = 0; m < 3; ++m) {
    inputs[m] = oracle::displaced_squeezed(spec.displacement[m].alpha, spec.squeeze[m].r,
                                           spec.squeeze[m].phi, spec.cutoff + 1);
    inputs[m].normalize();
  }
  Eigen::MatrixXcd mm = Eigen::MatrixXcd::Identity(3, 3);
  for (const BeamsplitterSetting& b : spec.network) {
    mm = mm * oracle::beamsplitter(3, static_cast<int>(b.mode_a), static_cast<int>(b.mode_b), b.theta, b.phi);
  }
  const oracle::HeraldedMode dense = oracle::gbs_dense(inputs, mm, spec.herald[0], spec.herald[1], spec.cutoff);
  EXPECT_NEAR(r.heralded.probability(), dense.probability, 1e-9 * dense.probability);
  const Eigen::VectorXcd want = dense.amplitudes / std::sqrt(dense.probability);
  EXPECT_LT(max_error(r.heralded.state(), want), 1e-9);
  // Frozen from the dense oracle at these defaults.
  EXPECT_NEAR(dense.probability, 1.92e-3, 0.01e-3);
  EXPECT_LT(r.residual, 1e-6);
  EXPECT_EQ(r.n_max, 2);
  EXPECT_EQ(r.coefficients.size(), 3u);
}

TEST(Gbs, TrivialSchemes) {
  GBSSchemeSpec vac;
  vac.herald = {0, 0};
  const GBSResult v = gbs_herald(vac);
  EXPECT_NEAR(v.heralded.probability(), 1.0, 1e-14);
  EXPECT_NEAR(std::abs(v.heralded.state().amplitude({0})), 1.0, 1e-14);

  GBSSchemeSpec one;
  one.herald = {0, 0};
  one.squeeze[0] = {0.3, 0.2};
  const GBSResult s = gbs_herald(one);
  EXPECT_NEAR(s.heralded.probability(), 1.0, 1e-12);
  const Eigen::VectorXcd sq = oracle::squeezed_vacuum_amplitudes(0.3, 0.2, one.cutoff + 1).normalized();
  EXPECT_LT(max_error(s.heralded.state(), sq), 1e-12);
  // The fit only sees the state below cutoff 10.
  EXPECT_NEAR(s.xi1.r, 0.3, 1e-5);
}

TEST(Gbs, ImprobableAndInvalidSpecs) {
  GBSSchemeSpec none;  // vacuum inputs can never click
  EXPECT_THROW(gbs_herald(none), ImprobableHerald);
  GBSSchemeSpec neg = GBSSchemeSpec::defaults();
  neg.herald = {-1, 0};
  EXPECT_THROW(gbs_herald(neg), InvalidArgument);
  GBSSchemeSpec big = GBSSchemeSpec::defaults();
  big.herald = {6, 6};
  EXPECT_THROW(big.validate(), InvalidArgument);
  GBSSchemeSpec self = GBSSchemeSpec::defaults();
  self.network.push_back({1, 1, 0.2, 0.0});
  EXPECT_THROW(gbs_herald(self), InvalidArgument);
}
