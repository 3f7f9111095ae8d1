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

#include "photonsim/interferometer.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "oracles/oracles.hpp"
#include "photonsim/errors.hpp"

using namespace photonsim;
using photonsim::test_util::random_state;
using photonsim::test_util::random_unitary;

TEST(Beamsplitter, MatrixFollowsModeChangeEquations) {
  EXPECT_TRUE(beamsplitter(0.0).matrix().isApprox(Eigen::Matrix2cd::Identity()));
  Eigen::Matrix2cd expect;
  expect << 1, 1, -1, 1;
  expect /= std::sqrt(2.0);
  EXPECT_TRUE(beamsplitter(M_PI / 4).matrix().isApprox(expect, 1e-15));
  const ModeUnitary u = beamsplitter(0.7, 0.3);
  EXPECT_EQ(u.matrix()(0, 1), std::polar(std::sin(0.7), -0.3));
  EXPECT_EQ(u.matrix()(1, 0), -std::polar(std::sin(0.7), 0.3));
}

TEST(Beamsplitter, NegativeAngleIsAdjoint) {
  for (double t : {0.1, 0.9, 2.5}) {
    EXPECT_TRUE(beamsplitter(-t, 0.4).matrix().isApprox(beamsplitter(t, 0.4).adjoint().matrix(),
                                                        1e-15));
  }
}

TEST(ModeUnitaryTest, RejectsNonUnitary) {
  Eigen::Matrix2cd m;
  m << 1, 0.1, 0, 1;
  EXPECT_THROW(ModeUnitary{m}, NotUnitary);
}

TEST(PhaseGate, ActsOnLogicalZero) {
  EXPECT_TRUE(phase_gate(0.0).matrix().isApprox(Eigen::Matrix2cd::Identity()));
  FockState out = apply_unitary(make_fock({1, 0}, 1), phase_gate(0.3), {0, 1});
  EXPECT_NEAR(std::abs(out.amplitude({1, 0}) - std::polar(1.0, -0.3)), 0.0, 1e-15);
}

TEST(PhaseGate, MultiPhotonKetsMatchDenseGenerator) {
  const double phi = 0.37;
  const Eigen::MatrixXcd dense = oracle::fock_space_unitary(phase_gate(phi).matrix(), 4);
  for (int n = 0; n <= 4; ++n) {
    for (int m = 0; n + m <= 4; ++m) {
      FockState out = apply_unitary(make_fock({n, m}, 4), phase_gate(phi), {0, 1});
      const Amplitude want = dense(oracle::fock_index({n, m}, 4), oracle::fock_index({n, m}, 4));
      EXPECT_NEAR(std::abs(out.amplitude({n, m}) - want), 0.0, 1e-12);
      EXPECT_NEAR(std::abs(want - std::polar(1.0, -phi * (n - m))), 0.0, 1e-12);
    }
  }
}

TEST(ApplyUnitary, SinglePhotonOnBalancedSplitter) {
  FockState out = apply_unitary(make_fock({1, 0}, 1), beamsplitter(M_PI / 4), {0, 1});
  EXPECT_NEAR(out.amplitude({1, 0}).real(), M_SQRT1_2, 1e-15);
  EXPECT_NEAR(out.amplitude({0, 1}).real(), M_SQRT1_2, 1e-15);
}

TEST(ApplyUnitary, TwoPhotonBunching) {
  FockState out = apply_unitary(make_fock({1, 1}, 4), beamsplitter(M_PI / 4), {0, 1});
  const Eigen::MatrixXcd dense = oracle::fock_space_unitary(beamsplitter(M_PI / 4).matrix(), 4);
  const int in = oracle::fock_index({1, 1}, 4);
  EXPECT_NEAR(std::abs(out.amplitude({2, 0}) - dense(oracle::fock_index({2, 0}, 4), in)), 0, 1e-12);
  EXPECT_NEAR(std::abs(out.amplitude({0, 2}) - dense(oracle::fock_index({0, 2}, 4), in)), 0, 1e-12);
  EXPECT_EQ(out.amplitude({1, 1}), Amplitude(0.0));
  FockState want(2, 4);
  want.set({2, 0}, M_SQRT1_2);
  want.set({0, 2}, -M_SQRT1_2);
  EXPECT_TRUE(equal_up_to_phase(out, want));
}

TEST(ApplyUnitary, VacuumIsInvariant) {
  std::mt19937_64 rng(5);
  FockState out = apply_unitary(FockState::vacuum(3, 2), ModeUnitary(random_unitary(3, rng)),
                                {0, 1, 2});
  EXPECT_EQ(out.amplitude({0, 0, 0}), Amplitude(1.0));
  EXPECT_EQ(out.size(), 1u);
}

TEST(ApplyUnitary, ErrorsOnBadTargets) {
  FockState s = make_fock({1, 0, 0}, 1);
  EXPECT_THROW(apply_unitary(s, beamsplitter(0.3), {0, 0}), InvalidArgument);
  EXPECT_THROW(apply_unitary(s, beamsplitter(0.3), {0, 1, 2}), DimensionMismatch);
  EXPECT_THROW(apply_unitary(s, beamsplitter(0.3), {0, 5}), DimensionMismatch);
}

TEST(ApplyUnitary, LeakagePolicies) {
  FockState s = make_fock({1, 1}, 1);
  EXPECT_THROW(apply_unitary(s, beamsplitter(M_PI / 4), {0, 1}), CutoffViolation);
  FockState t = apply_unitary(s, beamsplitter(M_PI / 4), {0, 1}, CutoffPolicy::kTruncate);
  EXPECT_NEAR(t.leaked_norm(), 1.0, 1e-14);
}

TEST(InterferometerProperties, OracleEquivalenceAgainstDenseGenerator) {
  std::mt19937_64 rng(2026);
  for (int modes = 1; modes <= 3; ++modes) {
    for (int trial = 0; trial < 5; ++trial) {
      const int cutoff = 4;
      const Eigen::MatrixXcd m = random_unitary(modes, rng);
      FockState in = random_state(modes, cutoff, cutoff, rng);
      std::vector<std::size_t> targets(modes);
      for (int i = 0; i < modes; ++i) targets[i] = i;
      FockState out = apply_unitary(in, ModeUnitary(m), targets);
      const Eigen::VectorXcd want = oracle::fock_space_unitary(m, cutoff) * test_util::to_vector(in);
      EXPECT_LT((test_util::to_vector(out) - want).cwiseAbs().maxCoeff(), 1e-9);
      // The permanent route agrees as well.
      EXPECT_LT(test_util::max_amplitude_error(out, oracle::apply_linear_optics(m, test_util::to_ket(in), cutoff)),
                1e-10);
    }
  }
}

TEST(InterferometerProperties, PhotonNumberConservation) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    FockState in(4, 3);
    Occupation occ{trial % 2, 1, (trial / 2) % 2, 0};
    in.set(occ, 1.0);
    FockState out = apply_unitary(in, ModeUnitary(random_unitary(4, rng)), {0, 1, 2, 3});
    for (const auto& [o, amp] : out.terms()) EXPECT_EQ(total_photons(o), total_photons(occ));
  }
}

TEST(InterferometerProperties, UnitarityAndNorm) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const ModeUnitary u(random_unitary(3, rng));
    FockState a = random_state(3, 3, 3, rng);
    FockState b = random_state(3, 3, 3, rng);
    FockState ua = apply_unitary(a, u, {0, 1, 2});
    FockState ub = apply_unitary(b, u, {2, 0, 1});
    FockState ub2 = apply_unitary(b, u, {0, 1, 2});
    EXPECT_NEAR(std::abs(inner(ua, ub2) - inner(a, b)), 0.0, 1e-10);
    EXPECT_NEAR(ua.norm(), 1.0, 1e-12);
    EXPECT_NEAR(ub.norm(), 1.0, 1e-12);
  }
}

TEST(InterferometerProperties, Composition) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    const ModeUnitary u1(random_unitary(3, rng));
    const ModeUnitary u2(random_unitary(3, rng));
    FockState s = random_state(3, 3, 3, rng);
    FockState step = apply_unitary(apply_unitary(s, u1, {0, 1, 2}), u2, {0, 1, 2});
    FockState once = apply_unitary(s, u1.then(u2), {0, 1, 2});
    EXPECT_LT(test_util::max_amplitude_error(step, test_util::to_ket(once)), 1e-10);
  }
}

TEST(Pbs, ModePermutation) {
  // aH -> port1 H, aV -> port2 V, bH -> port2 H, bV -> -port1 V.
  const Eigen::MatrixXcd m = polarising_beamsplitter().matrix();
  EXPECT_EQ(m(0, 0), Amplitude(1.0));
  EXPECT_EQ(m(1, 3), Amplitude(1.0));
  EXPECT_EQ(m(2, 2), Amplitude(1.0));
  EXPECT_EQ(m(3, 1), Amplitude(-1.0));
  const auto p1 = pbs_single_photon(1, 1.0);
  EXPECT_EQ(p1[0], Amplitude(1.0));
  const auto p2 = pbs_single_photon(2, 0.64);
  double total = 0.0;
  for (Amplitude a : p2) total += std::norm(a);
  EXPECT_NEAR(total, 1.0, 1e-15);
  EXPECT_NEAR(std::norm(p2[2]), 0.64, 1e-15);
}

TEST(Pauli, LogicalActions) {
  const LogicalEncoding e = LogicalEncoding::dual_rail(0, 1);
  EXPECT_EQ(pauli_logical(make_fock({1, 0}, 1), e, Pauli::kX).amplitude({0, 1}), Amplitude(1.0));
  EXPECT_EQ(pauli_logical(make_fock({0, 1}, 1), e, Pauli::kZ).amplitude({0, 1}), Amplitude(-1.0));
  FockState b = bloch_state(0.4, 1.1);
  FockState xx = pauli_logical(pauli_logical(b, e, Pauli::kX), e, Pauli::kX);
  EXPECT_LT(test_util::max_amplitude_error(xx, test_util::to_ket(b)), 1e-15);
  // Y = iXZ on |0> gives i|1>.
  EXPECT_NEAR(std::abs(pauli_logical(make_fock({1, 0}, 1), e, Pauli::kY).amplitude({0, 1}) -
                       Amplitude(0.0, 1.0)),
              0.0, 1e-15);
  EXPECT_THROW(pauli_logical(make_fock({1, 1}, 1), e, Pauli::kX), CodeSpaceViolation);
}

namespace {

// Trapezoid integral of xi(t) xi(t - tau) on a fine grid, starting where the
// delayed pulse switches on.
double overlap_by_quadrature(double gamma, double tau) {
  const PulseShape p(gamma);
  const double t0 = std::abs(tau);
  const int n = 400000;
  const double h = 60.0 / gamma / n;
  double acc = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double t = t0 + i * h;
    const double w = (i == 0 || i == n) ? 0.5 : 1.0;
    acc += w * p.amplitude(t) * p.amplitude(t - std::abs(tau));
  }
  return acc * h;
}

}  // namespace

TEST(TemporalOverlap, Examples) {
  EXPECT_NEAR(std::abs(temporal_overlap(PulseShape(1.0), 0.0).overlap), 1.0, 1e-15);
  EXPECT_LT(std::abs(temporal_overlap(PulseShape(1.0), 80.0).overlap), 1e-15);
  const TemporalDecomposition d = temporal_overlap(PulseShape(1.0), 2 * std::log(2.0));
  EXPECT_NEAR(d.overlap.real(), 0.5, 1e-15);
  EXPECT_NEAR(overlap_by_quadrature(1.0, 2 * std::log(2.0)), 0.5, 1e-6);
  EXPECT_NEAR(std::norm(d.overlap) + d.orthogonal_weight * d.orthogonal_weight, 1.0, 1e-12);
}

TEST(Hom, Examples) {
  const PulseShape p(1.0);
  EXPECT_EQ(hom_coincidence(p, 0.0), 0.0);
  EXPECT_NEAR(hom_coincidence(p, 200.0), 0.5, 1e-15);
  EXPECT_NEAR(hom_coincidence(p, std::log(2.0)), 0.25, 1e-15);
  EXPECT_NEAR(hom_coincidence_simulated(p, 0.0), 0.0, 1e-10);
  EXPECT_NEAR(hom_coincidence_simulated(p, std::log(2.0)), 0.25, 1e-12);
}

TEST(Hom, DualPathAgreement) {
  for (double gamma : {0.5, 1.0, 3.0}) {
    const PulseShape p(gamma);
    for (int i = 0; i < 50; ++i) {
      const double tau = 5.0 / gamma * i / 49.0;
      EXPECT_NEAR(hom_coincidence_simulated(p, tau), oracle::hom_coincidence(gamma, tau), 1e-8);
      EXPECT_NEAR(hom_coincidence_simulated(p, -tau), hom_coincidence(p, tau), 1e-8);
    }
  }
}
