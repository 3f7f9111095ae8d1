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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "oracles/oracles.hpp"
#include "photonsim/cv_states.hpp"
#include "photonsim/errors.hpp"

using namespace photonsim;

TEST(ProjectCount, Examples) {
  FockState s(2, 1);
  s.set({1, 0}, M_SQRT1_2);
  s.set({0, 1}, M_SQRT1_2);
  HeraldedResult r = project_count(s, 0, 1);
  EXPECT_NEAR(r.probability(), 0.5, 1e-15);
  EXPECT_EQ(r.state().num_modes(), 1u);
  EXPECT_NEAR(std::abs(r.state().amplitude({0})), 1.0, 1e-15);

  HeraldedResult q = project_count(make_fock({1, 0}, 1), 1, 0);
  EXPECT_EQ(q.probability(), 1.0);
  EXPECT_EQ(q.state().amplitude({1}), Amplitude(1.0));

  HeraldedResult z = project_count(make_fock({1, 0}, 1), 0, 0);
  EXPECT_EQ(z.probability(), 0.0);
  EXPECT_FALSE(z.succeeded());
  EXPECT_THROW(z.state(), ImprobableHerald);
}

TEST(ProjectCount, IdempotentInDistribution) {
  std::mt19937_64 rng(4);
  FockState s = test_util::random_state(3, 2, 4, rng);
  for (int n = 0; n <= 2; ++n) {
    HeraldedResult first = project_count(s, 1, n);
    if (!first.succeeded(1e-14)) continue;
    // Re-measuring the same mode: rebuild it in the measured state.
    FockState again = tensor(first.state(), make_fock({n}, 2));
    EXPECT_NEAR(project_count(again, 2, n).probability(), 1.0, 1e-12);
  }
}

TEST(BucketPovm, Examples) {
  DetectorModel ideal{1.0, 0.0, DetectorModel::Kind::kBucket};
  EXPECT_NEAR(outcome_probability(make_fock({1}, 3), 0, bucket_povm(ideal, 3).click), 1.0, 1e-15);
  DetectorModel half{0.5, 0.0, DetectorModel::Kind::kBucket};
  const BucketPovm p = bucket_povm(half, 10);
  EXPECT_NEAR(outcome_probability(make_fock({2}, 10), 0, p.no_click), 0.25, 1e-15);
  EXPECT_NEAR(outcome_probability(make_fock({2}, 10), 0, p.click), 0.75, 1e-15);
  DetectorModel blind{0.0, 0.0, DetectorModel::Kind::kBucket};
  EXPECT_EQ(bucket_povm(blind, 5).click.cwiseAbs().maxCoeff(), 0.0);
}

TEST(BucketPovm, DarkCountsScaleNoClick) {
  DetectorModel d{0.7, 0.1, DetectorModel::Kind::kBucket};
  DetectorModel clean{0.7, 0.0, DetectorModel::Kind::kBucket};
  const BucketPovm p = bucket_povm(d, 6);
  EXPECT_TRUE(p.no_click.isApprox(0.9 * bucket_povm(clean, 6).no_click, 1e-15));
  EXPECT_LT((p.no_click + p.click - Eigen::VectorXd::Ones(7)).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_NEAR(DetectorModel::dark_prob_from_rate(100.0, 1e-3), 1.0 - std::exp(-0.1), 1e-15);
}

TEST(BucketPovm, ClickProbabilityMonotoneInEfficiency) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    FockState s = test_util::random_state(1, 8, 8, rng);
    double prev = -1.0;
    for (int k = 0; k <= 20; ++k) {
      DetectorModel d{k / 20.0, 0.02, DetectorModel::Kind::kBucket};
      const double c = outcome_probability(s, 0, bucket_povm(d, 8).click);
      EXPECT_GE(c, prev - 1e-15);
      prev = c;
    }
  }
}

TEST(PnrPovm, Examples) {
  DetectorModel ideal{1.0, 0.0, DetectorModel::Kind::kPNR};
  for (int n = 0; n <= 4; ++n) {
    Eigen::VectorXd e = pnr_povm(ideal, n, 4);
    EXPECT_EQ(e(n), 1.0);
    EXPECT_EQ(e.sum(), 1.0);
  }
  DetectorModel half{0.5, 0.0, DetectorModel::Kind::kPNR};
  EXPECT_NEAR(outcome_probability(make_fock({2}, 10), 0, pnr_povm(half, 1, 10)), 0.5, 1e-15);
}

TEST(PnrPovm, Completeness) {
  for (double eta : {0.0, 0.3, 0.5, 0.9, 1.0}) {
    for (double dark : {0.0, 0.05}) {
      DetectorModel d{eta, dark, DetectorModel::Kind::kPNR};
      Eigen::VectorXd sum = Eigen::VectorXd::Zero(11);
      for (int n = 0; n < pnr_outcome_count(d, 10); ++n) sum += pnr_povm(d, n, 10);
      EXPECT_LT((sum - Eigen::VectorXd::Ones(11)).cwiseAbs().maxCoeff(), 1e-12);
    }
  }
}

TEST(DetectorModelTest, Validation) {
  EXPECT_THROW((DetectorModel{1.2, 0.0}.validate()), InvalidArgument);
  EXPECT_THROW((DetectorModel{0.5, 1.0}.validate()), InvalidArgument);
  EXPECT_THROW((DetectorModel{0.5, -0.1}.validate()), InvalidArgument);
}

TEST(Herald, TrivialCircuit) {
  HeraldedResult r = herald(make_fock({1, 0}, 1), {}, HeraldSpec{{1}, {0}});
  EXPECT_EQ(r.probability(), 1.0);
  EXPECT_THROW(herald(make_fock({1, 0}, 1), {}, HeraldSpec{{1}, {0}}, {1}), InvalidArgument);
}

TEST(Herald, ExhaustiveEnumerationSumsToOne) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    FockState s = test_util::random_state(3, 3, 3, rng);
    s = apply_unitary(s, ModeUnitary(test_util::random_unitary(3, rng)), {0, 1, 2});
    double total = 0.0;
    for (const HeraldedResult& r : enumerate_heralds(s, {1, 2})) {
      total += r.probability();
      if (r.succeeded(1e-14)) EXPECT_NEAR(r.state().norm(), 1.0, 1e-12);
    }
    EXPECT_NEAR(total, 1.0, 1e-10);
  }
}

TEST(QuadraturePdf, VacuumAndSinglePhoton) {
  const QuadratureGrid grid{-8.0, 8.0, 1601};
  const std::vector<double> vac = quadrature_pdf(FockState::vacuum(1, 4), {}, grid);
  const std::vector<double> one = quadrature_pdf(make_fock({1}, 4), {}, grid);
  for (std::size_t i = 0; i < grid.points; i += 37) {
    const double q = grid.at(i);
    EXPECT_NEAR(vac[i], std::norm(oracle::coherent_wavefunction(0.0, q)), 1e-14);
    EXPECT_NEAR(one[i], 2 * q * q * std::exp(-q * q) / std::sqrt(M_PI), 1e-14);
  }
  EXPECT_NEAR(one[800], 0.0, 1e-30);
  std::vector<double> q2(grid.points);
  for (std::size_t i = 0; i < grid.points; ++i) q2[i] = grid.at(i) * grid.at(i) * vac[i];
  EXPECT_NEAR(simpson(q2, grid.step()), 0.5, 1e-10);
}

TEST(QuadraturePdf, CoherentStateMatchesClosedForm) {
  const Amplitude beta(0.7, -0.4);
  const QuadratureGrid grid = QuadratureGrid::for_cutoff(30);
  const std::vector<double> pdf = quadrature_pdf(coherent_state(beta, 30), {}, grid);
  for (std::size_t i = 0; i < grid.points; i += 101) {
    EXPECT_NEAR(pdf[i], std::norm(oracle::coherent_wavefunction(beta, grid.at(i))), 1e-10);
  }
}

TEST(QuadraturePdf, NormalizedUpToCutoffThirty) {
  std::mt19937_64 rng(17);
  for (int cutoff : {1, 5, 12, 20, 30}) {
    FockState s = test_util::random_state(1, cutoff, cutoff, rng);
    const QuadratureGrid grid = QuadratureGrid::for_cutoff(cutoff);
    EXPECT_NEAR(simpson(quadrature_pdf(s, {0.3, 1.0}, grid), grid.step()), 1.0, 1e-8);
  }
}

TEST(QuadraturePdf, CoarseGridIsReported) {
  EXPECT_THROW(quadrature_pdf(make_fock({20}, 20), {}, QuadratureGrid{-2, 2, 11}),
               GridResolutionError);
}

TEST(QuadraturePdf, NumberStatesHaveZeroMean) {
  const QuadratureGrid grid = QuadratureGrid::for_cutoff(6);
  for (int n = 0; n <= 6; ++n) {
    const std::vector<double> pdf = quadrature_pdf(make_fock({n}, 6), {0.7, 1.0}, grid);
    std::vector<double> qf(pdf.size());
    for (std::size_t i = 0; i < pdf.size(); ++i) qf[i] = grid.at(i) * pdf[i];
    EXPECT_NEAR(simpson(qf, grid.step()), 0.0, 1e-12);
  }
}

TEST(FockGridDuality, RoundTripUpToCutoffThirty) {
  std::mt19937_64 rng(23);
  for (int cutoff : {2, 10, 30}) {
    FockState s = test_util::random_state(1, cutoff, cutoff, rng);
    const QuadratureGrid grid = QuadratureGrid::for_cutoff(cutoff);
    FockState back = fock_from_wavefunction(quadrature_wavefunction(s, 0.0, grid), grid, cutoff);
    EXPECT_LT(test_util::max_amplitude_error(back, test_util::to_ket(s)), 1e-8);
  }
}

TEST(Homodyne, VacuumVariance) {
  const FockState vac = FockState::vacuum(1, 4);
  const HomodyneSampler sampler(vac, {}, QuadratureGrid::for_cutoff(4));
  CounterRng rng(1234);
  double sum = 0, sum2 = 0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const double x = sampler.sample(rng);
    sum += x;
    sum2 += x * x;
  }
  const double mean = sum / n;
  EXPECT_NEAR(sum2 / n - mean * mean, 0.5, 0.01);
  EXPECT_NEAR(sampler.variance(), 0.5, 1e-10);
}

TEST(Homodyne, CoherentMean) {
  const double beta = 0.8;
  const FockState s = coherent_state(beta, 25);
  const HomodyneSampler sampler(s, {}, QuadratureGrid::for_cutoff(25, std::sqrt(2.0) * beta));
  CounterRng rng(99);
  const int n = 20000;
  double sum = 0;
  for (int i = 0; i < n; ++i) sum += sampler.sample(rng);
  const double sigma = std::sqrt(0.5);
  EXPECT_NEAR(sum / n, std::sqrt(2.0) * beta, 3 * sigma / std::sqrt(n));
}

TEST(Homodyne, SinglePhotonMeanIsZero) {
  const HomodyneSampler sampler(make_fock({1}, 2), {}, QuadratureGrid::for_cutoff(2));
  CounterRng rng(5);
  const int n = 20000;
  double sum = 0;
  for (int i = 0; i < n; ++i) sum += sampler.sample(rng);
  const double sigma = std::sqrt(1.5);
  EXPECT_NEAR(sum / n, 0.0, 3 * sigma / std::sqrt(n));
}

TEST(Homodyne, KappaScalesTheCurrent) {
  const FockState s = coherent_state(0.5, 20);
  CounterRng a(7), b(7);
  const double x1 = homodyne_sample(s, {0.0, 1.0}, a);
  const double x4 = homodyne_sample(s, {0.0, 4.0}, b);
  EXPECT_NEAR(x4, 2.0 * x1, 1e-12);
}
