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

#include "photonsim/fusion.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "photonsim/errors.hpp"
#include "photonsim/mbqc.hpp"

using namespace photonsim;

namespace {

ClusterGraph two_lines(int n, int m) {
  ClusterGraph g = ClusterGraph::linear(n);
  g.merge_disjoint(ClusterGraph::linear(m, n));
  return g;
}

// Logical fidelity over the same labels; mode layouts may differ.
double register_fidelity(const DualRailRegister& a, const DualRailRegister& b) {
  std::vector<int> la = a.labels(), lb = b.labels();
  std::sort(la.begin(), la.end());
  std::sort(lb.begin(), lb.end());
  if (la != lb) return -1.0;
  const DualRailRegister sa = a.reordered(la);
  const DualRailRegister sb = b.reordered(lb);
  const std::vector<Amplitude> x = sa.logical_amplitudes();
  const std::vector<Amplitude> y = sb.logical_amplitudes();
  Amplitude ov = 0;
  double nx = 0, ny = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    ov += std::conj(x[i]) * y[i];
    nx += std::norm(x[i]);
    ny += std::norm(y[i]);
  }
  return std::norm(ov) / (nx * ny);
}

double sum_probability(const std::vector<FusionBranch>& branches) {
  double s = 0;
  for (const FusionBranch& b : branches) s += b.probability;
  return s;
}

double success_probability(const std::vector<FusionBranch>& branches) {
  double s = 0;
  for (const FusionBranch& b : branches) {
    if (b.outcome.success) s += b.probability;
  }
  return s;
}

Eigen::Matrix4cd even_projector() {
  Eigen::Matrix4cd p = Eigen::Matrix4cd::Zero();
  p(0, 0) = 1;
  p(3, 3) = 1;
  return p;
}

// Graph rewrite versus Fock branch for every herald.
void expect_agreement(const ClusterGraph& g, const std::vector<FusionBranch>& branches) {
  for (const FusionBranch& b : branches) {
    const RewriteResult r = apply_fusion(g, b.outcome);
    EXPECT_GT(register_fidelity(b.residual, graph_state_register(r.graph, r.frame, r.detached)),
              1 - 1e-8)
        << g.to_string() << " herald " << b.outcome.herald_counts.size();
  }
}

}  // namespace

TEST(TypeIKraus, ParityProjector) {
  const TypeIKraus k = type1_kraus();
  const Eigen::Matrix4cd sum = k.herald_h.adjoint() * k.herald_h + k.herald_v.adjoint() * k.herald_v;
  EXPECT_LT((sum - even_projector()).cwiseAbs().maxCoeff(), 1e-12);
  // Each herald is |0><00| +- |1><11| scaled by 1/sqrt2, with opposite signs.
  for (const auto* m : {&k.herald_h, &k.herald_v}) {
    EXPECT_NEAR(std::abs((*m)(0, 0)), M_SQRT1_2, 1e-12);
    EXPECT_NEAR(std::abs((*m)(1, 3)), M_SQRT1_2, 1e-12);
    EXPECT_NEAR(std::abs((*m)(0, 1)) + std::abs((*m)(0, 2)) + std::abs((*m)(1, 1)) +
                    std::abs((*m)(1, 2)) + std::abs((*m)(1, 0)) + std::abs((*m)(0, 3)),
                0.0, 1e-12);
  }
  const Amplitude rh = k.herald_h(1, 3) / k.herald_h(0, 0);
  const Amplitude rv = k.herald_v(1, 3) / k.herald_v(0, 0);
  EXPECT_NEAR(std::abs(rh + rv), 0.0, 1e-12);
}

TEST(TypeIIKraus, ParityProjector) {
  Eigen::Matrix4cd sum = Eigen::Matrix4cd::Zero();
  const auto k = type2_kraus();
  EXPECT_EQ(k.size(), 4u);
  for (const auto& [h, row] : k) sum += row.adjoint() * row;
  EXPECT_LT((sum - even_projector()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(TypeIFusion, BellPairsGiveThreeCluster) {
  const ClusterGraph g = two_lines(2, 2);
  const std::vector<FusionBranch> br = fusion_type1_branches(build_cluster(g), 1, 2);
  EXPECT_NEAR(success_probability(br), 0.5, 1e-12);
  EXPECT_NEAR(sum_probability(br), 1.0, 1e-10);
  for (const FusionBranch& b : br) {
    if (!b.outcome.success) continue;
    const RewriteResult r = apply_fusion(g, b.outcome);
    std::vector<NodeId> order;
    ASSERT_TRUE(r.graph.is_path(&order));
    EXPECT_EQ(order.size(), 3u);
  }
  expect_agreement(g, br);
}

TEST(TypeIFusion, LinearClustersMergeToLengthNPlusMMinusOne) {
  for (int n = 1; n <= 3; ++n) {
    for (int m = 1; m <= 3; ++m) {
      const ClusterGraph g = two_lines(n, m);
      const std::vector<FusionBranch> br = fusion_type1_branches(build_cluster(g), n - 1, n);
      EXPECT_NEAR(success_probability(br), 0.5, 1e-12) << n << "," << m;
      EXPECT_NEAR(sum_probability(br), 1.0, 1e-10);
      int successes = 0;
      for (const FusionBranch& b : br) {
        if (!b.outcome.success) continue;
        ++successes;
        EXPECT_TRUE(b.outcome.sign == 1 || b.outcome.sign == -1);
        const RewriteResult r = apply_fusion(g, b.outcome);
        std::vector<NodeId> order;
        ASSERT_TRUE(r.graph.is_path(&order));
        EXPECT_EQ(static_cast<int>(order.size()), n + m - 1);
        // The rewritten graph with its Pauli frame is the Fock-level state.
        EXPECT_GT(register_fidelity(b.residual, graph_state_register(r.graph, r.frame)), 1 - 1e-8);
        // Undoing the frame gives the plain linear cluster.
        EXPECT_EQ(b.residual.num_qubits(), static_cast<std::size_t>(n + m - 1));
      }
      EXPECT_EQ(successes, 2);
    }
  }
}

TEST(TypeIFusion, FailureIsZMeasurementOfBoth) {
  const ClusterGraph g = two_lines(3, 2);
  double none = 0, both = 0;
  for (const FusionBranch& b : fusion_type1_branches(build_cluster(g), 2, 3)) {
    if (b.outcome.success) continue;
    EXPECT_NE(b.outcome.z_a, b.outcome.z_b);
    const int clicks = b.outcome.herald_counts[0] + b.outcome.herald_counts[1];
    (clicks == 0 ? none : both) += b.probability;
    const RewriteResult r = apply_fusion(g, b.outcome);
    EXPECT_FALSE(r.graph.has_node(2));
    EXPECT_FALSE(r.graph.has_node(3));
    EXPECT_TRUE(r.graph.has_edge(0, 1));
    EXPECT_EQ(r.graph.num_edges(), 1u);
    EXPECT_GT(register_fidelity(b.residual, graph_state_register(r.graph, r.frame, r.detached)),
              1 - 1e-8);
  }
  EXPECT_NEAR(none, 0.25, 1e-12);
  EXPECT_NEAR(both, 0.25, 1e-12);
}

TEST(TypeIFusion, SampledFrequency) {
  const DualRailRegister reg = build_cluster(two_lines(2, 2));
  int ok = 0;
  const int n = 4000;
  for (int t = 0; t < n; ++t) {
    CounterRng rng(77, t);
    ok += fusion_type1(reg, 1, 2, rng).outcome.success;
  }
  EXPECT_NEAR(ok / static_cast<double>(n), 0.5, 4 * std::sqrt(0.25 / n));
  CounterRng a(5, 1), b(5, 1);
  EXPECT_EQ(fusion_type1(reg, 1, 2, a).outcome.herald_counts,
            fusion_type1(reg, 1, 2, b).outcome.herald_counts);
}

TEST(TypeIFusion, Errors) {
  const DualRailRegister reg = build_cluster(two_lines(2, 2));
  EXPECT_THROW(fusion_type1_branches(reg, 1, 1), InvalidArgument);
  EXPECT_THROW(fusion_type1_branches(reg, 1, 9), InvalidArgument);
}

TEST(FusionHeralds, ProbabilitiesSumToOne) {
  std::mt19937_64 rng(31);
  std::normal_distribution<double> g;
  for (int t = 0; t < 20; ++t) {
    std::vector<Amplitude> amps(8);
    for (Amplitude& a : amps) a = Amplitude(g(rng), g(rng));
    const DualRailRegister reg = DualRailRegister::from_logical(amps, 3).normalized();
    EXPECT_NEAR(sum_probability(fusion_type1_branches(reg, 0, 2)), 1.0, 1e-10);
    EXPECT_NEAR(sum_probability(fusion_type2_branches(reg, 1, 2)), 1.0, 1e-10);
  }
}

TEST(TypeIIFusion, LinearEndsAgreeWithGraphRewrite) {
  for (int n = 1; n <= 3; ++n) {
    for (int m = 1; n + m <= 5; ++m) {
      if (n + m == 2) continue;  // nothing left to compare
      const ClusterGraph g = two_lines(n, m);
      const std::vector<FusionBranch> br = fusion_type2_branches(build_cluster(g), n - 1, n);
      EXPECT_NEAR(sum_probability(br), 1.0, 1e-10);
      EXPECT_NEAR(success_probability(br), 0.5, 1e-12);
      expect_agreement(g, br);
    }
  }
}

TEST(TypeIIFusion, RedundantQubitMergesWithBondsRetained) {
  // 0-1-2 with X on 1 makes a redundant vertex {0, 2}; fuse photon 2 with the
  // end of the line 3-4-5.
  const ClusterGraph line = ClusterGraph::linear(3);
  const std::vector<MeasurementBranch> xb =
      measure_qubit(build_cluster(line), 1, MeasurementBasis::X());
  const RewriteResult merged = x_measure(line, 1, 0);
  ClusterGraph g = merged.graph;
  g.merge_disjoint(ClusterGraph::linear(3, 3));
  const DualRailRegister reg = xb[0].residual.normalized().append(build_cluster(ClusterGraph::linear(3, 3)));
  const std::vector<FusionBranch> br = fusion_type2_branches(reg, 2, 3);
  EXPECT_NEAR(success_probability(br), 0.5, 1e-12);
  EXPECT_NEAR(sum_probability(br), 1.0, 1e-10);
  for (const FusionBranch& b : br) {
    const RewriteResult r = apply_fusion(g, b.outcome, merged.frame);
    if (b.outcome.success) {
      EXPECT_TRUE(r.graph.has_node(0));
      EXPECT_TRUE(r.graph.has_edge(0, 4));
      EXPECT_TRUE(r.graph.has_edge(4, 5));
      EXPECT_EQ(r.graph.num_nodes(), 3u);
    } else {
      // A failed fusion cuts the line; the rest of it is untouched.
      EXPECT_TRUE(r.graph.has_edge(4, 5));
    }
    EXPECT_GT(register_fidelity(b.residual, graph_state_register(r.graph, r.frame, r.detached)),
              1 - 1e-8);
  }
}

TEST(TypeIIFusion, HeraldPatterns) {
  const std::vector<FusionBranch> br = fusion_type2_branches(build_cluster(two_lines(2, 2)), 1, 2);
  for (const FusionBranch& b : br) {
    const auto& c = b.outcome.herald_counts;
    ASSERT_EQ(c.size(), 4u);
    EXPECT_EQ(c[0] + c[1] + c[2] + c[3], 2);
    EXPECT_EQ(b.outcome.success, c[0] + c[1] == 1);
  }
}
