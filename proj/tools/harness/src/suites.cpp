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

#include "photonsim/harness/suites.hpp"

#include <algorithm>
#include <cmath>

#include "oracles/oracles.hpp"
#include "photonsim/fusion.hpp"
#include "photonsim/mbqc.hpp"

namespace photonsim::harness {

namespace {

ClusterGraph two_lines(int n, int m) {
  ClusterGraph g = ClusterGraph::linear(n);
  g.merge_disjoint(ClusterGraph::linear(m, n));
  return g;
}

// Fidelity of the logical states once both registers list their qubits in
// label order; -1 when the qubit sets differ.
double register_fidelity(const DualRailRegister& a, const DualRailRegister& b) {
  std::vector<int> la = a.labels(), lb = b.labels();
  std::sort(la.begin(), la.end());
  std::sort(lb.begin(), lb.end());
  if (la != lb) return -1.0;
  const std::vector<Amplitude> x = a.reordered(la).logical_amplitudes();
  const std::vector<Amplitude> y = b.reordered(lb).logical_amplitudes();
  Amplitude ov = 0;
  double nx = 0, ny = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    ov += std::conj(x[i]) * y[i];
    nx += std::norm(x[i]);
    ny += std::norm(y[i]);
  }
  return std::norm(ov) / (nx * ny);
}

double even_projector_error(const Eigen::Matrix4cd& sum) {
  Eigen::Matrix4cd p = Eigen::Matrix4cd::Zero();
  p(0, 0) = 1;
  p(3, 3) = 1;
  return (sum - p).cwiseAbs().maxCoeff();
}

struct BranchStats {
  double success_dev = 0.0;
  double sum_error = 0.0;
  double agreement = 1.0;
};

void scan(const ClusterGraph& g, const std::vector<FusionBranch>& br, BranchStats& st) {
  double total = 0, success = 0;
  for (const FusionBranch& b : br) {
    total += b.probability;
    if (b.outcome.success) success += b.probability;
    const RewriteResult r = apply_fusion(g, b.outcome);
    st.agreement = std::min(st.agreement, register_fidelity(b.residual, graph_state_register(r.graph, r.frame, r.detached)));
  }
  st.success_dev = std::max(st.success_dev, std::abs(success - 0.5));
  st.sum_error = std::max(st.sum_error, std::abs(total - 1.0));
}

}  // namespace

void fusion_suite(RunReport& report) {
  const TypeIKraus k1 = type1_kraus();
  report.check("type1_kraus_parity_error",
               even_projector_error(k1.herald_h.adjoint() * k1.herald_h + k1.herald_v.adjoint() * k1.herald_v), 0.0,
               1e-12);
  Eigen::Matrix4cd sum2 = Eigen::Matrix4cd::Zero();
  for (const auto& [h, row] : type2_kraus()) sum2 += row.adjoint() * row;
  report.check("type2_kraus_parity_error", even_projector_error(sum2), 0.0, 1e-12);

  BranchStats t1, t2;
  double merge_f = 1.0;
  long long length_bad = 0;
  for (int n = 1; n <= 3; ++n) {
    for (int m = 1; m <= 3; ++m) {
      const ClusterGraph g = two_lines(n, m);
      const std::vector<FusionBranch> br = fusion_type1_branches(build_cluster(g), n - 1, n);
      scan(g, br, t1);
      for (const FusionBranch& b : br) {
        if (!b.outcome.success) continue;
        const RewriteResult r = apply_fusion(g, b.outcome);
        std::vector<NodeId> order;
        if (!r.graph.is_path(&order) || static_cast<int>(order.size()) != n + m - 1 ||
            static_cast<int>(b.residual.num_qubits()) != n + m - 1) {
          ++length_bad;
        }
        merge_f = std::min(merge_f, register_fidelity(b.residual, graph_state_register(r.graph, r.frame)));
      }
    }
  }
  for (int n = 1; n <= 3; ++n) {
    for (int m = 1; n + m <= 5; ++m) {
      if (n + m == 2) continue;
      const ClusterGraph g = two_lines(n, m);
      scan(g, fusion_type2_branches(build_cluster(g), n - 1, n), t2);
    }
  }
  report.check("type1_success_probability_deviation", t1.success_dev, 0.0, 1e-12);
  report.check("type1_herald_sum_error", t1.sum_error, 0.0, 1e-10);
  report.check("type1_merge_fidelity_min", merge_f, 1.0, 1e-8);
  report.check("type1_merge_length_mismatches", static_cast<double>(length_bad), 0.0, 0.0);
  report.check("type1_branch_agreement_min", t1.agreement, 1.0, 1e-8);
  report.check("type2_success_probability_deviation", t2.success_dev, 0.0, 1e-12);
  report.check("type2_herald_sum_error", t2.sum_error, 0.0, 1e-10);
  report.check("type2_branch_agreement_min", t2.agreement, 1.0, 1e-8);
}

void cluster_identity_suite(RunReport& report) {
  const std::vector<Amplitude> got = build_cluster(ClusterGraph::linear(4)).logical_amplitudes();
  const std::array<Amplitude, 16> want = oracle::cluster4_state();
  Amplitude ov = 0;
  for (int i = 0; i < 16; ++i) ov += std::conj(want[i]) * got[i];
  report.check("cluster4_fidelity", std::norm(ov), 1.0, 1e-10);
}

void graph_rule_suite(RunReport& report) {
  double worst_f = 1.0, worst_p = 0.0;
  long long bonds_lost = 0;
  for (unsigned mask = 0; mask < 64; ++mask) {
    std::vector<std::pair<NodeId, NodeId>> edges;
    int bit = 0;
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j, ++bit) {
        if (mask >> bit & 1u) edges.emplace_back(i, j);
      }
    }
    const ClusterGraph g = ClusterGraph::from_edges(4, edges);
    const DualRailRegister reg = build_cluster(g);
    for (int v = 0; v < 4; ++v) {
      for (const MeasurementBranch& b : measure_qubit(reg, v, MeasurementBasis::Z())) {
        worst_p = std::max(worst_p, std::abs(b.probability - 0.5));
        const RewriteResult r = z_measure(g, v, b.outcome);
        for (const auto& [x, y] : g.edges()) {
          if (x != v && y != v && !r.graph.has_edge(x, y)) ++bonds_lost;
        }
        worst_f = std::min(worst_f, register_fidelity(b.residual, graph_state_register(r.graph, r.frame, r.detached)));
      }
    }
  }
  report.check("zcut_probability_deviation", worst_p, 0.0, 1e-12);
  report.check("zcut_bonds_lost", static_cast<double>(bonds_lost), 0.0, 0.0);
  report.check("zcut_fidelity_min", worst_f, 1.0, 1e-10);
}

}  // namespace photonsim::harness
