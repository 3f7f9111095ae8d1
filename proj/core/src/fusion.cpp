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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "photonsim/errors.hpp"
#include "photonsim/interferometer.hpp"

namespace photonsim {

namespace {

struct Rails {
  std::size_t a_h, a_v, b_h, b_v;
};

Rails rails_of(const DualRailRegister& reg, PhotonId a, PhotonId b) {
  if (a == b) throw InvalidArgument("fusion needs two distinct photons");
  const auto& qa = reg.qubit(reg.index_of(a)).mode_indices;
  const auto& qb = reg.qubit(reg.index_of(b)).mode_indices;
  return {qa[0], qa[1], qb[0], qb[1]};
}

// PBS on both photons, then the half-waveplates in front of the detectors.
// After the PBS the rails of `a` hold port 1 and those of `b` port 2.
FockState fusion_circuit(const DualRailRegister& reg, const Rails& r, FusionType type) {
  const int cutoff = std::max(2, reg.state().cutoff());
  FockState s = reg.state().with_cutoff(cutoff);
  s = apply_unitary(s, polarising_beamsplitter(), {r.a_h, r.a_v, r.b_h, r.b_v});
  const ModeUnitary hwp = beamsplitter(std::numbers::pi / 4.0);
  if (type == FusionType::kTypeII) s = apply_unitary(s, hwp, {r.a_h, r.a_v});
  s = apply_unitary(s, hwp, {r.b_h, r.b_v});
  return s;
}

// Photon counts of the remaining rail pair, which are fixed in a failure branch.
std::pair<int, int> fixed_rails(const DualRailRegister& reg, std::size_t q) {
  const auto& m = reg.qubit(q).mode_indices;
  const auto& terms = reg.state().terms();
  if (terms.empty()) throw InvalidArgument("empty fusion branch");
  const Occupation& first = terms.begin()->first;
  for (const auto& [occ, amp] : terms) {
    if (occ[m[0]] != first[m[0]] || occ[m[1]] != first[m[1]]) {
      throw InvalidArgument("failure branch leaves the partner rails undetermined");
    }
  }
  return {first[m[0]], first[m[1]]};
}

// Relative sign between the |11> and |00> contributions for a success herald.
int herald_sign(Amplitude from00, Amplitude from11) {
  if (std::abs(from00) < 1e-12 || std::abs(from11) < 1e-12) {
    throw InvalidArgument("success herald without both parity components");
  }
  return (from11 / from00).real() > 0.0 ? 1 : -1;
}

DualRailRegister two_qubit_basis(int qa, int qb) {
  return DualRailRegister(DualRailRegister::from_bits({qa, qb}).state(),
                          {LogicalEncoding::dual_rail(0, 1), LogicalEncoding::dual_rail(2, 3)},
                          {0, 1});
}

const FusionBranch& sample(const std::vector<FusionBranch>& branches, CounterRng& rng) {
  const double u = rng.uniform();
  double acc = 0.0;
  for (const FusionBranch& b : branches) {
    acc += b.probability;
    if (u < acc) return b;
  }
  return branches.back();
}

}  // namespace

TypeIKraus type1_kraus() {
  TypeIKraus k;
  k.herald_h.setZero();
  k.herald_v.setZero();
  for (int in = 0; in < 4; ++in) {
    const DualRailRegister reg = two_qubit_basis(in >> 1, in & 1);
    const Rails r = rails_of(reg, 0, 1);
    const FockState s = fusion_circuit(reg, r, FusionType::kTypeI);
    for (const auto& [occ, amp] : s.terms()) {
      if (occ[r.b_h] + occ[r.b_v] != 1 || occ[r.a_h] + occ[r.a_v] != 1) continue;
      const int out = occ[r.a_v];
      if (occ[r.b_h] == 1) {
        k.herald_h(out, in) += amp;
      } else {
        k.herald_v(out, in) += amp;
      }
    }
  }
  return k;
}

std::map<std::vector<int>, Eigen::Matrix<Amplitude, 1, 4>> type2_kraus() {
  std::map<std::vector<int>, Eigen::Matrix<Amplitude, 1, 4>> out;
  for (int in = 0; in < 4; ++in) {
    const DualRailRegister reg = two_qubit_basis(in >> 1, in & 1);
    const Rails r = rails_of(reg, 0, 1);
    const FockState s = fusion_circuit(reg, r, FusionType::kTypeII);
    for (const auto& [occ, amp] : s.terms()) {
      if (occ[r.a_h] + occ[r.a_v] != 1 || occ[r.b_h] + occ[r.b_v] != 1) continue;
      const std::vector<int> h{occ[r.a_h], occ[r.a_v], occ[r.b_h], occ[r.b_v]};
      auto it = out.find(h);
      if (it == out.end()) it = out.emplace(h, Eigen::Matrix<Amplitude, 1, 4>::Zero()).first;
      it->second(0, in) += amp;
    }
  }
  return out;
}

std::vector<FusionBranch> fusion_type1_branches(const DualRailRegister& reg, PhotonId a,
                                                PhotonId b) {
  const Rails r = rails_of(reg, a, b);
  reg.require_code_space();
  const FockState evolved = fusion_circuit(reg, r, FusionType::kTypeI);
  const DualRailRegister after = reg.with_state(evolved);
  const double total = evolved.norm_squared();
  const TypeIKraus k = type1_kraus();

  std::set<std::pair<int, int>> patterns;
  for (const auto& [occ, amp] : evolved.terms()) patterns.insert({occ[r.b_h], occ[r.b_v]});

  std::vector<FusionBranch> out;
  for (const auto& [h, v] : patterns) {
    DualRailRegister res = after.measure_rails(after.index_of(b), h, v);
    const double p = res.state().norm_squared() / total;
    if (p < 1e-15) continue;
    FusionOutcome o;
    o.type = FusionType::kTypeI;
    o.herald_counts = {h, v};
    o.photon_a = a;
    o.photon_b = b;
    o.success = h + v == 1;
    if (o.success) {
      const auto& kk = h == 1 ? k.herald_h : k.herald_v;
      o.sign = herald_sign(kk(0, 0), kk(1, 3));
    } else {
      // Port 1 carries a_H and b_V: both photons there means a = 0, b = 1.
      o.z_a = h + v == 0 ? 0 : 1;
      o.z_b = 1 - o.z_a;
      const std::size_t qa = res.index_of(a);
      const auto [n0, n1] = fixed_rails(res, qa);
      res = res.measure_rails(qa, n0, n1);
    }
    out.push_back({o, p, res.normalized()});
  }
  return out;
}

std::vector<FusionBranch> fusion_type2_branches(const DualRailRegister& reg, PhotonId a,
                                                PhotonId b) {
  const Rails r = rails_of(reg, a, b);
  reg.require_code_space();
  const FockState evolved = fusion_circuit(reg, r, FusionType::kTypeII);
  const DualRailRegister after = reg.with_state(evolved);
  const double total = evolved.norm_squared();
  const auto k = type2_kraus();

  std::set<std::vector<int>> patterns;
  for (const auto& [occ, amp] : evolved.terms()) {
    patterns.insert({occ[r.a_h], occ[r.a_v], occ[r.b_h], occ[r.b_v]});
  }
  std::vector<FusionBranch> out;
  for (const auto& c : patterns) {
    DualRailRegister res = after.measure_rails(after.index_of(a), c[0], c[1]);
    res = res.measure_rails(res.index_of(b), c[2], c[3]);
    const double p = res.state().norm_squared() / total;
    if (p < 1e-15) continue;
    FusionOutcome o;
    o.type = FusionType::kTypeII;
    o.herald_counts = c;
    o.photon_a = a;
    o.photon_b = b;
    o.success = c[0] + c[1] == 1 && c[2] + c[3] == 1;
    if (o.success) {
      const auto& row = k.at(c);
      o.sign = herald_sign(row(0, 0), row(0, 3));
    } else {
      o.z_a = c[0] + c[1] == 2 ? 0 : 1;
      o.z_b = 1 - o.z_a;
    }
    out.push_back({o, p, res.normalized()});
  }
  return out;
}

FusionBranch fusion_type1(const DualRailRegister& reg, PhotonId a, PhotonId b,
                          CounterRng& rng) {
  return sample(fusion_type1_branches(reg, a, b), rng);
}

FusionBranch fusion_type2(const DualRailRegister& reg, PhotonId a, PhotonId b,
                          CounterRng& rng) {
  return sample(fusion_type2_branches(reg, a, b), rng);
}

RewriteResult apply_fusion(const ClusterGraph& graph, const FusionOutcome& outcome,
                           const PauliFrame& frame) {
  RewriteResult r{graph, frame, {}};
  if (outcome.success) {
    if (outcome.type == FusionType::kTypeI) {
      type1_success_inplace(r.graph, r.frame, outcome.photon_a, outcome.photon_b, outcome.sign);
    } else {
      type2_success_inplace(r.graph, r.frame, r.detached, outcome.photon_a, outcome.photon_b,
                            outcome.sign);
    }
    return r;
  }
  const bool same = r.graph.node_of(outcome.photon_a) == r.graph.node_of(outcome.photon_b);
  z_measure_inplace(r.graph, r.frame, r.detached, outcome.photon_a, outcome.z_a);
  if (!same) {
    z_measure_inplace(r.graph, r.frame, r.detached, outcome.photon_b, outcome.z_b);
  }
  return r;
}

}  // namespace photonsim
