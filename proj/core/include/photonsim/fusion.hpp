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

#ifndef PHOTONSIM_FUSION_HPP_
#define PHOTONSIM_FUSION_HPP_

#include <Eigen/Dense>
#include <map>
#include <vector>

#include "photonsim/cluster_graph.hpp"
#include "photonsim/dual_rail.hpp"
#include "photonsim/rng.hpp"

namespace photonsim {

enum class FusionType { kTypeI, kTypeII };

struct FusionOutcome {
  FusionType type = FusionType::kTypeI;
  bool success = false;
  // Type I: (H, V) counts behind the half-waveplate on port 2.
  // Type II: (port1 H, port1 V, port2 H, port2 V).
  std::vector<int> herald_counts;
  // +1 or -1 on success: projection onto |00> + sign |11>.
  int sign = 0;
  // Effective Z outcomes of both inputs on failure, -1 otherwise.
  int z_a = -1;
  int z_b = -1;
  PhotonId photon_a = 0;
  PhotonId photon_b = 0;
};

struct FusionBranch {
  FusionOutcome outcome;
  double probability = 0.0;
  DualRailRegister residual;  // normalized
};

// Every herald pattern of the Fock-level gate with its conditional state.
// Photons are polarisation-encoded dual-rail qubits with rails (H, V).
std::vector<FusionBranch> fusion_type1_branches(const DualRailRegister& reg, PhotonId a,
                                                PhotonId b);
std::vector<FusionBranch> fusion_type2_branches(const DualRailRegister& reg, PhotonId a,
                                                PhotonId b);

// One herald drawn by the Born rule.
FusionBranch fusion_type1(const DualRailRegister& reg, PhotonId a, PhotonId b,
                          CounterRng& rng);
FusionBranch fusion_type2(const DualRailRegister& reg, PhotonId a, PhotonId b,
                          CounterRng& rng);

// Graph-level counterpart of a Fock-level outcome.
RewriteResult apply_fusion(const ClusterGraph& graph, const FusionOutcome& outcome,
                           const PauliFrame& frame = {});

// Success-herald Kraus operators of the type-I gate on two isolated qubits,
// as 2x4 matrices from |q_a q_b> to the surviving qubit.
struct TypeIKraus {
  Eigen::Matrix<Amplitude, 2, 4> herald_h;
  Eigen::Matrix<Amplitude, 2, 4> herald_v;
};
TypeIKraus type1_kraus();

// Success-herald functionals of the type-II gate: herald pattern to the row
// vector <00| + sign <11| (scaled) over |q_a q_b>.
std::map<std::vector<int>, Eigen::Matrix<Amplitude, 1, 4>> type2_kraus();

}  // namespace photonsim

#endif  // PHOTONSIM_FUSION_HPP_
