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

#ifndef PHOTONSIM_MBQC_HPP_
#define PHOTONSIM_MBQC_HPP_

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "photonsim/cluster_graph.hpp"
#include "photonsim/dual_rail.hpp"
#include "photonsim/klm.hpp"
#include "photonsim/rng.hpp"

namespace photonsim {

struct BuildOptions {
  // Replace the ideal logical CZ by the heralded KLM gate, retried until the
  // herald succeeds. Requires `rng`.
  bool heralded_cz = false;
  CounterRng* rng = nullptr;
  NSGateSpec ns_spec{};
  // Total heralded CZ attempts, written when non-null.
  std::uint64_t* attempts = nullptr;
};

// Dual-rail register holding the graph state: |+> on each vertex (copied to
// every photon of its redundancy group) and CZ on each edge. Qubit labels are
// photon ids in ascending order.
DualRailRegister build_cluster(const ClusterGraph& graph, const BuildOptions& options = {});

// Graph state with the Pauli frame applied and detached photons appended in
// their computational-basis states; the reference for fusion checks.
DualRailRegister graph_state_register(const ClusterGraph& graph, const PauliFrame& frame = {},
                                      const std::vector<DetachedPhoton>& detached = {});

struct MeasurementBasis {
  enum class Kind { kZ, kXY };

  Kind kind = Kind::kZ;
  // Equatorial angle for kXY: outcome 0 is (|0> + e^{i angle}|1>)/sqrt2.
  double angle = 0.0;

  static MeasurementBasis Z() { return {Kind::kZ, 0.0}; }
  static MeasurementBasis X() { return {Kind::kXY, 0.0}; }
  static MeasurementBasis Y();
  static MeasurementBasis XY(double angle) { return {Kind::kXY, angle}; }

  // Unitary taking the basis vectors to |0>, |1>.
  Eigen::Matrix2cd rotation() const;
};

struct MeasurementBranch {
  int outcome = 0;
  double probability = 0.0;
  DualRailRegister residual;  // unnormalized
};

// Both outcomes of measuring the qubit labelled `label`.
std::vector<MeasurementBranch> measure_qubit(const DualRailRegister& reg, int label,
                                             const MeasurementBasis& basis);

using OutcomeRecord = std::map<int, int>;

struct FeedForward {
  int target = 0;
  std::function<Eigen::Matrix2cd(const OutcomeRecord&)> gate;
};

struct MeasurementStep {
  int qubit = 0;
  std::function<MeasurementBasis(const OutcomeRecord&)> basis;
  // Corrections applied right after this measurement.
  std::vector<FeedForward> feed_forward;
};

class MeasurementPattern {
 public:
  MeasurementPattern& measure(int qubit, MeasurementBasis basis);
  MeasurementPattern& measure_adaptive(int qubit,
                                       std::function<MeasurementBasis(const OutcomeRecord&)> basis);
  // Attaches a correction to the most recent measurement.
  MeasurementPattern& correct(int target,
                              std::function<Eigen::Matrix2cd(const OutcomeRecord&)> gate);

  const std::vector<MeasurementStep>& steps() const { return steps_; }
  // Throws InvalidArgument if a qubit is measured twice.
  void validate() const;

 private:
  std::vector<MeasurementStep> steps_;
};

struct PatternRun {
  OutcomeRecord outcomes;
  double probability = 1.0;
  DualRailRegister residual;  // normalized
};

// Samples every measurement by the Born rule.
PatternRun run_pattern(const DualRailRegister& reg, const MeasurementPattern& pattern,
                       CounterRng& rng);
// Every outcome branch with non-zero probability, in outcome order.
std::vector<PatternRun> enumerate_pattern(const DualRailRegister& reg,
                                          const MeasurementPattern& pattern,
                                          double min_probability = 1e-14);

// Correction on qubit 3 after the X measurements: the rotation
// (1 + (-1)^{s2} i)/sqrt2 exp(-i pi/4 (1 + sigma_y)) followed by sigma_x^{s2}.
Eigen::Matrix2cd cnot_correction(int s2);

// Four-qubit register |i1>|+>|+>|i4> after exp(-i pi/4 (Z1Z2 + Z2Z3 + Z2Z4)),
// qubit labels 1..4.
DualRailRegister cnot_cluster(int i1, int i4);
MeasurementPattern cnot_pattern();

struct CnotBranch {
  int s1 = 0;
  int s2 = 0;
  int q3 = 0;
  int q4 = 0;
  double probability = 0.0;
};

struct CnotResult {
  int q3 = 0;
  int q4 = 0;
  bool verified = false;
  OutcomeRecord outcomes;
};

CnotResult mbqc_cnot(int i1, int i4, CounterRng& rng);
std::vector<CnotBranch> mbqc_cnot_branches(int i1, int i4);

}  // namespace photonsim

#endif  // PHOTONSIM_MBQC_HPP_
