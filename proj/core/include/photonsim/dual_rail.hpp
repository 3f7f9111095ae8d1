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

#ifndef PHOTONSIM_DUAL_RAIL_HPP_
#define PHOTONSIM_DUAL_RAIL_HPP_

#include <Eigen/Dense>
#include <cstddef>
#include <functional>
#include <vector>

#include "photonsim/fock_state.hpp"

namespace photonsim {

using Bits = std::vector<int>;

// A set of dual-rail qubits sharing one FockState. Each qubit carries a
// caller-chosen integer label that survives mode removal, so cluster code can
// refer to photons by name while qubits come and go.
class DualRailRegister {
 public:
  DualRailRegister() = default;
  DualRailRegister(FockState state, std::vector<LogicalEncoding> qubits,
                   std::vector<int> labels = {});

  // Qubit i on modes (2i, 2i+1). Amplitude index uses qubit 0 as the most
  // significant bit.
  static DualRailRegister from_logical(const std::vector<Amplitude>& amplitudes,
                                       std::size_t num_qubits, int cutoff = 1);
  static DualRailRegister from_bits(const Bits& bits, int cutoff = 1);

  const FockState& state() const { return state_; }
  std::size_t num_qubits() const { return qubits_.size(); }
  const LogicalEncoding& qubit(std::size_t i) const;
  const std::vector<int>& labels() const { return labels_; }
  int label(std::size_t i) const;
  std::size_t index_of(int label) const;
  bool has_label(int label) const;

  // Logical basis value of qubit i in an occupation tuple, or -1 outside the
  // code space.
  int bit(const Occupation& occ, std::size_t i) const;
  Bits bits(const Occupation& occ) const;

  std::vector<Amplitude> logical_amplitudes() const;
  // Weight of the code space relative to the state norm.
  double code_space_weight() const;
  void require_code_space(double tol = 1e-10) const;

  DualRailRegister with_state(FockState state) const;
  DualRailRegister normalized() const;

  // Logical matrix L (|j> -> sum_i L(i, j)|i>) realised on the rails as a
  // linear-optics transformation.
  DualRailRegister apply_single(std::size_t q, const Eigen::Matrix2cd& logical) const;
  // Ideal (deterministic) logical gates, applied term by term on the code space.
  DualRailRegister apply_cz(std::size_t a, std::size_t b) const;
  DualRailRegister apply_cnot(std::size_t control, std::size_t target) const;
  DualRailRegister apply_diagonal(const std::function<Amplitude(const Bits&)>& phase) const;

  // Appends the qubits of `other` after ours; labels must stay unique.
  DualRailRegister append(const DualRailRegister& other) const;
  // Keeps terms where qubit q has logical value `bit` and removes its modes.
  DualRailRegister project_qubit(std::size_t q, int bit) const;
  // Keeps terms with (n0, n1) photons on the rails of qubit q and removes them.
  DualRailRegister measure_rails(std::size_t q, int n0, int n1) const;
  // Reorders qubits to the given label order.
  DualRailRegister reordered(const std::vector<int>& label_order) const;

 private:
  FockState state_;
  std::vector<LogicalEncoding> qubits_;
  std::vector<int> labels_;
};

Eigen::Matrix2cd hadamard_matrix();
Eigen::Matrix2cd pauli_matrix(char which);

}  // namespace photonsim

#endif  // PHOTONSIM_DUAL_RAIL_HPP_
