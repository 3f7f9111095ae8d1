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

#include "photonsim/dual_rail.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "photonsim/errors.hpp"
#include "photonsim/interferometer.hpp"

namespace photonsim {

DualRailRegister::DualRailRegister(FockState state, std::vector<LogicalEncoding> qubits,
                                   std::vector<int> labels)
    : state_(std::move(state)), qubits_(std::move(qubits)), labels_(std::move(labels)) {
  if (labels_.empty()) {
    for (std::size_t i = 0; i < qubits_.size(); ++i) labels_.push_back(static_cast<int>(i));
  }
  if (labels_.size() != qubits_.size()) throw InvalidArgument("one label per qubit required");
  std::set<int> seen_labels;
  std::set<std::size_t> seen_modes;
  for (std::size_t i = 0; i < qubits_.size(); ++i) {
    if (qubits_[i].kind != LogicalEncoding::Kind::kDualRail) {
      throw InvalidArgument("register qubits must be dual-rail");
    }
    if (!seen_labels.insert(labels_[i]).second) throw InvalidArgument("duplicate qubit label");
    for (std::size_t m : qubits_[i].mode_indices) {
      if (m >= state_.num_modes()) throw DimensionMismatch("qubit rail outside the state");
      if (!seen_modes.insert(m).second) throw InvalidArgument("qubits share a mode");
    }
  }
}

DualRailRegister DualRailRegister::from_logical(const std::vector<Amplitude>& amplitudes,
                                                std::size_t num_qubits, int cutoff) {
  if (amplitudes.size() != (std::size_t{1} << num_qubits)) {
    throw DimensionMismatch("need 2^n logical amplitudes");
  }
  FockState s(2 * num_qubits, std::max(cutoff, 1));
  Occupation occ(2 * num_qubits);
  for (std::size_t idx = 0; idx < amplitudes.size(); ++idx) {
    std::fill(occ.begin(), occ.end(), 0);
    for (std::size_t q = 0; q < num_qubits; ++q) {
      const int b = static_cast<int>((idx >> (num_qubits - 1 - q)) & 1u);
      occ[2 * q + b] = 1;
    }
    s.add(occ, amplitudes[idx]);
  }
  std::vector<LogicalEncoding> qubits;
  for (std::size_t q = 0; q < num_qubits; ++q) {
    qubits.push_back(LogicalEncoding::dual_rail(2 * q, 2 * q + 1));
  }
  return DualRailRegister(std::move(s), std::move(qubits));
}

DualRailRegister DualRailRegister::from_bits(const Bits& bits, int cutoff) {
  std::vector<Amplitude> amps(std::size_t{1} << bits.size(), 0.0);
  std::size_t idx = 0;
  for (int b : bits) idx = (idx << 1) | static_cast<std::size_t>(b != 0);
  amps[idx] = 1.0;
  return from_logical(amps, bits.size(), cutoff);
}

const LogicalEncoding& DualRailRegister::qubit(std::size_t i) const {
  if (i >= qubits_.size()) throw InvalidArgument("qubit index out of range");
  return qubits_[i];
}

int DualRailRegister::label(std::size_t i) const {
  if (i >= labels_.size()) throw InvalidArgument("qubit index out of range");
  return labels_[i];
}

std::size_t DualRailRegister::index_of(int label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw InvalidArgument("no qubit labelled " + std::to_string(label));
  return static_cast<std::size_t>(it - labels_.begin());
}

bool DualRailRegister::has_label(int label) const {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

int DualRailRegister::bit(const Occupation& occ, std::size_t i) const {
  const auto& m = qubit(i).mode_indices;
  if (occ[m[0]] == 1 && occ[m[1]] == 0) return 0;
  if (occ[m[0]] == 0 && occ[m[1]] == 1) return 1;
  return -1;
}

Bits DualRailRegister::bits(const Occupation& occ) const {
  Bits b(qubits_.size());
  for (std::size_t i = 0; i < qubits_.size(); ++i) b[i] = bit(occ, i);
  return b;
}

std::vector<Amplitude> DualRailRegister::logical_amplitudes() const {
  const std::size_t n = qubits_.size();
  std::vector<Amplitude> amps(std::size_t{1} << n, 0.0);
  std::vector<bool> is_rail(state_.num_modes(), false);
  for (const auto& q : qubits_) {
    for (std::size_t m : q.mode_indices) is_rail[m] = true;
  }
  for (const auto& [occ, amp] : state_.terms()) {
    bool spectators_empty = true;
    for (std::size_t m = 0; m < occ.size(); ++m) {
      if (!is_rail[m] && occ[m] != 0) spectators_empty = false;
    }
    if (!spectators_empty) continue;
    std::size_t idx = 0;
    bool inside = true;
    for (std::size_t q = 0; q < n && inside; ++q) {
      const int b = bit(occ, q);
      inside = b >= 0;
      idx = (idx << 1) | static_cast<std::size_t>(b == 1);
    }
    if (inside) amps[idx] += amp;
  }
  return amps;
}

double DualRailRegister::code_space_weight() const {
  double w = 0.0;
  for (const Amplitude& a : logical_amplitudes()) w += std::norm(a);
  const double total = state_.norm_squared();
  return total > 0.0 ? w / total : 0.0;
}

void DualRailRegister::require_code_space(double tol) const {
  const double w = code_space_weight();
  if (std::abs(1.0 - w) > tol) {
    throw CodeSpaceViolation("register weight outside the code space is " +
                             std::to_string(1.0 - w));
  }
}

DualRailRegister DualRailRegister::with_state(FockState state) const {
  return DualRailRegister(std::move(state), qubits_, labels_);
}

DualRailRegister DualRailRegister::normalized() const {
  return with_state(state_.normalized());
}

DualRailRegister DualRailRegister::apply_single(std::size_t q,
                                                const Eigen::Matrix2cd& logical) const {
  const auto& m = qubit(q).mode_indices;
  const ModeUnitary u(logical.transpose(), 1e-10);
  return with_state(apply_unitary(state_, u, {m[0], m[1]}));
}

DualRailRegister DualRailRegister::apply_diagonal(
    const std::function<Amplitude(const Bits&)>& phase) const {
  FockState out(state_.num_modes(), state_.cutoff());
  for (const auto& [occ, amp] : state_.terms()) {
    const Bits b = bits(occ);
    if (std::find(b.begin(), b.end(), -1) != b.end()) {
      throw CodeSpaceViolation("ideal logical gate applied outside the code space");
    }
    out.add(occ, amp * phase(b));
  }
  return with_state(std::move(out));
}

DualRailRegister DualRailRegister::apply_cz(std::size_t a, std::size_t b) const {
  qubit(a);
  qubit(b);
  if (a == b) throw InvalidArgument("CZ needs two distinct qubits");
  return apply_diagonal([a, b](const Bits& x) {
    return (x[a] & x[b]) ? Amplitude(-1.0) : Amplitude(1.0);
  });
}

DualRailRegister DualRailRegister::apply_cnot(std::size_t control, std::size_t target) const {
  if (control == target) throw InvalidArgument("CNOT needs two distinct qubits");
  const auto& t = qubit(target).mode_indices;
  FockState out(state_.num_modes(), state_.cutoff());
  for (const auto& [occ, amp] : state_.terms()) {
    const int c = bit(occ, control);
    if (c < 0 || bit(occ, target) < 0) {
      throw CodeSpaceViolation("ideal logical gate applied outside the code space");
    }
    Occupation next = occ;
    if (c == 1) std::swap(next[t[0]], next[t[1]]);
    out.add(next, amp);
  }
  return with_state(std::move(out));
}

DualRailRegister DualRailRegister::append(const DualRailRegister& other) const {
  FockState s = tensor(state_, other.state_);
  std::vector<LogicalEncoding> qubits = qubits_;
  std::vector<int> labels = labels_;
  const std::size_t shift = state_.num_modes();
  for (std::size_t i = 0; i < other.qubits_.size(); ++i) {
    const auto& m = other.qubits_[i].mode_indices;
    qubits.push_back(LogicalEncoding::dual_rail(m[0] + shift, m[1] + shift));
    labels.push_back(other.labels_[i]);
  }
  return DualRailRegister(std::move(s), std::move(qubits), std::move(labels));
}

DualRailRegister DualRailRegister::project_qubit(std::size_t q, int b) const {
  if (b != 0 && b != 1) throw InvalidArgument("logical value must be 0 or 1");
  return measure_rails(q, b == 0 ? 1 : 0, b == 1 ? 1 : 0);
}

DualRailRegister DualRailRegister::measure_rails(std::size_t q, int n0, int n1) const {
  const auto& rails = qubit(q).mode_indices;
  const std::size_t lo = std::min(rails[0], rails[1]);
  const std::size_t hi = std::max(rails[0], rails[1]);
  FockState out(state_.num_modes() - 2, state_.cutoff());
  Occupation kept;
  for (const auto& [occ, amp] : state_.terms()) {
    if (occ[rails[0]] != n0 || occ[rails[1]] != n1) continue;
    kept.clear();
    for (std::size_t m = 0; m < occ.size(); ++m) {
      if (m != lo && m != hi) kept.push_back(occ[m]);
    }
    out.add(kept, amp);
  }
  auto shift = [&](std::size_t m) { return m - (m > lo ? 1 : 0) - (m > hi ? 1 : 0); };
  std::vector<LogicalEncoding> qubits;
  std::vector<int> labels;
  for (std::size_t i = 0; i < qubits_.size(); ++i) {
    if (i == q) continue;
    const auto& m = qubits_[i].mode_indices;
    qubits.push_back(LogicalEncoding::dual_rail(shift(m[0]), shift(m[1])));
    labels.push_back(labels_[i]);
  }
  return DualRailRegister(std::move(out), std::move(qubits), std::move(labels));
}

DualRailRegister DualRailRegister::reordered(const std::vector<int>& label_order) const {
  if (label_order.size() != qubits_.size()) throw InvalidArgument("reorder needs every label");
  std::vector<LogicalEncoding> qubits;
  for (int l : label_order) qubits.push_back(qubits_[index_of(l)]);
  return DualRailRegister(state_, std::move(qubits), label_order);
}

Eigen::Matrix2cd hadamard_matrix() {
  Eigen::Matrix2cd h;
  h << 1.0, 1.0, 1.0, -1.0;
  return h / std::sqrt(2.0);
}

Eigen::Matrix2cd pauli_matrix(char which) {
  Eigen::Matrix2cd m;
  switch (which) {
    case 'I':
      m << 1.0, 0.0, 0.0, 1.0;
      break;
    case 'X':
      m << 0.0, 1.0, 1.0, 0.0;
      break;
    case 'Y':
      m << 0.0, Amplitude(0.0, -1.0), Amplitude(0.0, 1.0), 0.0;
      break;
    case 'Z':
      m << 1.0, 0.0, 0.0, -1.0;
      break;
    default:
      throw InvalidArgument(std::string("unknown Pauli ") + which);
  }
  return m;
}

}  // namespace photonsim
