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

#include "photonsim/klm.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "photonsim/errors.hpp"
#include "photonsim/interferometer.hpp"

namespace photonsim {

namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

}  // namespace

double ns_theta2_exact_degrees() {
  return std::acos(std::numbers::sqrt2 - 1.0) / kDeg;
}

NSGateSpec NSGateSpec::printed() {
  NSGateSpec s;
  s.theta2 = 65.5302;
  return s;
}

Circuit ns_circuit(const NSGateSpec& spec, std::size_t signal, std::size_t ancilla1,
                   std::size_t ancilla2) {
  Circuit c;
  c.push_back({beamsplitter(spec.theta1 * kDeg, spec.phi1 * kDeg), {ancilla1, ancilla2}});
  c.push_back({beamsplitter(spec.theta2 * kDeg, spec.phi2 * kDeg), {signal, ancilla1}});
  c.push_back({beamsplitter(spec.theta3 * kDeg, spec.phi3 * kDeg), {ancilla1, ancilla2}});
  c.push_back({phase_shift(spec.phi4 * kDeg), {signal}});
  return c;
}

NSCheckResult ns_self_check(const NSGateSpec& spec, double tol) {
  NSCheckResult r;
  const Circuit circuit = ns_circuit(spec, 0, 1, 2);
  const std::array<double, 3> sign{1.0, 1.0, -1.0};
  std::array<Amplitude, 3> t{};
  for (int n = 0; n <= 2; ++n) {
    const FockState in = make_fock({n, 1, 0}, 3);
    const FockState out = apply_circuit(in, circuit);
    t[n] = out.amplitude({n, spec.herald[0], spec.herald[1]});
    r.probabilities[n] = std::norm(t[n]);
    r.max_probability_error = std::max(r.max_probability_error, std::abs(r.probabilities[n] - 0.25));
  }
  if (std::abs(t[0]) > 0.0) {
    for (int n = 0; n <= 2; ++n) {
      r.max_sign_error = std::max(r.max_sign_error, std::abs(t[n] / t[0] - sign[n]));
    }
  } else {
    r.max_sign_error = 2.0;
  }
  r.ok = r.max_probability_error <= tol && r.max_sign_error <= tol;
  std::ostringstream os;
  os.precision(3);
  os << "NS self-check " << (r.ok ? "passed" : "failed") << ": probabilities ("
     << r.probabilities[0] << ", " << r.probabilities[1] << ", " << r.probabilities[2]
     << "), max probability error " << r.max_probability_error << ", max sign error "
     << r.max_sign_error;
  os.precision(10);
  os << " (theta = " << spec.theta1 << ", " << spec.theta2 << ", "
     << spec.theta3 << " deg)";
  r.message = os.str();
  return r;
}

NSGate::NSGate(NSGateSpec spec, double tol) : spec_(spec), check_(ns_self_check(spec, tol)) {
  if (!check_.ok) throw ConfigurationError(check_.message);
}

HeraldedResult NSGate::apply(const FockState& signal) const {
  if (signal.num_modes() != 1) throw DimensionMismatch("NS gate acts on one signal mode");
  for (const auto& [occ, amp] : signal.terms()) {
    if (occ[0] > 2) throw InvalidArgument("NS gate signal must lie in span{|0>, |1>, |2>}");
  }
  const FockState in = tensor(signal.with_cutoff(3), make_fock({1, 0}, 3));
  return herald(in, ns_circuit(spec_, 0, 1, 2), {{1, 2}, {spec_.herald[0], spec_.herald[1]}});
}

HeraldedResult ns_gate(const FockState& signal, const NSGateSpec& spec) {
  return NSGate(spec).apply(signal);
}

CZGate::CZGate(NSGateSpec spec) : ns_(spec) {}

HeraldedResult CZGate::apply(const DualRailRegister& reg, std::size_t a,
                             std::size_t b) const {
  if (a == b) throw InvalidArgument("CZ needs two distinct qubits");
  reg.require_code_space();
  const std::size_t a1 = reg.qubit(a).mode_for(1);
  const std::size_t b1 = reg.qubit(b).mode_for(1);
  const std::size_t n = reg.state().num_modes();
  const int cutoff = std::max(reg.state().cutoff(), reg.state().max_total_photons() + 2);
  const FockState in = tensor(reg.state().with_cutoff(cutoff), make_fock({1, 0, 1, 0}, cutoff));

  Circuit c;
  c.push_back({beamsplitter(std::numbers::pi / 4.0), {a1, b1}});
  for (const auto& el : ns_circuit(ns_.spec(), a1, n, n + 1)) c.push_back(el);
  for (const auto& el : ns_circuit(ns_.spec(), b1, n + 2, n + 3)) c.push_back(el);
  c.push_back({beamsplitter(-std::numbers::pi / 4.0), {a1, b1}});

  const auto& h = ns_.spec().herald;
  HeraldedResult r = herald(in, c, {{n, n + 1, n + 2, n + 3}, {h[0], h[1], h[0], h[1]}});
  FockState branch = r.branch();
  try {
    branch = branch.with_cutoff(reg.state().cutoff());
  } catch (const CutoffViolation&) {
    // Keep the larger space; the code-space weight check will flag it.
  }
  return HeraldedResult(std::move(branch), r.probability(), r.herald());
}

HeraldedResult cz_gate(const DualRailRegister& reg, std::size_t a, std::size_t b,
                       const NSGateSpec& spec) {
  return CZGate(spec).apply(reg, a, b);
}

Eigen::Matrix2cd single_qubit_matrix(double theta, double phi) {
  // Rails transform with the row-convention mode matrix; the logical matrix
  // is its transpose.
  const Eigen::Matrix2cd bs = beamsplitter(theta, 0.0).matrix().transpose();
  const Eigen::Matrix2cd ph = phase_gate(phi).matrix().transpose();
  return ph * bs;
}

DualRailRegister single_qubit_gate(const DualRailRegister& reg, std::size_t qubit,
                                   double theta, double phi) {
  return reg.apply_single(qubit, single_qubit_matrix(theta, phi));
}

}  // namespace photonsim
