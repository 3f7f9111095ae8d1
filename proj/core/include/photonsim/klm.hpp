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

#ifndef PHOTONSIM_KLM_HPP_
#define PHOTONSIM_KLM_HPP_

#include <Eigen/Dense>
#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "photonsim/detection.hpp"
#include "photonsim/dual_rail.hpp"
#include "photonsim/fock_state.hpp"

namespace photonsim {

// arccos(sqrt(2) - 1) in degrees. The printed 65.5302 is this value rounded;
// the rounding alone moves the herald probability off 1/4 by about 1e-8.
double ns_theta2_exact_degrees();

// Angles in degrees. phi1..phi3 are the beamsplitter phases and phi4 the
// phase on the signal mode.
struct NSGateSpec {
  double theta1 = 22.5;
  double theta2 = ns_theta2_exact_degrees();
  double theta3 = -22.5;
  double phi1 = 0.0;
  double phi2 = 0.0;
  double phi3 = 0.0;
  double phi4 = 180.0;
  std::array<int, 2> herald{1, 0};

  // Angles exactly as printed in the text body, theta2 = 65.5302.
  static NSGateSpec printed();
};

// Mode layout: signal, ancilla prepared in |1>, ancilla prepared in |0>.
// BS(theta1) mixes the two ancillas, BS(theta2) the signal with the first
// ancilla, BS(theta3) the ancillas again, and phi4 is a phase on the signal
// output.
Circuit ns_circuit(const NSGateSpec& spec, std::size_t signal, std::size_t ancilla1,
                   std::size_t ancilla2);

struct NSCheckResult {
  bool ok = false;
  // |p_n - 1/4| maximised over signal inputs |0>, |1>, |2>.
  double max_probability_error = 0.0;
  // |t_n / t_0 - (1, 1, -1)_n| over the same inputs.
  double max_sign_error = 0.0;
  std::array<double, 3> probabilities{};
  std::string message;
};

// Brute-force check that `spec` realises NS with probability 1/4.
NSCheckResult ns_self_check(const NSGateSpec& spec, double tol = 1e-6);

class NSGate {
 public:
  // Throws ConfigurationError when the self-check fails.
  explicit NSGate(NSGateSpec spec = {}, double tol = 1e-6);

  const NSGateSpec& spec() const { return spec_; }
  const NSCheckResult& check() const { return check_; }

  // Signal is a single-mode state with support on |0>, |1>, |2>. The result
  // holds the single-mode output on the (1, 0) herald.
  HeraldedResult apply(const FockState& signal) const;

 private:
  NSGateSpec spec_;
  NSCheckResult check_;
};

HeraldedResult ns_gate(const FockState& signal, const NSGateSpec& spec = {});

class CZGate {
 public:
  explicit CZGate(NSGateSpec spec = {});

  // 50/50 beamsplitter on the two 1-rails, an NS gate on each, and the
  // inverse beamsplitter. The result is over the register's modes only.
  HeraldedResult apply(const DualRailRegister& reg, std::size_t a, std::size_t b) const;

 private:
  NSGate ns_;
};

HeraldedResult cz_gate(const DualRailRegister& reg, std::size_t a = 0, std::size_t b = 1,
                       const NSGateSpec& spec = {});

// Logical matrix of a beamsplitter (radians) followed by phase_gate(phi).
Eigen::Matrix2cd single_qubit_matrix(double theta, double phi);
DualRailRegister single_qubit_gate(const DualRailRegister& reg, std::size_t qubit,
                                   double theta, double phi);

}  // namespace photonsim

#endif  // PHOTONSIM_KLM_HPP_
