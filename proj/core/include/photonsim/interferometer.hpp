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

#ifndef PHOTONSIM_INTERFEROMETER_HPP_
#define PHOTONSIM_INTERFEROMETER_HPP_

#include <Eigen/Dense>
#include <cstddef>
#include <vector>

#include "photonsim/fock_state.hpp"

namespace photonsim {

// Unitary on a set of modes, acting on creation operators as
//   a_j^dag -> sum_k M(j, k) a_k^dag.
// Under this row convention applying U1 and then U2 is the matrix U1 * U2.
class ModeUnitary {
 public:
  explicit ModeUnitary(Eigen::MatrixXcd matrix, double tol = 1e-12);

  static ModeUnitary identity(std::size_t n);
  // Embeds `u` acting on `modes` into an n-mode identity.
  static ModeUnitary embed(const ModeUnitary& u,
                           const std::vector<std::size_t>& modes, std::size_t n);

  const Eigen::MatrixXcd& matrix() const { return m_; }
  std::size_t dimension() const { return static_cast<std::size_t>(m_.rows()); }

  ModeUnitary adjoint() const;
  // `this` applied first, then `next`.
  ModeUnitary then(const ModeUnitary& next) const;

 private:
  Eigen::MatrixXcd m_;
};

struct BeamsplitterParams {
  double theta = 0.0;
  double phi = 0.0;
};

// [[cos t, e^{-i phi} sin t], [-e^{i phi} sin t, cos t]].
ModeUnitary beamsplitter(const BeamsplitterParams& params);
ModeUnitary beamsplitter(double theta, double phi = 0.0);
// diag(e^{-i phi}, e^{i phi}).
ModeUnitary phase_gate(double phi);
// Single-mode phase e^{-i phi n}.
ModeUnitary phase_shift(double phi);

// Ideal polarising beamsplitter on modes (aH, aV, bH, bV). H is transmitted
// and V reflected, with the reflection from port 2 picking up a minus sign:
//   a_H -> port1 H, a_V -> port2 V, b_H -> port2 H, b_V -> -port1 V.
// Output modes are in slot order (port1 H, port1 V, port2 H, port2 V).
ModeUnitary polarising_beamsplitter();

// Output amplitudes over (port1 H, port1 V, port2 H, port2 V) for one photon
// entering `input_port` (1 or 2) of a PBS with transmittivity eta.
std::vector<Amplitude> pbs_single_photon(int input_port, double eta);

// Linear-optics action on `target_modes` (distinct, within the state).
FockState apply_unitary(const FockState& state, const ModeUnitary& u,
                        const std::vector<std::size_t>& target_modes,
                        CutoffPolicy policy = CutoffPolicy::kError);

enum class Pauli { kX, kY, kZ };

// Logical Pauli on a dual-rail qubit; throws CodeSpaceViolation if any term
// does not hold exactly one photon across the two rails.
FockState pauli_logical(const FockState& state, const LogicalEncoding& encoding,
                        Pauli which);

struct TemporalDecomposition {
  Amplitude overlap = 1.0;
  double orthogonal_weight = 0.0;
};

TemporalDecomposition temporal_overlap(const PulseShape& pulse, double tau);

// Closed form 0.5 * (1 - e^{-gamma |tau|}).
double hom_coincidence(const PulseShape& pulse, double tau);
// Four-mode simulation over (a par, a perp, b par, b perp) with a 50/50
// beamsplitter and a coincidence projection.
double hom_coincidence_simulated(const PulseShape& pulse, double tau);

}  // namespace photonsim

#endif  // PHOTONSIM_INTERFEROMETER_HPP_
