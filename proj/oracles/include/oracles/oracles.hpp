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

#ifndef ORACLES_ORACLES_HPP_
#define ORACLES_ORACLES_HPP_

// Reference computations for tests and `sim verify`. Deliberately written
// along different routes from the library (dense matrices, permanents,
// closed forms) and without linking it.

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <map>
#include <vector>

namespace oracle {

using cd = std::complex<double>;
using Ket = std::map<std::vector<int>, cd>;

// exp(A) by scaling and squaring with a Taylor series.
Eigen::MatrixXcd expm(const Eigen::MatrixXcd& a);

// D(alpha) S(zeta)|0> on 0..dim-1 with S = exp((zeta^* a^2 - zeta a^dag^2)/2),
// zeta = r e^{-2 i phi}, evaluated in a space of dim + pad and cut back.
Eigen::VectorXcd displaced_squeezed(cd alpha, double r, double phi, int dim, int pad = 60);

Eigen::VectorXcd coherent_amplitudes(cd alpha, int dim);
Eigen::VectorXcd squeezed_vacuum_amplitudes(double r, double phi, int dim);
// <q|alpha> for q = (a + a^dag)/sqrt2.
cd coherent_wavefunction(cd alpha, double q);

// Ryser's formula with Gray-code updates.
cd permanent(const Eigen::MatrixXcd& m);

// <out| U |in> for the mode map a_j^dag -> sum_k M(j,k) a_k^dag.
cd transition_amplitude(const Eigen::MatrixXcd& m, const std::vector<int>& in,
                        const std::vector<int>& out);
// Full linear-optics action by permanents; outputs with any mode above
// `cutoff` are dropped.
Ket apply_linear_optics(const Eigen::MatrixXcd& m, const Ket& in, int cutoff);

// exp(i sum_lm A_lm a_l^dag a_m) on the dense multimode space with per-mode
// cutoff, where exp(iA) = M^T so that a_j^dag -> sum_k M(j,k) a_k^dag. Basis
// index is the occupation tuple read in base cutoff+1, mode 0 most
// significant. Exact on sectors whose photon number does not exceed cutoff.
Eigen::MatrixXcd fock_space_unitary(const Eigen::MatrixXcd& m, int cutoff);
int fock_index(const std::vector<int>& occ, int cutoff);

// [[c, e^{-i phi} s], [-e^{i phi} s, c]] embedded on modes (i, j) of n.
Eigen::MatrixXcd beamsplitter(int n, int i, int j, double theta, double phi);

// Heralded output of three single-mode inputs through M, counting (h1, h2)
// on modes 1 and 2. Every amplitude of the input product tensor is
// contracted; `amplitudes` is unnormalized and `probability` its weight.
struct HeraldedMode {
  Eigen::VectorXcd amplitudes;
  double probability = 0.0;
};
HeraldedMode gbs_dense(const std::array<Eigen::VectorXcd, 3>& inputs, const Eigen::MatrixXcd& m,
                       int h1, int h2, int cutoff);

// Gaussian moments in (q1, p1, q2, p2) with vacuum covariance I/2.
Eigen::Matrix2d squeezed_covariance(double r, double phi);
Eigen::Matrix4d qq_symplectic(double theta);
double log_negativity(const Eigen::Matrix4d& cov);

double hom_coincidence(double gamma, double tau);

// 1/2(|0+0+> + |0-1-> + |1-0+> + |1+1->) on qubits 1..4, qubit 1 most
// significant.
std::array<cd, 16> cluster4_state();
Eigen::Matrix4cd logical_cz();

}  // namespace oracle

#endif  // ORACLES_ORACLES_HPP_
