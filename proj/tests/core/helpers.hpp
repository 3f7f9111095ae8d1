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

#ifndef PHOTONSIM_TESTS_CORE_HELPERS_HPP_
#define PHOTONSIM_TESTS_CORE_HELPERS_HPP_

#include <Eigen/Dense>
#include <random>

#include "oracles/oracles.hpp"
#include "photonsim/fock_state.hpp"

namespace photonsim::test_util {

inline Eigen::MatrixXcd random_unitary(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Eigen::MatrixXcd z(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) z(i, j) = Amplitude(g(rng), g(rng));
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd q = qr.householderQ();
  // Fix the phases of R's diagonal so q is Haar distributed.
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < n; ++i) q.col(i) *= r(i, i) / std::abs(r(i, i));
  return q;
}

// Random normalized state over occupations with total photon number <= max_total.
inline FockState random_state(std::size_t modes, int cutoff, int max_total,
                              std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  FockState s(modes, cutoff);
  std::size_t dim = 1;
  for (std::size_t i = 0; i < modes; ++i) dim *= cutoff + 1;
  for (std::size_t idx = 0; idx < dim; ++idx) {
    Occupation occ(modes);
    std::size_t rest = idx;
    for (std::size_t j = modes; j-- > 0;) {
      occ[j] = static_cast<int>(rest % (cutoff + 1));
      rest /= cutoff + 1;
    }
    if (total_photons(occ) <= max_total) s.set(occ, Amplitude(g(rng), g(rng)));
  }
  return s.normalized();
}

inline oracle::Ket to_ket(const FockState& s) {
  oracle::Ket k;
  for (const auto& [occ, amp] : s.terms()) k[occ] = amp;
  return k;
}

inline Eigen::VectorXcd to_vector(const FockState& s) {
  int dim = 1;
  for (std::size_t i = 0; i < s.num_modes(); ++i) dim *= s.cutoff() + 1;
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
  for (const auto& [occ, amp] : s.terms()) v(oracle::fock_index(occ, s.cutoff())) = amp;
  return v;
}

inline double max_amplitude_error(const FockState& s, const oracle::Ket& k) {
  double err = 0.0;
  for (const auto& [occ, amp] : s.terms()) {
    auto it = k.find(occ);
    err = std::max(err, std::abs(amp - (it == k.end() ? Amplitude(0.0) : it->second)));
  }
  for (const auto& [occ, amp] : k) err = std::max(err, std::abs(amp - s.amplitude(occ)));
  return err;
}

}  // namespace photonsim::test_util

#endif  // PHOTONSIM_TESTS_CORE_HELPERS_HPP_
