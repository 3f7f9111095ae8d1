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

#ifndef PHOTONSIM_HARNESS_SRC_RANDOM_HPP_
#define PHOTONSIM_HARNESS_SRC_RANDOM_HPP_

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <vector>

#include "photonsim/fock_state.hpp"
#include "photonsim/rng.hpp"

namespace photonsim::harness {

// Box-Muller on CounterRng, so draws depend only on (seed, stream) and not
// on the standard library's distribution code.
inline double gaussian(CounterRng& rng) {
  const double u = 1.0 - rng.uniform();
  const double v = rng.uniform();
  return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
}

inline Amplitude complex_gaussian(CounterRng& rng) {
  const double re = gaussian(rng);
  return {re, gaussian(rng)};
}

inline std::vector<Amplitude> random_amplitudes(std::size_t n, CounterRng& rng) {
  std::vector<Amplitude> a(n);
  double norm = 0.0;
  for (Amplitude& x : a) {
    x = complex_gaussian(rng);
    norm += std::norm(x);
  }
  for (Amplitude& x : a) x /= std::sqrt(norm);
  return a;
}

inline Eigen::MatrixXcd random_unitary(int n, CounterRng& rng) {
  Eigen::MatrixXcd z(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) z(i, j) = complex_gaussian(rng);
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd q = qr.householderQ();
  for (int i = 0; i < n; ++i) {
    const Amplitude d = qr.matrixQR()(i, i);
    q.col(i) *= d / std::abs(d);
  }
  return q;
}

// Random normalized state over all occupations with at most `max_total`
// photons in total.
inline FockState random_state(std::size_t modes, int cutoff, int max_total, CounterRng& rng) {
  FockState s(modes, cutoff);
  Occupation occ(modes, 0);
  while (true) {
    if (total_photons(occ) <= max_total) s.set(occ, complex_gaussian(rng));
    std::size_t j = 0;
    while (j < modes && occ[j] == cutoff) occ[j++] = 0;
    if (j == modes) break;
    ++occ[j];
  }
  return s.normalized();
}

}  // namespace photonsim::harness

#endif  // PHOTONSIM_HARNESS_SRC_RANDOM_HPP_
