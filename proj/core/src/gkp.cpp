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

#include <cmath>

#include "linalg.hpp"
#include "photonsim/cv_states.hpp"
#include "photonsim/errors.hpp"

namespace photonsim {

void GKPParams::validate() const {
  if (!(grid_spacing > 0.0)) throw InvalidArgument("GKP grid spacing must be positive");
  if (!(delta > 0.0)) throw InvalidArgument("GKP envelope width must be positive");
  if (n_dim < 2) throw InvalidArgument("GKP logical dimension must be at least 2");
  if (s_max < 1) throw InvalidArgument("GKP lattice truncation must be at least 1");
}

namespace {

double lattice_position(const GKPParams& p, int logical, long s) {
  return (static_cast<double>(p.n_dim) * static_cast<double>(s) + logical) * p.grid_spacing;
}

double envelope(const GKPParams& p, double x) { return std::exp(-0.5 * p.delta * p.delta * x * x); }

// Lattice terms are nearly orthogonal, so their squared weights stand in for
// the norm they carry.
double lattice_tail(const GKPParams& p, int logical) {
  double inside = 0.0, outside = 0.0;
  for (long s = 0;; ++s) {
    double w = 0.0;
    for (long sign : {1L, -1L}) {
      if (s == 0 && sign < 0) continue;
      w += std::pow(envelope(p, lattice_position(p, logical, sign * s)), 2);
    }
    (s <= p.s_max ? inside : outside) += w;
    if (s > p.s_max && w < 1e-18 * (inside + outside)) break;
    if (s > 100000000L) break;
  }
  return outside / (inside + outside);
}

}  // namespace

GKPState gkp_state(const GKPParams& params, int logical, const SqueezeParam& base, int cutoff) {
  params.validate();
  base.validate();
  if (logical < 0 || logical >= params.n_dim) throw InvalidArgument("GKP logical index out of range");
  const int dim = detail::padded_dim(cutoff);
  const FockState psi0 = squeeze(FockState::vacuum(1, cutoff), base);
  const Eigen::VectorXcd v0 = detail::to_dense(psi0, dim);
  const detail::HermitianPropagator shift(detail::momentum(dim));
  Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(dim);
  for (int s = -params.s_max; s <= params.s_max; ++s) {
    const double x = lattice_position(params, logical, s);
    acc += envelope(params, x) * shift.apply(v0, x);
  }
  acc /= acc.norm();
  GKPState out;
  FockState st = detail::from_dense(acc, cutoff, "gkp_state", kCvLeakageTolerance);
  out.leaked = st.leaked_norm();
  out.state = st.normalized();
  out.lattice_tail = lattice_tail(params, logical);
  return out;
}

bool shift_correctable(double dq, double dp, const GKPParams& params) {
  params.validate();
  return std::abs(dq) < params.grid_spacing / 2.0 &&
         std::abs(dp) < std::numbers::pi / (params.n_dim * params.grid_spacing);
}

}  // namespace photonsim
