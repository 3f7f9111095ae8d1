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
#include <string>

#include "photonsim/cv_states.hpp"
#include "photonsim/errors.hpp"
#include "photonsim/interferometer.hpp"

namespace photonsim {

void GBSSchemeSpec::validate() const {
  for (const SqueezeParam& s : squeeze) s.validate();
  for (const BeamsplitterSetting& b : network) {
    if (b.mode_a > 2 || b.mode_b > 2 || b.mode_a == b.mode_b) {
      throw InvalidArgument("GBS beamsplitters act on two distinct modes among 0, 1, 2");
    }
  }
  if (herald[0] < 0 || herald[1] < 0) throw InvalidArgument("herald counts must be non-negative");
  if (cutoff < 1) throw InvalidArgument("GBS cutoff must be positive");
  if (n_max() > cutoff) throw InvalidArgument("herald total exceeds the cutoff");
  if (!(probability_floor >= 0.0)) throw InvalidArgument("probability floor must be non-negative");
}

GBSSchemeSpec GBSSchemeSpec::defaults() {
  GBSSchemeSpec s;
  s.squeeze = {SqueezeParam{0.12, 0.0}, SqueezeParam{0.10, 0.4}, SqueezeParam{0.08, -0.3}};
  s.displacement = {DisplacementParam{{0.15, 0.05}}, DisplacementParam{{0.0, 0.1}},
                    DisplacementParam{{-0.1, 0.0}}};
  s.network = {{0, 1, 0.6, 0.1}, {1, 2, 0.8, -0.2}, {0, 1, 0.35, 0.3}};
  return s;
}

FockState gbs_input(const GBSSchemeSpec& spec) {
  spec.validate();
  FockState s = FockState::vacuum(0, spec.cutoff);
  s.set({}, 1.0);
  // D S |0> is formed well above the cutoff and truncated once, so the
  // squeezed tail is not lost before the displacement acts on it.
  const int wide = spec.cutoff + 40;
  for (int m = 0; m < 3; ++m) {
    FockState full = squeeze(FockState::vacuum(1, wide), spec.squeeze[m]);
    full = displace(full, spec.displacement[m]);
    FockState mode(1, spec.cutoff);
    for (const auto& [occ, amp] : full.terms()) {
      if (occ[0] <= spec.cutoff) mode.set(occ, amp);
    }
    s = tensor(s, mode.normalized());
  }
  return s;
}

namespace {

// The whole network as one 3-mode unitary. Applying the splitters one by one
// would truncate photons that bunch above the cutoff between elements.
Circuit network_circuit(const GBSSchemeSpec& spec) {
  ModeUnitary u = ModeUnitary::identity(3);
  for (const BeamsplitterSetting& b : spec.network) {
    u = u.then(ModeUnitary::embed(beamsplitter(b.theta, b.phi), {b.mode_a, b.mode_b}, 3));
  }
  return {{u, {0, 1, 2}}};
}

// Pure single-mode Gaussian D(d) S(xi)|0> from its first and second moments.
void fit_gaussian(const FockState& g, DisplacementParam* d, SqueezeParam* xi) {
  const FockState a = apply_ladder(g, 0, Ladder::kLower);
  const Amplitude mean = inner(g, a);
  const Amplitude aa = inner(g, apply_ladder(a, 0, Ladder::kLower)) - mean * mean;
  const double n = std::max(0.0, inner(a, a).real() - std::norm(mean));
  d->alpha = mean;
  xi->r = std::asinh(std::sqrt(n));
  xi->phi = std::abs(aa) > 1e-14 ? -0.5 * std::arg(-aa) : 0.0;
}

}  // namespace

GBSResult gbs_herald(const GBSSchemeSpec& spec) {
  const FockState input = gbs_input(spec);
  const Circuit circuit = network_circuit(spec);
  const HeraldSpec h{{1, 2}, {spec.herald[0], spec.herald[1]}};
  GBSResult r;
  r.heralded = herald(input, circuit, h, {0}, CutoffPolicy::kTruncate);
  if (r.heralded.probability() <= spec.probability_floor) {
    throw ImprobableHerald("GBS herald probability " + std::to_string(r.heralded.probability()) +
                           " is below the floor");
  }
  const HeraldedResult vac = herald(input, circuit, HeraldSpec{{1, 2}, {0, 0}}, {0},
                                    CutoffPolicy::kTruncate);
  fit_gaussian(vac.state(), &r.d1, &r.xi1);

  // Undo the Gaussian part; what is left should stop at n_max.
  r.n_max = spec.n_max();
  const int wide = spec.cutoff + 40;
  FockState u = r.heralded.state().with_cutoff(wide);
  u = displace(u, DisplacementParam{-r.d1.alpha});
  u = squeeze(u, SqueezeParam{r.xi1.r, r.xi1.phi + std::numbers::pi / 2.0});
  const double total = u.norm_squared();
  double above = 0.0;
  r.coefficients.assign(r.n_max + 1, Amplitude(0.0));
  for (const auto& [occ, amp] : u.terms()) {
    if (occ[0] <= r.n_max) {
      r.coefficients[occ[0]] = amp;
    } else {
      above += std::norm(amp);
    }
  }
  r.residual = above / total;
  return r;
}

}  // namespace photonsim
