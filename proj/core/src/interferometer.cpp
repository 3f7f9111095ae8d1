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

#include "photonsim/interferometer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <string>
#include <utility>

#include "photonsim/errors.hpp"

namespace photonsim {

namespace {

using Expansion = std::vector<std::pair<Occupation, Amplitude>>;

double log_factorial(int n) { return std::lgamma(static_cast<double>(n) + 1.0); }

// Expands prod_j (b_j^dag)^{n_j} / sqrt(n_j!) |0> with b_j^dag = sum_l M(j,l)
// a_l^dag into normalized output kets.
Expansion expand(const Eigen::MatrixXcd& m, const Occupation& n) {
  const std::size_t k = n.size();
  std::map<Occupation, Amplitude> poly{{Occupation(k, 0), Amplitude(1.0)}};
  for (std::size_t j = 0; j < k; ++j) {
    for (int rep = 0; rep < n[j]; ++rep) {
      std::map<Occupation, Amplitude> next;
      for (const auto& [mono, c] : poly) {
        for (std::size_t l = 0; l < k; ++l) {
          const Amplitude mjl = m(static_cast<Eigen::Index>(j),
                                  static_cast<Eigen::Index>(l));
          if (mjl == Amplitude(0.0)) continue;
          Occupation grown = mono;
          grown[l] += 1;
          next[grown] += c * mjl;
        }
      }
      poly = std::move(next);
    }
  }
  double log_in = 0.0;
  for (int nj : n) log_in += log_factorial(nj);
  Expansion out;
  out.reserve(poly.size());
  for (const auto& [mono, c] : poly) {
    double log_out = 0.0;
    for (int ml : mono) log_out += log_factorial(ml);
    const Amplitude v = c * std::exp(0.5 * (log_out - log_in));
    if (std::abs(v) > kAmplitudeEpsilon) out.emplace_back(mono, v);
  }
  return out;
}

void check_targets(const FockState& state, const ModeUnitary& u,
                   const std::vector<std::size_t>& targets) {
  if (u.dimension() != targets.size()) {
    throw DimensionMismatch("unitary acts on " + std::to_string(u.dimension()) +
                            " modes but " + std::to_string(targets.size()) +
                            " target modes were given");
  }
  std::set<std::size_t> seen;
  for (std::size_t t : targets) {
    if (t >= state.num_modes()) throw DimensionMismatch("target mode out of range");
    if (!seen.insert(t).second) throw InvalidArgument("target modes must be distinct");
  }
}

}  // namespace

ModeUnitary::ModeUnitary(Eigen::MatrixXcd matrix, double tol) : m_(std::move(matrix)) {
  if (m_.rows() != m_.cols() || m_.rows() == 0) {
    throw DimensionMismatch("mode unitary must be a non-empty square matrix");
  }
  const Eigen::MatrixXcd gram = m_.adjoint() * m_;
  const double err =
      (gram - Eigen::MatrixXcd::Identity(m_.rows(), m_.cols())).cwiseAbs().maxCoeff();
  if (err > tol) {
    throw NotUnitary("matrix deviates from unitarity by " + std::to_string(err));
  }
}

ModeUnitary ModeUnitary::identity(std::size_t n) {
  const auto d = static_cast<Eigen::Index>(n);
  return ModeUnitary(Eigen::MatrixXcd::Identity(d, d));
}

ModeUnitary ModeUnitary::embed(const ModeUnitary& u,
                               const std::vector<std::size_t>& modes,
                               std::size_t n) {
  if (modes.size() != u.dimension()) throw DimensionMismatch("embedding size mismatch");
  const auto d = static_cast<Eigen::Index>(n);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(d, d);
  for (std::size_t i = 0; i < modes.size(); ++i) {
    for (std::size_t j = 0; j < modes.size(); ++j) {
      if (modes[i] >= n || modes[j] >= n) throw DimensionMismatch("embedding mode out of range");
      m(static_cast<Eigen::Index>(modes[i]), static_cast<Eigen::Index>(modes[j])) =
          u.matrix()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
  }
  return ModeUnitary(m);
}

ModeUnitary ModeUnitary::adjoint() const { return ModeUnitary(m_.adjoint()); }

ModeUnitary ModeUnitary::then(const ModeUnitary& next) const {
  if (next.dimension() != dimension()) throw DimensionMismatch("composing unitaries of different size");
  return ModeUnitary(m_ * next.m_, 1e-10);
}

ModeUnitary beamsplitter(const BeamsplitterParams& p) {
  return beamsplitter(p.theta, p.phi);
}

ModeUnitary beamsplitter(double theta, double phi) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  Eigen::Matrix2cd m;
  m << c, std::polar(s, -phi), -std::polar(s, phi), c;
  return ModeUnitary(m);
}

ModeUnitary phase_gate(double phi) {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  m(0, 0) = std::polar(1.0, -phi);
  m(1, 1) = std::polar(1.0, phi);
  return ModeUnitary(m);
}

ModeUnitary phase_shift(double phi) {
  Eigen::MatrixXcd m(1, 1);
  m(0, 0) = std::polar(1.0, -phi);
  return ModeUnitary(m);
}

ModeUnitary polarising_beamsplitter() {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  m(0, 0) = 1.0;   // aH -> port1 H
  m(1, 3) = 1.0;   // aV -> port2 V
  m(2, 2) = 1.0;   // bH -> port2 H
  m(3, 1) = -1.0;  // bV -> -port1 V
  return ModeUnitary(m);
}

std::vector<Amplitude> pbs_single_photon(int input_port, double eta) {
  if (eta < 0.0 || eta > 1.0) throw InvalidArgument("PBS transmittivity must lie in [0, 1]");
  const double t = std::sqrt(eta);
  const double r = std::sqrt(1.0 - eta);
  if (input_port == 1) return {t, 0.0, 0.0, r};
  if (input_port == 2) return {0.0, -r, t, 0.0};
  throw InvalidArgument("PBS input port must be 1 or 2");
}

FockState apply_unitary(const FockState& state, const ModeUnitary& u,
                        const std::vector<std::size_t>& target_modes,
                        CutoffPolicy policy) {
  check_targets(state, u, target_modes);
  const std::size_t k = target_modes.size();
  FockState out(state.num_modes(), state.cutoff());
  out.add_leaked_norm(state.leaked_norm());
  std::map<Occupation, Expansion> memo;
  std::map<Occupation, Amplitude> overflow;
  Occupation sub(k);
  for (const auto& [occ, amp] : state.terms()) {
    for (std::size_t i = 0; i < k; ++i) sub[i] = occ[target_modes[i]];
    auto it = memo.find(sub);
    if (it == memo.end()) it = memo.emplace(sub, expand(u.matrix(), sub)).first;
    Occupation full = occ;
    for (const auto& [o2, c] : it->second) {
      bool fits = true;
      for (std::size_t i = 0; i < k; ++i) {
        full[target_modes[i]] = o2[i];
        fits = fits && o2[i] <= state.cutoff();
      }
      if (fits) {
        out.add(full, amp * c);
      } else {
        overflow[full] += amp * c;
      }
    }
  }
  double leaked = 0.0;
  for (const auto& [occ, amp] : overflow) leaked += std::norm(amp);
  if (leaked > 1e-24) {
    if (policy == CutoffPolicy::kError) {
      throw CutoffViolation("linear optics populates occupations above cutoff " +
                            std::to_string(state.cutoff()) + " (norm " +
                            std::to_string(leaked) + ")");
    }
    out.add_leaked_norm(leaked);
  }
  return out;
}

FockState pauli_logical(const FockState& state, const LogicalEncoding& encoding,
                        Pauli which) {
  if (encoding.kind != LogicalEncoding::Kind::kDualRail) {
    throw InvalidArgument("logical Pauli operators are defined on dual-rail qubits");
  }
  const std::size_t r0 = encoding.mode_indices[0];
  const std::size_t r1 = encoding.mode_indices[1];
  if (r0 >= state.num_modes() || r1 >= state.num_modes()) {
    throw DimensionMismatch("encoding modes outside the state");
  }
  FockState out(state.num_modes(), state.cutoff());
  for (const auto& [occ, amp] : state.terms()) {
    if (occ[r0] + occ[r1] != 1) {
      throw CodeSpaceViolation("term outside the dual-rail code space");
    }
    const bool one = occ[r1] == 1;
    Occupation next = occ;
    Amplitude v = amp;
    switch (which) {
      case Pauli::kX:
        std::swap(next[r0], next[r1]);
        break;
      case Pauli::kZ:
        if (one) v = -v;
        break;
      case Pauli::kY:
        // Y = iXZ: |0> -> i|1>, |1> -> -i|0>.
        std::swap(next[r0], next[r1]);
        v *= one ? Amplitude(0.0, -1.0) : Amplitude(0.0, 1.0);
        break;
    }
    out.add(next, v);
  }
  return out;
}

TemporalDecomposition temporal_overlap(const PulseShape& pulse, double tau) {
  TemporalDecomposition t;
  const double o = std::exp(-pulse.gamma * std::abs(tau) / 2.0);
  t.overlap = o;
  t.orthogonal_weight = std::sqrt(std::max(0.0, 1.0 - o * o));
  return t;
}

double hom_coincidence(const PulseShape& pulse, double tau) {
  return 0.5 * (1.0 - std::exp(-pulse.gamma * std::abs(tau)));
}

double hom_coincidence_simulated(const PulseShape& pulse, double tau) {
  // Modes: 0 = a parallel, 1 = a orthogonal, 2 = b parallel, 3 = b orthogonal.
  // Photon a sits in the reference temporal mode; photon b is split into the
  // part overlapping it and the orthogonal complement.
  const TemporalDecomposition td = temporal_overlap(pulse, tau);
  FockState in(4, 2);
  in.add({1, 0, 1, 0}, td.overlap);
  in.add({1, 0, 0, 1}, td.orthogonal_weight);
  const ModeUnitary bs = beamsplitter(std::numbers::pi / 4.0, 0.0);
  FockState out = apply_unitary(in, bs, {0, 2});
  out = apply_unitary(out, bs, {1, 3});
  double p = 0.0;
  for (const auto& [occ, amp] : out.terms()) {
    if (occ[0] + occ[1] == 1 && occ[2] + occ[3] == 1) p += std::norm(amp);
  }
  return p;
}

}  // namespace photonsim
