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

#include "photonsim/fock_state.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "photonsim/errors.hpp"

namespace photonsim {

FockState::FockState(std::size_t num_modes, int cutoff)
    : num_modes_(num_modes), cutoff_(cutoff) {
  if (cutoff < 0) throw InvalidArgument("cutoff must be non-negative");
}

FockState FockState::vacuum(std::size_t num_modes, int cutoff) {
  FockState s(num_modes, cutoff);
  s.terms_.emplace(Occupation(num_modes, 0), Amplitude(1.0));
  return s;
}

void FockState::check_occupation(const Occupation& occ) const {
  if (occ.size() != num_modes_) {
    throw DimensionMismatch("occupation tuple has " +
                            std::to_string(occ.size()) + " entries, state has " +
                            std::to_string(num_modes_) + " modes");
  }
  for (int n : occ) {
    if (n < 0) throw InvalidArgument("negative occupation number");
    if (n > cutoff_) {
      throw CutoffViolation("occupation " + std::to_string(n) +
                            " exceeds cutoff " + std::to_string(cutoff_));
    }
  }
}

Amplitude FockState::amplitude(const Occupation& occ) const {
  auto it = terms_.find(occ);
  return it == terms_.end() ? Amplitude(0.0) : it->second;
}

void FockState::add(const Occupation& occ, Amplitude amp) {
  check_occupation(occ);
  auto [it, inserted] = terms_.try_emplace(occ, amp);
  if (!inserted) it->second += amp;
  if (std::abs(it->second) <= kAmplitudeEpsilon) terms_.erase(it);
}

void FockState::set(const Occupation& occ, Amplitude amp) {
  check_occupation(occ);
  if (std::abs(amp) <= kAmplitudeEpsilon) {
    terms_.erase(occ);
  } else {
    terms_[occ] = amp;
  }
}

double FockState::norm_squared() const {
  double s = 0.0;
  for (const auto& [occ, amp] : terms_) s += std::norm(amp);
  return s;
}

double FockState::norm() const { return std::sqrt(norm_squared()); }

bool FockState::is_normalized(double tol) const {
  return std::abs(norm_squared() - 1.0) < tol;
}

FockState FockState::normalized() const {
  const double n = norm();
  if (n == 0.0) throw InvalidArgument("cannot normalize the zero vector");
  return scaled(1.0 / n);
}

FockState FockState::scaled(Amplitude factor) const {
  FockState out(num_modes_, cutoff_);
  out.leaked_norm_ = leaked_norm_ * std::norm(factor);
  for (const auto& [occ, amp] : terms_) {
    Amplitude v = amp * factor;
    if (std::abs(v) > kAmplitudeEpsilon) out.terms_.emplace_hint(out.terms_.end(), occ, v);
  }
  return out;
}

FockState FockState::with_cutoff(int cutoff) const {
  FockState out(num_modes_, cutoff);
  out.leaked_norm_ = leaked_norm_;
  for (const auto& [occ, amp] : terms_) out.set(occ, amp);
  return out;
}

int FockState::max_total_photons() const {
  int m = 0;
  for (const auto& [occ, amp] : terms_) m = std::max(m, total_photons(occ));
  return m;
}

bool FockState::conserves_photon_number() const {
  if (terms_.empty()) return true;
  const int n = total_photons(terms_.begin()->first);
  for (const auto& [occ, amp] : terms_) {
    if (total_photons(occ) != n) return false;
  }
  return true;
}

FockState& FockState::operator+=(const FockState& other) {
  if (other.num_modes_ != num_modes_) {
    throw DimensionMismatch("cannot add states on different mode counts");
  }
  if (other.cutoff_ > cutoff_) *this = with_cutoff(other.cutoff_);
  for (const auto& [occ, amp] : other.terms_) add(occ, amp);
  leaked_norm_ += other.leaked_norm_;
  return *this;
}

FockState operator+(const FockState& a, const FockState& b) {
  FockState out = a;
  out += b;
  return out;
}

std::string FockState::to_string(int precision) const {
  std::ostringstream os;
  os.precision(precision);
  bool first = true;
  for (const auto& [occ, amp] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << amp.real() << (amp.imag() < 0 ? "-" : "+")
       << std::abs(amp.imag()) << "i)|";
    for (std::size_t k = 0; k < occ.size(); ++k) {
      if (k) os << ",";
      os << occ[k];
    }
    os << ">";
  }
  if (first) os << "0";
  return os.str();
}

int total_photons(const Occupation& occ) {
  return std::accumulate(occ.begin(), occ.end(), 0);
}

FockState make_fock(const Occupation& occupations, int cutoff) {
  FockState s(occupations.size(), cutoff);
  s.set(occupations, 1.0);
  return s;
}

FockState tensor(const FockState& a, const FockState& b) {
  const int cutoff = std::max(a.cutoff(), b.cutoff());
  FockState out(a.num_modes() + b.num_modes(), cutoff);
  Occupation occ(a.num_modes() + b.num_modes());
  for (const auto& [oa, xa] : a.terms()) {
    std::copy(oa.begin(), oa.end(), occ.begin());
    for (const auto& [ob, xb] : b.terms()) {
      std::copy(ob.begin(), ob.end(), occ.begin() + a.num_modes());
      out.add(occ, xa * xb);
    }
  }
  out.add_leaked_norm(a.leaked_norm() + b.leaked_norm());
  return out;
}

Amplitude inner(const FockState& a, const FockState& b) {
  if (a.num_modes() != b.num_modes()) {
    throw DimensionMismatch("inner product of states on different mode counts");
  }
  Amplitude s = 0.0;
  if (a.size() <= b.size()) {
    for (const auto& [occ, x] : a.terms()) s += std::conj(x) * b.amplitude(occ);
  } else {
    for (const auto& [occ, y] : b.terms()) s += std::conj(a.amplitude(occ)) * y;
  }
  return s;
}

double fidelity(const FockState& a, const FockState& b) {
  const double na = a.norm_squared();
  const double nb = b.norm_squared();
  if (na == 0.0 || nb == 0.0) return 0.0;
  return std::norm(inner(a, b)) / (na * nb);
}

bool equal_up_to_phase(const FockState& a, const FockState& b, double tol) {
  const double na = a.norm();
  const double nb = b.norm();
  if (na == 0.0 || nb == 0.0) return na == nb;
  return std::abs(inner(a, b)) / (na * nb) > 1.0 - tol;
}

FockState apply_ladder(const FockState& state, std::size_t mode, Ladder op,
                       CutoffPolicy policy) {
  if (mode >= state.num_modes()) throw InvalidArgument("mode index out of range");
  FockState out(state.num_modes(), state.cutoff());
  out.add_leaked_norm(state.leaked_norm());
  for (const auto& [occ, amp] : state.terms()) {
    Occupation next = occ;
    if (op == Ladder::kLower) {
      if (occ[mode] == 0) continue;
      next[mode] -= 1;
      out.add(next, amp * std::sqrt(static_cast<double>(occ[mode])));
    } else {
      next[mode] += 1;
      const Amplitude v = amp * std::sqrt(static_cast<double>(next[mode]));
      if (next[mode] > state.cutoff()) {
        if (policy == CutoffPolicy::kError) {
          throw CutoffViolation("raising operator exceeds cutoff " +
                                std::to_string(state.cutoff()));
        }
        out.add_leaked_norm(std::norm(v));
        continue;
      }
      out.add(next, v);
    }
  }
  return out;
}

double mean_photon_number(const FockState& state, std::size_t mode) {
  if (mode >= state.num_modes()) throw InvalidArgument("mode index out of range");
  double s = 0.0;
  for (const auto& [occ, amp] : state.terms()) s += occ[mode] * std::norm(amp);
  return s / state.norm_squared();
}

LogicalEncoding LogicalEncoding::dual_rail(std::size_t rail0, std::size_t rail1) {
  LogicalEncoding e;
  e.kind = Kind::kDualRail;
  e.d = 2;
  e.mode_indices = {rail0, rail1};
  e.validate();
  return e;
}

LogicalEncoding LogicalEncoding::d_rail(std::vector<std::size_t> modes) {
  LogicalEncoding e;
  e.kind = Kind::kDRail;
  e.d = static_cast<int>(modes.size());
  e.mode_indices = std::move(modes);
  e.validate();
  return e;
}

void LogicalEncoding::validate() const {
  if (kind == Kind::kDualRail && (d != 2 || mode_indices.size() != 2)) {
    throw InvalidArgument("dual-rail encoding uses exactly two modes");
  }
  if (d < 2 || mode_indices.size() != static_cast<std::size_t>(d)) {
    throw InvalidArgument("d-rail encoding uses exactly d modes");
  }
  std::vector<std::size_t> sorted = mode_indices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidArgument("encoding modes must be distinct");
  }
}

std::size_t LogicalEncoding::mode_for(int basis_index) const {
  if (basis_index < 0 || basis_index >= d) {
    throw InvalidArgument("logical basis index out of range");
  }
  // Dual rail: |0>_L = |1,0>. The d-rail listing puts |0> on the last mode.
  if (kind == Kind::kDualRail) return mode_indices[basis_index];
  return mode_indices[d - 1 - basis_index];
}

FockState encode_logical(const LogicalEncoding& encoding, int basis_index,
                         std::size_t num_modes, int cutoff) {
  encoding.validate();
  const std::size_t mode = encoding.mode_for(basis_index);
  const std::size_t needed =
      *std::max_element(encoding.mode_indices.begin(),
                        encoding.mode_indices.end()) + 1;
  Occupation occ(std::max(num_modes, needed), 0);
  occ[mode] = 1;
  return make_fock(occ, std::max(cutoff, 1));
}

FockState bloch_state(double theta, double phi, int cutoff) {
  FockState s(2, std::max(cutoff, 1));
  s.set({1, 0}, std::cos(theta));
  s.set({0, 1}, std::polar(1.0, -phi) * std::sin(theta));
  return s;
}

PulseShape::PulseShape(double g) : gamma(g) {
  if (!(g > 0.0)) throw InvalidArgument("pulse decay rate must be positive");
}

double PulseShape::amplitude(double t) const {
  return t < 0.0 ? 0.0 : std::sqrt(gamma) * std::exp(-gamma * t / 2.0);
}

}  // namespace photonsim
