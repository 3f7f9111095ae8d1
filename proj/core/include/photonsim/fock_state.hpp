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

#ifndef PHOTONSIM_FOCK_STATE_HPP_
#define PHOTONSIM_FOCK_STATE_HPP_

#include <complex>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace photonsim {

using Amplitude = std::complex<double>;
using Occupation = std::vector<int>;

// Amplitudes at or below this magnitude are dropped to keep the sparse table
// canonical after cancellations.
inline constexpr double kAmplitudeEpsilon = 1e-15;

// What to do when an operation populates n > cutoff.
enum class CutoffPolicy { kError, kTruncate };

// Sparse superposition over occupation-number kets with a global per-mode
// cutoff. Terms are kept in lexicographic order of the occupation tuple, mode 0
// leftmost, so iteration (and anything printed from it) is deterministic.
class FockState {
 public:
  using Terms = std::map<Occupation, Amplitude>;

  FockState() = default;
  // The zero vector on `num_modes` modes. Zero modes is allowed and stands for
  // a scalar, which is what remains after every mode has been measured.
  FockState(std::size_t num_modes, int cutoff);

  static FockState vacuum(std::size_t num_modes, int cutoff);

  std::size_t num_modes() const { return num_modes_; }
  int cutoff() const { return cutoff_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  Amplitude amplitude(const Occupation& occ) const;
  // Adds `amp` to the coefficient of `occ`, pruning the entry if it cancels.
  void add(const Occupation& occ, Amplitude amp);
  void set(const Occupation& occ, Amplitude amp);

  double norm_squared() const;
  double norm() const;
  bool is_normalized(double tol = 1e-12) const;
  FockState normalized() const;
  FockState scaled(Amplitude factor) const;

  // Norm-squared dropped by truncation so far (kTruncate policy).
  double leaked_norm() const { return leaked_norm_; }
  void add_leaked_norm(double w) { leaked_norm_ += w; }

  // Same amplitudes in a space with a different cutoff. Throws CutoffViolation
  // if some stored occupation does not fit.
  FockState with_cutoff(int cutoff) const;

  // Largest total photon number over stored terms (0 for the zero vector).
  int max_total_photons() const;
  bool conserves_photon_number() const;

  FockState& operator+=(const FockState& other);

  std::string to_string(int precision = 6) const;

 private:
  void check_occupation(const Occupation& occ) const;

  std::size_t num_modes_ = 0;
  int cutoff_ = 0;
  Terms terms_;
  double leaked_norm_ = 0.0;
};

FockState operator+(const FockState& a, const FockState& b);

FockState make_fock(const Occupation& occupations, int cutoff);
FockState tensor(const FockState& a, const FockState& b);
Amplitude inner(const FockState& a, const FockState& b);
double fidelity(const FockState& a, const FockState& b);
// |<a|b>| > 1 - tol after normalizing both; global phase ignored.
bool equal_up_to_phase(const FockState& a, const FockState& b,
                       double tol = 1e-10);

// Total photon number of an occupation tuple.
int total_photons(const Occupation& occ);

enum class Ladder { kRaise, kLower };

// a or a^dag on one mode. The result is unnormalized.
FockState apply_ladder(const FockState& state, std::size_t mode, Ladder op,
                       CutoffPolicy policy = CutoffPolicy::kError);

// Expectation of the number operator on `mode`.
double mean_photon_number(const FockState& state, std::size_t mode);

struct LogicalEncoding {
  enum class Kind { kDualRail, kDRail };

  Kind kind = Kind::kDualRail;
  int d = 2;
  std::vector<std::size_t> mode_indices;

  static LogicalEncoding dual_rail(std::size_t rail0, std::size_t rail1);
  static LogicalEncoding d_rail(std::vector<std::size_t> modes);

  // Throws InvalidArgument if the invariants (mode count vs d) fail.
  void validate() const;
  // Physical mode that carries the photon for logical basis index j.
  std::size_t mode_for(int basis_index) const;
};

// Single-photon ket for logical basis index on a register of
// max(mode_indices)+1 modes, or `num_modes` if larger.
FockState encode_logical(const LogicalEncoding& encoding, int basis_index,
                         std::size_t num_modes = 0, int cutoff = 1);

// cos(theta)|0>_L + e^{-i phi} sin(theta)|1>_L on two dual-rail modes.
FockState bloch_state(double theta, double phi, int cutoff = 1);

struct PulseShape {
  double gamma = 1.0;

  explicit PulseShape(double g = 1.0);
  // sqrt(gamma) e^{-gamma t / 2} for t >= 0, zero before the emission time.
  double amplitude(double t) const;
};

}  // namespace photonsim

#endif  // PHOTONSIM_FOCK_STATE_HPP_
