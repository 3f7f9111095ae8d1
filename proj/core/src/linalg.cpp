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

#include "linalg.hpp"

#include <algorithm>
#include <cmath>

#include "photonsim/errors.hpp"

namespace photonsim::detail {

int padded_dim(int cutoff) { return cutoff + 1 + std::max(40, (cutoff + 1) / 2); }

Eigen::MatrixXcd lowering(int dim) {
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

Eigen::MatrixXcd position(int dim) {
  const Eigen::MatrixXcd a = lowering(dim);
  return (a + a.adjoint()) / std::sqrt(2.0);
}

Eigen::MatrixXcd momentum(int dim) {
  const Eigen::MatrixXcd a = lowering(dim);
  return (a - a.adjoint()) / Amplitude(0.0, std::sqrt(2.0));
}

Eigen::VectorXcd to_dense(const FockState& s, int dim) {
  if (s.num_modes() != 1) throw DimensionMismatch("expected a single-mode state");
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
  for (const auto& [occ, amp] : s.terms()) {
    if (occ[0] >= dim) throw CutoffViolation("state does not fit the dense space");
    v(occ[0]) = amp;
  }
  return v;
}

Eigen::MatrixXcd to_dense2(const FockState& s, int dim) {
  if (s.num_modes() != 2) throw DimensionMismatch("expected a two-mode state");
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& [occ, amp] : s.terms()) {
    if (occ[0] >= dim || occ[1] >= dim) throw CutoffViolation("state does not fit the dense space");
    m(occ[0], occ[1]) = amp;
  }
  return m;
}

namespace {

void check_leak(double dropped, double total, const std::string& what, double tol) {
  const double rel = total > 0 ? dropped / total : 0.0;
  if (rel > tol) {
    throw LeakageError(what + ": weight " + std::to_string(rel) +
                           " beyond the cutoff; raise the cutoff",
                       rel);
  }
}

}  // namespace

FockState from_dense(const Eigen::VectorXcd& v, int cutoff, const std::string& what, double tol) {
  FockState s(1, cutoff);
  double dropped = 0.0;
  for (Eigen::Index n = 0; n < v.size(); ++n) {
    if (n <= cutoff) {
      if (std::abs(v(n)) > kAmplitudeEpsilon) s.set({static_cast<int>(n)}, v(n));
    } else {
      dropped += std::norm(v(n));
    }
  }
  check_leak(dropped, v.squaredNorm(), what, tol);
  s.add_leaked_norm(dropped);
  return s;
}

FockState from_dense2(const Eigen::MatrixXcd& m, int cutoff, const std::string& what,
                      double tol) {
  FockState s(2, cutoff);
  double dropped = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (i <= cutoff && j <= cutoff) {
        if (std::abs(m(i, j)) > kAmplitudeEpsilon) {
          s.set({static_cast<int>(i), static_cast<int>(j)}, m(i, j));
        }
      } else {
        dropped += std::norm(m(i, j));
      }
    }
  }
  check_leak(dropped, m.squaredNorm(), what, tol);
  s.add_leaked_norm(dropped);
  return s;
}

namespace {

// Diagonal phases d with d^* H d real, found along the lowest-index coupling
// of each basis state. Band generators of single-mode optics always admit one;
// returns false when H has a loop with non-trivial phase.
bool real_gauge(const Eigen::MatrixXcd& h, Eigen::VectorXcd* d) {
  const Eigen::Index n = h.rows();
  Eigen::VectorXd chi = Eigen::VectorXd::Zero(n);
  const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
  for (Eigen::Index j = 1; j < n; ++j) {
    for (Eigen::Index m = 0; m < j; ++m) {
      if (std::abs(h(m, j)) > 1e-14 * scale) {
        chi(j) = chi(m) - std::arg(h(m, j));
        break;
      }
    }
  }
  d->resize(n);
  for (Eigen::Index j = 0; j < n; ++j) (*d)(j) = std::polar(1.0, chi(j));
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      const Amplitude e = std::conj((*d)(i)) * h(i, j) * (*d)(j);
      if (std::abs(e.imag()) > 1e-13 * scale) return false;
    }
  }
  return true;
}

}  // namespace

HermitianPropagator::HermitianPropagator(const Eigen::MatrixXcd& h) {
  Eigen::VectorXcd d;
  if (real_gauge(h, &d)) {
    const Eigen::MatrixXd g = (d.asDiagonal().inverse() * h * d.asDiagonal()).real();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g);
    if (es.info() != Eigen::Success) throw Error("eigendecomposition failed");
    values_ = es.eigenvalues();
    vectors_ = d.asDiagonal() * es.eigenvectors().cast<Amplitude>();
    return;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  if (es.info() != Eigen::Success) throw Error("eigendecomposition failed");
  values_ = es.eigenvalues();
  vectors_ = es.eigenvectors();
}

Eigen::VectorXcd HermitianPropagator::apply(const Eigen::VectorXcd& v, double t) const {
  Eigen::VectorXcd w = vectors_.adjoint() * v;
  for (Eigen::Index k = 0; k < w.size(); ++k) w(k) *= std::polar(1.0, -t * values_(k));
  return vectors_ * w;
}

}  // namespace photonsim::detail
