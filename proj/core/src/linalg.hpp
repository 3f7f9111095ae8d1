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

#ifndef PHOTONSIM_SRC_LINALG_HPP_
#define PHOTONSIM_SRC_LINALG_HPP_

// Dense helpers for single- and two-mode truncated spaces. Internal to the
// library; nothing here is installed.

#include <Eigen/Dense>
#include <string>

#include "photonsim/fock_state.hpp"

namespace photonsim::detail {

// Working dimension for exponentials of unbounded generators: the state is
// padded so the truncated generator's edge never reaches its support.
int padded_dim(int cutoff);

Eigen::MatrixXcd lowering(int dim);
// q = (a + a^dag)/sqrt2 and p = (a - a^dag)/(i sqrt2), truncated.
Eigen::MatrixXcd position(int dim);
Eigen::MatrixXcd momentum(int dim);

Eigen::VectorXcd to_dense(const FockState& single_mode, int dim);
// Rows index mode 0, columns mode 1.
Eigen::MatrixXcd to_dense2(const FockState& two_mode, int dim);

// Keeps entries 0..cutoff. Throws LeakageError naming `what` if the dropped
// weight exceeds `tol` relative to the total.
FockState from_dense(const Eigen::VectorXcd& v, int cutoff, const std::string& what,
                     double tol);
FockState from_dense2(const Eigen::MatrixXcd& m, int cutoff, const std::string& what,
                      double tol);

// exp(-i t H) for Hermitian H through one eigendecomposition, reusable for
// many t.
class HermitianPropagator {
 public:
  explicit HermitianPropagator(const Eigen::MatrixXcd& h);
  Eigen::VectorXcd apply(const Eigen::VectorXcd& v, double t) const;
  const Eigen::VectorXd& eigenvalues() const { return values_; }
  const Eigen::MatrixXcd& eigenvectors() const { return vectors_; }

 private:
  Eigen::VectorXd values_;
  Eigen::MatrixXcd vectors_;
};

}  // namespace photonsim::detail

#endif  // PHOTONSIM_SRC_LINALG_HPP_
