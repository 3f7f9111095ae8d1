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

#include "oracles/oracles.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace oracle {

Eigen::MatrixXcd expm(const Eigen::MatrixXcd& a) {
  const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const Eigen::MatrixXcd b = a / std::pow(2.0, squarings);
  const Eigen::Index n = a.rows();
  Eigen::MatrixXcd result = Eigen::MatrixXcd::Identity(n, n);
  Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(n, n);
  for (int k = 1; k < 40; ++k) {
    term = term * b / static_cast<double>(k);
    result += term;
    if (term.cwiseAbs().maxCoeff() < 1e-18) break;
  }
  for (int i = 0; i < squarings; ++i) result = result * result;
  return result;
}

namespace {

Eigen::MatrixXcd annihilator(int dim) {
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

}  // namespace

Eigen::VectorXcd displaced_squeezed(cd alpha, double r, double phi, int dim, int pad) {
  const int big = dim + pad;
  const Eigen::MatrixXcd a = annihilator(big);
  const Eigen::MatrixXcd ad = a.adjoint();
  const cd zeta = std::polar(r, -2.0 * phi);
  const Eigen::MatrixXcd s = expm(0.5 * (std::conj(zeta) * a * a - zeta * ad * ad));
  const Eigen::MatrixXcd d = expm(alpha * ad - std::conj(alpha) * a);
  Eigen::VectorXcd vac = Eigen::VectorXcd::Zero(big);
  vac(0) = 1.0;
  const Eigen::VectorXcd full = d * (s * vac);
  return full.head(dim);
}

Eigen::VectorXcd coherent_amplitudes(cd alpha, int dim) {
  Eigen::VectorXcd v(dim);
  for (int n = 0; n < dim; ++n) {
    // alpha^n / sqrt(n!) e^{-|alpha|^2/2}, in logs to stay independent of
    // the library's running product.
    if (std::abs(alpha) == 0.0) {
      v(n) = n == 0 ? 1.0 : 0.0;
      continue;
    }
    const double logmag = n * std::log(std::abs(alpha)) - 0.5 * std::lgamma(n + 1.0) -
                          0.5 * std::norm(alpha);
    v(n) = std::polar(std::exp(logmag), n * std::arg(alpha));
  }
  return v;
}

Eigen::VectorXcd squeezed_vacuum_amplitudes(double r, double phi, int dim) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
  const cd ratio = -std::polar(std::tanh(r), -2.0 * phi);
  for (int m = 0; 2 * m < dim; ++m) {
    const double c = std::exp(0.5 * std::lgamma(2.0 * m + 1) - m * std::log(2.0) -
                              std::lgamma(m + 1.0));
    v(2 * m) = std::pow(ratio, m) * c / std::sqrt(std::cosh(r));
  }
  return v;
}

cd coherent_wavefunction(cd alpha, double q) {
  const double q0 = std::sqrt(2.0) * alpha.real();
  const double p0 = std::sqrt(2.0) * alpha.imag();
  return std::pow(std::numbers::pi, -0.25) *
         std::exp(cd(-0.5 * (q - q0) * (q - q0), p0 * q - 0.5 * q0 * p0));
}

cd permanent(const Eigen::MatrixXcd& m) {
  const int n = static_cast<int>(m.rows());
  if (n == 0) return 1.0;
  if (m.cols() != n) throw std::invalid_argument("permanent of a non-square matrix");
  std::vector<cd> rowsum(n, 0.0);
  cd total = 0.0;
  unsigned long gray = 0;
  for (unsigned long k = 1; k < (1UL << n); ++k) {
    const unsigned long next = k ^ (k >> 1);
    const unsigned long diff = next ^ gray;
    const int col = __builtin_ctzl(diff);
    const double sign = (next & diff) ? 1.0 : -1.0;
    for (int i = 0; i < n; ++i) rowsum[i] += sign * m(i, col);
    gray = next;
    cd prod = 1.0;
    for (int i = 0; i < n; ++i) prod *= rowsum[i];
    const int bits = __builtin_popcountl(gray);
    total += ((n - bits) % 2 == 0 ? 1.0 : -1.0) * prod;
  }
  return total;
}

cd transition_amplitude(const Eigen::MatrixXcd& m, const std::vector<int>& in,
                        const std::vector<int>& out) {
  std::vector<int> rows, cols;
  double fact = 1.0;
  for (std::size_t j = 0; j < in.size(); ++j) {
    for (int c = 0; c < in[j]; ++c) rows.push_back(static_cast<int>(j));
    fact *= std::tgamma(in[j] + 1.0);
  }
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (int c = 0; c < out[k]; ++c) cols.push_back(static_cast<int>(k));
    fact *= std::tgamma(out[k] + 1.0);
  }
  if (rows.size() != cols.size()) return 0.0;
  Eigen::MatrixXcd sub(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) sub(i, j) = m(rows[i], cols[j]);
  }
  return permanent(sub) / std::sqrt(fact);
}

namespace {

void compositions(int total, int modes, int cutoff, std::vector<int>& cur,
                  const std::function<void(const std::vector<int>&)>& f) {
  if (static_cast<int>(cur.size()) == modes - 1) {
    if (total <= cutoff) {
      cur.push_back(total);
      f(cur);
      cur.pop_back();
    }
    return;
  }
  for (int k = 0; k <= std::min(total, cutoff); ++k) {
    cur.push_back(k);
    compositions(total - k, modes, cutoff, cur, f);
    cur.pop_back();
  }
}

}  // namespace

Ket apply_linear_optics(const Eigen::MatrixXcd& m, const Ket& in, int cutoff) {
  Ket out;
  for (const auto& [occ, amp] : in) {
    int total = 0;
    for (int n : occ) total += n;
    std::vector<int> cur;
    compositions(total, static_cast<int>(occ.size()), cutoff, cur,
                 [&](const std::vector<int>& o) {
                   const cd t = transition_amplitude(m, occ, o);
                   if (std::abs(t) > 0) out[o] += amp * t;
                 });
  }
  for (auto it = out.begin(); it != out.end();) {
    it = std::abs(it->second) < 1e-15 ? out.erase(it) : std::next(it);
  }
  return out;
}

int fock_index(const std::vector<int>& occ, int cutoff) {
  int idx = 0;
  for (int n : occ) idx = idx * (cutoff + 1) + n;
  return idx;
}

Eigen::MatrixXcd fock_space_unitary(const Eigen::MatrixXcd& m, int cutoff) {
  const int modes = static_cast<int>(m.rows());
  // Matrix logarithm of the unitary M^T through its Schur form, which is
  // diagonal for normal matrices.
  Eigen::ComplexSchur<Eigen::MatrixXcd> schur(m.transpose());
  const Eigen::MatrixXcd& q = schur.matrixU();
  Eigen::VectorXcd logs(modes);
  for (int i = 0; i < modes; ++i) logs(i) = std::log(schur.matrixT()(i, i));
  const Eigen::MatrixXcd a_gen = cd(0, -1) * q * logs.asDiagonal() * q.adjoint();

  int dim = 1;
  for (int i = 0; i < modes; ++i) dim *= cutoff + 1;
  std::vector<Eigen::MatrixXcd> lower(modes, Eigen::MatrixXcd::Zero(dim, dim));
  for (int idx = 0; idx < dim; ++idx) {
    std::vector<int> occ(modes);
    int rest = idx;
    for (int j = modes - 1; j >= 0; --j) {
      occ[j] = rest % (cutoff + 1);
      rest /= cutoff + 1;
    }
    for (int j = 0; j < modes; ++j) {
      if (occ[j] == 0) continue;
      std::vector<int> down = occ;
      --down[j];
      lower[j](fock_index(down, cutoff), idx) = std::sqrt(static_cast<double>(occ[j]));
    }
  }
  Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(dim, dim);
  for (int l = 0; l < modes; ++l) {
    for (int k = 0; k < modes; ++k) g += a_gen(l, k) * lower[l].adjoint() * lower[k];
  }
  return expm(cd(0, 1) * g);
}

Eigen::MatrixXcd beamsplitter(int n, int i, int j, double theta, double phi) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(n, n);
  const double c = std::cos(theta), s = std::sin(theta);
  m(i, i) = c;
  m(i, j) = std::polar(s, -phi);
  m(j, i) = -std::polar(s, phi);
  m(j, j) = c;
  return m;
}

HeraldedMode gbs_dense(const std::array<Eigen::VectorXcd, 3>& inputs, const Eigen::MatrixXcd& m,
                       int h1, int h2, int cutoff) {
  HeraldedMode r;
  r.amplitudes = Eigen::VectorXcd::Zero(cutoff + 1);
  double in_norm = 1.0;
  for (const auto& v : inputs) in_norm *= v.head(cutoff + 1).squaredNorm();
  for (int m0 = 0; m0 <= cutoff; ++m0) {
    const std::vector<int> out{m0, h1, h2};
    const int total = m0 + h1 + h2;
    cd acc = 0.0;
    for (int n0 = 0; n0 <= std::min(total, cutoff); ++n0) {
      for (int n1 = 0; n1 <= std::min(total - n0, cutoff); ++n1) {
        const int n2 = total - n0 - n1;
        if (n2 > cutoff) continue;
        const cd c = inputs[0](n0) * inputs[1](n1) * inputs[2](n2);
        if (c == cd(0.0)) continue;
        acc += c * transition_amplitude(m, {n0, n1, n2}, out);
      }
    }
    r.amplitudes(m0) = acc;
  }
  r.probability = r.amplitudes.squaredNorm() / in_norm;
  return r;
}

Eigen::Matrix2d squeezed_covariance(double r, double phi) {
  // diag(e^{-2r}, e^{2r})/2 rotated by -phi, from the ladder transform
  // a -> a cosh r - a^dag e^{-2i phi} sinh r: cov(q, p) = sinh(2r) sin(2 phi) / 2.
  const Eigen::Matrix2d d = Eigen::Vector2d(std::exp(-2 * r), std::exp(2 * r)).asDiagonal();
  const double c = std::cos(phi), s = std::sin(phi);
  Eigen::Matrix2d rot;
  rot << c, s, -s, c;
  return 0.5 * rot * d * rot.transpose();
}

Eigen::Matrix4d qq_symplectic(double theta) {
  // Heisenberg picture: p1 -> p1 - theta q2, p2 -> p2 - theta q1.
  Eigen::Matrix4d s = Eigen::Matrix4d::Identity();
  s(1, 2) = -theta;
  s(3, 0) = -theta;
  return s;
}

double log_negativity(const Eigen::Matrix4d& cov) {
  Eigen::Matrix4d pt = cov;
  // Partial transpose flips p2.
  for (int i = 0; i < 4; ++i) {
    pt(3, i) = -pt(3, i);
    pt(i, 3) = -pt(i, 3);
  }
  Eigen::Matrix4d omega = Eigen::Matrix4d::Zero();
  omega(0, 1) = 1;
  omega(1, 0) = -1;
  omega(2, 3) = 1;
  omega(3, 2) = -1;
  const Eigen::Matrix4d k = omega * pt;
  const Eigen::Vector4cd ev = k.eigenvalues();
  double en = 0.0;
  // Symplectic eigenvalues come as +-i nu pairs.
  for (int i = 0; i < 4; ++i) {
    const double nu = std::abs(ev(i).imag());
    if (ev(i).imag() > 0 && 2.0 * nu < 1.0) en += -std::log2(2.0 * nu);
  }
  return en;
}

double hom_coincidence(double gamma, double tau) {
  return 0.5 * (1.0 - std::exp(-gamma * std::abs(tau)));
}

std::array<cd, 16> cluster4_state() {
  const double h = 1.0 / std::sqrt(2.0);
  const std::array<double, 2> plus{h, h}, minus{h, -h};
  const std::array<std::array<int, 4>, 4> z_bits{{{0, 0, 0, 0}, {0, 0, 1, 0}, {1, 0, 0, 0}, {1, 0, 1, 0}}};
  // Each term: qubits 1 and 3 in Z basis, 2 and 4 in X basis.
  const std::array<std::array<int, 2>, 4> signs{{{+1, +1}, {-1, -1}, {-1, +1}, {+1, -1}}};
  std::array<cd, 16> psi{};
  for (int t = 0; t < 4; ++t) {
    const int b1 = z_bits[t][0], b3 = z_bits[t][2];
    const auto& q2 = signs[t][0] > 0 ? plus : minus;
    const auto& q4 = signs[t][1] > 0 ? plus : minus;
    for (int b2 = 0; b2 < 2; ++b2) {
      for (int b4 = 0; b4 < 2; ++b4) {
        const int idx = (b1 << 3) | (b2 << 2) | (b3 << 1) | b4;
        psi[idx] += 0.5 * q2[b2] * q4[b4];
      }
    }
  }
  return psi;
}

Eigen::Matrix4cd logical_cz() {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Identity();
  m(3, 3) = -1.0;
  return m;
}

}  // namespace oracle
