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

#include "photonsim/mbqc.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <set>
#include <string>

#include "photonsim/errors.hpp"

namespace photonsim {

namespace {

DualRailRegister relabel(const DualRailRegister& reg, const std::vector<int>& labels) {
  std::vector<LogicalEncoding> qubits;
  for (std::size_t i = 0; i < reg.num_qubits(); ++i) qubits.push_back(reg.qubit(i));
  return DualRailRegister(reg.state(), std::move(qubits), labels);
}

}  // namespace

DualRailRegister build_cluster(const ClusterGraph& graph, const BuildOptions& options) {
  graph.validate();
  const std::vector<PhotonId> photons = graph.photons();
  if (photons.empty()) {
    // Everything was measured or fused away: the scalar 1.
    FockState one(0, 1);
    one.set({}, 1.0);
    return DualRailRegister(one, {}, {});
  }
  DualRailRegister reg = relabel(DualRailRegister::from_bits(Bits(photons.size(), 0)), photons);
  for (NodeId v : graph.nodes()) {
    const auto& grp = graph.group(v);
    const std::size_t first = reg.index_of(grp.front());
    reg = reg.apply_single(first, hadamard_matrix());
    for (std::size_t k = 1; k < grp.size(); ++k) reg = reg.apply_cnot(first, reg.index_of(grp[k]));
  }
  if (options.heralded_cz && options.rng == nullptr) {
    throw InvalidArgument("heralded cluster construction needs an RNG");
  }
  std::uint64_t attempts = 0;
  std::unique_ptr<CZGate> cz;
  if (options.heralded_cz) cz = std::make_unique<CZGate>(options.ns_spec);
  for (const auto& [u, v] : graph.edges()) {
    const std::size_t a = reg.index_of(graph.group(u).front());
    const std::size_t b = reg.index_of(graph.group(v).front());
    if (!options.heralded_cz) {
      reg = reg.apply_cz(a, b);
      continue;
    }
    // A failed herald destroys the attempt; the resource is regenerated and
    // the gate retried, so only the success branch propagates.
    const HeraldedResult r = cz->apply(reg, a, b);
    do {
      ++attempts;
    } while (!options.rng->bernoulli(r.probability()));
    reg = reg.with_state(r.state());
  }
  if (options.attempts) *options.attempts = attempts;
  return reg;
}

DualRailRegister graph_state_register(const ClusterGraph& graph, const PauliFrame& frame,
                                      const std::vector<DetachedPhoton>& detached) {
  DualRailRegister reg = build_cluster(graph);
  for (const auto& [p, xz] : frame.entries()) {
    if (!reg.has_label(p)) continue;
    const std::size_t i = reg.index_of(p);
    if (xz.second) reg = reg.apply_single(i, pauli_matrix('Z'));
    if (xz.first) reg = reg.apply_single(i, pauli_matrix('X'));
  }
  for (const DetachedPhoton& d : detached) {
    reg = reg.append(relabel(DualRailRegister::from_bits({d.value}), {d.photon}));
  }
  std::vector<int> order = reg.labels();
  std::sort(order.begin(), order.end());
  return reg.reordered(order);
}

MeasurementBasis MeasurementBasis::Y() { return {Kind::kXY, std::numbers::pi / 2.0}; }

Eigen::Matrix2cd MeasurementBasis::rotation() const {
  if (kind == Kind::kZ) return Eigen::Matrix2cd::Identity();
  const Amplitude e = std::polar(1.0, -angle);
  Eigen::Matrix2cd u;
  u << 1.0, e, 1.0, -e;
  return u / std::sqrt(2.0);
}

std::vector<MeasurementBranch> measure_qubit(const DualRailRegister& reg, int label,
                                             const MeasurementBasis& basis) {
  const std::size_t idx = reg.index_of(label);
  const DualRailRegister rotated = reg.apply_single(idx, basis.rotation());
  const double total = reg.state().norm_squared();
  std::vector<MeasurementBranch> out;
  for (int o = 0; o < 2; ++o) {
    DualRailRegister res = rotated.project_qubit(idx, o);
    const double p = res.state().norm_squared() / total;
    out.push_back({o, p, std::move(res)});
  }
  return out;
}

MeasurementPattern& MeasurementPattern::measure(int qubit, MeasurementBasis basis) {
  steps_.push_back({qubit, [basis](const OutcomeRecord&) { return basis; }, {}});
  return *this;
}

MeasurementPattern& MeasurementPattern::measure_adaptive(
    int qubit, std::function<MeasurementBasis(const OutcomeRecord&)> basis) {
  steps_.push_back({qubit, std::move(basis), {}});
  return *this;
}

MeasurementPattern& MeasurementPattern::correct(
    int target, std::function<Eigen::Matrix2cd(const OutcomeRecord&)> gate) {
  if (steps_.empty()) throw InvalidArgument("corrections follow a measurement");
  steps_.back().feed_forward.push_back({target, std::move(gate)});
  return *this;
}

void MeasurementPattern::validate() const {
  std::set<int> seen;
  for (const auto& s : steps_) {
    if (!seen.insert(s.qubit).second) {
      throw InvalidArgument("qubit " + std::to_string(s.qubit) + " is measured twice");
    }
  }
}

namespace {

DualRailRegister apply_feed_forward(DualRailRegister reg, const MeasurementStep& step,
                                    const OutcomeRecord& record) {
  for (const FeedForward& ff : step.feed_forward) {
    reg = reg.apply_single(reg.index_of(ff.target), ff.gate(record));
  }
  return reg;
}

void enumerate_from(const DualRailRegister& reg, const MeasurementPattern& pattern,
                    std::size_t step, const OutcomeRecord& record, double probability,
                    double min_probability, std::vector<PatternRun>& out) {
  if (step == pattern.steps().size()) {
    out.push_back({record, probability, reg.normalized()});
    return;
  }
  const MeasurementStep& s = pattern.steps()[step];
  for (MeasurementBranch& b : measure_qubit(reg, s.qubit, s.basis(record))) {
    const double p = probability * b.probability;
    if (p < min_probability) continue;
    OutcomeRecord next = record;
    next[s.qubit] = b.outcome;
    const DualRailRegister corrected = apply_feed_forward(b.residual.normalized(), s, next);
    enumerate_from(corrected, pattern, step + 1, next, p, min_probability, out);
  }
}

}  // namespace

PatternRun run_pattern(const DualRailRegister& reg, const MeasurementPattern& pattern,
                       CounterRng& rng) {
  pattern.validate();
  PatternRun run{{}, 1.0, reg.normalized()};
  for (const MeasurementStep& s : pattern.steps()) {
    std::vector<MeasurementBranch> branches = measure_qubit(run.residual, s.qubit, s.basis(run.outcomes));
    const int o = rng.uniform() < branches[0].probability ? 0 : 1;
    run.outcomes[s.qubit] = o;
    run.probability *= branches[o].probability;
    run.residual = apply_feed_forward(branches[o].residual.normalized(), s, run.outcomes);
  }
  return run;
}

std::vector<PatternRun> enumerate_pattern(const DualRailRegister& reg,
                                          const MeasurementPattern& pattern,
                                          double min_probability) {
  pattern.validate();
  std::vector<PatternRun> out;
  enumerate_from(reg.normalized(), pattern, 0, {}, 1.0, min_probability, out);
  return out;
}

Eigen::Matrix2cd cnot_correction(int s2) {
  const Amplitude i(0.0, 1.0);
  const Amplitude global = (1.0 + (s2 ? -1.0 : 1.0) * i) / std::sqrt(2.0);
  // exp(-i pi/4 (1 + sigma_y)) = e^{-i pi/4} (1 - i sigma_y) / sqrt2.
  const Eigen::Matrix2cd rot = std::polar(1.0, -std::numbers::pi / 4.0) *
                               (Eigen::Matrix2cd::Identity() - i * pauli_matrix('Y')) /
                               std::sqrt(2.0);
  Eigen::Matrix2cd u = global * rot;
  if (s2) u = pauli_matrix('X') * u;
  return u;
}

DualRailRegister cnot_cluster(int i1, int i4) {
  if ((i1 != 0 && i1 != 1) || (i4 != 0 && i4 != 1)) throw InvalidArgument("CNOT inputs are bits");
  DualRailRegister reg = relabel(DualRailRegister::from_bits({i1, 0, 0, i4}), {1, 2, 3, 4});
  reg = reg.apply_single(1, hadamard_matrix());
  reg = reg.apply_single(2, hadamard_matrix());
  return reg.apply_diagonal([](const Bits& b) {
    auto z = [&](int k) { return 1 - 2 * b[k]; };
    const double s = z(0) * z(1) + z(1) * z(2) + z(1) * z(3);
    return std::polar(1.0, -std::numbers::pi / 4.0 * s);
  });
}

MeasurementPattern cnot_pattern() {
  MeasurementPattern p;
  p.measure(1, MeasurementBasis::X());
  p.measure(2, MeasurementBasis::X()).correct(3, [](const OutcomeRecord& r) {
    return cnot_correction(r.at(2));
  });
  p.measure(3, MeasurementBasis::Z());
  p.measure(4, MeasurementBasis::Z());
  return p;
}

CnotResult mbqc_cnot(int i1, int i4, CounterRng& rng) {
  const PatternRun run = run_pattern(cnot_cluster(i1, i4), cnot_pattern(), rng);
  CnotResult r;
  r.outcomes = run.outcomes;
  r.q3 = run.outcomes.at(3);
  r.q4 = run.outcomes.at(4);
  r.verified = r.q3 == (i1 ^ i4) && r.q4 == i4;
  return r;
}

std::vector<CnotBranch> mbqc_cnot_branches(int i1, int i4) {
  std::vector<CnotBranch> out;
  for (const PatternRun& run : enumerate_pattern(cnot_cluster(i1, i4), cnot_pattern())) {
    out.push_back({run.outcomes.at(1), run.outcomes.at(2), run.outcomes.at(3),
                   run.outcomes.at(4), run.probability});
  }
  return out;
}

}  // namespace photonsim
