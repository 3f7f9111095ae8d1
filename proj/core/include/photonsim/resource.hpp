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

#ifndef PHOTONSIM_RESOURCE_HPP_
#define PHOTONSIM_RESOURCE_HPP_

#include <cstdint>
#include <string>

namespace photonsim {

// How linear clusters are grown from Bell pairs with type-I fusion.
// Three-node clusters are made from two Bell pairs and then fused onto the
// end of the growing chain. On a failed chain fusion the 3-cluster loses its
// fused end; kRecycle reuses the surviving Bell pair, kDiscard throws it away.
struct GrowthStrategy {
  enum class Kind { kRecycle, kDiscard };
  Kind kind = Kind::kRecycle;
  double success_probability = 0.5;

  static GrowthStrategy parse(const std::string& name, double success_probability = 0.5);
  std::string name() const;
  void validate() const;
};

struct ResourceStatistics {
  GrowthStrategy strategy;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  int target_length = 0;
  int seed_length = 3;
  // Fresh Bell pairs per net added chain qubit (ratio estimator over trials).
  double mean_cost = 0.0;
  double stderr_cost = 0.0;
  // Bell pairs (fresh or recycled) spent per finished 3-cluster.
  double mean_cluster3_cost = 0.0;
  double stderr_cluster3_cost = 0.0;
  std::uint64_t bell_pairs = 0;
  std::uint64_t added_qubits = 0;
  std::uint64_t cluster3_built = 0;

  static std::string csv_header();  // strategy,trials,mean_cost,stderr,seed
  std::string csv_row() const;
};

// Each trial starts from a free chain of `seed_length` nodes and fuses
// 3-clusters onto its end until the chain has at least `target_length` nodes.
// A chain that fails down to nothing restarts from the next 3-cluster. Short
// seeds make such restarts common and pull the estimate below its
// long-chain value, so steady-state figures need a seed of ~20 nodes.
// Trials use independent RNG streams keyed by (seed, trial), so `workers`
// does not change results.
ResourceStatistics grow_linear_cluster(int target_length, const GrowthStrategy& strategy,
                                       std::uint64_t trials, std::uint64_t seed,
                                       unsigned workers = 1, int seed_length = 3);

}  // namespace photonsim

#endif  // PHOTONSIM_RESOURCE_HPP_
