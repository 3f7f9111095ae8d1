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

#include "photonsim/resource.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <thread>
#include <vector>

#include "photonsim/cluster_graph.hpp"
#include "photonsim/errors.hpp"
#include "photonsim/rng.hpp"

namespace photonsim {

namespace {

struct TrialTally {
  double bell_pairs = 0;
  double added = 0;
  double cluster3_pairs = 0;
  double cluster3_built = 0;
};

// One trial on the graph tier. Photon ids double as vertex ids since no
// vertex here ever holds more than one photon.
class Grower {
 public:
  Grower(const GrowthStrategy& s, CounterRng rng) : s_(s), rng_(rng) {}

  TrialTally run(int seed_length, int target) {
    // The starting chain is free; only the growth is charged.
    std::vector<PhotonId> c = fresh_path(seed_length);
    chain_.assign(c.begin(), c.end());
    const int start = static_cast<int>(chain_.size());
    while (static_cast<int>(chain_.size()) < target) step();
    t_.added = static_cast<double>(static_cast<int>(chain_.size()) - start);
    return t_;
  }

 private:
  std::vector<PhotonId> fresh_path(int n) {
    std::vector<PhotonId> ids;
    for (int i = 0; i < n; ++i) {
      ids.push_back(next_id_);
      g_.add_node(next_id_++);
    }
    for (int i = 0; i + 1 < n; ++i) g_.add_edge(ids[i], ids[i + 1]);
    return ids;
  }

  std::vector<PhotonId> bell_pair() {
    if (!pool_.empty()) {
      std::vector<PhotonId> p = pool_.back();
      pool_.pop_back();
      return p;
    }
    t_.bell_pairs += 1;
    return fresh_path(2);
  }

  // Type-I fusion of photons a and b; on success b is absorbed into a.
  bool fuse(PhotonId a, PhotonId b) {
    if (rng_.bernoulli(s_.success_probability)) {
      type1_success_inplace(g_, f_, a, b, rng_.bernoulli(0.5) ? 1 : -1);
      return true;
    }
    const int za = rng_.bernoulli(0.5) ? 1 : 0;
    z_measure_inplace(g_, f_, detached_, a, za);
    z_measure_inplace(g_, f_, detached_, b, 1 - za);
    detached_.clear();
    return false;
  }

  void drop(PhotonId p) {
    f_.erase(p);
    g_.remove_node(p);
  }

  std::vector<PhotonId> cluster3() {
    while (true) {
      const std::vector<PhotonId> x = bell_pair();
      const std::vector<PhotonId> y = bell_pair();
      t_.cluster3_pairs += 2;
      if (fuse(x[1], y[0])) {
        t_.cluster3_built += 1;
        return {x[0], x[1], y[1]};
      }
      drop(x[0]);
      drop(y[1]);
    }
  }

  void step() {
    const std::vector<PhotonId> c = cluster3();
    if (chain_.empty()) {
      chain_.assign(c.begin(), c.end());
      return;
    }
    if (fuse(chain_.back(), c[0])) {
      chain_.push_back(c[1]);
      chain_.push_back(c[2]);
      return;
    }
    chain_.pop_back();
    if (s_.kind == GrowthStrategy::Kind::kRecycle) {
      pool_.push_back({c[1], c[2]});
    } else {
      drop(c[1]);
      drop(c[2]);
    }
  }

  GrowthStrategy s_;
  CounterRng rng_;
  ClusterGraph g_;
  PauliFrame f_;
  std::vector<DetachedPhoton> detached_;
  std::deque<PhotonId> chain_;
  std::vector<std::vector<PhotonId>> pool_;
  PhotonId next_id_ = 0;
  TrialTally t_;
};

// Ratio of means sum(num)/sum(den) with a delta-method standard error.
std::pair<double, double> ratio_estimate(const std::vector<TrialTally>& t,
                                         double TrialTally::*num, double TrialTally::*den) {
  const double n = static_cast<double>(t.size());
  double sn = 0, sd = 0;
  for (const TrialTally& x : t) {
    sn += x.*num;
    sd += x.*den;
  }
  if (sd <= 0) return {std::nan(""), std::nan("")};
  const double r = sn / sd;
  if (t.size() < 2) return {r, std::nan("")};
  double ss = 0;
  for (const TrialTally& x : t) {
    const double e = x.*num - r * x.*den;
    ss += e * e;
  }
  const double mean_den = sd / n;
  return {r, std::sqrt(ss / (n - 1) / n) / mean_den};
}

}  // namespace

GrowthStrategy GrowthStrategy::parse(const std::string& name, double success_probability) {
  GrowthStrategy s;
  if (name == "recycle") {
    s.kind = Kind::kRecycle;
  } else if (name == "discard") {
    s.kind = Kind::kDiscard;
  } else {
    throw InvalidArgument("unknown growth strategy '" + name + "'");
  }
  s.success_probability = success_probability;
  s.validate();
  return s;
}

std::string GrowthStrategy::name() const {
  return kind == Kind::kRecycle ? "recycle" : "discard";
}

void GrowthStrategy::validate() const {
  if (!(success_probability > 0.0 && success_probability <= 1.0)) {
    throw InvalidArgument("fusion success probability must lie in (0, 1]");
  }
}

std::string ResourceStatistics::csv_header() { return "strategy,trials,mean_cost,stderr,seed"; }

std::string ResourceStatistics::csv_row() const {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%s,%llu,%.17g,%.17g,%llu", strategy.name().c_str(),
                static_cast<unsigned long long>(trials), mean_cost, stderr_cost,
                static_cast<unsigned long long>(seed));
  return buf;
}

ResourceStatistics grow_linear_cluster(int target_length, const GrowthStrategy& strategy,
                                       std::uint64_t trials, std::uint64_t seed,
                                       unsigned workers, int seed_length) {
  strategy.validate();
  if (trials < 1) throw InvalidArgument("at least one trial is required");
  if (seed_length < 1) throw InvalidArgument("seed chain needs at least one node");
  if (target_length <= seed_length) {
    throw InvalidArgument("target length must exceed the seed chain length");
  }
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(trials)));

  std::vector<TrialTally> tally(trials);
  auto work = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) {
      tally[i] = Grower(strategy, CounterRng(seed, i)).run(seed_length, target_length);
    }
  };
  if (workers == 1) {
    work(0, trials);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (trials + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t b = w * chunk;
      const std::uint64_t e = std::min<std::uint64_t>(trials, b + chunk);
      if (b < e) pool.emplace_back(work, b, e);
    }
    for (std::thread& t : pool) t.join();
  }

  ResourceStatistics r;
  r.strategy = strategy;
  r.trials = trials;
  r.seed = seed;
  r.target_length = target_length;
  r.seed_length = seed_length;
  std::tie(r.mean_cost, r.stderr_cost) =
      ratio_estimate(tally, &TrialTally::bell_pairs, &TrialTally::added);
  std::tie(r.mean_cluster3_cost, r.stderr_cluster3_cost) =
      ratio_estimate(tally, &TrialTally::cluster3_pairs, &TrialTally::cluster3_built);
  for (const TrialTally& t : tally) {
    r.bell_pairs += static_cast<std::uint64_t>(t.bell_pairs);
    r.added_qubits += static_cast<std::uint64_t>(t.added);
    r.cluster3_built += static_cast<std::uint64_t>(t.cluster3_built);
  }
  return r;
}

}  // namespace photonsim
