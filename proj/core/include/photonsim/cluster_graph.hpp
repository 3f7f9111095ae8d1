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

#ifndef PHOTONSIM_CLUSTER_GRAPH_HPP_
#define PHOTONSIM_CLUSTER_GRAPH_HPP_

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace photonsim {

using NodeId = int;
using PhotonId = int;

// Graph-state description at the level of logical vertices. Each vertex is
// carried by a redundancy group of photons (|0> = |0...0>, |1> = |1...1>);
// a plain cluster has singleton groups. Photon ids are unique across the
// whole graph and a vertex is created with the id of its first photon.
class ClusterGraph {
 public:
  ClusterGraph() = default;

  // Path 0 - 1 - ... - (n-1), shifted by `first`.
  static ClusterGraph linear(int n, int first = 0);
  static ClusterGraph from_edges(int num_nodes,
                                 const std::vector<std::pair<NodeId, NodeId>>& edges);

  void add_node(NodeId id, std::vector<PhotonId> photons = {});
  void remove_node(NodeId id);
  void add_edge(NodeId a, NodeId b);
  void remove_edge(NodeId a, NodeId b);
  void toggle_edge(NodeId a, NodeId b);

  bool has_node(NodeId id) const { return adj_.count(id) != 0; }
  bool has_edge(NodeId a, NodeId b) const;
  bool has_photon(PhotonId p) const { return owner_.count(p) != 0; }
  const std::set<NodeId>& neighbors(NodeId id) const;
  const std::vector<PhotonId>& group(NodeId id) const;
  NodeId node_of(PhotonId p) const;

  std::vector<NodeId> nodes() const;
  std::vector<std::pair<NodeId, NodeId>> edges() const;
  std::vector<PhotonId> photons() const;
  std::size_t num_nodes() const { return adj_.size(); }
  std::size_t num_edges() const;
  std::size_t num_photons() const { return owner_.size(); }

  // Moves `p` out of its group. The vertex must keep at least one photon.
  void remove_photon(PhotonId p);
  // Appends the photons of `from` to the group of `into` (no edge changes).
  void absorb_group(NodeId into, NodeId from);

  // Vertex ids of `other` must not clash with ours.
  void merge_disjoint(const ClusterGraph& other);

  // Vertices in path order if the graph is a single path (or empty).
  bool is_path(std::vector<NodeId>* order = nullptr) const;
  void validate() const;

  bool operator==(const ClusterGraph& other) const;
  std::string to_string() const;

 private:
  std::map<NodeId, std::set<NodeId>> adj_;
  std::map<NodeId, std::vector<PhotonId>> groups_;
  std::map<PhotonId, NodeId> owner_;
};

// Pauli byproducts per photon, tracked classically instead of being applied.
class PauliFrame {
 public:
  void apply_x(PhotonId p) { frame_[p].first ^= 1; prune(p); }
  void apply_z(PhotonId p) { frame_[p].second ^= 1; prune(p); }
  int x(PhotonId p) const;
  int z(PhotonId p) const;
  void erase(PhotonId p) { frame_.erase(p); }
  bool empty() const { return frame_.empty(); }
  const std::map<PhotonId, std::pair<int, int>>& entries() const { return frame_; }

  // Logical Z of a vertex acts on one photon of its group; logical X on all.
  void z_on_node(const ClusterGraph& g, NodeId n) { apply_z(g.group(n).front()); }
  void x_on_node(const ClusterGraph& g, NodeId n);
  // Parity of Z bits over a vertex's group.
  int z_parity(const ClusterGraph& g, NodeId n) const;

 private:
  void prune(PhotonId p);
  std::map<PhotonId, std::pair<int, int>> frame_;
};

// Photon left in a definite computational-basis state after its group was
// measured; `value` is the physical bit.
struct DetachedPhoton {
  PhotonId photon;
  int value;
};

struct RewriteResult {
  ClusterGraph graph;
  PauliFrame frame;
  std::vector<DetachedPhoton> detached;
};

// In-place rewrites. `outcome` is 0 or 1; for X measurements 0 means |+>.
void z_measure_inplace(ClusterGraph& g, PauliFrame& f, std::vector<DetachedPhoton>& detached,
                       PhotonId p, int outcome);
void x_measure_inplace(ClusterGraph& g, PauliFrame& f, std::vector<DetachedPhoton>& detached,
                       PhotonId p, int outcome);
// Type-I success: photon `a` carries the fused vertex; `b` is absorbed.
// sign is +1 for K+ and -1 for K-.
void type1_success_inplace(ClusterGraph& g, PauliFrame& f, PhotonId a, PhotonId b, int sign);
// Type-II success: both photons absorbed, projection onto |00> + sign |11>.
void type2_success_inplace(ClusterGraph& g, PauliFrame& f, std::vector<DetachedPhoton>& detached,
                           PhotonId a, PhotonId b, int sign);

RewriteResult z_measure(const ClusterGraph& g, PhotonId p, int outcome,
                        const PauliFrame& frame = {});
RewriteResult x_measure(const ClusterGraph& g, PhotonId p, int outcome,
                        const PauliFrame& frame = {});

}  // namespace photonsim

#endif  // PHOTONSIM_CLUSTER_GRAPH_HPP_
