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

#include "photonsim/cluster_graph.hpp"

#include <algorithm>
#include <sstream>

#include "photonsim/errors.hpp"

namespace photonsim {

ClusterGraph ClusterGraph::linear(int n, int first) {
  ClusterGraph g;
  for (int i = 0; i < n; ++i) g.add_node(first + i);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(first + i, first + i + 1);
  return g;
}

ClusterGraph ClusterGraph::from_edges(int num_nodes,
                                      const std::vector<std::pair<NodeId, NodeId>>& edges) {
  ClusterGraph g;
  for (int i = 0; i < num_nodes; ++i) g.add_node(i);
  for (const auto& [a, b] : edges) g.add_edge(a, b);
  return g;
}

void ClusterGraph::add_node(NodeId id, std::vector<PhotonId> photons) {
  if (has_node(id)) throw InvalidArgument("duplicate cluster vertex " + std::to_string(id));
  if (photons.empty()) photons.push_back(id);
  for (PhotonId p : photons) {
    if (has_photon(p)) throw InvalidArgument("photon " + std::to_string(p) + " already in use");
  }
  adj_[id];
  for (PhotonId p : photons) owner_[p] = id;
  groups_[id] = std::move(photons);
}

void ClusterGraph::remove_node(NodeId id) {
  auto it = adj_.find(id);
  if (it == adj_.end()) throw InvalidArgument("no cluster vertex " + std::to_string(id));
  for (NodeId n : it->second) adj_[n].erase(id);
  adj_.erase(it);
  for (PhotonId p : groups_[id]) owner_.erase(p);
  groups_.erase(id);
}

void ClusterGraph::add_edge(NodeId a, NodeId b) {
  if (a == b) throw InvalidArgument("cluster graphs have no self-edges");
  if (!has_node(a) || !has_node(b)) throw InvalidArgument("edge references a missing vertex");
  adj_[a].insert(b);
  adj_[b].insert(a);
}

void ClusterGraph::remove_edge(NodeId a, NodeId b) {
  if (!has_node(a) || !has_node(b)) throw InvalidArgument("edge references a missing vertex");
  adj_[a].erase(b);
  adj_[b].erase(a);
}

void ClusterGraph::toggle_edge(NodeId a, NodeId b) {
  if (has_edge(a, b)) {
    remove_edge(a, b);
  } else {
    add_edge(a, b);
  }
}

bool ClusterGraph::has_edge(NodeId a, NodeId b) const {
  auto it = adj_.find(a);
  return it != adj_.end() && it->second.count(b) != 0;
}

const std::set<NodeId>& ClusterGraph::neighbors(NodeId id) const {
  auto it = adj_.find(id);
  if (it == adj_.end()) throw InvalidArgument("no cluster vertex " + std::to_string(id));
  return it->second;
}

const std::vector<PhotonId>& ClusterGraph::group(NodeId id) const {
  auto it = groups_.find(id);
  if (it == groups_.end()) throw InvalidArgument("no cluster vertex " + std::to_string(id));
  return it->second;
}

NodeId ClusterGraph::node_of(PhotonId p) const {
  auto it = owner_.find(p);
  if (it == owner_.end()) throw InvalidArgument("photon " + std::to_string(p) + " is not in the graph");
  return it->second;
}

std::vector<NodeId> ClusterGraph::nodes() const {
  std::vector<NodeId> out;
  out.reserve(adj_.size());
  for (const auto& [id, n] : adj_) out.push_back(id);
  return out;
}

std::vector<std::pair<NodeId, NodeId>> ClusterGraph::edges() const {
  std::vector<std::pair<NodeId, NodeId>> out;
  for (const auto& [a, ns] : adj_) {
    for (NodeId b : ns) {
      if (a < b) out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<PhotonId> ClusterGraph::photons() const {
  std::vector<PhotonId> out;
  for (const auto& [p, n] : owner_) out.push_back(p);
  return out;
}

std::size_t ClusterGraph::num_edges() const {
  std::size_t s = 0;
  for (const auto& [a, ns] : adj_) s += ns.size();
  return s / 2;
}

void ClusterGraph::remove_photon(PhotonId p) {
  const NodeId n = node_of(p);
  auto& grp = groups_[n];
  if (grp.size() < 2) throw InvalidArgument("cannot remove the last photon of a vertex");
  grp.erase(std::find(grp.begin(), grp.end(), p));
  owner_.erase(p);
}

void ClusterGraph::absorb_group(NodeId into, NodeId from) {
  if (into == from) return;
  auto& dst = groups_.at(into);
  for (PhotonId p : groups_.at(from)) {
    dst.push_back(p);
    owner_[p] = into;
  }
  groups_[from].clear();
}

void ClusterGraph::merge_disjoint(const ClusterGraph& other) {
  for (const auto& [id, grp] : other.groups_) add_node(id, grp);
  for (const auto& [a, b] : other.edges()) add_edge(a, b);
}

bool ClusterGraph::is_path(std::vector<NodeId>* order) const {
  if (order) order->clear();
  if (adj_.empty()) return true;
  if (num_edges() + 1 != adj_.size()) return false;
  NodeId start = adj_.begin()->first;
  for (const auto& [id, ns] : adj_) {
    if (ns.size() > 2) return false;
    if (ns.size() <= 1) {
      start = id;
      break;
    }
  }
  std::vector<NodeId> seq{start};
  NodeId prev = start;
  NodeId cur = start;
  while (true) {
    NodeId next = cur;
    for (NodeId n : adj_.at(cur)) {
      if (n != prev) next = n;
    }
    if (next == cur || (seq.size() > 1 && next == prev)) break;
    prev = cur;
    cur = next;
    seq.push_back(cur);
    if (seq.size() > adj_.size()) return false;
  }
  if (seq.size() != adj_.size()) return false;
  if (order) *order = std::move(seq);
  return true;
}

void ClusterGraph::validate() const {
  for (const auto& [a, ns] : adj_) {
    if (ns.count(a)) throw InvalidArgument("self-edge on vertex " + std::to_string(a));
    for (NodeId b : ns) {
      if (!has_node(b) || !adj_.at(b).count(a)) throw InvalidArgument("dangling edge");
    }
    if (groups_.at(a).empty()) throw InvalidArgument("vertex without photons");
  }
  for (const auto& [p, n] : owner_) {
    const auto& g = groups_.at(n);
    if (std::find(g.begin(), g.end(), p) == g.end()) throw InvalidArgument("photon ownership mismatch");
  }
}

bool ClusterGraph::operator==(const ClusterGraph& other) const {
  return adj_ == other.adj_ && groups_ == other.groups_;
}

std::string ClusterGraph::to_string() const {
  std::ostringstream os;
  os << "vertices:";
  for (const auto& [id, grp] : groups_) {
    os << " " << id << "{";
    for (std::size_t i = 0; i < grp.size(); ++i) os << (i ? "," : "") << grp[i];
    os << "}";
  }
  os << " edges:";
  for (const auto& [a, b] : edges()) os << " " << a << "-" << b;
  return os.str();
}

int PauliFrame::x(PhotonId p) const {
  auto it = frame_.find(p);
  return it == frame_.end() ? 0 : it->second.first;
}

int PauliFrame::z(PhotonId p) const {
  auto it = frame_.find(p);
  return it == frame_.end() ? 0 : it->second.second;
}

void PauliFrame::x_on_node(const ClusterGraph& g, NodeId n) {
  for (PhotonId p : g.group(n)) apply_x(p);
}

int PauliFrame::z_parity(const ClusterGraph& g, NodeId n) const {
  int s = 0;
  for (PhotonId p : g.group(n)) s ^= z(p);
  return s;
}

void PauliFrame::prune(PhotonId p) {
  auto it = frame_.find(p);
  if (it != frame_.end() && it->second.first == 0 && it->second.second == 0) frame_.erase(it);
}

namespace {

void clear_z(PauliFrame& f, PhotonId p) {
  if (f.z(p)) f.apply_z(p);
}

void require_no_x(const PauliFrame& f, PhotonId p) {
  if (f.x(p)) {
    throw InvalidArgument("photon " + std::to_string(p) +
                          " carries an X byproduct; resolve it before fusing");
  }
}

// Projects (1 + (-1)^s Z_x Z_y) onto the graph: x and y become one redundant
// vertex. Outcome 1 leaves X on y's group and Z on y's other neighbours.
void merge_pair(ClusterGraph& g, PauliFrame& f, NodeId x, NodeId y, int s) {
  const bool adjacent = g.has_edge(x, y);
  const std::set<NodeId> nx = g.neighbors(x);
  const std::set<NodeId> ny = g.neighbors(y);
  if (s == 1) {
    f.x_on_node(g, y);
    for (NodeId n : ny) {
      if (n != x) f.z_on_node(g, n);
    }
  }
  std::set<NodeId> merged;
  std::set_symmetric_difference(nx.begin(), nx.end(), ny.begin(), ny.end(),
                                std::inserter(merged, merged.end()));
  merged.erase(x);
  merged.erase(y);
  for (NodeId n : nx) g.remove_edge(x, n);
  for (NodeId n : ny) g.remove_edge(y, n);
  g.absorb_group(x, y);
  // y's group is now empty; drop the vertex without touching the photons.
  const std::vector<PhotonId> moved = g.group(x);
  g.remove_node(y);
  g.remove_node(x);
  g.add_node(x, moved);
  for (NodeId n : merged) g.add_edge(x, n);
  if (s == 0 && adjacent) f.z_on_node(g, x);
}

}  // namespace

void z_measure_inplace(ClusterGraph& g, PauliFrame& f, std::vector<DetachedPhoton>& detached,
                       PhotonId p, int outcome) {
  const NodeId a = g.node_of(p);
  const int logical = outcome ^ f.x(p);
  for (PhotonId q : g.group(a)) {
    if (q != p) detached.push_back({q, logical ^ f.x(q)});
    f.erase(q);
  }
  if (logical == 1) {
    for (NodeId n : g.neighbors(a)) f.z_on_node(g, n);
  }
  g.remove_node(a);
}

namespace {

// A vertex projected onto logical Z = `logical` without being detected: the
// whole group stays behind as detached photons.
void fix_vertex(ClusterGraph& g, PauliFrame& f, std::vector<DetachedPhoton>& detached, NodeId v,
                int logical) {
  const PhotonId first = g.group(v).front();
  const int bit = logical ^ f.x(first);
  z_measure_inplace(g, f, detached, first, bit);
  detached.push_back({first, bit});
}

}  // namespace

void x_measure_inplace(ClusterGraph& g, PauliFrame& f, std::vector<DetachedPhoton>& detached,
                       PhotonId p, int outcome) {
  const NodeId a = g.node_of(p);
  const int eff = outcome ^ f.z_parity(g, a);
  for (PhotonId q : g.group(a)) clear_z(f, q);
  f.erase(p);
  if (g.group(a).size() >= 2) {
    g.remove_photon(p);
    if (eff == 1) f.z_on_node(g, a);
    return;
  }
  const std::vector<NodeId> n(g.neighbors(a).begin(), g.neighbors(a).end());
  g.remove_node(a);
  if (n.empty()) return;
  if (n.size() == 1) {
    // (1 +- Z_x) fixes the neighbour in the computational basis.
    fix_vertex(g, f, detached, n[0], eff);
    return;
  }
  if (n.size() == 2) {
    merge_pair(g, f, n[0], n[1], eff);
    return;
  }
  throw InvalidArgument("X measurement of a vertex with " + std::to_string(n.size()) +
                        " neighbours is not in a linear segment");
}

void type1_success_inplace(ClusterGraph& g, PauliFrame& f, PhotonId pa, PhotonId pb, int sign) {
  const NodeId a = g.node_of(pa);
  const NodeId b = g.node_of(pb);
  if (a == b) throw InvalidArgument("fusion inputs belong to the same vertex");
  require_no_x(f, pa);
  require_no_x(f, pb);
  const bool adjacent = g.has_edge(a, b);
  const int zflip = (sign < 0 ? 1 : 0) ^ f.z(pb) ^ (adjacent ? 1 : 0);
  f.erase(pb);
  const std::set<NodeId> na = g.neighbors(a);
  const std::set<NodeId> nb = g.neighbors(b);
  std::set<NodeId> merged;
  std::set_symmetric_difference(na.begin(), na.end(), nb.begin(), nb.end(),
                                std::inserter(merged, merged.end()));
  merged.erase(a);
  merged.erase(b);
  std::vector<PhotonId> photons = g.group(a);
  for (PhotonId q : g.group(b)) {
    if (q != pb) photons.push_back(q);
  }
  g.remove_node(a);
  g.remove_node(b);
  g.add_node(a, photons);
  for (NodeId n : merged) g.add_edge(a, n);
  if (zflip) f.z_on_node(g, a);
}

void type2_success_inplace(ClusterGraph& g, PauliFrame& f, std::vector<DetachedPhoton>& detached,
                           PhotonId pa, PhotonId pb, int sign) {
  const NodeId a = g.node_of(pa);
  const NodeId b = g.node_of(pb);
  if (a == b) throw InvalidArgument("fusion inputs belong to the same vertex");
  require_no_x(f, pa);
  require_no_x(f, pb);
  const bool adjacent = g.has_edge(a, b);
  const int flip = (sign < 0 ? 1 : 0) ^ f.z(pa) ^ f.z(pb) ^ (adjacent ? 1 : 0);
  f.erase(pa);
  f.erase(pb);
  const std::set<NodeId> na = g.neighbors(a);
  const std::set<NodeId> nb = g.neighbors(b);
  std::set<NodeId> merged;
  std::set_symmetric_difference(na.begin(), na.end(), nb.begin(), nb.end(),
                                std::inserter(merged, merged.end()));
  merged.erase(a);
  merged.erase(b);
  std::vector<PhotonId> rest_a;
  std::vector<PhotonId> rest_b;
  for (PhotonId q : g.group(a)) {
    if (q != pa) rest_a.push_back(q);
  }
  for (PhotonId q : g.group(b)) {
    if (q != pb) rest_b.push_back(q);
  }
  g.remove_node(a);
  g.remove_node(b);
  if (!rest_a.empty() || !rest_b.empty()) {
    const NodeId keeper = rest_a.empty() ? b : a;
    std::vector<PhotonId> photons = rest_a;
    photons.insert(photons.end(), rest_b.begin(), rest_b.end());
    g.add_node(keeper, photons);
    for (NodeId n : merged) g.add_edge(keeper, n);
    if (flip) f.z_on_node(g, keeper);
    return;
  }
  // Nothing carries the fused vertex: it behaves as an X-measured vertex.
  const std::vector<NodeId> n(merged.begin(), merged.end());
  if (n.empty()) return;
  if (n.size() == 1) {
    fix_vertex(g, f, detached, n[0], flip);
    return;
  }
  if (n.size() == 2) {
    merge_pair(g, f, n[0], n[1], flip);
    return;
  }
  throw InvalidArgument("type-II fusion of two bare vertices with " + std::to_string(n.size()) +
                        " combined neighbours is not a supported rewrite");
}

RewriteResult z_measure(const ClusterGraph& g, PhotonId p, int outcome, const PauliFrame& frame) {
  RewriteResult r{g, frame, {}};
  z_measure_inplace(r.graph, r.frame, r.detached, p, outcome);
  return r;
}

RewriteResult x_measure(const ClusterGraph& g, PhotonId p, int outcome, const PauliFrame& frame) {
  RewriteResult r{g, frame, {}};
  x_measure_inplace(r.graph, r.frame, r.detached, p, outcome);
  return r;
}

}  // namespace photonsim
