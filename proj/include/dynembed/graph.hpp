#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dynembed/errors.hpp"

namespace dynembed {

// Stable integer identifier; once assigned, a NodeId never maps to a
// different external label for the lifetime of a dynamic network.
using NodeId = std::int32_t;

// Undirected edge, normalized so that first < second.
using Edge = std::pair<NodeId, NodeId>;

inline Edge make_edge(NodeId u, NodeId v) { return u < v ? Edge{u, v} : Edge{v, u}; }

struct Neighbor {
  NodeId id;
  double weight;
  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

struct WeightedEdge {
  NodeId u;
  NodeId v;
  double weight = 1.0;
};

// One snapshot of a dynamic network: undirected, no self-loops, no duplicate
// neighbors, adjacency lists sorted by neighbor id. Immutable once built.
class Snapshot {
 public:
  Snapshot() = default;

  // Normalizes the edge list: drops self-loops and duplicates (first
  // occurrence wins), symmetrizes. `extra_nodes` admits isolated nodes.
  static Snapshot from_edges(int t, const std::vector<WeightedEdge>& edges,
                             const std::vector<NodeId>& extra_nodes = {}) {
    Snapshot s;
    s.t_ = t;
    std::vector<std::tuple<NodeId, NodeId, double>> normalized;
    normalized.reserve(edges.size());
    for (const auto& e : edges) {
      if (e.u == e.v) continue;
      const Edge key = make_edge(e.u, e.v);
      normalized.emplace_back(key.first, key.second, e.weight);
    }
    std::stable_sort(normalized.begin(), normalized.end(),
                     [](const auto& a, const auto& b) {
                       return std::tie(std::get<0>(a), std::get<1>(a)) <
                              std::tie(std::get<0>(b), std::get<1>(b));
                     });
    normalized.erase(
        std::unique(normalized.begin(), normalized.end(),
                    [](const auto& a, const auto& b) {
                      return std::get<0>(a) == std::get<0>(b) &&
                             std::get<1>(a) == std::get<1>(b);
                    }),
        normalized.end());

    for (const auto& [u, v, w] : normalized) {
      s.adj_[u].push_back({v, w});
      s.adj_[v].push_back({u, w});
    }
    s.edge_count_ = normalized.size();

    for (auto& [node, nbrs] : s.adj_) {
      std::sort(nbrs.begin(), nbrs.end(),
                [](const Neighbor& a, const Neighbor& b) { return a.id < b.id; });
      s.nodes_.push_back(node);
    }
    for (NodeId v : extra_nodes) {
      if (!s.adj_.count(v)) {
        s.adj_.emplace(v, std::vector<Neighbor>{});
        s.nodes_.push_back(v);
      }
    }
    std::sort(s.nodes_.begin(), s.nodes_.end());
    return s;
  }

  int step() const { return t_; }
  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  bool empty() const { return nodes_.empty(); }

  // Sorted ascending; the canonical iteration order everywhere.
  const std::vector<NodeId>& nodes() const { return nodes_; }

  bool has_node(NodeId v) const { return adj_.count(v) != 0; }

  const std::vector<Neighbor>& neighbors(NodeId v) const {
    auto it = adj_.find(v);
    if (it == adj_.end()) {
      throw NodeNotFound("node " + std::to_string(v) + " not in snapshot t=" +
                         std::to_string(t_));
    }
    return it->second;
  }

  std::size_t degree(NodeId v) const { return neighbors(v).size(); }

  bool has_edge(NodeId u, NodeId v) const {
    auto it = adj_.find(u);
    if (it == adj_.end()) return false;
    const auto& nbrs = it->second;
    auto pos = std::lower_bound(nbrs.begin(), nbrs.end(), v,
                                [](const Neighbor& n, NodeId id) { return n.id < id; });
    return pos != nbrs.end() && pos->id == v;
  }

  // 0.0 when the edge is absent.
  double weight(NodeId u, NodeId v) const {
    auto it = adj_.find(u);
    if (it == adj_.end()) return 0.0;
    const auto& nbrs = it->second;
    auto pos = std::lower_bound(nbrs.begin(), nbrs.end(), v,
                                [](const Neighbor& n, NodeId id) { return n.id < id; });
    return (pos != nbrs.end() && pos->id == v) ? pos->weight : 0.0;
  }

  // Normalized (u < v), sorted lexicographically.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (NodeId u : nodes_) {
      for (const Neighbor& n : adj_.at(u)) {
        if (u < n.id) out.emplace_back(u, n.id);
      }
    }
    return out;
  }

 private:
  int t_ = 0;
  std::vector<NodeId> nodes_;
  std::unordered_map<NodeId, std::vector<Neighbor>> adj_;
  std::size_t edge_count_ = 0;
};

// Symmetric difference of the edge sets of two consecutive snapshots.
struct EdgeDelta {
  int t = 0;
  std::vector<Edge> added;    // E(curr) \ E(prev), sorted
  std::vector<Edge> removed;  // E(prev) \ E(curr), sorted

  bool empty() const { return added.empty() && removed.empty(); }
};

inline std::size_t degree(const Snapshot& snapshot, NodeId node) {
  return snapshot.degree(node);
}

inline EdgeDelta edge_delta(const Snapshot& prev, const Snapshot& curr) {
  if (prev.step() + 1 != curr.step()) {
    throw StepMismatch("edge_delta: snapshots t=" + std::to_string(prev.step()) +
                       " and t=" + std::to_string(curr.step()) +
                       " are not consecutive");
  }
  const std::vector<Edge> before = prev.edges();
  const std::vector<Edge> after = curr.edges();
  EdgeDelta delta;
  delta.t = curr.step();
  std::set_difference(after.begin(), after.end(), before.begin(), before.end(),
                      std::back_inserter(delta.added));
  std::set_difference(before.begin(), before.end(), after.begin(), after.end(),
                      std::back_inserter(delta.removed));
  return delta;
}

// Incident delta-edge count per node; nodes untouched by the delta are absent.
inline std::unordered_map<NodeId, std::int64_t> per_node_change(const EdgeDelta& delta) {
  std::unordered_map<NodeId, std::int64_t> counts;
  for (const auto& [u, v] : delta.added) {
    ++counts[u];
    ++counts[v];
  }
  for (const auto& [u, v] : delta.removed) {
    ++counts[u];
    ++counts[v];
  }
  return counts;
}

// Applies a delta to `prev`'s edge set; mainly for round-trip checks.
inline std::vector<Edge> apply_delta(const Snapshot& prev, const EdgeDelta& delta) {
  std::vector<Edge> edges = prev.edges();
  std::vector<Edge> result;
  std::set_difference(edges.begin(), edges.end(), delta.removed.begin(),
                      delta.removed.end(), std::back_inserter(result));
  result.insert(result.end(), delta.added.begin(), delta.added.end());
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace dynembed
