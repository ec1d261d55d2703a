#pragma once

// Random-instance generators shared by the unit and acceptance suites.

#include <algorithm>
#include <set>
#include <vector>

#include "dynembed/graph.hpp"
#include "dynembed/rng.hpp"

namespace testgen {

using dynembed::Edge;
using dynembed::NodeId;
using dynembed::Snapshot;
using dynembed::WeightedEdge;

inline Snapshot from_pairs(int t, std::initializer_list<std::pair<NodeId, NodeId>> pairs,
                           std::initializer_list<NodeId> extra = {}) {
  std::vector<WeightedEdge> edges;
  for (auto [u, v] : pairs) edges.push_back({u, v, 1.0});
  return Snapshot::from_edges(t, edges, std::vector<NodeId>(extra));
}

// Connected G(n, m)-style graph: random spanning tree plus m extra edges.
inline Snapshot random_connected(int t, int n, int extra_edges, std::mt19937_64& rng) {
  std::vector<NodeId> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::set<Edge> edges;
  for (int i = 1; i < n; ++i) {
    NodeId u = order[i];
    NodeId v = order[dynembed::uniform_below(rng, i)];
    edges.insert(dynembed::make_edge(u, v));
  }
  int attempts = 0;
  while (static_cast<int>(edges.size()) < n - 1 + extra_edges && attempts < 20 * extra_edges + 100) {
    NodeId u = static_cast<NodeId>(dynembed::uniform_below(rng, n));
    NodeId v = static_cast<NodeId>(dynembed::uniform_below(rng, n));
    ++attempts;
    if (u == v) continue;
    edges.insert(dynembed::make_edge(u, v));
  }
  std::vector<WeightedEdge> list;
  for (const auto& [u, v] : edges) list.push_back({u, v, 1.0});
  return Snapshot::from_edges(t, list);
}

// Arbitrary (possibly disconnected) random graph on n nodes.
inline Snapshot random_graph(int t, int n, double p, std::mt19937_64& rng) {
  std::vector<WeightedEdge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (dynembed::uniform01(rng) < p) edges.push_back({u, v, 1.0});
    }
  }
  std::vector<NodeId> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  return Snapshot::from_edges(t, edges, all);
}

// Mutates a snapshot's edge set: removes `del` random edges, adds `add` random
// non-edges, then returns the result at step t+1.
inline Snapshot churn(const Snapshot& base, int del, int add, std::mt19937_64& rng) {
  std::vector<Edge> edges = base.edges();
  std::shuffle(edges.begin(), edges.end(), rng);
  if (del > static_cast<int>(edges.size())) del = static_cast<int>(edges.size());
  edges.resize(edges.size() - del);
  std::set<Edge> edge_set(edges.begin(), edges.end());
  const auto& nodes = base.nodes();
  int added = 0, attempts = 0;
  while (added < add && attempts < 50 * add + 100) {
    NodeId u = nodes[dynembed::uniform_below(rng, nodes.size())];
    NodeId v = nodes[dynembed::uniform_below(rng, nodes.size())];
    ++attempts;
    if (u == v) continue;
    if (edge_set.insert(dynembed::make_edge(u, v)).second) ++added;
  }
  std::vector<WeightedEdge> list;
  for (const auto& [u, v] : edge_set) list.push_back({u, v, 1.0});
  return Snapshot::from_edges(base.step() + 1, list,
                              std::vector<NodeId>(nodes.begin(), nodes.end()));
}

}  // namespace testgen
