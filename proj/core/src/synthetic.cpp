#include "spreadbench/synthetic.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "spreadbench/error.hpp"

namespace spreadbench {

Graph barabasi_albert(std::size_t nodes, std::size_t links_per_node, std::uint64_t seed) {
  if (links_per_node == 0 || nodes <= links_per_node) {
    throw InvalidArgument("barabasi_albert: need nodes > links_per_node >= 1");
  }
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  // Each edge endpoint appears once per incident edge, so uniform draws
  // from this list are degree-proportional.
  std::vector<NodeId> endpoints;
  const std::size_t core = links_per_node + 1;
  for (NodeId u = 0; u < core; ++u) {
    for (NodeId v = u + 1; v < core; ++v) {
      edges.emplace_back(u, v);
      endpoints.push_back(u);
      endpoints.push_back(v);
    }
  }
  std::vector<NodeId> targets;
  for (auto u = static_cast<NodeId>(core); u < nodes; ++u) {
    targets.clear();
    std::uniform_int_distribution<std::size_t> pick(0, endpoints.size() - 1);
    while (targets.size() < links_per_node) {
      const NodeId v = endpoints[pick(rng)];
      if (std::find(targets.begin(), targets.end(), v) == targets.end()) targets.push_back(v);
    }
    for (NodeId v : targets) {
      edges.emplace_back(u, v);
      endpoints.push_back(u);
      endpoints.push_back(v);
    }
  }
  return Graph::from_edges(nodes, edges);
}

Graph random_connected(std::size_t nodes, std::size_t extra_edges, std::uint64_t seed) {
  if (nodes == 0) throw InvalidArgument("random_connected: need at least one node");
  std::mt19937_64 rng(seed);
  std::set<Edge> edges;
  for (NodeId v = 1; v < nodes; ++v) {
    std::uniform_int_distribution<NodeId> parent(0, v - 1);
    const NodeId u = parent(rng);
    edges.emplace(u, v);
  }
  const std::size_t max_edges = nodes * (nodes - 1) / 2;
  const std::size_t target = std::min(max_edges, edges.size() + extra_edges);
  std::uniform_int_distribution<NodeId> any(0, static_cast<NodeId>(nodes - 1));
  while (edges.size() < target) {
    NodeId u = any(rng);
    NodeId v = any(rng);
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    edges.emplace(u, v);
  }
  // Shuffle labels so that node 0 is not always the tree root.
  std::vector<NodeId> relabel(nodes);
  for (NodeId i = 0; i < nodes; ++i) relabel[i] = i;
  std::shuffle(relabel.begin(), relabel.end(), rng);
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (const auto& [u, v] : edges) out.emplace_back(relabel[u], relabel[v]);
  return Graph::from_edges(nodes, out);
}

Graph erdos_renyi(std::size_t nodes, double edge_probability, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(edge_probability);
  std::vector<Edge> edges;
  for (NodeId u = 0; u < nodes; ++u) {
    for (NodeId v = u + 1; v < nodes; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(nodes, edges);
}

Graph complete_graph(std::size_t nodes) {
  std::vector<Edge> edges;
  for (NodeId u = 0; u < nodes; ++u) {
    for (NodeId v = u + 1; v < nodes; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(nodes, edges);
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (NodeId v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph::from_edges(leaves + 1, edges);
}

Graph path_graph(std::size_t nodes) {
  std::vector<Edge> edges;
  for (NodeId v = 1; v < nodes; ++v) edges.emplace_back(v - 1, v);
  return Graph::from_edges(nodes, edges);
}

Graph cycle_graph(std::size_t nodes) {
  std::vector<Edge> edges;
  for (NodeId v = 1; v < nodes; ++v) edges.emplace_back(v - 1, v);
  if (nodes > 2) edges.emplace_back(static_cast<NodeId>(nodes - 1), 0);
  return Graph::from_edges(nodes, edges);
}

}  // namespace spreadbench
