#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace spreadbench {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

/// Immutable undirected simple graph in compressed sparse row form.
///
/// Nodes are dense indices 0..N-1; each keeps the label it had in the source
/// file. Neighbor lists are sorted, free of self-loops and duplicates, and
/// symmetric. Safe to share between threads once constructed.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph over `labels.size()` nodes. Self-loops and duplicate
  /// edges (in either orientation) are dropped.
  static Graph from_edges(std::vector<std::string> labels, std::span<const Edge> edges);

  /// Unlabeled convenience constructor; node i gets label "i".
  static Graph from_edges(std::size_t node_count, std::span<const Edge> edges);

  std::size_t node_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return neighbors_.size() / 2; }
  bool empty() const noexcept { return labels_.empty(); }

  std::span<const NodeId> neighbors(NodeId node) const noexcept {
    return {neighbors_.data() + offsets_[node], neighbors_.data() + offsets_[node + 1]};
  }
  std::size_t degree(NodeId node) const noexcept { return offsets_[node + 1] - offsets_[node]; }

  /// Position of the first neighbor of `node` in the flat adjacency array.
  /// Each (node, neighbor) slot is a unique id for one direction of an edge.
  std::size_t slot_offset(NodeId node) const noexcept { return offsets_[node]; }
  std::size_t slot_count() const noexcept { return neighbors_.size(); }

  const std::string& label(NodeId node) const { return labels_[node]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Each undirected edge once, as (u, v) with u < v, in ascending order.
  std::vector<Edge> edges() const;

  bool has_edge(NodeId u, NodeId v) const;

  /// Subgraph induced by `nodes`, re-indexed in the given order.
  Graph induced_subgraph(std::span<const NodeId> nodes) const;

 private:
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> neighbors_;
  std::vector<std::string> labels_;
};

/// Parses whitespace-separated `<label> <label>` lines. Lines starting with
/// '#' or '%' and blank lines are skipped. Labels are indexed in first-appearance order.
Graph parse_edge_list(std::string_view text);

/// Reads and parses an edge-list file. Parse errors carry the path.
Graph read_edge_list(const std::string& path);

/// Serializes as one `<label> <label>` line per undirected edge. Isolated
/// nodes are not representable and are dropped.
std::string to_edge_list(const Graph& g);

/// Connected component id per node, numbered by smallest contained index.
std::vector<NodeId> connected_components(const Graph& g, std::size_t* component_count = nullptr);

bool is_connected(const Graph& g);

/// Largest connected component, ties broken towards the component holding
/// the smallest node index. Node order inside the result follows the input.
Graph greatest_connected_component(const Graph& g);

/// Breadth-first hop distances from `source`; unreachable nodes get -1.
std::vector<int> bfs_distances(const Graph& g, NodeId source);

/// 64-bit FNV-1a digest over labels and edges. Stable across platforms.
std::uint64_t content_hash(const Graph& g);

}  // namespace spreadbench
