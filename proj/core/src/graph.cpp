#include "spreadbench/graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <queue>
#include <sstream>
#include <unordered_map>

#include "spreadbench/error.hpp"

namespace spreadbench {

Graph Graph::from_edges(std::vector<std::string> labels, std::span<const Edge> edges) {
  const std::size_t n = labels.size();
  std::vector<std::vector<NodeId>> adjacency(n);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw InvalidArgument("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                            ") references a node outside 0.." + std::to_string(n));
    }
    if (u == v) continue;
    adjacency[u].push_back(v);
    adjacency[v].push_back(u);
  }

  Graph g;
  g.labels_ = std::move(labels);
  g.offsets_.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    auto& list = adjacency[i];
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    g.offsets_[i + 1] = g.offsets_[i] + list.size();
  }
  g.neighbors_.reserve(g.offsets_[n]);
  for (const auto& list : adjacency) g.neighbors_.insert(g.neighbors_.end(), list.begin(), list.end());
  return g;
}

Graph Graph::from_edges(std::size_t node_count, std::span<const Edge> edges) {
  std::vector<std::string> labels(node_count);
  for (std::size_t i = 0; i < node_count; ++i) labels[i] = std::to_string(i);
  return from_edges(std::move(labels), edges);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (NodeId u = 0; u < node_count(); ++u) {
    for (NodeId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  const auto list = neighbors(u);
  return std::binary_search(list.begin(), list.end(), v);
}

Graph Graph::induced_subgraph(std::span<const NodeId> nodes) const {
  constexpr NodeId kAbsent = ~NodeId{0};
  std::vector<NodeId> remap(node_count(), kAbsent);
  std::vector<std::string> labels;
  labels.reserve(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    remap[nodes[i]] = static_cast<NodeId>(i);
    labels.push_back(labels_[nodes[i]]);
  }
  std::vector<Edge> kept;
  for (NodeId u : nodes) {
    for (NodeId v : neighbors(u)) {
      if (u < v && remap[v] != kAbsent) kept.emplace_back(remap[u], remap[v]);
    }
  }
  return from_edges(std::move(labels), kept);
}

namespace {

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_blank(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !is_blank(line[i])) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::unordered_map<std::string, NodeId> index;
  std::vector<std::string> labels;
  std::vector<Edge> edges;

  auto intern = [&](std::string_view label) {
    auto [it, inserted] = index.try_emplace(std::string(label), static_cast<NodeId>(labels.size()));
    if (inserted) labels.emplace_back(label);
    return it->second;
  };

  std::size_t line_number = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_number;

    const auto tokens = split_tokens(line);
    if (tokens.empty() || tokens.front().front() == '#' || tokens.front().front() == '%') continue;
    if (tokens.size() != 2) {
      throw ParseError("expected two node labels, found " + std::to_string(tokens.size()) + " tokens",
                       line_number);
    }
    const NodeId u = intern(tokens[0]);
    const NodeId v = intern(tokens[1]);
    edges.emplace_back(u, v);
  }
  if (labels.empty()) throw ParseError("edge list contains no edges", 0);
  return Graph::from_edges(std::move(labels), edges);
}

Graph read_edge_list(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_edge_list(buffer.str());
  } catch (const ParseError& e) {
    throw e.with_context(path);
  }
}

std::string to_edge_list(const Graph& g) {
  std::string out;
  for (const auto& [u, v] : g.edges()) {
    out += g.label(u);
    out += ' ';
    out += g.label(v);
    out += '\n';
  }
  return out;
}

std::vector<NodeId> connected_components(const Graph& g, std::size_t* component_count) {
  constexpr NodeId kUnvisited = ~NodeId{0};
  std::vector<NodeId> component(g.node_count(), kUnvisited);
  std::vector<NodeId> stack;
  NodeId next_id = 0;
  for (NodeId start = 0; start < g.node_count(); ++start) {
    if (component[start] != kUnvisited) continue;
    component[start] = next_id;
    stack.push_back(start);
    while (!stack.empty()) {
      const NodeId u = stack.back();
      stack.pop_back();
      for (NodeId v : g.neighbors(u)) {
        if (component[v] == kUnvisited) {
          component[v] = next_id;
          stack.push_back(v);
        }
      }
    }
    ++next_id;
  }
  if (component_count != nullptr) *component_count = next_id;
  return component;
}

bool is_connected(const Graph& g) {
  std::size_t count = 0;
  connected_components(g, &count);
  return count <= 1;
}

Graph greatest_connected_component(const Graph& g) {
  if (g.empty()) throw InvalidArgument("greatest_connected_component: graph has no nodes");
  std::size_t count = 0;
  const auto component = connected_components(g, &count);
  std::vector<std::size_t> sizes(count, 0);
  for (NodeId c : component) ++sizes[c];
  // Components are numbered by their smallest node, so the first maximum wins ties.
  const auto best = static_cast<NodeId>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
  if (count == 1) return g;
  std::vector<NodeId> members;
  members.reserve(sizes[best]);
  for (NodeId i = 0; i < g.node_count(); ++i) {
    if (component[i] == best) members.push_back(i);
  }
  return g.induced_subgraph(members);
}

std::vector<int> bfs_distances(const Graph& g, NodeId source) {
  std::vector<int> dist(g.node_count(), -1);
  std::vector<NodeId> queue;
  queue.reserve(g.node_count());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId u = queue[head];
    for (NodeId v : g.neighbors(u)) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

std::uint64_t content_hash(const Graph& g) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&h](const void* data, std::size_t size) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < size; ++i) {
      h ^= bytes[i];
      h *= 0x100000001b3ULL;
    }
  };
  auto feed_u64 = [&feed](std::uint64_t value) {
    unsigned char bytes[8];
    for (int i = 0; i < 8; ++i) bytes[i] = static_cast<unsigned char>(value >> (8 * i));
    feed(bytes, 8);
  };
  feed_u64(g.node_count());
  for (const auto& label : g.labels()) {
    feed_u64(label.size());
    feed(label.data(), label.size());
  }
  for (const auto& [u, v] : g.edges()) {
    feed_u64(u);
    feed_u64(v);
  }
  return h;
}

}  // namespace spreadbench
