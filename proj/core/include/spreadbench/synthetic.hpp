#pragma once

#include <cstddef>
#include <cstdint>

#include "spreadbench/graph.hpp"

namespace spreadbench {

/// Preferential attachment: each new node links to `links_per_node`
/// distinct existing nodes chosen proportionally to degree. Starts from a
/// clique on links_per_node + 1 nodes, so the result is connected.
Graph barabasi_albert(std::size_t nodes, std::size_t links_per_node, std::uint64_t seed);

/// Uniform random spanning tree plus `extra_edges` distinct random chords.
/// Connected by construction; `extra_edges` is clamped to what fits.
Graph random_connected(std::size_t nodes, std::size_t extra_edges, std::uint64_t seed);

/// G(n, p) random graph; may be disconnected.
Graph erdos_renyi(std::size_t nodes, double edge_probability, std::uint64_t seed);

Graph complete_graph(std::size_t nodes);
Graph star_graph(std::size_t leaves);  // node 0 is the center
Graph path_graph(std::size_t nodes);
Graph cycle_graph(std::size_t nodes);

}  // namespace spreadbench
