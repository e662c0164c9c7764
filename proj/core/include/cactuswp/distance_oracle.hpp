#pragma once

#include <cstdint>
#include <vector>

#include "cactuswp/graph.hpp"

namespace cactuswp {

// Distances from one source, truncated at radius 3. Every vertex whose true
// distance exceeds 3 (or that is unreachable) is reported as kFar.
struct DistanceProfile {
  static constexpr std::uint8_t kFar = 4;

  Vertex source = 0;
  std::vector<std::uint8_t> dist;
};

DistanceProfile distance_profile(const Graph& g, Vertex source);

/// Number of unordered vertex pairs at distance exactly 3, by a radius-3
/// breadth-first search from every vertex. Throws kNotConnected.
std::uint64_t count_distance3_pairs(const Graph& g);

/// Sum of shortest-path distances over unordered pairs. Throws kNotConnected.
std::uint64_t wiener_index(const Graph& g);

/// Shortest-path edge count between u and v. Throws kNotConnected or
/// kVertexOutOfRange.
std::uint64_t distance(const Graph& g, Vertex u, Vertex v);

/// Linear boiling-point model a*W + b*Wp + c.
double boiling_point(std::int64_t wiener, std::int64_t polarity, double a, double b, double c);

}  // namespace cactuswp
