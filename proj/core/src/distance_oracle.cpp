#include "cactuswp/distance_oracle.hpp"

#include <stdexcept>

#include "cactuswp/error.hpp"

namespace cactuswp {
namespace {

constexpr std::uint8_t kRadius = 3;

// Radius-3 BFS reusing caller-owned scratch. `dist` must be all kFar on
// entry and is restored to all kFar before returning. Returns the number of
// vertices at distance exactly 3 from source.
std::uint64_t count_at_radius3(const Graph& g, Vertex source, std::vector<std::uint8_t>& dist,
                               std::vector<Vertex>& frontier) {
  frontier.clear();
  frontier.push_back(source);
  dist[source] = 0;
  std::size_t head = 0;
  std::uint64_t at_three = 0;
  while (head < frontier.size()) {
    Vertex v = frontier[head++];
    std::uint8_t d = dist[v];
    if (d == kRadius) {
      ++at_three;
      continue;
    }
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] == DistanceProfile::kFar) {
        dist[w] = static_cast<std::uint8_t>(d + 1);
        frontier.push_back(w);
      }
    }
  }
  for (Vertex v : frontier) dist[v] = DistanceProfile::kFar;
  return at_three;
}

std::vector<std::uint64_t> bfs_all(const Graph& g, Vertex source, std::vector<Vertex>& queue) {
  constexpr auto kUnreached = static_cast<std::uint64_t>(-1);
  std::vector<std::uint64_t> dist(g.vertex_count(), kUnreached);
  queue.clear();
  queue.push_back(source);
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex v = queue[head];
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] == kUnreached) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

}  // namespace

DistanceProfile distance_profile(const Graph& g, Vertex source) {
  g.degree(source);  // range check
  DistanceProfile profile{source, std::vector<std::uint8_t>(g.vertex_count(), DistanceProfile::kFar)};
  std::vector<Vertex> queue{source};
  profile.dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex v = queue[head];
    std::uint8_t d = profile.dist[v];
    if (d == kRadius) continue;
    for (Vertex w : g.neighbors(v)) {
      if (profile.dist[w] == DistanceProfile::kFar) {
        profile.dist[w] = static_cast<std::uint8_t>(d + 1);
        queue.push_back(w);
      }
    }
  }
  return profile;
}

std::uint64_t count_distance3_pairs(const Graph& g) {
  require_connected(g);
  std::vector<std::uint8_t> dist(g.vertex_count(), DistanceProfile::kFar);
  std::vector<Vertex> frontier;
  std::uint64_t ordered = 0;
  for (Vertex s = 0; s < g.vertex_count(); ++s) ordered += count_at_radius3(g, s, dist, frontier);
  if (ordered % 2 != 0) throw std::logic_error("count_distance3_pairs: odd ordered pair count");
  return ordered / 2;
}

std::uint64_t wiener_index(const Graph& g) {
  require_connected(g);
  std::vector<Vertex> queue;
  std::uint64_t ordered = 0;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    for (std::uint64_t d : bfs_all(g, s, queue)) ordered += d;
  }
  if (ordered % 2 != 0) throw std::logic_error("wiener_index: odd ordered distance sum");
  return ordered / 2;
}

std::uint64_t distance(const Graph& g, Vertex u, Vertex v) {
  g.degree(u);
  g.degree(v);
  require_connected(g);
  std::vector<Vertex> queue;
  return bfs_all(g, u, queue)[v];
}

double boiling_point(std::int64_t wiener, std::int64_t polarity, double a, double b, double c) {
  return a * static_cast<double>(wiener) + b * static_cast<double>(polarity) + c;
}

}  // namespace cactuswp
