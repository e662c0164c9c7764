#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cactuswp {

using Vertex = std::uint32_t;

// Undirected edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph on the dense vertex set [0, n).
///
/// Adjacency is held in compressed sparse-row form with every neighbor list
/// sorted ascending. Construction validates the simple-graph invariants (no
/// self-loops, no duplicate edges, ids in range), so every Graph value that
/// exists is well-formed. Two graphs compare equal iff they have the same
/// vertex count and the same edge set.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list. Endpoint order within an edge and the
  /// order of edges are free; throws Error with kSelfLoop, kDuplicateEdge or
  /// kVertexOutOfRange on invalid input.
  static Graph from_edges(std::size_t vertex_count, std::span<const Edge> edges);

  std::size_t vertex_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return neighbors_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const;
  bool has_edge(Vertex u, Vertex v) const;

  /// All edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(Vertex v) const;

  std::vector<std::size_t> offsets_;
  std::vector<Vertex> neighbors_;
};

/// Parses the edge-list text format: first meaningful line is the vertex
/// count, then one "u v" pair per line; '#' lines are comments.
Graph from_edge_list(std::istream& in);
Graph from_edge_list(std::string_view text);
Graph read_edge_list_file(const std::string& path);

/// Canonical serialization: "n\n" followed by sorted "u v\n" lines, u < v.
void to_edge_list(const Graph& g, std::ostream& out);
std::string to_edge_list(const Graph& g);
void write_edge_list_file(const Graph& g, const std::string& path);

std::size_t degree(const Graph& g, Vertex v);

/// Throws kEmptyGraph when the graph has no vertices.
bool is_connected(const Graph& g);

/// Throws kNotConnected unless is_connected(g).
void require_connected(const Graph& g);

}  // namespace cactuswp
