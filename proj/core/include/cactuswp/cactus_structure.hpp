#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "cactuswp/graph.hpp"

namespace cactuswp {

// A maximal 2-connected subgraph, or a single bridge edge.
struct Block {
  std::vector<Vertex> vertices;  // sorted
  std::vector<Edge> edges;       // sorted, u < v

  bool is_bridge() const noexcept { return edges.size() == 1; }
  // True for the blocks a cactus may contain besides bridges.
  bool is_cycle() const noexcept { return edges.size() >= 3 && edges.size() == vertices.size(); }
};

struct BlockDecomposition {
  std::vector<Block> blocks;
  std::vector<Vertex> cut_vertices;  // sorted
};

// Everything the cactus polarity formula consumes.
struct CactusCensus {
  std::uint64_t c3 = 0;
  std::uint64_t c4 = 0;
  std::uint64_t c5 = 0;
  std::uint64_t c6 = 0;
  std::map<std::size_t, std::uint64_t> cycles_by_length;
  std::uint64_t b1 = 0;  // induced triangle-plus-pendant copies
  std::uint64_t b2 = 0;  // induced quadrangle-plus-pendant copies
  std::uint64_t degree_term = 0;

  friend bool operator==(const CactusCensus&, const CactusCensus&) = default;
};

/// Lowpoint block decomposition with an explicit stack (no recursion).
/// Throws kNotConnected.
BlockDecomposition biconnected_blocks(const Graph& g);

bool is_cactus(const BlockDecomposition& bd) noexcept;
/// Throws kNotConnected.
bool is_cactus(const Graph& g);

/// Sum over edges uv of (deg(u) - 1)(deg(v) - 1).
std::uint64_t degree_term(const Graph& g);

/// Throws kNotCactus if any block is neither a bridge nor a cycle.
CactusCensus census(const Graph& g, const BlockDecomposition& bd);
CactusCensus census(const Graph& g);

/// Exhaustive count of 4-vertex subsets inducing a triangle with one pendant
/// edge. Throws kTooLarge above kInducedBruteforceLimit vertices.
std::uint64_t count_induced_g1_bruteforce(const Graph& g);
/// Exhaustive count of 5-vertex subsets inducing a 4-cycle with one pendant
/// edge.
std::uint64_t count_induced_g2_bruteforce(const Graph& g);

inline constexpr std::size_t kInducedBruteforceLimit = 40;

}  // namespace cactuswp
