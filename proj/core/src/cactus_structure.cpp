#include "cactuswp/cactus_structure.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>

#include "cactuswp/error.hpp"

namespace cactuswp {
namespace {

constexpr Vertex kNoParent = std::numeric_limits<Vertex>::max();

Block make_block(std::vector<Edge> edges) {
  Block block;
  block.vertices.reserve(edges.size() + 1);
  for (Edge& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
    block.vertices.push_back(e.u);
    block.vertices.push_back(e.v);
  }
  std::sort(edges.begin(), edges.end());
  std::sort(block.vertices.begin(), block.vertices.end());
  block.vertices.erase(std::unique(block.vertices.begin(), block.vertices.end()), block.vertices.end());
  block.edges = std::move(edges);
  return block;
}

std::uint64_t excess_degree(const Graph& g, const Block& block) {
  std::uint64_t total = 0;
  for (Vertex v : block.vertices) total += g.degree(v) - 2;
  return total;
}

using Masks = std::vector<std::uint64_t>;

Masks adjacency_masks(const Graph& g) {
  if (g.vertex_count() > kInducedBruteforceLimit) {
    throw Error(ErrorCode::kTooLarge, "induced-subgraph enumeration limited to " +
                                          std::to_string(kInducedBruteforceLimit) + " vertices");
  }
  Masks masks(g.vertex_count(), 0);
  for (const Edge& e : g.edges()) {
    masks[e.u] |= std::uint64_t{1} << e.v;
    masks[e.v] |= std::uint64_t{1} << e.u;
  }
  return masks;
}

}  // namespace

BlockDecomposition biconnected_blocks(const Graph& g) {
  require_connected(g);
  const std::size_t n = g.vertex_count();

  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };

  std::vector<std::uint32_t> disc(n, 0);  // 0 = unvisited
  std::vector<std::uint32_t> low(n, 0);
  std::vector<Frame> stack;
  std::vector<Edge> edge_stack;
  BlockDecomposition bd;

  std::uint32_t clock = 0;
  disc[0] = low[0] = ++clock;
  stack.push_back({0, kNoParent, 0});

  while (!stack.empty()) {
    Frame& top = stack.back();
    const Vertex v = top.v;
    auto adj = g.neighbors(v);
    if (top.next < adj.size()) {
      const Vertex w = adj[top.next++];
      if (disc[w] == 0) {
        edge_stack.push_back({v, w});
        disc[w] = low[w] = ++clock;
        stack.push_back({w, v, 0});
      } else if (w != top.parent && disc[w] < disc[v]) {
        edge_stack.push_back({v, w});
        low[v] = std::min(low[v], disc[w]);
      }
      continue;
    }

    const Vertex parent = top.parent;
    stack.pop_back();
    if (parent == kNoParent) continue;
    low[parent] = std::min(low[parent], low[v]);
    if (low[v] >= disc[parent]) {
      // Everything above the tree edge (parent, v) forms one block.
      std::vector<Edge> edges;
      while (true) {
        Edge e = edge_stack.back();
        edge_stack.pop_back();
        edges.push_back(e);
        if (e.u == parent && e.v == v) break;
      }
      bd.blocks.push_back(make_block(std::move(edges)));
    }
  }

  std::vector<std::uint32_t> membership(n, 0);
  for (const Block& block : bd.blocks) {
    for (Vertex v : block.vertices) ++membership[v];
  }
  for (Vertex v = 0; v < n; ++v) {
    if (membership[v] >= 2) bd.cut_vertices.push_back(v);
  }
  return bd;
}

bool is_cactus(const BlockDecomposition& bd) noexcept {
  return std::all_of(bd.blocks.begin(), bd.blocks.end(),
                     [](const Block& b) { return b.is_bridge() || b.is_cycle(); });
}

bool is_cactus(const Graph& g) { return is_cactus(biconnected_blocks(g)); }

std::uint64_t degree_term(const Graph& g) {
  std::uint64_t total = 0;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    const std::uint64_t du = g.degree(u) - 1;
    for (Vertex v : g.neighbors(u)) {
      if (u < v) total += du * (g.degree(v) - 1);
    }
  }
  return total;
}

CactusCensus census(const Graph& g, const BlockDecomposition& bd) {
  if (!is_cactus(bd)) throw Error(ErrorCode::kNotCactus, "graph has a block that is neither a bridge nor a cycle");
  CactusCensus out;
  for (const Block& block : bd.blocks) {
    if (!block.is_cycle()) continue;
    const std::size_t length = block.vertices.size();
    ++out.cycles_by_length[length];
    // In a cactus no outside vertex sees two vertices of the same cycle, so
    // every external edge at a triangle (quadrangle) vertex yields exactly one
    // induced pendant copy.
    if (length == 3) out.b1 += excess_degree(g, block);
    if (length == 4) out.b2 += excess_degree(g, block);
  }
  auto count_of = [&](std::size_t len) {
    auto it = out.cycles_by_length.find(len);
    return it == out.cycles_by_length.end() ? std::uint64_t{0} : it->second;
  };
  out.c3 = count_of(3);
  out.c4 = count_of(4);
  out.c5 = count_of(5);
  out.c6 = count_of(6);
  out.degree_term = degree_term(g);
  return out;
}

CactusCensus census(const Graph& g) { return census(g, biconnected_blocks(g)); }

std::uint64_t count_induced_g1_bruteforce(const Graph& g) {
  const Masks adj = adjacency_masks(g);
  const std::size_t n = adj.size();
  std::uint64_t count = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        for (std::size_t d = c + 1; d < n; ++d) {
          const std::array<std::size_t, 4> pick{a, b, c, d};
          std::uint64_t mask = 0;
          for (auto x : pick) mask |= std::uint64_t{1} << x;
          std::array<int, 4> deg{};
          for (std::size_t i = 0; i < 4; ++i) deg[i] = std::popcount(adj[pick[i]] & mask);
          std::sort(deg.begin(), deg.end());
          // 4 vertices, 4 edges, degrees {1,2,2,3}: the paw, nothing else.
          if (deg == std::array<int, 4>{1, 2, 2, 3}) ++count;
        }
  return count;
}

std::uint64_t count_induced_g2_bruteforce(const Graph& g) {
  const Masks adj = adjacency_masks(g);
  const std::size_t n = adj.size();
  std::uint64_t count = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        for (std::size_t d = c + 1; d < n; ++d)
          for (std::size_t e = d + 1; e < n; ++e) {
            const std::array<std::size_t, 5> pick{a, b, c, d, e};
            std::uint64_t mask = 0;
            for (auto x : pick) mask |= std::uint64_t{1} << x;
            std::array<int, 5> deg{};
            int leaf = -1;
            int hub = -1;
            int twos = 0;
            for (std::size_t i = 0; i < 5; ++i) {
              deg[i] = std::popcount(adj[pick[i]] & mask);
              if (deg[i] == 1) leaf = static_cast<int>(i);
              if (deg[i] == 3) hub = static_cast<int>(i);
              if (deg[i] == 2) ++twos;
            }
            if (leaf < 0 || hub < 0 || twos != 3) continue;
            // Degrees {1,2,2,2,3} also fit a triangle with a 2-path tail;
            // only the quadrangle version has its leaf on the hub.
            if (adj[pick[leaf]] & (std::uint64_t{1} << pick[hub])) ++count;
          }
  return count;
}

}  // namespace cactuswp
