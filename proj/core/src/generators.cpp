#include "cactuswp/generators.hpp"

#include <limits>
#include <random>
#include <vector>

#include "cactuswp/error.hpp"

namespace cactuswp {

Graph generate(const FamilySpec& spec) {
  validate(spec, 1);
  const auto k = static_cast<Vertex>(spec.k);
  const auto h = static_cast<Vertex>(spec.h);
  const auto attach = static_cast<Vertex>(spec.attachment_position());
  const bool bridged = spec.family == Family::kOrthoChain || spec.family == Family::kMetaChain;

  std::vector<Edge> edges;
  std::vector<Vertex> gon(k);
  Vertex next_id = 0;
  Vertex outgoing = 0;
  for (Vertex i = 0; i < h; ++i) {
    const bool shares_first = i > 0 && !bridged;
    gon[0] = shares_first ? outgoing : next_id++;
    for (Vertex j = 1; j < k; ++j) gon[j] = next_id++;
    for (Vertex j = 0; j < k; ++j) edges.push_back({gon[j], gon[(j + 1) % k]});
    if (i > 0 && bridged) edges.push_back({outgoing, gon[0]});
    outgoing = gon[attach];
  }
  return Graph::from_edges(next_id, edges);
}

Graph generate_random_cactus(const RandomCactusParams& p) {
  if (p.block_count < 1) throw Error(ErrorCode::kInvalidParams, "block_count must be at least 1");
  if (!(p.cycle_probability >= 0.0 && p.cycle_probability <= 1.0)) {
    throw Error(ErrorCode::kInvalidParams, "cycle_probability must lie in [0, 1]");
  }
  if (p.max_cycle_length < 3) throw Error(ErrorCode::kInvalidParams, "max_cycle_length must be at least 3");
  const auto limit = std::numeric_limits<Vertex>::max() / 2;
  if (p.max_cycle_length > limit || p.block_count > limit / p.max_cycle_length) {
    throw Error(ErrorCode::kInvalidParams, "requested cactus exceeds 32-bit vertex ids");
  }

  std::mt19937_64 rng(p.seed);
  std::bernoulli_distribution is_cycle(p.cycle_probability);
  std::uniform_int_distribution<std::size_t> cycle_length(3, p.max_cycle_length);

  std::vector<Edge> edges;
  Vertex vertex_count = 1;
  for (std::size_t b = 0; b < p.block_count; ++b) {
    const Vertex anchor = std::uniform_int_distribution<Vertex>(0, vertex_count - 1)(rng);
    if (is_cycle(rng)) {
      const auto length = static_cast<Vertex>(cycle_length(rng));
      Vertex prev = anchor;
      for (Vertex j = 1; j < length; ++j) {
        const Vertex fresh = vertex_count++;
        edges.push_back({prev, fresh});
        prev = fresh;
      }
      edges.push_back({prev, anchor});
    } else {
      edges.push_back({anchor, vertex_count++});
    }
  }
  return Graph::from_edges(vertex_count, edges);
}

}  // namespace cactuswp
