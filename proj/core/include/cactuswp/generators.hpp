#pragma once

#include <cstddef>
#include <cstdint>

#include "cactuswp/graph.hpp"
#include "cactuswp/polarity_formula.hpp"

namespace cactuswp {

/// Builds the chain k-gon cactus described by spec. Gon i is laid out on
/// consecutive fresh ids in cyclic order starting at its incoming attachment
/// vertex (position 0). h = 1 yields a bare k-cycle.
Graph generate(const FamilySpec& spec);

struct RandomCactusParams {
  std::size_t block_count = 1;
  double cycle_probability = 0.5;
  std::size_t max_cycle_length = 6;
  std::uint64_t seed = 0;
};

/// Grows a cactus from a single vertex by attaching block_count blocks, each
/// at a uniformly chosen existing vertex: a cycle of uniform length in
/// [3, max_cycle_length] with probability cycle_probability, else a pendant
/// edge. Reproducible for a fixed seed. Throws kInvalidParams.
Graph generate_random_cactus(const RandomCactusParams& params);

}  // namespace cactuswp
