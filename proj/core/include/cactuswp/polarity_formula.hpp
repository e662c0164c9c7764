#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "cactuswp/cactus_structure.hpp"
#include "cactuswp/graph.hpp"

namespace cactuswp {

enum class Family {
  kChainType1,  // k-gons glued at cut vertices, cut vertices adjacent
  kChainType2,  // k-gons glued at cut vertices, cut vertices >= 2 apart
  kOrthoChain,  // k-gons joined by bridges, attachment vertices adjacent
  kMetaChain,   // k-gons joined by bridges, attachment vertices >= 2 apart
};

std::string_view to_string(Family family) noexcept;
/// Accepts the CLI spellings chain1, chain2, ortho, meta.
std::optional<Family> parse_family(std::string_view name) noexcept;

struct FamilySpec {
  Family family = Family::kChainType1;
  int k = 3;
  int h = 2;
  // Position of the second attachment vertex for type-2 and meta chains.
  // Defaults to k / 2; ignored for the other two families.
  std::optional<int> offset;

  /// Position of the outgoing attachment vertex on each gon (1 for type-1
  /// and ortho chains).
  int attachment_position() const noexcept;
};

/// Throws kInvalidSpec unless the spec describes a constructible chain with at
/// least min_h gons.
void validate(const FamilySpec& spec, int min_h);

/// degree_term - 3c6 - 5c5 - 4c4 - 3c3 - 2b1 - b2.
std::int64_t wp_from_census(const CactusCensus& census);

/// Wiener polarity index of a connected cactus via the census formula.
/// Throws kNotConnected or kNotCactus.
std::uint64_t wp_cactus(const Graph& g);

/// True iff every triangle and quadrangle block has exactly one external
/// neighbor incidence. Throws kNotConnected or kNotCactus.
bool corollary22_applicable(const Graph& g);

/// degree_term - 3c6 - 5(c3 + c4 + c5). Throws kNotApplicable when the
/// triangle/quadrangle condition does not hold.
std::uint64_t wp_corollary22(const Graph& g);

/// Piecewise closed form for the chain families (h >= 2).
std::uint64_t closed_form(const FamilySpec& spec);

/// Closed form of the degree term for the chain families (h >= 2).
std::uint64_t degree_term_closed_form(const FamilySpec& spec);

}  // namespace cactuswp
