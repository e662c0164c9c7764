#include "cactuswp/polarity_formula.hpp"

#include <stdexcept>

#include "cactuswp/error.hpp"

namespace cactuswp {

std::string_view to_string(Family family) noexcept {
  switch (family) {
    case Family::kChainType1: return "chain1";
    case Family::kChainType2: return "chain2";
    case Family::kOrthoChain: return "ortho";
    case Family::kMetaChain: return "meta";
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) noexcept {
  if (name == "chain1") return Family::kChainType1;
  if (name == "chain2") return Family::kChainType2;
  if (name == "ortho") return Family::kOrthoChain;
  if (name == "meta") return Family::kMetaChain;
  return std::nullopt;
}

namespace {

bool separated_family(Family f) { return f == Family::kChainType2 || f == Family::kMetaChain; }

void invalid(const FamilySpec& spec, const std::string& why) {
  throw Error(ErrorCode::kInvalidSpec, std::string(to_string(spec.family)) + " k=" + std::to_string(spec.k) +
                                           " h=" + std::to_string(spec.h) + ": " + why);
}

}  // namespace

int FamilySpec::attachment_position() const noexcept {
  if (!separated_family(family)) return 1;
  return offset.value_or(k / 2);
}

void validate(const FamilySpec& spec, int min_h) {
  if (spec.k < 3) invalid(spec, "k must be at least 3");
  if (separated_family(spec.family) && spec.k < 4) invalid(spec, "k must be at least 4");
  if (spec.h < min_h) invalid(spec, "h must be at least " + std::to_string(min_h));
  // Keeps hk + h - 1 within 32-bit vertex ids.
  if (static_cast<std::int64_t>(spec.k) * spec.h > (std::int64_t{1} << 30)) invalid(spec, "too many vertices");
  if (spec.offset) {
    if (!separated_family(spec.family)) invalid(spec, "offset only applies to chain2 and meta");
    if (*spec.offset < 2 || *spec.offset > spec.k - 2) invalid(spec, "offset must lie in [2, k-2]");
  }
}

std::int64_t wp_from_census(const CactusCensus& c) {
  auto s = [](std::uint64_t x) { return static_cast<std::int64_t>(x); };
  return s(c.degree_term) - 3 * s(c.c6) - 5 * s(c.c5) - 4 * s(c.c4) - 3 * s(c.c3) - 2 * s(c.b1) - s(c.b2);
}

std::uint64_t wp_cactus(const Graph& g) {
  const std::int64_t wp = wp_from_census(census(g));
  if (wp < 0) throw std::logic_error("wp_cactus: negative polarity from census");
  return static_cast<std::uint64_t>(wp);
}

bool corollary22_applicable(const Graph& g) {
  const BlockDecomposition bd = biconnected_blocks(g);
  if (!is_cactus(bd)) throw Error(ErrorCode::kNotCactus, "graph is not a cactus");
  for (const Block& block : bd.blocks) {
    if (!block.is_cycle() || block.vertices.size() > 4) continue;
    std::uint64_t external = 0;
    for (Vertex v : block.vertices) external += g.degree(v) - 2;
    if (external != 1) return false;
  }
  return true;
}

std::uint64_t wp_corollary22(const Graph& g) {
  if (!corollary22_applicable(g)) {
    throw Error(ErrorCode::kNotApplicable, "some triangle or quadrangle does not have exactly one neighbor");
  }
  const CactusCensus c = census(g);
  auto s = [](std::uint64_t x) { return static_cast<std::int64_t>(x); };
  const std::int64_t wp = s(c.degree_term) - 3 * s(c.c6) - 5 * (s(c.c3) + s(c.c4) + s(c.c5));
  if (wp < 0) throw std::logic_error("wp_corollary22: negative polarity");
  return static_cast<std::uint64_t>(wp);
}

std::uint64_t closed_form(const FamilySpec& spec) {
  validate(spec, 2);
  const std::int64_t k = spec.k;
  const std::int64_t h = spec.h;
  std::int64_t wp = 0;
  switch (spec.family) {
    case Family::kChainType1:
      switch (k) {
        case 3: wp = 4 * h - 8; break;
        case 4: wp = 8 * h - 12; break;
        case 5: wp = 12 * h - 16; break;
        case 6: wp = 15 * h - 16; break;
        default: wp = (k + 12) * h - 16;
      }
      break;
    case Family::kChainType2:
      switch (k) {
        case 4: wp = 4 * h - 4; break;
        case 5: wp = 8 * h - 8; break;
        case 6: wp = 11 * h - 8; break;
        default: wp = (k + 8) * h - 8;
      }
      break;
    case Family::kOrthoChain:
      switch (k) {
        case 3: wp = 5 * h - 6; break;
        case 4: wp = 7 * h - 8; break;
        case 5: wp = 9 * h - 10; break;
        case 6: wp = 12 * h - 10; break;
        default: wp = (k + 9) * h - 10;
      }
      break;
    case Family::kMetaChain:
      switch (k) {
        case 4: wp = 6 * h - 6; break;
        case 5: wp = 8 * h - 8; break;
        case 6: wp = 11 * h - 8; break;
        default: wp = (k + 8) * h - 8;
      }
      break;
  }
  return static_cast<std::uint64_t>(wp);
}

std::uint64_t degree_term_closed_form(const FamilySpec& spec) {
  validate(spec, 2);
  const std::int64_t k = spec.k;
  const std::int64_t h = spec.h;
  switch (spec.family) {
    case Family::kChainType1: return static_cast<std::uint64_t>((k + 12) * h - 16);
    case Family::kChainType2:
    case Family::kMetaChain: return static_cast<std::uint64_t>((k + 8) * h - 8);
    case Family::kOrthoChain: return static_cast<std::uint64_t>((k + 9) * h - 10);
  }
  return 0;
}

}  // namespace cactuswp
