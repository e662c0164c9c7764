#pragma once

#include <cstdint>
#include <optional>
#include <ostream>

#include "cactuswp/cactus_structure.hpp"
#include "json.hpp"

namespace cactuswp::cli {

struct PolarityReport {
  std::size_t n = 0;
  std::size_t m = 0;
  bool is_cactus = false;
  std::optional<std::uint64_t> wp_formula;
  std::optional<std::uint64_t> wp_oracle;
  std::optional<std::uint64_t> wiener_index;
  std::optional<CactusCensus> census;
  std::optional<bool> method_agreement;
};

// Keys c3, c4, c5, c6, b1, b2, degree_term; cycles_by_length only on request.
nlohmann::json census_to_json(const CactusCensus& census, bool with_cycle_lengths = false);
void print_census(const CactusCensus& census, std::ostream& out);

// Absent optionals are omitted rather than written as null.
nlohmann::json to_json(const PolarityReport& report);
void print_report(const PolarityReport& report, std::ostream& out);

}  // namespace cactuswp::cli
