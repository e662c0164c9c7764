#include "report.hpp"

#include <string>

namespace cactuswp::cli {

nlohmann::json census_to_json(const CactusCensus& census, bool with_cycle_lengths) {
  nlohmann::json j = {
      {"c3", census.c3}, {"c4", census.c4}, {"c5", census.c5},
      {"c6", census.c6}, {"b1", census.b1}, {"b2", census.b2},
      {"degree_term", census.degree_term},
  };
  if (with_cycle_lengths) {
    nlohmann::json lengths = nlohmann::json::object();
    for (const auto& [length, count] : census.cycles_by_length) lengths[std::to_string(length)] = count;
    j["cycles_by_length"] = lengths;
  }
  return j;
}

void print_census(const CactusCensus& census, std::ostream& out) {
  out << "c3: " << census.c3 << '\n'
      << "c4: " << census.c4 << '\n'
      << "c5: " << census.c5 << '\n'
      << "c6: " << census.c6 << '\n'
      << "b1: " << census.b1 << '\n'
      << "b2: " << census.b2 << '\n'
      << "degree_term: " << census.degree_term << '\n';
  out << "cycles_by_length:";
  if (census.cycles_by_length.empty()) out << " none";
  for (const auto& [length, count] : census.cycles_by_length) out << ' ' << length << 'x' << count;
  out << '\n';
}

nlohmann::json to_json(const PolarityReport& r) {
  nlohmann::json j = {{"n", r.n}, {"m", r.m}, {"is_cactus", r.is_cactus}};
  if (r.wp_formula) j["wp_formula"] = *r.wp_formula;
  if (r.wp_oracle) j["wp_oracle"] = *r.wp_oracle;
  if (r.wiener_index) j["wiener_index"] = *r.wiener_index;
  if (r.census) j["census"] = census_to_json(*r.census);
  if (r.method_agreement) j["method_agreement"] = *r.method_agreement;
  return j;
}

void print_report(const PolarityReport& r, std::ostream& out) {
  out << "n: " << r.n << '\n' << "m: " << r.m << '\n';
  out << "is_cactus: " << (r.is_cactus ? "true" : "false") << '\n';
  if (r.wp_formula) out << "wp_formula: " << *r.wp_formula << '\n';
  if (r.wp_oracle) out << "wp_oracle: " << *r.wp_oracle << '\n';
  if (r.wiener_index) out << "wiener_index: " << *r.wiener_index << '\n';
  if (r.method_agreement) out << "method_agreement: " << (*r.method_agreement ? "true" : "false") << '\n';
  if (r.census) print_census(*r.census, out);
}

}  // namespace cactuswp::cli
