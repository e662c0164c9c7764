#include "cli.hpp"

#include <optional>
#include <random>
#include <vector>

#include "CLI11.hpp"
#include "cactuswp/cactuswp.hpp"
#include "report.hpp"

namespace cactuswp::cli {
namespace {

// Census subgraph counts are cross-checked by enumeration up to this size.
constexpr std::size_t kVerifyCensusMaxVertices = 30;

std::uint64_t biased(std::uint64_t value, const Hooks& hooks) {
  return static_cast<std::uint64_t>(static_cast<std::int64_t>(value) + hooks.formula_bias);
}

struct ComputeArgs {
  std::string path;
  std::string method = "formula";
  bool wiener = false;
  bool json = false;
};

int cmd_compute(const ComputeArgs& a, std::ostream& out, std::ostream& err, const Hooks& hooks) {
  const Graph g = read_edge_list_file(a.path);
  require_connected(g);

  PolarityReport report;
  report.n = g.vertex_count();
  report.m = g.edge_count();
  const BlockDecomposition bd = biconnected_blocks(g);
  report.is_cactus = is_cactus(bd);

  const bool want_formula = a.method != "bfs";
  const bool want_oracle = a.method != "formula";
  if (want_formula) {
    if (!report.is_cactus && a.method == "formula") {
      err << to_string(ErrorCode::kNotCactus) << ": formula method requires a cactus graph\n";
      return kExitError;
    }
    if (report.is_cactus) {
      report.census = census(g, bd);
      report.wp_formula = biased(static_cast<std::uint64_t>(wp_from_census(*report.census)), hooks);
    }
  }
  if (want_oracle) report.wp_oracle = count_distance3_pairs(g);
  if (a.wiener) report.wiener_index = wiener_index(g);
  if (report.wp_formula && report.wp_oracle) report.method_agreement = *report.wp_formula == *report.wp_oracle;

  if (a.json) {
    out << to_json(report).dump() << '\n';
  } else {
    print_report(report, out);
  }
  if (report.method_agreement == false) {
    err << "formula and BFS oracle disagree\n";
    return kExitDisagreement;
  }
  return kExitOk;
}

struct GenerateArgs {
  std::string family;
  int k = 0;
  int h = 0;
  std::optional<int> offset;
  std::string output;
};

int cmd_generate(const GenerateArgs& a, std::ostream& out) {
  FamilySpec spec{*parse_family(a.family), a.k, a.h, a.offset};
  const Graph g = generate(spec);
  write_edge_list_file(g, a.output);
  out << "n: " << g.vertex_count() << '\n' << "m: " << g.edge_count() << '\n';
  if (spec.h >= 2) out << "closed_form: " << closed_form(spec) << '\n';
  return kExitOk;
}

struct RandomArgs {
  RandomCactusParams params;
  std::string output;
};

int cmd_generate_random(const RandomArgs& a, std::ostream& out) {
  const Graph g = generate_random_cactus(a.params);
  write_edge_list_file(g, a.output);
  out << "n: " << g.vertex_count() << '\n' << "m: " << g.edge_count() << '\n';
  return kExitOk;
}

struct CensusArgs {
  std::string path;
  bool json = false;
};

int cmd_census(const CensusArgs& a, std::ostream& out) {
  const CactusCensus c = census(read_edge_list_file(a.path));
  if (a.json) {
    out << census_to_json(c, true).dump() << '\n';
  } else {
    print_census(c, out);
  }
  return kExitOk;
}

struct VerifyArgs {
  long long trials = 0;
  long long max_blocks = 0;
  long long max_cycle = 0;
  std::uint64_t seed = 0;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err, const Hooks& hooks) {
  if (a.trials < 1) {
    err << "verify: --trials must be at least 1\n";
    return kExitError;
  }
  if (a.max_blocks < 1) {
    err << "verify: --max-blocks must be at least 1\n";
    return kExitError;
  }
  if (a.max_cycle < 3) {
    err << "verify: --max-cycle must be at least 3\n";
    return kExitError;
  }

  std::mt19937_64 master(a.seed);
  std::uniform_int_distribution<std::size_t> blocks(1, static_cast<std::size_t>(a.max_blocks));
  std::uniform_real_distribution<double> probability(0.0, 1.0);

  long long agree = 0;
  long long census_checked = 0;
  std::optional<std::string> counterexample;
  for (long long t = 0; t < a.trials; ++t) {
    RandomCactusParams params{blocks(master), probability(master), static_cast<std::size_t>(a.max_cycle), master()};
    const Graph g = generate_random_cactus(params);
    bool ok = biased(wp_cactus(g), hooks) == count_distance3_pairs(g);
    if (g.vertex_count() <= kVerifyCensusMaxVertices) {
      ++census_checked;
      const CactusCensus c = census(g);
      ok = ok && c.b1 == count_induced_g1_bruteforce(g) && c.b2 == count_induced_g2_bruteforce(g);
    }
    if (ok) {
      ++agree;
    } else if (!counterexample) {
      counterexample = "trial " + std::to_string(t) + " (seed " + std::to_string(params.seed) + ")\n" +
                       to_edge_list(g);
    }
  }

  out << agree << '/' << a.trials << " agree\n";
  out << "census cross-checked on " << census_checked << " instances with n <= " << kVerifyCensusMaxVertices
      << '\n';
  if (counterexample) {
    out << "first counterexample: " << *counterexample;
    return kExitDisagreement;
  }
  return kExitOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err, const Hooks& hooks) {
  CLI::App app{"Wiener polarity index of graphs, with a fast path for cactus graphs", "cactuswp"};
  app.require_subcommand(1);
  // `generate --h` takes the gon count, so help is long-form only.
  app.set_help_flag("--help", "Print this help message and exit");

  ComputeArgs compute;
  auto* compute_cmd = app.add_subcommand("compute", "Compute the Wiener polarity index of a graph file");
  compute_cmd->add_option("file", compute.path, "Edge-list file")->required();
  compute_cmd->add_option("--method", compute.method, "formula, bfs or both")
      ->check(CLI::IsMember({"formula", "bfs", "both"}));
  compute_cmd->add_flag("--wiener", compute.wiener, "Also compute the Wiener index");
  compute_cmd->add_flag("--json", compute.json, "Emit JSON");

  GenerateArgs gen;
  auto* gen_cmd = app.add_subcommand("generate", "Write a chain k-gon cactus as an edge list");
  gen_cmd->add_option("--family", gen.family, "chain1, chain2, ortho or meta")
      ->required()
      ->check(CLI::IsMember({"chain1", "chain2", "ortho", "meta"}));
  gen_cmd->add_option("--k", gen.k, "Gon size")->required();
  gen_cmd->add_option("--h", gen.h, "Number of gons")->required();
  gen_cmd->add_option("--offset", gen.offset, "Second attachment position (chain2/meta)");
  gen_cmd->add_option("-o,--output", gen.output, "Output file")->required();

  RandomArgs rnd;
  auto* rnd_cmd = app.add_subcommand("generate-random", "Write a seeded random cactus as an edge list");
  rnd_cmd->add_option("--blocks", rnd.params.block_count, "Number of attached blocks")->required();
  rnd_cmd->add_option("--p-cycle", rnd.params.cycle_probability, "Probability a block is a cycle")->required();
  rnd_cmd->add_option("--max-cycle", rnd.params.max_cycle_length, "Maximum cycle length")->required();
  rnd_cmd->add_option("--seed", rnd.params.seed, "64-bit seed")->required();
  rnd_cmd->add_option("-o,--output", rnd.output, "Output file")->required();

  CensusArgs cen;
  auto* census_cmd = app.add_subcommand("census", "Print cycle counts, b1, b2 and the degree term of a cactus");
  census_cmd->add_option("file", cen.path, "Edge-list file")->required();
  census_cmd->add_flag("--json", cen.json, "Emit JSON");

  VerifyArgs ver;
  auto* verify_cmd = app.add_subcommand("verify", "Check the formula against the BFS oracle on random cactuses");
  verify_cmd->add_option("--trials", ver.trials, "Number of random cactuses")->required();
  verify_cmd->add_option("--max-blocks", ver.max_blocks, "Maximum blocks per cactus")->required();
  verify_cmd->add_option("--max-cycle", ver.max_cycle, "Maximum cycle length")->required();
  verify_cmd->add_option("--seed", ver.seed, "64-bit seed")->required();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitError;
  }

  try {
    if (*compute_cmd) return cmd_compute(compute, out, err, hooks);
    if (*gen_cmd) return cmd_generate(gen, out);
    if (*rnd_cmd) return cmd_generate_random(rnd, out);
    if (*census_cmd) return cmd_census(cen, out);
    if (*verify_cmd) return cmd_verify(ver, out, err, hooks);
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace cactuswp::cli
