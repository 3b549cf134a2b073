#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "gsp4/cli.hpp"

using namespace gsp4::cli;

int main(int argc, char** argv) {
  CLI::App app{"Hecke algebra identities, lattice counts and level-raising checks for GSp4"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  std::string format = "table";
  std::string primes;
  std::string cache_dir;
  bool no_cache = false;
  std::int64_t ell = 0;
  std::string input;
  int u = 0;
  int dim = -1;

  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json"}));
  app.add_flag_callback("--json", [&] { format = "json"; }, "Same as --format json");
  app.add_option("--cache-dir", cache_dir, std::string("Convolution cache directory (default: $") + kCacheEnv + ")");
  app.add_flag("--no-cache", no_cache, "Ignore the cache directory");
  app.add_option("--window", config.window, "Largest coweight spread a1 - a4 to enumerate")->capture_default_str();
  app.add_option("--seed", config.seed, "Seed for random basepoints")->capture_default_str();
  app.add_flag("--allow-large-primes", config.allow_large_primes, "Permit oracle primes outside {2,3,5}");

  auto* identity = app.add_subcommand("identity", "Verify the square of c_nu2 symbolically and by lattice counting");
  identity->add_option("--primes,--prime", primes, "Comma separated primes")->default_str("2,3");

  auto* satake = app.add_subcommand("satake", "Satake transform: table and lattice oracle");
  satake->add_option("--coweight", config.coweight, "Coweight, e.g. nu2 or (2,1,1,0)")->required();
  satake->add_option("--primes,--prime", primes, "Comma separated primes")->default_str("2,3");

  auto* convolve = app.add_subcommand("convolve", "Structure constants of c_mu * c_nu by lattice counting");
  convolve->add_option("--mu", config.mu, "First coweight")->required();
  convolve->add_option("--nu", config.nu, "Second coweight")->required();
  convolve->add_option("--primes,--prime", primes, "Comma separated primes")->default_str("2,3");

  auto* count = app.add_subcommand("count", "Count a lattice chain pattern");
  count->add_option("--pattern", config.pattern, "Pattern name, e.g. kl-index")->required();
  count->add_option("--primes,--prime", primes, "Comma separated primes")->default_str("2,3");
  count->add_option("--dim", dim, "Intersection dimension for type2-between-type0-pairs");

  auto* dl = app.add_subcommand("dl-points", "Points of the Deligne-Lusztig surface over GF(p^k)");
  dl->add_option("--primes,--prime", primes, "Comma separated primes")->default_str("2,3");
  dl->add_option("--degree", config.degree, "Field degree k")->capture_default_str();

  auto* matrix = app.add_subcommand("matrix", "Level raising or supersingular matrix and its determinant");
  matrix->add_option("--kind", config.kind, "lr or ss")->check(CLI::IsMember({"lr", "ss"}))->capture_default_str();
  matrix->add_option("--input", input, "Eigenvalue file to evaluate the determinant on");
  matrix->add_option("--ell", ell, "Residue characteristic");

  auto* check = app.add_subcommand("check", "Level-raising reports for every record of an eigenvalue file");
  check->add_option("--input", input, "Eigenvalue file")->required();
  check->add_option("--ell", ell, "Residue characteristic")->required();
  check->add_option("--u", u, "Only examine this sign")->check(CLI::IsMember({-1, 1}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  config.command = app.get_subcommands().front()->get_name();
  config.format = format == "json" ? Format::json : Format::table;
  if (!cache_dir.empty()) config.cache_dir = cache_dir;
  else if (const char* env = std::getenv(kCacheEnv); env && *env) config.cache_dir = env;
  if (no_cache) config.cache_dir.reset();
  if (ell != 0) config.ell = ell;
  if (!input.empty()) config.input = input;
  if (u != 0) config.u = u;
  if (dim >= 0) config.dim = dim;

  try {
    if (!primes.empty()) config.primes = parse_prime_list(primes);
    Report report = run(config);
    std::cout << render(report, config.format);
    return report.exit_code;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal failure: " << e.what() << "\n";
    return kMathFailure;
  }
}
