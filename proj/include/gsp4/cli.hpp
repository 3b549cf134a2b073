#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "gsp4/level_raising.hpp"

namespace gsp4::cli {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kCacheEnv = "GSP4LR_CACHE_DIR";

enum ExitCode { kOk = 0, kMathFailure = 1, kUsage = 2 };

/// Invalid input or flags: exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { table, json };

struct RunConfig {
  std::string command;  // identity satake convolve count dl-points matrix check
  std::vector<std::int64_t> primes{2, 3};
  std::optional<std::int64_t> ell;
  std::optional<std::filesystem::path> input;
  std::optional<std::filesystem::path> cache_dir;
  Format format = Format::table;
  int window = 4;
  bool allow_large_primes = false;
  std::uint64_t seed = 20261014;

  std::string coweight;     // satake
  std::string mu, nu;       // convolve
  std::string pattern;      // count
  std::optional<int> dim;   // count, between-pairs pattern
  int degree = 1;           // dl-points
  std::string kind = "lr";  // matrix
  std::optional<int> u;     // check
};

struct Report {
  int exit_code = kOk;
  nlohmann::json body;  // schema_version, command, inputs, result, status
  std::string text;     // human table
};

/// Dispatches to the subcommand. Throws UsageError for bad input.
Report run(const RunConfig& config);

/// The report in the requested format, newline terminated.
std::string render(const Report& report, Format format);

/// Reads one record or an array of records. Throws UsageError naming the
/// record index on schema violations and duplicate labels.
std::vector<EigenData> load_eigendata(const std::filesystem::path& path);
std::vector<EigenData> parse_eigendata(const nlohmann::json& doc);

/// Comma separated primes, e.g. "2,3,5".
std::vector<std::int64_t> parse_prime_list(const std::string& text);

}  // namespace gsp4::cli
