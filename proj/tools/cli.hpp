#ifndef VGAUSS_TOOLS_CLI_HPP
#define VGAUSS_TOOLS_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "vgauss/bench_harness.hpp"
#include "vgauss/generator.hpp"

namespace vgauss::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitIo = 2;
inline constexpr int kExitGate = 3;

/// Seed used when neither --seed nor VGAUSS_SEED is given.
inline constexpr std::uint64_t kDefaultSeed = 19930301;
inline constexpr const char* kSeedEnv = "VGAUSS_SEED";

enum class OutputFormat { text, raw64 };

struct CliConfig {
  std::string subcommand;
  Method method = Method::P2;
  std::optional<Method> bench_method;  // unset: all methods
  std::size_t n = 0;
  double mu = 0.0;
  double sigma = 1.0;
  std::uint64_t seed = kDefaultSeed;
  OutputFormat format = OutputFormat::text;
  std::string output;  // empty or "-" writes to standard output
  std::size_t repeats = 3;
  BenchFormat bench_format = BenchFormat::table;
  double rho = 1.0;
  int degree = 15;
  std::string emit_source;
};

int run_generate(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int run_selftest(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int run_bench(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int run_fitcoeffs(const CliConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses args (without the program name) and dispatches to a subcommand.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vgauss::cli

#endif  // VGAUSS_TOOLS_CLI_HPP
