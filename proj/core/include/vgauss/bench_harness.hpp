#ifndef VGAUSS_BENCH_HARNESS_HPP
#define VGAUSS_BENCH_HARNESS_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "vgauss/generator.hpp"

namespace vgauss {

inline constexpr std::array<std::string_view, 4> kComponentLabels{"ln", "sqrt", "sin/cos", "other"};

/**
 * Wall-clock cost per deviate on this host. The ln/sqrt/sin-cos entries are
 * obtained by substitution: the run is repeated with that component's kernels
 * replaced by plain copies, and the time saved is attributed to it. "other" is
 * the remainder, so the four entries sum to the total unless a substitution
 * happened to cost more than it saved (negative savings clamp to zero).
 */
struct BenchReport {
  Method method = Method::B1;
  double ns_per_deviate = 0;
  std::array<double, 4> breakdown{};  // indexed like kComponentLabels
  std::size_t n_samples = 0;
  double uniforms_per_deviate = 0;

  [[nodiscard]] double breakdown_sum() const noexcept;
};

/// Whether a method evaluates the given component at all.
[[nodiscard]] bool uses_component(Method m, Component c) noexcept;

inline constexpr std::uint64_t kBenchSeed = 4242;

/// Median of `repeats` timed fills of n deviates after one discarded warm-up.
/// Requires n >= 1e6 and repeats >= 3 (std::invalid_argument otherwise).
[[nodiscard]] BenchReport bench_method(Method m, std::size_t n, std::size_t repeats,
                                       std::uint64_t seed = kBenchSeed);

[[nodiscard]] std::vector<BenchReport> bench_all(std::size_t n, std::size_t repeats,
                                                 std::uint64_t seed = kBenchSeed);

/// Published VP2200/10 cycles per deviate, rows ln, sqrt, sin/cos, other, total.
[[nodiscard]] std::array<double, 5> historical_vp2200_cycles(Method m) noexcept;

enum class BenchFormat { table, csv };

/// Component rows {ln, sqrt, sin/cos, other, total} plus uniforms per deviate;
/// the table form adds the historical column block and the R1/P2 ratio.
void print_bench(std::ostream& os, std::span<const BenchReport> reports, BenchFormat fmt);

}  // namespace vgauss

#endif  // VGAUSS_BENCH_HARNESS_HPP
