#ifndef VGAUSS_UNIFORM_STREAM_HPP
#define VGAUSS_UNIFORM_STREAM_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

namespace vgauss {

/// Source of uniform deviates on [0,1). Generators draw from this interface so
/// that fixture tests can replay scripted inputs.
class UniformSource {
 public:
  virtual ~UniformSource() = default;

  /// Writes out.size() values in [0,1) and advances the source by that many draws.
  virtual void fill(std::span<double> out) = 0;

  /// Total number of draws delivered since construction.
  [[nodiscard]] virtual std::uint64_t count_generated() const noexcept = 0;

  /// Values in [-1,1) as 2u-1, one draw per value.
  void fill_signed(std::span<double> out);
};

/**
 * @brief Additive lagged-Fibonacci generator, x[n] = x[n-607] + x[n-273] mod 2^64.
 *
 * Outputs are the top 53 bits of each word scaled by 2^-53, so 0 can occur and
 * 1 cannot. The lag table is expanded from the seed with the splitmix64
 * finaliser and warmed up by 10 * 607 discarded steps. Since the low bit of the
 * recurrence is itself a primitive trinomial LFSR, forcing one odd word in the
 * table keeps the full period and rules out the all-zero state.
 *
 * Output is independent of how a sequence of fill() calls partitions it.
 */
class UniformStream final : public UniformSource {
 public:
  static constexpr std::size_t kLongLag = 607;
  static constexpr std::size_t kShortLag = 273;
  static constexpr std::size_t kWarmupSteps = 10 * kLongLag;

  explicit UniformStream(std::uint64_t seed);

  void fill(std::span<double> out) override;
  [[nodiscard]] std::uint64_t count_generated() const noexcept override { return count_; }

  [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }
  [[nodiscard]] std::span<const std::uint64_t, kLongLag> lag_table() const noexcept { return table_; }

  /// Next raw 64-bit word; counts as one draw.
  std::uint64_t next_word();

 private:
  // Advances the recurrence by out.size() steps, writing raw words.
  void step_block(std::span<std::uint64_t> out);

  std::array<std::uint64_t, kLongLag> table_{};
  std::size_t pos_ = 0;  // slot holding x[n-607]
  std::uint64_t seed_;
  std::uint64_t count_ = 0;
};

/// Maps a 64-bit word to [0,1) using its top 53 bits.
constexpr double word_to_unit(std::uint64_t w) noexcept {
  return static_cast<double>(w >> 11) * 0x1.0p-53;
}

}  // namespace vgauss

#endif  // VGAUSS_UNIFORM_STREAM_HPP
