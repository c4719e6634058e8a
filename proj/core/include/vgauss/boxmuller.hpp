#ifndef VGAUSS_BOXMULLER_HPP
#define VGAUSS_BOXMULLER_HPP

#include <memory>
#include <optional>
#include <vector>

#include "vgauss/fastfuncs.hpp"
#include "vgauss/generator.hpp"

namespace vgauss {

/**
 * @brief Box-Muller generators producing deviates in pairs.
 *
 * - B1: r = sigma sqrt(-2 ln(1-u)), angle 2 pi v - pi, libm sin/cos.
 *   Pair order is (r sin + mu, r cos + mu).
 * - B2: as B1 with sin/cos from sincos16_batch().
 * - B3: three draws (u1, u2, u3) per pair. m = max(u1, u2), u = m^2 is uniform.
 *   For u <= tau, r = sigma m h(v(u)); otherwise r = sigma sqrt(-ln(1-u)) on a
 *   gathered tail array. Pair order is (mu + c r sqrt2, mu + s r sqrt2).
 *
 * An odd request leaves the second member of the last pair in a one-slot spare
 * that the next fill() delivers first.
 */
class BoxMullerGen final : public NormalGenerator {
 public:
  enum class Variant { B1, B2, B3 };

  BoxMullerGen(Variant variant, std::uint64_t seed, NormalParams params = {});
  BoxMullerGen(Variant variant, std::unique_ptr<UniformSource> source, NormalParams params = {});

  void fill(std::span<double> out) override;
  [[nodiscard]] Method method() const noexcept override;
  [[nodiscard]] Variant variant() const noexcept { return variant_; }
  [[nodiscard]] bool has_spare() const noexcept { return spare_.has_value(); }

  /// Uniform draws consumed per pair: 2 for B1/B2, 3 for B3.
  [[nodiscard]] std::size_t draws_per_pair() const noexcept { return variant_ == Variant::B3 ? 3 : 2; }

 private:
  // Writes out.size()/2 pairs; out.size() must be even and <= kBlockSize.
  void produce_pairs(std::span<double> out);
  void pairs_b12(std::span<double> out, std::size_t pairs);
  void pairs_b3(std::span<double> out, std::size_t pairs);

  Variant variant_;
  SinCos16Coeffs sincos_;
  HApprox happ_;
  std::optional<double> spare_;

  std::vector<double> draws_, a_, b_, r_, s_, c_;
  std::vector<std::uint32_t> tail_idx_;
  std::vector<double> tail_;
};

}  // namespace vgauss

#endif  // VGAUSS_BOXMULLER_HPP
