#ifndef VGAUSS_RATIO_HPP
#define VGAUSS_RATIO_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "vgauss/generator.hpp"
#include "vgauss/rejection_buffer.hpp"

namespace vgauss {

enum class PretestClass : std::uint8_t { accept, reject, borderline };

/**
 * Quadratic-form bounds around the ratio-of-uniforms acceptance curve, after
 * J. L. Leva, "A fast normal random number generator", ACM TOMS 18 (1992).
 *
 * With w = 1-u and V = sqrt(8/e)(v - 1/2), let X = w - s0, Y = |V| + t0 and
 * Q = X^2 + Y (a Y - b X). Q < r_inner lies inside the curve, Q > r_outer lies
 * outside it, and only the band between needs a logarithm.
 */
struct RatioPretestConstants {
  double s0 = 0.449871;
  double t0 = 0.386595;
  double a = 0.19600;
  double b = 0.25472;
  double r_inner = 0.27597;
  double r_outer = 0.27846;
};

/// sqrt(8/e)
inline constexpr double kRatioScale = 1.7155277699214135;

/// x = sqrt(8/e)(v - 1/2)/(1 - u).
[[nodiscard]] inline double ratio_x(double u, double v) noexcept { return kRatioScale * (v - 0.5) / (1.0 - u); }

/// Exact acceptance: x^2 <= -4 ln(1-u).
[[nodiscard]] bool ratio_exact_accept(double u, double v) noexcept;

void ratio_pretest(std::span<const double> u, std::span<const double> v, std::span<PretestClass> out,
                   const RatioPretestConstants& k = {});

/**
 * @brief Kinderman-Monahan ratio-of-uniforms generator, batch form.
 *
 * Each candidate takes two consecutive draws (u, v). The quick accept/reject
 * pretest runs over the whole batch; borderline candidates are gathered into a
 * contiguous array for the logarithm and the decisions scattered back. Accepted
 * candidates become sigma x + mu in candidate order.
 *
 * Because the pretest is sound, disabling it changes only the number of
 * logarithms evaluated, never the output.
 */
class RatioGen final : public NormalGenerator {
 public:
  enum class Pretest { enabled, disabled };

  static constexpr double kOversample = 1.05;

  explicit RatioGen(std::uint64_t seed, NormalParams params = {}, Pretest pretest = Pretest::enabled);
  explicit RatioGen(std::unique_ptr<UniformSource> source, NormalParams params = {},
                    Pretest pretest = Pretest::enabled);

  void fill(std::span<double> out) override;
  [[nodiscard]] Method method() const noexcept override { return Method::R1; }

  [[nodiscard]] std::uint64_t candidates() const noexcept { return candidates_; }
  [[nodiscard]] std::uint64_t log_evaluations() const noexcept { return log_evals_; }
  [[nodiscard]] std::uint64_t accepted() const noexcept { return accepted_; }

  [[nodiscard]] static std::size_t round_candidates(std::size_t want) noexcept;

 private:
  std::span<const double> round(std::size_t want);

  Pretest pretest_;
  RatioPretestConstants consts_;
  RejectionBuffer buffer_;
  std::vector<double> raw_, u_, v_, x_, gathered_, round_out_;
  std::vector<PretestClass> cls_;
  std::vector<std::uint32_t> border_idx_;
  std::uint64_t candidates_ = 0;
  std::uint64_t log_evals_ = 0;
  std::uint64_t accepted_ = 0;
};

}  // namespace vgauss

#endif  // VGAUSS_RATIO_HPP
