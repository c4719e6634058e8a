#ifndef VGAUSS_POLAR_HPP
#define VGAUSS_POLAR_HPP

#include <memory>
#include <vector>

#include "vgauss/fastfuncs.hpp"
#include "vgauss/generator.hpp"
#include "vgauss/rejection_buffer.hpp"

namespace vgauss {

/// Candidate points after compaction: entries [0, accepted) satisfy s < 1.
struct PolarCandidates {
  std::vector<double> x, y, s;
  std::size_t accepted = 0;
};

/**
 * Draws m candidate pairs (x, y) in [-1,1)^2 (two consecutive draws each,
 * exactly 2m draws), computes s = x^2 + y^2 and compacts the s < 1 triples to
 * the front in candidate order.
 */
void polar_candidates(UniformSource& src, std::size_t m, PolarCandidates& out);

/**
 * @brief Polar-method generators with rejection compaction and buffering.
 *
 * - P1: r = sigma sqrt(-2 ln(s)/s); outputs (r x + mu, r y + mu). The s = 0
 *   candidate yields (mu, mu).
 * - P2: r = sigma h(v(s)) for s <= tau, r = sigma sqrt(-ln(1-s)/s) on the
 *   gathered tail; outputs (x r sqrt2 + mu, y r sqrt2 + mu).
 *
 * Candidate rounds oversample by 4/pi * 1.05 pairs per requested pair; the
 * surplus waits in a RejectionBuffer of capacity 2 * kBlockSize.
 */
class PolarGen final : public NormalGenerator {
 public:
  enum class Variant { P1, P2 };

  static constexpr double kOversample = 1.05;

  PolarGen(Variant variant, std::uint64_t seed, NormalParams params = {});
  PolarGen(Variant variant, std::unique_ptr<UniformSource> source, NormalParams params = {});

  void fill(std::span<double> out) override;
  [[nodiscard]] Method method() const noexcept override {
    return variant_ == Variant::P1 ? Method::P1 : Method::P2;
  }
  [[nodiscard]] Variant variant() const noexcept { return variant_; }

  [[nodiscard]] std::uint64_t candidates() const noexcept { return candidates_; }
  [[nodiscard]] std::uint64_t accepted() const noexcept { return accepted_; }
  [[nodiscard]] const RejectionBuffer& buffer() const noexcept { return buffer_; }

  /// Candidate pairs drawn in a round that wants `want` deviates.
  [[nodiscard]] static std::size_t round_candidates(std::size_t want) noexcept;

 private:
  std::span<const double> round(std::size_t want);
  void transform_p1(std::size_t k);
  void transform_p2(std::size_t k);

  Variant variant_;
  HApprox happ_;
  RejectionBuffer buffer_;
  PolarCandidates cand_;
  std::vector<double> r_, round_out_;
  std::vector<std::uint32_t> tail_idx_;
  std::vector<double> tail_;
  std::uint64_t candidates_ = 0;
  std::uint64_t accepted_ = 0;
};

}  // namespace vgauss

#endif  // VGAUSS_POLAR_HPP
