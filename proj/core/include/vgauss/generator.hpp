#ifndef VGAUSS_GENERATOR_HPP
#define VGAUSS_GENERATOR_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string_view>

#include "vgauss/kernels.hpp"
#include "vgauss/uniform_stream.hpp"

namespace vgauss {

/// Target mean and standard deviation.
struct NormalParams {
  double mu = 0.0;
  double sigma = 1.0;
};

enum class Method { B1, B2, B3, P1, P2, R1 };

inline constexpr std::array<Method, 6> kAllMethods{Method::B1, Method::B2, Method::B3,
                                                   Method::P1, Method::P2, Method::R1};

/// Lower-case name ("b1", ..., "r1").
[[nodiscard]] std::string_view method_name(Method m) noexcept;
[[nodiscard]] std::optional<Method> parse_method(std::string_view name) noexcept;

/// Deviates produced per internal batch.
inline constexpr std::size_t kBlockSize = 4096;

/**
 * Base for the batch normal generators. fill() always delivers exactly
 * out.size() deviates; the sequence is independent of how calls partition it.
 * Instances are single-owner mutable state.
 */
class NormalGenerator {
 public:
  NormalGenerator(std::unique_ptr<UniformSource> source, NormalParams params);
  virtual ~NormalGenerator() = default;

  NormalGenerator(const NormalGenerator&) = delete;
  NormalGenerator& operator=(const NormalGenerator&) = delete;

  virtual void fill(std::span<double> out) = 0;
  [[nodiscard]] virtual Method method() const noexcept = 0;

  [[nodiscard]] const NormalParams& params() const noexcept { return params_; }
  [[nodiscard]] std::uint64_t uniforms_consumed() const noexcept { return source_->count_generated(); }
  [[nodiscard]] UniformSource& source() noexcept { return *source_; }

  /// Routes ln/sqrt/sin/cos through `k`; the kernels must outlive the generator.
  void set_kernels(const MathKernels& k) noexcept { kernels_ = &k; }
  [[nodiscard]] const MathKernels& kernels() const noexcept { return *kernels_; }

 protected:
  std::unique_ptr<UniformSource> source_;
  NormalParams params_;
  const MathKernels* kernels_;
};

[[nodiscard]] std::unique_ptr<NormalGenerator> make_generator(Method m, std::uint64_t seed,
                                                              NormalParams params = {});

}  // namespace vgauss

#endif  // VGAUSS_GENERATOR_HPP
