#ifndef VGAUSS_KERNELS_HPP
#define VGAUSS_KERNELS_HPP

#include <span>

#include "vgauss/fastfuncs.hpp"

namespace vgauss {

/**
 * Batch math routines used by the generators. Every ln, sqrt and sin/cos a
 * generator evaluates goes through one of these, so the benchmark harness can
 * swap a component for a copy of equal data movement and time the difference.
 *
 * In-place calls (in and out aliasing exactly) are allowed.
 */
struct MathKernels {
  void (*log)(std::span<const double> in, std::span<double> out);
  void (*sqrt)(std::span<const double> in, std::span<double> out);
  /// sin/cos of the angles themselves (reference accuracy).
  void (*sincos)(std::span<const double> angle, std::span<double> s, std::span<double> c);
  void (*sincos16)(const SinCos16Coeffs& k, std::span<const double> v, std::span<double> s,
                   std::span<double> c);
  /// h(v) polynomial; counted with ln since it replaces the logarithm.
  void (*h_poly)(const HApprox& h, std::span<const double> v, std::span<double> out);
};

/// Cost components in the per-deviate breakdown.
enum class Component { ln, sqrt, sincos };

/// Platform libm plus the fast polynomial routines.
[[nodiscard]] const MathKernels& standard_kernels() noexcept;

/// Copy of `base` with the routines belonging to `c` replaced by plain copies.
[[nodiscard]] MathKernels substitute(const MathKernels& base, Component c) noexcept;

}  // namespace vgauss

#endif  // VGAUSS_KERNELS_HPP
