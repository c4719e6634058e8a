#include "vgauss/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace vgauss {

namespace {

void log_batch(std::span<const double> in, std::span<double> out) {
  for (std::size_t i = 0; i < in.size(); ++i) out[i] = std::log(in[i]);
}

void sqrt_batch(std::span<const double> in, std::span<double> out) {
  for (std::size_t i = 0; i < in.size(); ++i) out[i] = std::sqrt(in[i]);
}

void sincos_batch(std::span<const double> angle, std::span<double> s, std::span<double> c) {
  for (std::size_t i = 0; i < angle.size(); ++i) {
    s[i] = std::sin(angle[i]);
    c[i] = std::cos(angle[i]);
  }
}

void sincos16_kernel(const SinCos16Coeffs& k, std::span<const double> v, std::span<double> s,
                     std::span<double> c) {
  sincos16_batch(k, v, s, c);
}

void h_kernel(const HApprox& h, std::span<const double> v, std::span<double> out) { eval_h(h, v, out); }

void copy_batch(std::span<const double> in, std::span<double> out) {
  if (in.data() != out.data()) std::copy(in.begin(), in.end(), out.begin());
}

void copy_sincos(std::span<const double> angle, std::span<double> s, std::span<double> c) {
  std::copy(angle.begin(), angle.end(), s.begin());
  std::copy(angle.begin(), angle.end(), c.begin());
}

void copy_sincos16(const SinCos16Coeffs&, std::span<const double> v, std::span<double> s, std::span<double> c) {
  copy_sincos(v, s, c);
}

void copy_h(const HApprox&, std::span<const double> v, std::span<double> out) { copy_batch(v, out); }

constexpr MathKernels kStandard{&log_batch, &sqrt_batch, &sincos_batch, &sincos16_kernel, &h_kernel};

}  // namespace

const MathKernels& standard_kernels() noexcept { return kStandard; }

MathKernels substitute(const MathKernels& base, Component c) noexcept {
  MathKernels k = base;
  switch (c) {
    case Component::ln:
      k.log = &copy_batch;
      k.h_poly = &copy_h;
      break;
    case Component::sqrt:
      k.sqrt = &copy_batch;
      break;
    case Component::sincos:
      k.sincos = &copy_sincos;
      k.sincos16 = &copy_sincos16;
      break;
  }
  return k;
}

}  // namespace vgauss
