#include "vgauss/generator.hpp"

#include <cmath>
#include <stdexcept>

#include "vgauss/boxmuller.hpp"
#include "vgauss/polar.hpp"
#include "vgauss/ratio.hpp"

namespace vgauss {

std::string_view method_name(Method m) noexcept {
  switch (m) {
    case Method::B1: return "b1";
    case Method::B2: return "b2";
    case Method::B3: return "b3";
    case Method::P1: return "p1";
    case Method::P2: return "p2";
    case Method::R1: return "r1";
  }
  return "?";
}

std::optional<Method> parse_method(std::string_view name) noexcept {
  for (Method m : kAllMethods) {
    if (method_name(m) == name) return m;
  }
  return std::nullopt;
}

NormalGenerator::NormalGenerator(std::unique_ptr<UniformSource> source, NormalParams params)
    : source_(std::move(source)), params_(params), kernels_(&standard_kernels()) {
  if (!source_) throw std::invalid_argument("NormalGenerator: null uniform source");
  if (!(params_.sigma >= 0.0) || !std::isfinite(params_.sigma) || !std::isfinite(params_.mu)) {
    throw std::invalid_argument("NormalGenerator: sigma must be finite and >= 0, mu finite");
  }
}

std::unique_ptr<NormalGenerator> make_generator(Method m, std::uint64_t seed, NormalParams params) {
  auto src = std::make_unique<UniformStream>(seed);
  switch (m) {
    case Method::B1: return std::make_unique<BoxMullerGen>(BoxMullerGen::Variant::B1, std::move(src), params);
    case Method::B2: return std::make_unique<BoxMullerGen>(BoxMullerGen::Variant::B2, std::move(src), params);
    case Method::B3: return std::make_unique<BoxMullerGen>(BoxMullerGen::Variant::B3, std::move(src), params);
    case Method::P1: return std::make_unique<PolarGen>(PolarGen::Variant::P1, std::move(src), params);
    case Method::P2: return std::make_unique<PolarGen>(PolarGen::Variant::P2, std::move(src), params);
    case Method::R1: return std::make_unique<RatioGen>(std::move(src), params);
  }
  throw std::invalid_argument("make_generator: unknown method");
}

}  // namespace vgauss
