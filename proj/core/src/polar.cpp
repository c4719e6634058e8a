#include "vgauss/polar.hpp"

#include <cmath>
#include <numbers>

namespace vgauss {

void polar_candidates(UniformSource& src, std::size_t m, PolarCandidates& out) {
  out.x.resize(m);
  out.y.resize(m);
  out.s.resize(m);
  // Draw into s as scratch: 2m values laid out x0 y0 x1 y1 ...
  std::vector<double>& raw = out.s;
  raw.resize(2 * m);
  src.fill_signed(raw);

  std::size_t k = 0;
  for (std::size_t j = 0; j < m; ++j) {
    const double x = raw[2 * j];
    const double y = raw[2 * j + 1];
    const double s = x * x + y * y;
    // Always write, advance only on acceptance. k <= j, so raw[k] has already been read.
    out.x[k] = x;
    out.y[k] = y;
    raw[k] = s;
    k += s < 1.0 ? 1 : 0;
  }
  out.s.resize(m);
  out.accepted = k;
}

PolarGen::PolarGen(Variant variant, std::uint64_t seed, NormalParams params)
    : PolarGen(variant, std::make_unique<UniformStream>(seed), params) {}

PolarGen::PolarGen(Variant variant, std::unique_ptr<UniformSource> source, NormalParams params)
    : NormalGenerator(std::move(source), params),
      variant_(variant),
      happ_(default_h_approx()),
      buffer_(2 * kBlockSize) {}

std::size_t PolarGen::round_candidates(std::size_t want) noexcept {
  const double pairs = static_cast<double>(want) / 2.0 * (4.0 / std::numbers::pi) * kOversample;
  return static_cast<std::size_t>(std::ceil(pairs));
}

void PolarGen::fill(std::span<double> out) {
  buffered_fill(buffer_, out, kBlockSize, [this](std::size_t want) { return round(want); });
}

std::span<const double> PolarGen::round(std::size_t want) {
  const std::size_t m = round_candidates(want);
  polar_candidates(*source_, m, cand_);
  const std::size_t k = cand_.accepted;
  candidates_ += m;
  accepted_ += k;

  r_.resize(k);
  round_out_.resize(2 * k);
  if (variant_ == Variant::P1) {
    transform_p1(k);
  } else {
    transform_p2(k);
  }
  return round_out_;
}

void PolarGen::transform_p1(std::size_t k) {
  const auto& kern = *kernels_;
  const auto s = std::span<const double>(cand_.s).first(k);
  auto r = std::span(r_);
  kern.log(s, r);
  for (std::size_t j = 0; j < k; ++j) r[j] = -2.0 * r[j] / s[j];
  kern.sqrt(r, r);

  const double mu = params_.mu;
  const double sigma = params_.sigma;
  for (std::size_t j = 0; j < k; ++j) {
    const double rj = s[j] == 0.0 ? 0.0 : sigma * r[j];
    round_out_[2 * j] = rj * cand_.x[j] + mu;
    round_out_[2 * j + 1] = rj * cand_.y[j] + mu;
  }
}

void PolarGen::transform_p2(std::size_t k) {
  const auto& kern = *kernels_;
  const auto s = std::span<const double>(cand_.s).first(k);
  auto r = std::span(r_);
  const double sigma = params_.sigma;

  tail_idx_.clear();
  for (std::size_t j = 0; j < k; ++j) {
    r[j] = mobius_map(s[j], happ_.rho);
    if (s[j] > happ_.tau) tail_idx_.push_back(static_cast<std::uint32_t>(j));
  }
  kern.h_poly(happ_, r, r);
  for (double& x : r) x *= sigma;

  const std::size_t nt = tail_idx_.size();
  if (nt > 0) {
    tail_.resize(nt);
    for (std::size_t q = 0; q < nt; ++q) tail_[q] = 1.0 - s[tail_idx_[q]];
    kern.log(tail_, tail_);
    for (std::size_t q = 0; q < nt; ++q) tail_[q] = -tail_[q] / s[tail_idx_[q]];
    kern.sqrt(tail_, tail_);
    for (std::size_t q = 0; q < nt; ++q) r[tail_idx_[q]] = sigma * tail_[q];
  }

  const double mu = params_.mu;
  for (std::size_t j = 0; j < k; ++j) {
    const double rr = r[j] * std::numbers::sqrt2;
    round_out_[2 * j] = cand_.x[j] * rr + mu;
    round_out_[2 * j + 1] = cand_.y[j] * rr + mu;
  }
}

}  // namespace vgauss
