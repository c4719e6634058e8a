#include "vgauss/boxmuller.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace vgauss {

namespace {
constexpr std::size_t kPairsPerBlock = kBlockSize / 2;
}

BoxMullerGen::BoxMullerGen(Variant variant, std::uint64_t seed, NormalParams params)
    : BoxMullerGen(variant, std::make_unique<UniformStream>(seed), params) {}

BoxMullerGen::BoxMullerGen(Variant variant, std::unique_ptr<UniformSource> source, NormalParams params)
    : NormalGenerator(std::move(source), params),
      variant_(variant),
      sincos_(default_sincos_coeffs()),
      happ_(default_h_approx()),
      draws_(3 * kPairsPerBlock),
      a_(kPairsPerBlock),
      b_(kPairsPerBlock),
      r_(kPairsPerBlock),
      s_(kPairsPerBlock),
      c_(kPairsPerBlock),
      tail_(kPairsPerBlock) {
  tail_idx_.reserve(kPairsPerBlock);
}

Method BoxMullerGen::method() const noexcept {
  switch (variant_) {
    case Variant::B1: return Method::B1;
    case Variant::B2: return Method::B2;
    case Variant::B3: return Method::B3;
  }
  return Method::B1;
}

void BoxMullerGen::fill(std::span<double> out) {
  std::size_t i = 0;
  if (spare_ && !out.empty()) {
    out[0] = *spare_;
    spare_.reset();
    i = 1;
  }
  const std::size_t even_end = i + ((out.size() - i) & ~std::size_t{1});
  while (i < even_end) {
    const std::size_t len = std::min(kBlockSize, even_end - i);
    produce_pairs(out.subspan(i, len));
    i += len;
  }
  if (i < out.size()) {
    std::array<double, 2> pair{};
    produce_pairs(pair);
    out[i] = pair[0];
    spare_ = pair[1];
  }
}

void BoxMullerGen::produce_pairs(std::span<double> out) {
  const std::size_t pairs = out.size() / 2;
  source_->fill(std::span(draws_).first(pairs * draws_per_pair()));
  if (variant_ == Variant::B3) {
    pairs_b3(out, pairs);
  } else {
    pairs_b12(out, pairs);
  }
}

void BoxMullerGen::pairs_b12(std::span<double> out, std::size_t pairs) {
  const auto& k = *kernels_;
  const double mu = params_.mu;
  const double sigma = params_.sigma;
  auto w = std::span(a_).first(pairs);
  auto v = std::span(b_).first(pairs);
  auto r = std::span(r_).first(pairs);
  auto s = std::span(s_).first(pairs);
  auto c = std::span(c_).first(pairs);

  for (std::size_t j = 0; j < pairs; ++j) {
    w[j] = 1.0 - draws_[2 * j];
    v[j] = draws_[2 * j + 1];
  }
  k.log(w, r);
  for (std::size_t j = 0; j < pairs; ++j) r[j] *= -2.0;
  k.sqrt(r, r);

  if (variant_ == Variant::B1) {
    for (std::size_t j = 0; j < pairs; ++j) v[j] = 2.0 * std::numbers::pi * v[j] - std::numbers::pi;
    k.sincos(v, s, c);
  } else {
    k.sincos16(sincos_, v, s, c);
  }

  for (std::size_t j = 0; j < pairs; ++j) {
    const double rs = sigma * r[j];
    out[2 * j] = rs * s[j] + mu;
    out[2 * j + 1] = rs * c[j] + mu;
  }
}

void BoxMullerGen::pairs_b3(std::span<double> out, std::size_t pairs) {
  const auto& k = *kernels_;
  const double mu = params_.mu;
  const double sigma = params_.sigma;
  auto m = std::span(a_).first(pairs);
  auto vv = std::span(b_).first(pairs);
  auto r = std::span(r_).first(pairs);
  auto s = std::span(s_).first(pairs);
  auto c = std::span(c_).first(pairs);

  tail_idx_.clear();
  for (std::size_t j = 0; j < pairs; ++j) {
    m[j] = std::max(draws_[3 * j], draws_[3 * j + 1]);
    const double u = m[j] * m[j];
    vv[j] = mobius_map(u, happ_.rho);
    if (u > happ_.tau) tail_idx_.push_back(static_cast<std::uint32_t>(j));
  }
  k.h_poly(happ_, vv, r);
  for (std::size_t j = 0; j < pairs; ++j) r[j] *= sigma * m[j];

  // Tail u > tau: gather, sqrt(-ln(1-u)) at library accuracy, scatter.
  const std::size_t nt = tail_idx_.size();
  if (nt > 0) {
    auto t = std::span(tail_).first(nt);
    for (std::size_t q = 0; q < nt; ++q) {
      const double mq = m[tail_idx_[q]];
      t[q] = 1.0 - mq * mq;
    }
    k.log(t, t);
    for (double& x : t) x = -x;
    k.sqrt(t, t);
    for (std::size_t q = 0; q < nt; ++q) r[tail_idx_[q]] = sigma * t[q];
  }

  for (std::size_t j = 0; j < pairs; ++j) vv[j] = draws_[3 * j + 2];
  k.sincos16(sincos_, vv, s, c);

  for (std::size_t j = 0; j < pairs; ++j) {
    const double rr = r[j] * std::numbers::sqrt2;
    out[2 * j] = mu + c[j] * rr;
    out[2 * j + 1] = mu + s[j] * rr;
  }
}

}  // namespace vgauss
