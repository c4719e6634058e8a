#include "vgauss/ratio.hpp"

#include <cmath>
#include <numbers>

namespace vgauss {

namespace {
// Expected accepted fraction, sqrt(pi e)/4.
const double kAcceptRate = std::sqrt(std::numbers::pi * std::numbers::e) / 4.0;
}  // namespace

bool ratio_exact_accept(double u, double v) noexcept {
  const double x = ratio_x(u, v);
  return x * x <= -4.0 * std::log(1.0 - u);
}

void ratio_pretest(std::span<const double> u, std::span<const double> v, std::span<PretestClass> out,
                   const RatioPretestConstants& k) {
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double X = (1.0 - u[i]) - k.s0;
    const double Y = std::abs(kRatioScale * (v[i] - 0.5)) + k.t0;
    const double q = X * X + Y * (k.a * Y - k.b * X);
    out[i] = q < k.r_inner ? PretestClass::accept : (q > k.r_outer ? PretestClass::reject : PretestClass::borderline);
  }
}

RatioGen::RatioGen(std::uint64_t seed, NormalParams params, Pretest pretest)
    : RatioGen(std::make_unique<UniformStream>(seed), params, pretest) {}

RatioGen::RatioGen(std::unique_ptr<UniformSource> source, NormalParams params, Pretest pretest)
    : NormalGenerator(std::move(source), params), pretest_(pretest), buffer_(2 * kBlockSize) {}

std::size_t RatioGen::round_candidates(std::size_t want) noexcept {
  return static_cast<std::size_t>(std::ceil(static_cast<double>(want) / kAcceptRate * kOversample));
}

void RatioGen::fill(std::span<double> out) {
  buffered_fill(buffer_, out, kBlockSize, [this](std::size_t want) { return round(want); });
}

std::span<const double> RatioGen::round(std::size_t want) {
  const std::size_t m = round_candidates(want);
  raw_.resize(2 * m);
  u_.resize(m);
  v_.resize(m);
  x_.resize(m);
  cls_.resize(m);
  source_->fill(raw_);
  for (std::size_t j = 0; j < m; ++j) {
    u_[j] = raw_[2 * j];
    v_[j] = raw_[2 * j + 1];
    x_[j] = ratio_x(u_[j], v_[j]);
  }

  if (pretest_ == Pretest::enabled) {
    ratio_pretest(u_, v_, cls_, consts_);
  } else {
    std::fill(cls_.begin(), cls_.end(), PretestClass::borderline);
  }

  // Exact test on the gathered borderline set.
  border_idx_.clear();
  for (std::size_t j = 0; j < m; ++j) {
    if (cls_[j] == PretestClass::borderline) border_idx_.push_back(static_cast<std::uint32_t>(j));
  }
  const std::size_t nb = border_idx_.size();
  gathered_.resize(nb);
  for (std::size_t q = 0; q < nb; ++q) gathered_[q] = 1.0 - u_[border_idx_[q]];
  kernels_->log(gathered_, gathered_);
  for (std::size_t q = 0; q < nb; ++q) {
    const std::size_t j = border_idx_[q];
    cls_[j] = x_[j] * x_[j] <= -4.0 * gathered_[q] ? PretestClass::accept : PretestClass::reject;
  }

  round_out_.resize(m);
  std::size_t k = 0;
  const double mu = params_.mu;
  const double sigma = params_.sigma;
  for (std::size_t j = 0; j < m; ++j) {
    round_out_[k] = sigma * x_[j] + mu;
    k += cls_[j] == PretestClass::accept ? 1 : 0;
  }
  round_out_.resize(k);

  candidates_ += m;
  log_evals_ += nb;
  accepted_ += k;
  return round_out_;
}

}  // namespace vgauss
