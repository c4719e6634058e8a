#include "vgauss/uniform_stream.hpp"

#include <algorithm>
#include <vector>

namespace vgauss {

namespace {

constexpr std::uint64_t splitmix64(std::uint64_t& state) noexcept {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

constexpr std::size_t kChunk = 256;

}  // namespace

void UniformSource::fill_signed(std::span<double> out) {
  fill(out);
  for (double& x : out) x = 2.0 * x - 1.0;
}

UniformStream::UniformStream(std::uint64_t seed) : seed_(seed) {
  std::uint64_t state = seed;
  for (auto& w : table_) w = splitmix64(state);
  table_[0] |= 1;

  std::array<std::uint64_t, kChunk> sink{};
  for (std::size_t done = 0; done < kWarmupSteps;) {
    const std::size_t c = std::min(kChunk, kWarmupSteps - done);
    step_block(std::span(sink).first(c));
    done += c;
  }
}

void UniformStream::step_block(std::span<std::uint64_t> out) {
  constexpr std::size_t kGap = kLongLag - kShortLag;
  std::size_t k = 0;
  while (k < out.size()) {
    // Largest run with neither the write cursor nor the read cursor wrapping.
    const std::size_t read = pos_ < kShortLag ? pos_ + kGap : pos_ - kShortLag;
    const std::size_t run = std::min({out.size() - k, kLongLag - pos_, kLongLag - read});
    std::uint64_t* dst = table_.data() + pos_;
    const std::uint64_t* src = table_.data() + read;
    for (std::size_t i = 0; i < run; ++i) {
      dst[i] += src[i];
      out[k + i] = dst[i];
    }
    k += run;
    pos_ += run;
    if (pos_ == kLongLag) pos_ = 0;
  }
}

std::uint64_t UniformStream::next_word() {
  std::uint64_t w = 0;
  step_block(std::span(&w, 1));
  ++count_;
  return w;
}

void UniformStream::fill(std::span<double> out) {
  std::array<std::uint64_t, kChunk> words{};
  for (std::size_t done = 0; done < out.size();) {
    const std::size_t c = std::min(kChunk, out.size() - done);
    step_block(std::span(words).first(c));
    for (std::size_t i = 0; i < c; ++i) out[done + i] = word_to_unit(words[i]);
    done += c;
  }
  count_ += out.size();
}

}  // namespace vgauss
