#ifndef VGAUSS_REJECTION_BUFFER_HPP
#define VGAUSS_REJECTION_BUFFER_HPP

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace vgauss {

/// FIFO of finished deviates left over from a rejection round.
class RejectionBuffer {
 public:
  explicit RejectionBuffer(std::size_t capacity) : storage_(capacity) {}

  [[nodiscard]] std::size_t len() const noexcept { return len_; }
  [[nodiscard]] std::size_t capacity() const noexcept { return storage_.size(); }
  [[nodiscard]] bool empty() const noexcept { return len_ == 0; }

  /// Appends all of `values`; throws std::length_error past capacity.
  void push(std::span<const double> values) {
    if (values.size() > capacity() - len_) throw std::length_error("RejectionBuffer: capacity exceeded");
    for (double x : values) {
      storage_[(head_ + len_) % storage_.size()] = x;
      ++len_;
    }
  }

  /// Moves up to out.size() oldest values into out; returns how many.
  std::size_t take(std::span<double> out) noexcept {
    const std::size_t n = std::min(out.size(), len_);
    for (std::size_t i = 0; i < n; ++i) out[i] = storage_[(head_ + i) % storage_.size()];
    head_ = len_ == n ? 0 : (head_ + n) % storage_.size();
    len_ -= n;
    return n;
  }

 private:
  std::vector<double> storage_;
  std::size_t head_ = 0;
  std::size_t len_ = 0;
};

/**
 * Drives an exact-count fill on top of a round producer that yields an
 * unpredictable number of deviates. Buffered values are delivered first; each
 * round asks for at most kBlockSize and the surplus is buffered.
 */
template <typename RoundFn>
void buffered_fill(RejectionBuffer& buf, std::span<double> out, std::size_t block, RoundFn&& round) {
  std::size_t done = buf.take(out);
  while (done < out.size()) {
    const std::size_t want = std::min(block, out.size() - done);
    const std::span<const double> made = round(want);
    const std::size_t use = std::min(made.size(), out.size() - done);
    std::copy_n(made.begin(), use, out.begin() + static_cast<std::ptrdiff_t>(done));
    buf.push(made.subspan(use));
    done += use;
  }
}

}  // namespace vgauss

#endif  // VGAUSS_REJECTION_BUFFER_HPP
