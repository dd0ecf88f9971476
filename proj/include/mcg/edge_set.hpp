#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace mcg {

/// Fixed-width bit vector over the edge ids of one host graph.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(int width) : width_(width), words_(static_cast<std::size_t>((width + 63) / 64), 0) {}

  int width() const { return width_; }

  void set(int e) { words_[static_cast<std::size_t>(e >> 6)] |= std::uint64_t{1} << (e & 63); }
  void reset(int e) { words_[static_cast<std::size_t>(e >> 6)] &= ~(std::uint64_t{1} << (e & 63)); }
  bool test(int e) const { return (words_[static_cast<std::size_t>(e >> 6)] >> (e & 63)) & 1; }

  int count() const {
    int c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  /// |this ∩ other|; both sets must have the same width.
  int intersection_count(const EdgeSet& other) const {
    int c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & other.words_[i]);
    return c;
  }

  std::vector<int> members() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      for (std::uint64_t w = words_[i]; w; w &= w - 1) {
        out.push_back(static_cast<int>(i * 64) + std::countr_zero(w));
      }
    }
    return out;
  }

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;
  friend auto operator<=>(const EdgeSet& a, const EdgeSet& b) { return a.words_ <=> b.words_; }

 private:
  int width_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace mcg
