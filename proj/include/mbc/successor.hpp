#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

namespace mbc {

inline constexpr std::size_t kNoKey = std::numeric_limits<std::size_t>::max();

// Integer set over [0, universe) with insert/erase/min. Two-level bitset:
// one bit per key plus one summary bit per non-empty 64-key word. min() scans
// the summary linearly, which is a handful of words for any practical n.
class BucketedSuccessor {
 public:
  explicit BucketedSuccessor(std::size_t universe)
      : words_((universe + 63) / 64, 0), summary_((words_.size() + 63) / 64, 0) {}

  void insert(std::size_t key) {
    if (contains(key)) return;
    const std::size_t w = key >> 6;
    if (words_[w] == 0) summary_[w >> 6] |= bit(w);
    words_[w] |= bit(key);
    ++size_;
  }

  void erase(std::size_t key) {
    const std::size_t w = key >> 6;
    if ((words_[w] & bit(key)) == 0) return;
    words_[w] &= ~bit(key);
    if (words_[w] == 0) summary_[w >> 6] &= ~bit(w);
    --size_;
  }

  bool contains(std::size_t key) const { return (words_[key >> 6] & bit(key)) != 0; }
  bool empty() const { return size_ == 0; }
  std::size_t size() const { return size_; }

  std::size_t min() const {
    for (std::size_t s = 0; s < summary_.size(); ++s) {
      if (summary_[s] == 0) continue;
      const std::size_t w = (s << 6) + std::countr_zero(summary_[s]);
      return (w << 6) + std::countr_zero(words_[w]);
    }
    return kNoKey;
  }

 private:
  static std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << (i & 63); }

  std::vector<std::uint64_t> words_;
  std::vector<std::uint64_t> summary_;
  std::size_t size_ = 0;
};

// 64-ary layered bitset (van Emde Boas style fan-out): every level keeps one
// bit per non-empty word of the level below, so each operation touches
// ceil(log64 universe) words.
class LayeredSuccessor {
 public:
  explicit LayeredSuccessor(std::size_t universe) {
    std::size_t len = universe == 0 ? 1 : universe;
    do {
      len = (len + 63) / 64;
      levels_.emplace_back(len, 0);
    } while (len > 1);
  }

  void insert(std::size_t key) {
    if (contains(key)) return;
    for (auto& level : levels_) {
      const std::size_t w = key >> 6;
      const bool was_empty = level[w] == 0;
      level[w] |= bit(key);
      if (!was_empty) break;
      key = w;
    }
    ++size_;
  }

  void erase(std::size_t key) {
    if ((levels_[0][key >> 6] & bit(key)) == 0) return;
    for (auto& level : levels_) {
      const std::size_t w = key >> 6;
      level[w] &= ~bit(key);
      if (level[w] != 0) break;
      key = w;
    }
    --size_;
  }

  bool contains(std::size_t key) const { return (levels_[0][key >> 6] & bit(key)) != 0; }
  bool empty() const { return size_ == 0; }
  std::size_t size() const { return size_; }

  std::size_t min() const {
    if (size_ == 0) return kNoKey;
    std::size_t idx = 0;
    for (std::size_t l = levels_.size(); l-- > 0;) {
      idx = (idx << 6) + std::countr_zero(levels_[l][idx]);
    }
    return idx;
  }

 private:
  static std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << (i & 63); }

  std::vector<std::vector<std::uint64_t>> levels_;
  std::size_t size_ = 0;
};

enum class SuccessorKind { kBucketed, kLayered };

}  // namespace mbc
