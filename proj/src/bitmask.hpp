#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace fta::detail {

/// Fixed-width bitset over a small event universe; the working
/// representation of cut sets during expansion, absorption and subset
/// enumeration.
class BitMask {
 public:
  BitMask() = default;
  explicit BitMask(std::size_t bits) : words_((bits + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }

  bool test(std::size_t i) const {
    return (words_[i / 64] >> (i % 64)) & 1u;
  }

  void clear() {
    for (auto& w : words_) w = 0;
  }

  void or_with(const BitMask& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
  }

  bool is_subset_of(const BitMask& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if (words_[k] & ~o.words_[k]) return false;
    }
    return true;
  }

  std::size_t count() const {
    std::size_t n = 0;
    for (auto w : words_) n += std::popcount(w);
    return n;
  }

  template <typename F>
  void for_each_set(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        f(k * 64 + std::countr_zero(w));
        w &= w - 1;
      }
    }
  }

  bool operator==(const BitMask&) const = default;

 private:
  std::vector<std::uint64_t> words_;
};

/// Drops every mask that is a proper superset of another, and all but the
/// first copy of duplicates. Keeps the survivors' relative order.
inline void absorb(std::vector<BitMask>& sets) {
  std::vector<char> dead(sets.size(), 0);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (i == j || dead[i]) continue;
      if (sets[j].is_subset_of(sets[i]) && (sets[j] != sets[i] || j < i)) {
        dead[i] = 1;
        break;
      }
    }
  }
  std::size_t out = 0;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (!dead[i]) sets[out++] = std::move(sets[i]);
  }
  sets.resize(out);
}

}  // namespace fta::detail
