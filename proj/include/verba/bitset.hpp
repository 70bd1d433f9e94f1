#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace verba {

/// Fixed-width dynamic bitset over element indices 0..size-1.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  [[nodiscard]] std::size_t size() const noexcept { return size_; }

  [[nodiscard]] bool test(std::size_t i) const noexcept {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  /// Sets bit i and reports whether it was previously clear.
  bool insert(std::size_t i) noexcept {
    auto& w = words_[i >> 6];
    const std::uint64_t m = std::uint64_t{1} << (i & 63);
    if (w & m) return false;
    w |= m;
    return true;
  }

  [[nodiscard]] std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  [[nodiscard]] bool none() const noexcept {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  [[nodiscard]] bool is_subset_of(const Bitset& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  Bitset& operator|=(const Bitset& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

  friend bool operator==(const Bitset&, const Bitset&) = default;

  /// Canonical order: the set whose sorted element list is lexicographically
  /// smaller comes first.
  [[nodiscard]] bool canonical_less(const Bitset& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      const std::uint64_t diff = words_[i] ^ o.words_[i];
      if (diff) {
        const std::uint64_t low = diff & (~diff + 1);
        return (words_[i] & low) != 0;
      }
    }
    return false;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        const int b = std::countr_zero(w);
        f(static_cast<std::size_t>(wi * 64 + static_cast<std::size_t>(b)));
        w &= w - 1;
      }
    }
  }

  [[nodiscard]] std::vector<std::uint32_t> to_vector() const {
    std::vector<std::uint32_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(static_cast<std::uint32_t>(i)); });
    return out;
  }

  /// Index of the lowest set bit, or size() when empty.
  [[nodiscard]] std::size_t first() const noexcept {
    for (std::size_t wi = 0; wi < words_.size(); ++wi)
      if (words_[wi]) return wi * 64 + static_cast<std::size_t>(std::countr_zero(words_[wi]));
    return size_;
  }

  [[nodiscard]] std::uint64_t hash() const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ size_;
    for (auto w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0xbf58476d1ce4e5b9ULL;
    }
    return h;
  }

  [[nodiscard]] const std::vector<std::uint64_t>& words() const noexcept { return words_; }

  /// Little-endian hex over 64-bit words, used by the lattice cache.
  [[nodiscard]] std::string to_hex() const;
  static Bitset from_hex(std::size_t size, const std::string& hex);

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const noexcept { return static_cast<std::size_t>(b.hash()); }
};

}  // namespace verba
