#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace covplan {

// Fixed-width bitset sized at runtime. Used for occupied-region sets and
// visited sets keyed by dense region indices.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  std::size_t size() const { return bits_; }

  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool all() const { return count() == bits_; }
  bool none() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  bool operator==(const Bitset&) const = default;

  const std::vector<std::uint64_t>& words() const { return words_; }

  std::size_t hash() const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (auto w : words_) {
      h ^= w;
      h *= 0x100000001b3ull;
    }
    return static_cast<std::size_t>(h);
  }

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace covplan
