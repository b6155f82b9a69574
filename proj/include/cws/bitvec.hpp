#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cws {

// Fixed-length GF(2) vector packed into 64-bit words.
// Index 0 is the leftmost character of the text form, e.g. "01011".
class BitVec {
public:
  BitVec() = default;

  explicit BitVec(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  static BitVec from_string(std::string_view s) {
    BitVec b(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '1') {
        b.set(i, true);
      } else if (s[i] != '0') {
        throw std::invalid_argument("bit string may contain only '0'/'1': " +
                                    std::string(s));
      }
    }
    return b;
  }

  // Bit i of `bits` becomes entry i.
  static BitVec from_bits(std::uint64_t bits, std::size_t n) {
    if (n > 64) {
      throw std::invalid_argument("from_bits supports n <= 64");
    }
    BitVec b(n);
    if (n > 0) {
      b.words_[0] = (n == 64) ? bits : (bits & ((std::uint64_t{1} << n) - 1));
    }
    return b;
  }

  static BitVec unit(std::size_t n, std::size_t i) {
    BitVec b(n);
    b.set(i, true);
    return b;
  }

  std::size_t size() const { return n_; }

  bool get(std::size_t i) const {
    return (words_[i / 64] >> (i % 64)) & 1u;
  }

  bool operator[](std::size_t i) const { return get(i); }

  void set(std::size_t i, bool value) {
    const std::uint64_t mask = std::uint64_t{1} << (i % 64);
    if (value) {
      words_[i / 64] |= mask;
    } else {
      words_[i / 64] &= ~mask;
    }
  }

  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

  BitVec& operator^=(const BitVec& other) {
    if (other.n_ != n_) {
      throw std::invalid_argument("BitVec length mismatch");
    }
    for (std::size_t w = 0; w < words_.size(); ++w) {
      words_[w] ^= other.words_[w];
    }
    return *this;
  }

  friend BitVec operator^(BitVec lhs, const BitVec& rhs) {
    lhs ^= rhs;
    return lhs;
  }

  // Inner product mod 2.
  bool dot(const BitVec& other) const {
    if (other.n_ != n_) {
      throw std::invalid_argument("BitVec length mismatch");
    }
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      acc ^= words_[w] & other.words_[w];
    }
    return std::popcount(acc) & 1u;
  }

  std::size_t popcount() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) {
      c += std::popcount(w);
    }
    return c;
  }

  bool any() const {
    for (std::uint64_t w : words_) {
      if (w != 0) return true;
    }
    return false;
  }

  bool none() const { return !any(); }

  // Lowest set index, or size() if none.
  std::size_t first_set() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] != 0) {
        return w * 64 + std::countr_zero(words_[w]);
      }
    }
    return n_;
  }

  std::uint64_t to_bits() const {
    if (n_ > 64) {
      throw std::invalid_argument("to_bits supports n <= 64");
    }
    return words_.empty() ? 0 : words_[0];
  }

  std::string str() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i) {
      if (get(i)) s[i] = '1';
    }
    return s;
  }

  friend bool operator==(const BitVec& a, const BitVec& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }

  friend std::strong_ordering operator<=>(const BitVec& a, const BitVec& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    for (std::size_t w = 0; w < a.words_.size(); ++w) {
      if (auto c = a.words_[w] <=> b.words_[w]; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

  std::size_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ n_;
    for (std::uint64_t w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }

private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitVecHash {
  std::size_t operator()(const BitVec& b) const { return b.hash(); }
};

}  // namespace cws
