#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "levelga/rng.hpp"

namespace levelga {

// Fixed-length genotype over {0,1}, packed 64 genes per word. Gene i (0-based)
// lives at bit i of word i/64.
class Bitstring {
 public:
  explicit Bitstring(int n) : n_(n), words_((check_size(n) + 63) / 64, 0) {}

  static Bitstring random(int n, Rng& rng) {
    Bitstring x(n);
    for (auto& w : x.words_) w = rng.next_u64();
    x.trim();
    return x;
  }

  static Bitstring all_ones(int n) {
    Bitstring x(n);
    for (auto& w : x.words_) w = ~0ULL;
    x.trim();
    return x;
  }

  int size() const { return n_; }

  bool get(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  void set(int i, bool v) {
    const std::uint64_t mask = 1ULL << (i & 63);
    if (v)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }

  void flip(int i) { words_[i >> 6] ^= 1ULL << (i & 63); }

  int count_ones() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  // Length of the maximal all-ones prefix.
  int leading_ones() const {
    int c = 0;
    for (auto w : words_) {
      const int t = std::countr_one(w);
      c += t;
      if (t < 64) break;
    }
    return c < n_ ? c : n_;
  }

  static int hamming(const Bitstring& a, const Bitstring& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("hamming: dimension mismatch");
    int d = 0;
    for (std::size_t i = 0; i < a.words_.size(); ++i) d += std::popcount(a.words_[i] ^ b.words_[i]);
    return d;
  }

  bool operator==(const Bitstring& o) const { return n_ == o.n_ && words_ == o.words_; }
  bool operator!=(const Bitstring& o) const { return !(*this == o); }

  // Genes in index order, e.g. "1101".
  std::string to_string() const {
    std::string s(n_, '0');
    for (int i = 0; i < n_; ++i)
      if (get(i)) s[i] = '1';
    return s;
  }

  // Value of the genes read as a little-endian integer; only valid for n <= 64.
  // Used to index exhaustive tables.
  std::uint64_t as_index() const { return words_[0]; }

  static Bitstring from_index(int n, std::uint64_t bits) {
    Bitstring x(n);
    x.words_[0] = bits;
    x.trim();
    return x;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }
  std::vector<std::uint64_t>& words() { return words_; }

  // Zero out the unused bits of the last word. Callers that write whole words
  // must restore this invariant before any counting operation.
  void trim() {
    const int r = n_ & 63;
    if (r) words_.back() &= (1ULL << r) - 1;
  }

 private:
  static int check_size(int n) {
    if (n < 1) throw std::invalid_argument("Bitstring: length must be >= 1");
    return n;
  }

  int n_;
  std::vector<std::uint64_t> words_;
};

}  // namespace levelga
